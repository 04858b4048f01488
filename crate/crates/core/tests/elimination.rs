use std::sync::Arc;

use proptest::prelude::*;
use satelim::polyring::{Monomial, Term};
use satelim::prelude::*;

type Uni = Vec<i128>;

fn trim(mut p: Uni) -> Uni {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn uadd(a: &Uni, b: &Uni) -> Uni {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn umul(a: &Uni, b: &Uni) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn uneg(a: &Uni) -> Uni {
    a.iter().map(|c| -c).collect()
}

// f(x, h(x)) for f given as (coeff, deg_x, deg_y) triples.
fn substitute(f: &[(i64, u32, u32)], h: &Uni) -> Uni {
    let mut acc = Vec::new();
    for &(c, i, j) in f {
        let mut t = vec![0; i as usize + 1];
        t[i as usize] = c as i128;
        for _ in 0..j {
            t = umul(&t, h);
        }
        acc = uadd(&acc, &t);
    }
    acc
}

// Coefficients of f as a polynomial in y with coefficients in k[x].
fn in_y(f: &[(i64, u32, u32)]) -> Vec<Uni> {
    let dy = f.iter().map(|t| t.2).max().unwrap_or(0) as usize;
    let mut out = vec![Vec::new(); dy + 1];
    for &(c, i, j) in f {
        let mut t = vec![0; i as usize + 1];
        t[i as usize] = c as i128;
        out[j as usize] = uadd(&out[j as usize], &t);
    }
    while out.len() > 1 && out.last().unwrap().is_empty() {
        out.pop();
    }
    out
}

fn det(m: &[Vec<Uni>]) -> Uni {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Vec::new();
    for col in 0..m.len() {
        if m[0][col].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Uni>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = umul(&m[0][col], &det(&minor));
        acc = if col % 2 == 0 { uadd(&acc, &term) } else { uadd(&acc, &uneg(&term)) };
    }
    acc
}

// Sylvester resultant with respect to y; coefficient lists are low degree first.
fn resultant(f: &[Uni], g: &[Uni]) -> Uni {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::new();
    for shift in 0..n {
        let mut row = vec![Vec::new(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Vec::new(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    det(&rows)
}

fn ring_xy() -> Arc<PolyRing> {
    PolyRing::standard(FieldSpec::Rationals, &["x", "y"]).unwrap()
}

fn poly(ring: &Arc<PolyRing>, terms: &[(i64, u32, u32)]) -> Polynomial {
    let f = ring.field();
    let terms = terms
        .iter()
        .map(|&(c, i, j)| Term::new(f.from_i64(c), Monomial::from_exponents(&[i, j]).unwrap()))
        .collect();
    Polynomial::from_terms(ring, terms).unwrap()
}

fn uni_poly(ring: &Arc<PolyRing>, u: &Uni) -> Polynomial {
    let terms: Vec<(i64, u32, u32)> = u.iter().enumerate().map(|(i, &c)| (c as i64, i as u32, 0)).collect();
    poly(ring, &terms)
}

fn eliminated(gens: Vec<Polynomial>, method: Method) -> IdealBasis {
    let ring = gens[0].ring().clone();
    let basis = IdealBasis::new(&ring, gens).unwrap();
    let problem = EliminationProblem::ideal(&basis, &["y"]).unwrap();
    let out = eliminate(&problem, method, &EliminationOptions::default()).unwrap();
    out.ideal().unwrap().to_ring(&ring).unwrap()
}

fn small_terms(max: usize) -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    proptest::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 1..=max)
}

#[test]
fn circle_meets_diagonal() {
    let ring = ring_xy();
    let circle = [(1, 2, 0), (1, 0, 2), (-1, 0, 0)];
    let line = [(1, 0, 1), (-1, 1, 0)];
    let res = resultant(&in_y(&circle), &in_y(&line));
    assert_eq!(res, vec![-1, 0, 2]);
    for method in [Method::Saturation, Method::Block] {
        let got = eliminated(vec![poly(&ring, &circle), poly(&ring, &line)], method);
        let want = IdealBasis::new(&ring, vec![uni_poly(&ring, &res)]).unwrap();
        assert!(ideal_equal(&got, &want, &MonomialOrder::DegRevLex, &Budget::default()).unwrap());
        assert_eq!(got.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(), ["x^2 - 1/2"]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph_elimination_is_substitution(
        h in proptest::collection::vec(-3i64..=3, 1..=3),
        f in small_terms(3),
    ) {
        let ring = ring_xy();
        let h: Uni = trim(h.into_iter().map(i128::from).collect());
        let mut graph: Vec<(i64, u32, u32)> = vec![(1, 0, 1)];
        graph.extend(h.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, &c)| (-(c as i64), i as u32, 0)));
        let expected = substitute(&f, &h);
        let want = IdealBasis::new(&ring, vec![uni_poly(&ring, &expected)]).unwrap();
        for method in [Method::Saturation, Method::Block] {
            let got = eliminated(vec![poly(&ring, &graph), poly(&ring, &f)], method);
            prop_assert!(got.gens().iter().all(|g| !g.involves(1)));
            prop_assert!(ideal_equal(&got, &want, &MonomialOrder::DegRevLex, &Budget::default()).unwrap());
        }
    }

    #[test]
    fn resultant_lies_in_elimination_ideal(f in small_terms(3), g in small_terms(3)) {
        let ring = ring_xy();
        let (fy, gy) = (in_y(&f), in_y(&g));
        prop_assume!(fy.len() > 1 && gy.len() > 1);
        let res = resultant(&fy, &gy);
        let got = eliminated(vec![poly(&ring, &f), poly(&ring, &g)], Method::Saturation);
        let r = uni_poly(&ring, &res);
        prop_assert!(ideal_membership(&r, &got, &MonomialOrder::DegRevLex, &Budget::default()).unwrap());
    }
}

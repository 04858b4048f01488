use super::*;
use crate::coeff::FieldSpec;
use crate::io::{parse_polynomial, parse_vector};
use proptest::prelude::*;

fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::standard(FieldSpec::Rationals, vars).unwrap()
}

fn polys(r: &Arc<PolyRing>, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|g| parse_polynomial(g, r).unwrap()).collect()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealBasis {
    IdealBasis::new(r, polys(r, gens)).unwrap()
}

fn strings(i: &IdealBasis) -> Vec<String> {
    i.gens().iter().map(|g| g.to_string()).collect()
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x1", "x2", "x0"]);
    let [x, x1sq, f] = <[Polynomial; 3]>::try_from(polys(&r, &["x1", "x1^2", "x0*x2 - x1^2"])).unwrap();
    assert!(normal_form(&x1sq, &[x.clone()], r.order()).unwrap().remainder.is_zero());
    let d = normal_form(&f, &[x1sq.clone()], r.order()).unwrap();
    assert_eq!(d.remainder.to_string(), "x2*x0");
    assert_eq!(d.quotients[0].to_string(), "-1");
    assert_eq!(normal_form(&f, &[], r.order()).unwrap().remainder, f);
}

#[test]
fn division_uses_first_divisor() {
    let r = ring(&["x", "y"]);
    let [f, a, b] = <[Polynomial; 3]>::try_from(polys(&r, &["x*y", "x", "y"])).unwrap();
    let d = normal_form(&f, &[a.clone(), b.clone()], r.order()).unwrap();
    assert_eq!(d.quotients[0].to_string(), "y");
    assert!(d.quotients[1].is_zero());
    let d = normal_form(&f, &[b, a], r.order()).unwrap();
    assert_eq!(d.quotients[0].to_string(), "x");
}

#[test]
fn s_polynomial_example() {
    let r = ring(&["b1", "b2", "b3", "t"]);
    let [f, g] = <[Polynomial; 2]>::try_from(polys(&r, &["t^2 - b2", "b2*t - b3"])).unwrap();
    let s = s_polynomial(&f, &g).unwrap();
    assert_eq!(s.to_string(), "-b2^2 + b3*t");
    let gb = ideal(&r, &["b1 - t", "t^2 - b2", "b2*t - b3", "b2^2 - b3*t"]);
    assert!(normal_form(&s, gb.gens(), r.order()).unwrap().remainder.is_zero());
    assert!(s_polynomial(&f, &f).unwrap().is_zero());
}

#[test]
fn twisted_cubic_basis() {
    let r = ring(&["b1", "b2", "b3", "t"]);
    let i = ideal(&r, &["b1 - t", "b2 - t^2", "b3 - t^3"]);
    let gb = groebner_basis(&i, r.order(), &Budget::default()).unwrap();
    assert_eq!(strings(&gb), ["b2^2 - b3*t", "b2*t - b3", "t^2 - b2", "b1 - t"]);
    assert!(gb.is_reduced_gb(r.order()));
    let bb = buchberger(&i, r.order(), &Budget::default()).unwrap();
    assert_eq!(reduce_basis(&bb, r.order()).unwrap(), gb);
}

#[test]
fn small_examples() {
    let b = Budget::default();
    let r = ring(&["x1", "x2", "x0"]);
    let i = ideal(&r, &["x1^2", "x2 - x1^2"]);
    assert_eq!(strings(&groebner_basis(&i, r.order(), &b).unwrap()), ["x1^2", "x2"]);
    assert!(ideal_membership(&parse_polynomial("x2", &r).unwrap(), &i, r.order(), &b).unwrap());
    assert!(ideal_membership(&Polynomial::zero(&r), &i, r.order(), &b).unwrap());
    assert!(buchberger(&IdealBasis::zero(&r), r.order(), &b).unwrap().is_empty());

    let red = reduce_basis(&ideal(&r, &["x1^2", "x0*x2 - x1^2", "x0*x2"]), r.order()).unwrap();
    assert_eq!(strings(&red), ["x1^2", "x2*x0"]);
    assert!(ideal_equal(&ideal(&r, &["x1^2", "x0*x2 - x1^2"]), &red, r.order(), &b).unwrap());
    assert_eq!(strings(&reduce_basis(&ideal(&r, &["2*x1"]), r.order()).unwrap()), ["x1"]);

    let q = ring(&["x"]);
    assert!(!ideal_membership(&Polynomial::one(&q), &ideal(&q, &["x"]), q.order(), &b).unwrap());
    assert!(!ideal_equal(&ideal(&q, &["x"]), &ideal(&q, &["x^2"]), q.order(), &b).unwrap());
    assert!(ideal_equal(&IdealBasis::zero(&q), &ideal(&q, &["0"]), q.order(), &b).unwrap());
}

#[test]
fn syzygy_examples() {
    let b = Budget::default();
    let r = ring(&["x", "y"]);
    let s = syzygies(&polys(&r, &["x", "y"]), &b).unwrap();
    assert_eq!(s.gens.len(), 1);
    assert_eq!(s.gens[0].to_string(), "[y, -x]");
    assert!(syzygies(&polys(&r, &["x^2 + y"]), &b).unwrap().gens.is_empty());

    let f = polys(&r, &["x^2", "x*y", "y^2"]);
    let s = syzygies(&f, &b).unwrap();
    assert!(s.verify().unwrap());
    let expected = ModuleBasis::new(&r, 3, vec![parse_vector("[y, -x, 0]", &r).unwrap(), parse_vector("[0, y, -x]", &r).unwrap()]).unwrap();
    let o = ModuleOrder::top(r.order().clone());
    assert!(module_equal(&s.to_module().unwrap(), &expected, &o, &b).unwrap());

    let with_zero = syzygies(&polys(&r, &["x", "0"]), &b).unwrap();
    let m = with_zero.to_module().unwrap();
    assert!(module_membership(&parse_vector("[0, 1]", &r).unwrap(), &m, &o, &b).unwrap());
}

#[test]
fn module_basics() {
    let b = Budget::default();
    let r = ring(&["x", "y"]);
    let v = |s: &str| parse_vector(s, &r).unwrap();
    let m = ModuleBasis::new(&r, 2, vec![v("[x, y]"), v("[y, x]")]).unwrap();
    for o in [ModuleOrder::top(MonomialOrder::DegRevLex), ModuleOrder::pot(MonomialOrder::Lex)] {
        let gb = module_groebner_basis(&m, &o, &b).unwrap();
        assert!(gb.is_reduced_gb(&o));
        assert!(module_membership(&v("[x^2 - y^2, 0]"), &m, &o, &b).unwrap());
        assert!(!module_membership(&v("[x, 0]"), &m, &o, &b).unwrap());
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                if let Some(s) = module_s_polynomial(&gb.gens()[i], &gb.gens()[j], &o).unwrap() {
                    assert!(module_normal_form(&s, gb.gens(), &o).unwrap().remainder.is_zero());
                }
            }
        }
    }
    assert!(ModuleBasis::new(&r, 3, vec![v("[x, y]")]).is_err());
}

#[test]
fn prime_field_basis() {
    let r = PolyRing::standard(FieldSpec::prime(7).unwrap(), &["x", "y"]).unwrap();
    let i = IdealBasis::new(&r, polys(&r, &["3*x*y + 1", "x^2 + 5"])).unwrap();
    let gb = groebner_basis(&i, &MonomialOrder::Lex, &Budget::default()).unwrap();
    for g in gb.gens() {
        assert!(g.leading_coeff().unwrap().is_one());
    }
    assert!(ideal_membership(&parse_polynomial("x^2 + 5", &r).unwrap(), &gb, &MonomialOrder::Lex, &Budget::default()).unwrap());
}

fn random_ideal() -> impl Strategy<Value = (Vec<Polynomial>, Polynomial)> {
    let r = ring(&["x", "y", "z"]);
    let term = (-3i64..=3, proptest::collection::vec(0u32..3, 3));
    let poly = proptest::collection::vec(term, 1..4);
    (proptest::collection::vec(poly.clone(), 1..4), poly).prop_map(move |(gs, f)| {
        let mk = |ts: Vec<(i64, Vec<u32>)>| {
            let terms = ts
                .into_iter()
                .map(|(c, e)| Term::new(r.field().from_i64(c), crate::polyring::Monomial::from_exponents(&e).unwrap()))
                .collect();
            Polynomial::from_terms(&r, terms).unwrap()
        };
        (gs.into_iter().map(mk).collect(), mk(f))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_identity((gens, f) in random_ideal()) {
        let order = f.ring().order().clone();
        let d = normal_form(&f, &gens, &order).unwrap();
        let mut sum = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&gens) {
            sum = &sum + &(q * g);
        }
        prop_assert_eq!(&sum, &f);
        for t in d.remainder.terms() {
            prop_assert!(gens.iter().filter(|g| !g.is_zero()).all(|g| !g.leading_monomial().unwrap().divides(&t.mono)));
        }
    }

    #[test]
    fn reduced_basis_is_canonical((gens, _f) in random_ideal(), lex in any::<bool>()) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        let r = gens[0].ring().clone();
        let b = Budget::default();
        let gb = groebner_basis(&IdealBasis::new(&r, gens.clone()).unwrap(), &order, &b).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let gb2 = groebner_basis(&IdealBasis::new(&r, rev).unwrap(), &order, &b).unwrap();
        prop_assert_eq!(gb.gens(), gb2.gens());
        let again = reduce_basis(&gb, &order).unwrap();
        prop_assert_eq!(again.gens(), gb.gens());
        for g in &gens {
            prop_assert!(ideal_membership(g, &gb, &order, &b).unwrap());
        }
        let original = IdealBasis::new(&r, gens).unwrap();
        for g in gb.gens() {
            prop_assert!(ideal_membership(g, &original, &order, &b).unwrap());
        }
    }
}

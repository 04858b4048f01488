//! Division and Buchberger's algorithm on sparse module elements.
//!
//! An element of R^ℓ is a list of terms `c·m·e_pos` sorted strictly
//! descending under a [`ModuleOrder`]. Ideals are the case ℓ = 1.
//!
//! Buchberger's algorithm and interreduction run on a private scalar type:
//! over ℚ every element is scaled to a primitive integer vector and
//! reduction is fraction-free, over 𝔽_p elements are kept monic. Results
//! are converted back to monic elements over the field.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use dashu_int::ops::{BitTest, Gcd, UnsignedAbs};
use dashu_int::{IBig, Sign};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::coeff::{inv_mod, Coefficient};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::orders::ModuleOrder;
use crate::polyring::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Tm<C> {
    pub coeff: C,
    pub mono: Monomial,
    pub pos: u32,
}

pub(crate) type MTerm = Tm<Coefficient>;
pub(crate) type Elem = Vec<MTerm>;

#[inline]
fn cmp<C>(ord: &ModuleOrder, a: &Tm<C>, b: &Tm<C>) -> Ordering {
    ord.compare(&a.mono, a.pos as usize, &b.mono, b.pos as usize)
}

pub(crate) fn sort_elem(terms: &mut Elem, ord: &ModuleOrder) {
    terms.sort_by(|a, b| cmp(ord, b, a));
}

/// Coefficient arithmetic used inside the Buchberger loop.
pub(crate) trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `(a, b)` with `a·x = b·y`, as small as the scalar type allows.
    fn cofactors(x: &Self, y: &Self) -> (Self, Self);
    /// Puts an element into its normal form: primitive with positive leading
    /// coefficient over ℤ, monic over a field.
    fn normalize(e: &mut [Tm<Self>]);
    /// Divides two term lists by their common content, when there is one.
    fn shrink(_a: &mut [Tm<Self>], _b: &mut [Tm<Self>]) {}
}

impl Scalar for IBig {
    fn is_zero(&self) -> bool {
        IBig::is_zero(self)
    }

    fn is_one(&self) -> bool {
        IBig::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn cofactors(x: &Self, y: &Self) -> (Self, Self) {
        let d = IBig::from(x.gcd(y));
        let (a, b) = (y / &d, x / &d);
        if a.sign() == Sign::Negative {
            (-a, -b)
        } else {
            (a, b)
        }
    }

    fn normalize(e: &mut [Tm<Self>]) {
        let Some(first) = e.first() else { return };
        let c = content(e);
        let c = if first.coeff.sign() == Sign::Negative { -c } else { c };
        if !c.is_one() {
            for t in e.iter_mut() {
                t.coeff = &t.coeff / &c;
            }
        }
    }

    fn shrink(a: &mut [Tm<Self>], b: &mut [Tm<Self>]) {
        if a.is_empty() && b.is_empty() {
            return;
        }
        let c = content_of(a.iter().chain(b.iter()).map(|t| &t.coeff));
        if !c.is_one() {
            for t in a.iter_mut().chain(b.iter_mut()) {
                t.coeff = &t.coeff / &c;
            }
        }
    }
}

fn content(e: &[Tm<IBig>]) -> IBig {
    content_of(e.iter().map(|t| &t.coeff))
}

/// Positive gcd of nonzero integers. Starts from the smallest one and only
/// takes a gcd when divisibility fails.
fn content_of<'a>(coeffs: impl Iterator<Item = &'a IBig> + Clone) -> IBig {
    let Some(start) = coeffs.clone().min_by_key(|c| c.unsigned_abs().bit_len()) else {
        return IBig::ONE;
    };
    let mut g = IBig::from(start.unsigned_abs());
    for c in coeffs {
        if g.is_one() {
            break;
        }
        if !(c % &g).is_zero() {
            g = IBig::from(c.gcd(&g));
        }
    }
    g
}

/// A residue modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Fp {
    v: u32,
    p: u32,
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }

    fn add(&self, o: &Self) -> Self {
        Fp {
            v: ((self.v as u64 + o.v as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Fp {
            v: ((self.v as u64 * o.v as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }

    fn neg(&self) -> Self {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }

    fn cofactors(x: &Self, y: &Self) -> (Self, Self) {
        let inv = Fp { v: inv_mod(y.v, y.p), p: y.p };
        (Fp { v: 1, p: x.p }, x.mul(&inv))
    }

    fn normalize(e: &mut [Tm<Self>]) {
        if let Some(first) = e.first() {
            if first.coeff.v != 1 {
                let inv = Fp {
                    v: inv_mod(first.coeff.v, first.coeff.p),
                    p: first.coeff.p,
                };
                for t in e.iter_mut() {
                    t.coeff = t.coeff.mul(&inv);
                }
            }
        }
    }
}

/// Conversion between field elements and the working scalars.
trait Working: Scalar {
    fn import(e: Elem) -> Vec<Tm<Self>>;
    /// Monic field element with the same leading monomial.
    fn export(e: Vec<Tm<Self>>) -> Elem;
}

impl Working for IBig {
    fn import(e: Elem) -> Vec<Tm<Self>> {
        let rational = |c: &Coefficient| match c {
            Coefficient::Rational(r) => r.clone(),
            Coefficient::Modular { .. } => unreachable!("rational element expected"),
        };
        let lcm = e.iter().fold(BigInt::one(), |l, t| l.lcm(rational(&t.coeff).denom()));
        let mut out: Vec<Tm<IBig>> = e
            .into_iter()
            .map(|t| {
                let r = rational(&t.coeff);
                let n = r.numer() * (&lcm / r.denom());
                Tm {
                    coeff: IBig::from_le_bytes(&n.to_signed_bytes_le()),
                    mono: t.mono,
                    pos: t.pos,
                }
            })
            .collect();
        Self::normalize(&mut out);
        out
    }

    fn export(e: Vec<Tm<Self>>) -> Elem {
        let big = |c: &IBig| BigInt::from_signed_bytes_le(&c.to_le_bytes());
        let Some(lead) = e.first().map(|t| big(&t.coeff)) else {
            return Vec::new();
        };
        e.into_iter()
            .map(|t| Tm {
                coeff: Coefficient::Rational(BigRational::new(big(&t.coeff), lead.clone())),
                mono: t.mono,
                pos: t.pos,
            })
            .collect()
    }
}

impl Working for Fp {
    fn import(e: Elem) -> Vec<Tm<Self>> {
        let mut out: Vec<Tm<Fp>> = e
            .into_iter()
            .map(|t| match t.coeff {
                Coefficient::Modular { value, modulus } => Tm {
                    coeff: Fp { v: value, p: modulus },
                    mono: t.mono,
                    pos: t.pos,
                },
                Coefficient::Rational(_) => unreachable!("modular element expected"),
            })
            .collect();
        Self::normalize(&mut out);
        out
    }

    fn export(mut e: Vec<Tm<Self>>) -> Elem {
        Self::normalize(&mut e);
        e.into_iter()
            .map(|t| Tm {
                coeff: Coefficient::Modular {
                    value: t.coeff.v,
                    modulus: t.coeff.p,
                },
                mono: t.mono,
                pos: t.pos,
            })
            .collect()
    }
}

impl Scalar for Coefficient {
    fn is_zero(&self) -> bool {
        Coefficient::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Coefficient::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn cofactors(x: &Self, y: &Self) -> (Self, Self) {
        (x.field().one(), x.checked_div(y).expect("nonzero leading coefficient"))
    }

    fn normalize(e: &mut [Tm<Self>]) {
        make_monic(e);
    }
}

fn support_mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | 1 << (i % 64))
}

/// Leading data of a reducer, cached for the divisor search.
struct Lead {
    pos: u32,
    mask: u64,
    mono: Monomial,
}

fn lead_of<C>(e: &[Tm<C>]) -> Lead {
    Lead {
        pos: e[0].pos,
        mask: support_mask(&e[0].mono),
        mono: e[0].mono.clone(),
    }
}

fn divides_term<C>(l: &Lead, t: &Tm<C>, mask: u64) -> bool {
    l.pos == t.pos && l.mask & !mask == 0 && l.mono.divides(&t.mono)
}

/// The first reducer of `t` in list order.
fn find_divisor<C>(t: &Tm<C>, leads: &[Lead], skip: Option<usize>) -> Option<usize> {
    let mask = support_mask(&t.mono);
    leads
        .iter()
        .enumerate()
        .position(|(i, l)| Some(i) != skip && divides_term(l, t, mask))
}

/// `a·p − b·m·g`, where `p` is ascending and `g` descending; the result is
/// ascending. `a = None` stands for 1.
fn combine_asc<C: Scalar>(p: Vec<Tm<C>>, a: Option<&C>, b: &C, m: &Monomial, g: &[Tm<C>], ord: &ModuleOrder) -> Vec<Tm<C>> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let nb = b.neg();
    let mut gi = g.iter().rev().map(|t| Tm {
        coeff: t.coeff.mul(&nb),
        mono: t.mono.mul(m),
        pos: t.pos,
    });
    let mut pi = p.into_iter().map(|t| match a {
        Some(a) => Tm {
            coeff: t.coeff.mul(a),
            ..t
        },
        None => t,
    });
    let mut x = pi.next();
    let mut y = gi.next();
    loop {
        match (x.take(), y.take()) {
            (Some(s), Some(t)) => match cmp(ord, &s, &t) {
                Ordering::Less => {
                    out.push(s);
                    x = pi.next();
                    y = Some(t);
                }
                Ordering::Greater => {
                    out.push(t);
                    x = Some(s);
                    y = gi.next();
                }
                Ordering::Equal => {
                    let c = s.coeff.add(&t.coeff);
                    if !c.is_zero() {
                        out.push(Tm { coeff: c, ..s });
                    }
                    x = pi.next();
                    y = gi.next();
                }
            },
            (Some(s), None) => {
                out.push(s);
                out.extend(pi);
                break;
            }
            (None, Some(t)) => {
                out.push(t);
                out.extend(gi);
                break;
            }
            (None, None) => break,
        }
    }
    out
}

/// `c1·m1·f + c2·m2·g` for descending `f`, `g`; the result is descending.
fn lin_comb<C: Scalar>(c1: &C, m1: &Monomial, f: &[Tm<C>], c2: &C, m2: &Monomial, g: &[Tm<C>], ord: &ModuleOrder) -> Vec<Tm<C>> {
    let scale = |c: &C, m: &Monomial, t: &Tm<C>| Tm {
        coeff: t.coeff.mul(c),
        mono: t.mono.mul(m),
        pos: t.pos,
    };
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() && j < g.len() {
        let x = scale(c1, m1, &f[i]);
        let y = scale(c2, m2, &g[j]);
        match cmp(ord, &x, &y) {
            Ordering::Greater => {
                out.push(x);
                i += 1;
            }
            Ordering::Less => {
                out.push(y);
                j += 1;
            }
            Ordering::Equal => {
                let s = x.coeff.add(&y.coeff);
                if !s.is_zero() {
                    out.push(Tm { coeff: s, ..x });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(f[i..].iter().map(|t| scale(c1, m1, t)));
    out.extend(g[j..].iter().map(|t| scale(c2, m2, t)));
    out
}

pub(crate) fn make_monic(e: &mut [MTerm]) {
    if let Some(lc) = e.first().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            let inv = lc.inverse().expect("leading coefficient is nonzero");
            for t in e.iter_mut() {
                t.coeff = &t.coeff * &inv;
            }
        }
    }
}

/// Records of a division: one multiplier list `(coeff, monomial)` per divisor.
pub(crate) type Quotients = Vec<Vec<(Coefficient, Monomial)>>;

/// Full reduction of `f` by `elems` over the field. The largest reducible
/// term is always reduced first, by the first divisor in list order.
pub(crate) fn reduce(
    f: Elem,
    elems: &[Elem],
    ord: &ModuleOrder,
    skip: Option<usize>,
    mut quotients: Option<&mut Quotients>,
    budget: &Budget,
) -> Result<Elem> {
    let leads: Vec<Lead> = elems.iter().map(|e| lead_of(e)).collect();
    let mut p: Elem = f.into_iter().rev().collect();
    let mut rem = Vec::new();
    let mut steps = 0u64;
    while let Some(lt) = p.pop() {
        match find_divisor(&lt, &leads, skip) {
            Some(i) => {
                let g = &elems[i];
                let m = lt.mono.div(&g[0].mono).expect("divisor found");
                let c = lt.coeff.checked_div(&g[0].coeff)?;
                p = combine_asc(p, None, &c, &m, &g[1..], ord);
                if let Some(q) = quotients.as_deref_mut() {
                    q[i].push((c, m));
                }
                steps += 1;
                if steps % 1024 == 0 {
                    budget.check_time()?;
                }
            }
            None => rem.push(lt),
        }
    }
    Ok(rem)
}

/// Full reduction up to a scalar factor: the result is `u·f − Σ qᵢ·gᵢ` for
/// some nonzero scalar `u`, normalized.
fn reduce_scaled<C: Scalar>(
    f: Vec<Tm<C>>,
    elems: &[Vec<Tm<C>>],
    leads: &[Lead],
    ord: &ModuleOrder,
    skip: Option<usize>,
    budget: &Budget,
) -> Result<Vec<Tm<C>>> {
    let mut p: Vec<Tm<C>> = f.into_iter().rev().collect();
    let mut rem: Vec<Tm<C>> = Vec::new();
    let mut steps = 0u64;
    while let Some(lt) = p.pop() {
        match find_divisor(&lt, leads, skip) {
            Some(i) => {
                let g = &elems[i];
                let m = lt.mono.div(&g[0].mono).expect("divisor found");
                let (a, b) = C::cofactors(&lt.coeff, &g[0].coeff);
                let a = if a.is_one() { None } else { Some(a) };
                p = combine_asc(p, a.as_ref(), &b, &m, &g[1..], ord);
                if let Some(a) = &a {
                    for t in rem.iter_mut() {
                        t.coeff = t.coeff.mul(a);
                    }
                }
                steps += 1;
                if steps % 8 == 0 {
                    C::shrink(&mut p, &mut rem);
                }
                if steps % 1024 == 0 {
                    budget.check_time()?;
                }
            }
            None => rem.push(lt),
        }
    }
    C::normalize(&mut rem);
    Ok(rem)
}

/// The S-element of `f` and `g`, or `None` when their leading positions differ.
pub(crate) fn s_element(f: &[MTerm], g: &[MTerm], ord: &ModuleOrder) -> Option<Elem> {
    let (lf, lg) = (&f[0], &g[0]);
    if lf.pos != lg.pos {
        return None;
    }
    let l = lf.mono.lcm(&lg.mono);
    let mf = l.div(&lf.mono).expect("lcm divisible");
    let mg = l.div(&lg.mono).expect("lcm divisible");
    let cf = lf.coeff.inverse().expect("nonzero leading coefficient");
    let cg = -&lg.coeff.inverse().expect("nonzero leading coefficient");
    Some(lin_comb(&cf, &mf, &f[1..], &cg, &mg, &g[1..], ord))
}

/// The S-element up to a scalar factor, for elements sharing a position.
fn s_scaled<C: Scalar>(f: &[Tm<C>], g: &[Tm<C>], ord: &ModuleOrder) -> Vec<Tm<C>> {
    let (lf, lg) = (&f[0], &g[0]);
    let l = lf.mono.lcm(&lg.mono);
    let mf = l.div(&lf.mono).expect("lcm divisible");
    let mg = l.div(&lg.mono).expect("lcm divisible");
    // a·lc(f) = b·lc(g)
    let (a, b) = C::cofactors(&lf.coeff, &lg.coeff);
    let mut s = lin_comb(&a, &mf, &f[1..], &b.neg(), &mg, &g[1..], ord);
    C::normalize(&mut s);
    s
}

fn max_degree<C>(e: &[Tm<C>]) -> u32 {
    e.iter().map(|t| t.mono.total_degree()).max().unwrap_or(0)
}

fn check_degree<C>(e: &[Tm<C>], budget: &Budget) -> Result<()> {
    let d = max_degree(e);
    if d > budget.max_degree {
        Err(Error::Budget(format!(
            "basis element of degree {d} exceeds the limit {}",
            budget.max_degree
        )))
    } else {
        Ok(())
    }
}

struct PairQueue {
    heap: BinaryHeap<Reverse<(u32, u64, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
    seq: u64,
}

impl PairQueue {
    fn push(&mut self, deg: u32, i: usize, j: usize) {
        self.heap.push(Reverse((deg, self.seq, i, j)));
        self.pending.insert((i, j));
        self.seq += 1;
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let Reverse((_, _, i, j)) = self.heap.pop()?;
        self.pending.remove(&(i, j));
        Some((i, j))
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

/// Statistics of one Buchberger run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_reduced: u64,
    pub product_criterion: u64,
    pub chain_criterion: u64,
    pub zero_reductions: u64,
}

enum Field {
    Rationals,
    Prime,
    Unknown,
}

fn field_of(elems: &[Elem]) -> Field {
    match elems.iter().flatten().next().map(|t| &t.coeff) {
        Some(Coefficient::Rational(_)) => Field::Rationals,
        Some(Coefficient::Modular { .. }) => Field::Prime,
        None => Field::Unknown,
    }
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, FIFO among ties), the product criterion (ideals only) and
/// the chain criterion. The result is a Gröbner basis of monic elements, not
/// yet interreduced.
pub(crate) fn buchberger(gens: Vec<Elem>, ord: &ModuleOrder, budget: &Budget) -> Result<(Vec<Elem>, BuchbergerStats)> {
    buchberger_extending(gens, 0, ord, budget)
}

/// As [`buchberger`], when the first `known` generators already form a
/// Gröbner basis: pairs among them are never formed.
pub(crate) fn buchberger_extending(
    gens: Vec<Elem>,
    known: usize,
    ord: &ModuleOrder,
    budget: &Budget,
) -> Result<(Vec<Elem>, BuchbergerStats)> {
    fn run<C: Working>(gens: Vec<Elem>, known: usize, ord: &ModuleOrder, budget: &Budget) -> Result<(Vec<Elem>, BuchbergerStats)> {
        let gens = gens.into_iter().map(C::import).collect();
        let (gb, stats) = buchberger_in::<C>(gens, known, ord, budget)?;
        Ok((gb.into_iter().map(C::export).collect(), stats))
    }
    match field_of(&gens) {
        Field::Rationals => run::<IBig>(gens, known, ord, budget),
        Field::Prime => run::<Fp>(gens, known, ord, budget),
        Field::Unknown => Ok((Vec::new(), BuchbergerStats::default())),
    }
}

fn buchberger_in<C: Scalar>(
    gens: Vec<Vec<Tm<C>>>,
    known: usize,
    ord: &ModuleOrder,
    budget: &Budget,
) -> Result<(Vec<Vec<Tm<C>>>, BuchbergerStats)> {
    let mut stats = BuchbergerStats::default();
    let is_ideal = gens.iter().flatten().all(|t| t.pos == 0);
    let mut basis: Vec<Vec<Tm<C>>> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();
    let mut queue = PairQueue {
        heap: BinaryHeap::new(),
        pending: HashSet::new(),
        seq: 0,
    };

    let insert = |g: Vec<Tm<C>>,
                  first: usize,
                  basis: &mut Vec<Vec<Tm<C>>>,
                  leads: &mut Vec<Lead>,
                  queue: &mut PairQueue,
                  stats: &mut BuchbergerStats| {
        let j = basis.len();
        for (i, l) in leads.iter().enumerate().skip(first) {
            if l.pos != g[0].pos {
                continue;
            }
            if is_ideal && l.mono.is_coprime(&g[0].mono) {
                stats.product_criterion += 1;
                continue;
            }
            let deg = l.mono.lcm(&g[0].mono).total_degree();
            queue.push(deg, i, j);
        }
        leads.push(lead_of(&g));
        basis.push(g);
    };

    let mut known_len = 0;
    for (k, g) in gens.into_iter().enumerate() {
        if g.is_empty() {
            continue;
        }
        check_degree(&g, budget)?;
        let first = if k < known { known_len } else { 0 };
        insert(g, first, &mut basis, &mut leads, &mut queue, &mut stats);
        if k < known {
            known_len += 1;
        }
    }

    while let Some((i, j)) = queue.pop() {
        let l = leads[i].mono.lcm(&leads[j].mono);
        let pos = leads[i].pos;
        let redundant = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].pos == pos
                && leads[k].mono.divides(&l)
                && !queue.is_pending(i, k)
                && !queue.is_pending(j, k)
        });
        if redundant {
            stats.chain_criterion += 1;
            continue;
        }
        stats.pairs_reduced += 1;
        if stats.pairs_reduced > budget.max_pairs {
            return Err(Error::Budget(format!("more than {} S-pairs", budget.max_pairs)));
        }
        budget.check_time()?;
        let s = s_scaled(&basis[i], &basis[j], ord);
        let r = reduce_scaled(s, &basis, &leads, ord, None, budget)?;
        if r.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        check_degree(&r, budget)?;
        insert(r, 0, &mut basis, &mut leads, &mut queue, &mut stats);
    }
    Ok((basis, stats))
}

/// Turns a Gröbner basis into the reduced one: minimal, monic, tails fully
/// reduced, sorted by leading term descending.
pub(crate) fn interreduce(basis: Vec<Elem>, ord: &ModuleOrder, budget: &Budget) -> Result<Vec<Elem>> {
    fn run<C: Working>(basis: Vec<Elem>, ord: &ModuleOrder, budget: &Budget) -> Result<Vec<Elem>> {
        let elems = basis.into_iter().map(C::import).collect();
        Ok(interreduce_in::<C>(elems, ord, budget)?.into_iter().map(C::export).collect())
    }
    match field_of(&basis) {
        Field::Rationals => run::<IBig>(basis, ord, budget),
        Field::Prime => run::<Fp>(basis, ord, budget),
        Field::Unknown => Ok(Vec::new()),
    }
}

fn interreduce_in<C: Scalar>(basis: Vec<Vec<Tm<C>>>, ord: &ModuleOrder, budget: &Budget) -> Result<Vec<Vec<Tm<C>>>> {
    let mut elems: Vec<Vec<Tm<C>>> = basis.into_iter().filter(|e| !e.is_empty()).collect();
    elems.sort_by(|a, b| cmp(ord, &a[0], &b[0]));
    let mut minimal: Vec<Vec<Tm<C>>> = Vec::new();
    for e in elems {
        let divisible = minimal
            .iter()
            .any(|m| m[0].pos == e[0].pos && m[0].mono.divides(&e[0].mono));
        if !divisible {
            minimal.push(e);
        }
    }
    let leads: Vec<Lead> = minimal.iter().map(|e| lead_of(e)).collect();
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let r = reduce_scaled(minimal[i].clone(), &minimal, &leads, ord, Some(i), budget)?;
        debug_assert_eq!(r[0].mono, minimal[i][0].mono);
        out.push(r);
    }
    out.sort_by(|a, b| cmp(ord, &b[0], &a[0]));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::orders::MonomialOrder;

    fn t(c: i64, e: &[u32]) -> MTerm {
        MTerm {
            coeff: FieldSpec::Rationals.from_i64(c),
            mono: Monomial::from_exponents(e).unwrap(),
            pos: 0,
        }
    }

    fn elem(terms: Vec<MTerm>, ord: &ModuleOrder) -> Elem {
        let mut e = terms;
        sort_elem(&mut e, ord);
        e
    }

    #[test]
    fn s_element_of_self_is_zero() {
        let ord = ModuleOrder::top(MonomialOrder::DegRevLex);
        let f = elem(vec![t(2, &[2, 0]), t(1, &[0, 1])], &ord);
        assert!(s_element(&f, &f, &ord).unwrap().is_empty());
    }

    #[test]
    fn single_generator_basis() {
        let ord = ModuleOrder::top(MonomialOrder::DegRevLex);
        let f = elem(vec![t(2, &[1, 0])], &ord);
        let (gb, _) = buchberger(vec![f], &ord, &Budget::default()).unwrap();
        let gb = interreduce(gb, &ord, &Budget::default()).unwrap();
        assert_eq!(gb, vec![vec![t(1, &[1, 0])]]);
    }

    #[test]
    fn budget_caps() {
        let ord = ModuleOrder::top(MonomialOrder::DegRevLex);
        let f = elem(vec![t(1, &[3, 0]), t(1, &[0, 1])], &ord);
        let g = elem(vec![t(1, &[2, 1]), t(1, &[0, 1])], &ord);
        let tight = Budget {
            max_pairs: 0,
            ..Budget::default()
        };
        assert!(matches!(buchberger(vec![f.clone(), g.clone()], &ord, &tight), Err(Error::Budget(_))));
        let low_degree = Budget {
            max_degree: 2,
            ..Budget::default()
        };
        assert!(matches!(buchberger(vec![f, g], &ord, &low_degree), Err(Error::Budget(_))));
    }
}

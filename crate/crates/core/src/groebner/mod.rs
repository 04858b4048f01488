//! Division, Buchberger's algorithm, reduced Gröbner bases, membership,
//! equality and syzygies, for ideals and for submodules of free modules.
//!
//! Every computation runs on module elements internally; an ideal is handled
//! as a submodule of R¹ under the term-over-position extension of its order,
//! which coincides with the order itself.

mod budget;
pub(crate) mod engine;

use std::fmt;
use std::sync::Arc;

pub use budget::Budget;
pub use engine::BuchbergerStats;

use crate::error::{Error, Result};
use crate::orders::{ModuleOrder, MonomialOrder};
use crate::polyring::{same_ring, PolyRing, Polynomial, Term, VectorPoly};
use engine::{Elem, MTerm};

/// Marks a generating set as a Gröbner basis under `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub order: MonomialOrder,
    pub reduced: bool,
}

/// Marks a module generating set as a Gröbner basis under `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCertificate {
    pub order: ModuleOrder,
    pub reduced: bool,
}

/// A finite generating set of an ideal. Zero generators are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    certificate: Option<Certificate>,
}

impl IdealBasis {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::usage(format!("generator {g} does not belong to {ring}")));
        }
        Ok(IdealBasis {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            certificate: None,
        })
    }

    /// The zero ideal.
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        IdealBasis {
            ring: ring.clone(),
            gens: Vec::new(),
            certificate: None,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Polynomial> {
        self.gens
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Is this certified as the reduced Gröbner basis under `order`?
    pub fn is_reduced_gb(&self, order: &MonomialOrder) -> bool {
        matches!(&self.certificate, Some(c) if c.reduced && &c.order == order)
    }

    /// The same generators viewed as rank-1 vectors.
    pub fn to_module(&self) -> ModuleBasis {
        ModuleBasis {
            ring: self.ring.clone(),
            rank: 1,
            gens: self
                .gens
                .iter()
                .map(|g| VectorPoly::new(vec![g.clone()]).expect("one component"))
                .collect(),
            certificate: self.certificate.as_ref().map(|c| ModuleCertificate {
                order: ModuleOrder::top(c.order.clone()),
                reduced: c.reduced,
            }),
        }
    }

    /// Moves the generators into `target` (variables matched by name).
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<IdealBasis> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        let keep = same_ring(&self.ring, target);
        Ok(IdealBasis {
            ring: target.clone(),
            gens,
            certificate: if keep { self.certificate.clone() } else { None },
        })
    }
}

impl fmt::Display for IdealBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// A finite generating set of a submodule of R^rank. Zero vectors are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBasis {
    ring: Arc<PolyRing>,
    rank: usize,
    gens: Vec<VectorPoly>,
    certificate: Option<ModuleCertificate>,
}

impl ModuleBasis {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, gens: Vec<VectorPoly>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::usage("module rank must be positive"));
        }
        for g in &gens {
            if g.rank() != rank {
                return Err(Error::usage(format!("generator {g} does not have rank {rank}")));
            }
            if !same_ring(g.ring(), ring) {
                return Err(Error::usage(format!("generator {g} does not belong to {ring}")));
            }
        }
        Ok(ModuleBasis {
            ring: ring.clone(),
            rank,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            certificate: None,
        })
    }

    /// `gens` must be the reduced Gröbner basis under `order`, in the order
    /// [`module_groebner_basis`] lists it.
    pub(crate) fn certified(ring: &Arc<PolyRing>, rank: usize, gens: Vec<VectorPoly>, order: &ModuleOrder) -> Self {
        ModuleBasis {
            ring: ring.clone(),
            rank,
            gens,
            certificate: Some(ModuleCertificate {
                order: order.clone(),
                reduced: true,
            }),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[VectorPoly] {
        &self.gens
    }

    pub fn certificate(&self) -> Option<&ModuleCertificate> {
        self.certificate.as_ref()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_reduced_gb(&self, order: &ModuleOrder) -> bool {
        matches!(&self.certificate, Some(c) if c.reduced && &c.order == order)
    }

    /// A rank-1 module as an ideal.
    pub fn to_ideal(&self) -> Result<IdealBasis> {
        if self.rank != 1 {
            return Err(Error::usage(format!("a rank-{} module is not an ideal", self.rank)));
        }
        Ok(IdealBasis {
            ring: self.ring.clone(),
            gens: self.gens.iter().map(|v| v.comps()[0].clone()).collect(),
            certificate: self.certificate.as_ref().map(|c| Certificate {
                order: c.order.base.clone(),
                reduced: c.reduced,
            }),
        })
    }

    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<ModuleBasis> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        let keep = same_ring(&self.ring, target);
        Ok(ModuleBasis {
            ring: target.clone(),
            rank: self.rank,
            gens,
            certificate: if keep { self.certificate.clone() } else { None },
        })
    }
}

impl fmt::Display for ModuleBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// Generators of the syzygy module of a list `over` of k elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyBasis {
    pub over: Vec<VectorPoly>,
    pub gens: Vec<VectorPoly>,
}

impl SyzygyBasis {
    /// Checks `Σ sᵢ·Fᵢ = 0` for every generator `s`.
    pub fn verify(&self) -> Result<bool> {
        for s in &self.gens {
            if !VectorPoly::combination(s.comps(), &self.over)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The syzygies as a submodule of R^k.
    pub fn to_module(&self) -> Result<ModuleBasis> {
        let Some(first) = self.over.first() else {
            return Err(Error::usage("syzygies of an empty list have no ring"));
        };
        ModuleBasis::new(first.ring(), self.over.len(), self.gens.clone())
    }
}

/// Result of dividing `f` by a list of divisors: `f = Σ qᵢ·gᵢ + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division<T> {
    pub remainder: T,
    pub quotients: Vec<Polynomial>,
}

fn ring_for(ring: &Arc<PolyRing>, order: &MonomialOrder) -> Result<Arc<PolyRing>> {
    if ring.order() == order {
        Ok(ring.clone())
    } else {
        ring.with_order(order.clone())
    }
}

pub(crate) fn vec_to_elem(v: &VectorPoly, ord: &ModuleOrder) -> Elem {
    let mut e: Elem = v
        .comps()
        .iter()
        .enumerate()
        .flat_map(|(i, c)| {
            c.terms().iter().map(move |t| MTerm {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
                pos: i as u32,
            })
        })
        .collect();
    engine::sort_elem(&mut e, ord);
    e
}

/// `ring` must be ordered by `ord.base`.
pub(crate) fn elem_to_vec(e: Elem, ring: &Arc<PolyRing>, rank: usize) -> VectorPoly {
    let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); rank];
    for t in e {
        buckets[t.pos as usize].push(Term::new(t.coeff, t.mono));
    }
    let comps = buckets
        .into_iter()
        .map(|ts| Polynomial::from_sorted(ring, ts))
        .collect();
    VectorPoly::new(comps).expect("positive rank")
}

fn quotients_to_polys(q: engine::Quotients, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    q.into_iter()
        .map(|ts| Polynomial::canonical(ring, ts.into_iter().map(|(c, m)| Term::new(c, m)).collect()))
        .collect()
}

/// Divides `f` by `divisors` under `order`: the largest reducible term is
/// reduced first, always by the first divisor (in list order) whose leading
/// term divides it. Results live in the ring reordered by `order`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Division<Polynomial>> {
    let ring = ring_for(f.ring(), order)?;
    let f = f.to_ring(&ring)?;
    let divisors = divisors.iter().map(|g| g.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
    let fv = VectorPoly::new(vec![f])?;
    let dv = divisors
        .into_iter()
        .map(|g| VectorPoly::new(vec![g]))
        .collect::<Result<Vec<_>>>()?;
    let d = module_normal_form(&fv, &dv, &ModuleOrder::top(order.clone()))?;
    Ok(Division {
        remainder: d.remainder.into_comps().remove(0),
        quotients: d.quotients,
    })
}

/// Vector version of [`normal_form`].
pub fn module_normal_form(f: &VectorPoly, divisors: &[VectorPoly], order: &ModuleOrder) -> Result<Division<VectorPoly>> {
    let ring = ring_for(f.ring(), &order.base)?;
    let f = f.to_ring(&ring)?;
    if divisors.iter().any(|g| g.rank() != f.rank()) {
        return Err(Error::usage("divisors must have the rank of the dividend"));
    }
    let divisors = divisors.iter().map(|g| g.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
    let nonzero: Vec<usize> = (0..divisors.len()).filter(|&i| !divisors[i].is_zero()).collect();
    let elems: Vec<Elem> = nonzero.iter().map(|&i| vec_to_elem(&divisors[i], order)).collect();
    let mut q: engine::Quotients = vec![Vec::new(); elems.len()];
    let r = engine::reduce(vec_to_elem(&f, order), &elems, order, None, Some(&mut q), &Budget::default())?;
    let mut quotients = vec![Polynomial::zero(&ring); divisors.len()];
    for (k, p) in nonzero.into_iter().zip(quotients_to_polys(q, &ring)) {
        quotients[k] = p;
    }
    Ok(Division {
        remainder: elem_to_vec(r, &ring, f.rank()),
        quotients,
    })
}

/// The S-polynomial of `f` and `g` under their ring's order.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let fv = VectorPoly::new(vec![f.clone()])?;
    let gv = VectorPoly::new(vec![g.clone()])?;
    let s = module_s_polynomial(&fv, &gv, &ModuleOrder::top(f.ring().order().clone()))?;
    Ok(s.map(|v| v.into_comps().remove(0)).expect("ideal elements share position 0"))
}

/// The S-vector of `f` and `g`; `None` when their leading terms sit in
/// different positions.
pub fn module_s_polynomial(f: &VectorPoly, g: &VectorPoly, order: &ModuleOrder) -> Result<Option<VectorPoly>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::usage("S-polynomial of a zero element"));
    }
    if !same_ring(f.ring(), g.ring()) || f.rank() != g.rank() {
        return Err(Error::usage("S-polynomial of elements from different modules"));
    }
    let ring = ring_for(f.ring(), &order.base)?;
    let fe = vec_to_elem(&f.to_ring(&ring)?, order);
    let ge = vec_to_elem(&g.to_ring(&ring)?, order);
    Ok(engine::s_element(&fe, &ge, order).map(|e| elem_to_vec(e, &ring, f.rank())))
}

/// A Gröbner basis of `basis` under `order` (monic, not interreduced).
pub fn buchberger(basis: &IdealBasis, order: &MonomialOrder, budget: &Budget) -> Result<IdealBasis> {
    module_buchberger(&basis.to_module(), &ModuleOrder::top(order.clone()), budget)?.to_ideal()
}

pub fn module_buchberger(basis: &ModuleBasis, order: &ModuleOrder, budget: &Budget) -> Result<ModuleBasis> {
    Ok(module_buchberger_stats(basis, order, budget)?.0)
}

/// [`module_buchberger`] together with pair statistics.
pub fn module_buchberger_stats(basis: &ModuleBasis, order: &ModuleOrder, budget: &Budget) -> Result<(ModuleBasis, BuchbergerStats)> {
    let ring = ring_for(&basis.ring, &order.base)?;
    let elems = basis
        .gens
        .iter()
        .map(|g| Ok(vec_to_elem(&g.to_ring(&ring)?, order)))
        .collect::<Result<Vec<_>>>()?;
    let (gb, stats) = engine::buchberger(elems, order, budget)?;
    Ok((
        ModuleBasis {
            gens: gb.into_iter().map(|e| elem_to_vec(e, &ring, basis.rank)).collect(),
            ring,
            rank: basis.rank,
            certificate: Some(ModuleCertificate {
                order: order.clone(),
                reduced: false,
            }),
        },
        stats,
    ))
}

/// Interreduces a Gröbner basis into the reduced one. The input must already
/// be a Gröbner basis under `order`.
pub fn reduce_basis(basis: &IdealBasis, order: &MonomialOrder) -> Result<IdealBasis> {
    module_reduce_basis(&basis.to_module(), &ModuleOrder::top(order.clone()))?.to_ideal()
}

pub fn module_reduce_basis(basis: &ModuleBasis, order: &ModuleOrder) -> Result<ModuleBasis> {
    let ring = ring_for(&basis.ring, &order.base)?;
    let elems = basis
        .gens
        .iter()
        .map(|g| Ok(vec_to_elem(&g.to_ring(&ring)?, order)))
        .collect::<Result<Vec<_>>>()?;
    let reduced = engine::interreduce(elems, order, &Budget::default())?;
    Ok(ModuleBasis {
        gens: reduced.into_iter().map(|e| elem_to_vec(e, &ring, basis.rank)).collect(),
        ring,
        rank: basis.rank,
        certificate: Some(ModuleCertificate {
            order: order.clone(),
            reduced: true,
        }),
    })
}

/// The reduced Gröbner basis of the ideal under `order`.
pub fn groebner_basis(basis: &IdealBasis, order: &MonomialOrder, budget: &Budget) -> Result<IdealBasis> {
    if basis.is_reduced_gb(order) {
        return Ok(basis.clone());
    }
    module_groebner_basis(&basis.to_module(), &ModuleOrder::top(order.clone()), budget)?.to_ideal()
}

/// The reduced Gröbner basis of the submodule under `order`.
pub fn module_groebner_basis(basis: &ModuleBasis, order: &ModuleOrder, budget: &Budget) -> Result<ModuleBasis> {
    if basis.is_reduced_gb(order) {
        return Ok(basis.clone());
    }
    let ring = ring_for(&basis.ring, &order.base)?;
    let elems = basis
        .gens
        .iter()
        .map(|g| Ok(vec_to_elem(&g.to_ring(&ring)?, order)))
        .collect::<Result<Vec<_>>>()?;
    let (gb, _) = engine::buchberger(elems, order, budget)?;
    let reduced = engine::interreduce(gb, order, budget)?;
    Ok(ModuleBasis {
        gens: reduced.into_iter().map(|e| elem_to_vec(e, &ring, basis.rank)).collect(),
        ring,
        rank: basis.rank,
        certificate: Some(ModuleCertificate {
            order: order.clone(),
            reduced: true,
        }),
    })
}

/// `f ∈ I`?
pub fn ideal_membership(f: &Polynomial, ideal: &IdealBasis, order: &MonomialOrder, budget: &Budget) -> Result<bool> {
    let v = VectorPoly::new(vec![f.clone()])?;
    module_membership(&v, &ideal.to_module(), &ModuleOrder::top(order.clone()), budget)
}

/// `v ∈ M`?
pub fn module_membership(v: &VectorPoly, module: &ModuleBasis, order: &ModuleOrder, budget: &Budget) -> Result<bool> {
    if v.rank() != module.rank {
        return Err(Error::usage("element and module have different ranks"));
    }
    if v.is_zero() {
        return Ok(true);
    }
    let gb = module_groebner_basis(module, order, budget)?;
    let d = module_normal_form(v, &gb.gens, order)?;
    Ok(d.remainder.is_zero())
}

/// Do the two generating sets define the same ideal? Compared through their
/// reduced Gröbner bases under `order`.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis, order: &MonomialOrder, budget: &Budget) -> Result<bool> {
    module_equal(&a.to_module(), &b.to_module(), &ModuleOrder::top(order.clone()), budget)
}

pub fn module_equal(a: &ModuleBasis, b: &ModuleBasis, order: &ModuleOrder, budget: &Budget) -> Result<bool> {
    if a.rank != b.rank {
        return Ok(false);
    }
    if a.ring.field() != b.ring.field() || a.ring.vars() != b.ring.vars() {
        return Err(Error::usage("comparing modules over different rings"));
    }
    let ga = module_groebner_basis(a, order, budget)?;
    let gb = module_groebner_basis(&b.to_ring(&ga.ring)?, order, budget)?;
    Ok(ga.gens == gb.gens)
}

/// Generators of `{s ∈ R^k : Σ sᵢ·Fᵢ = 0}`.
pub fn syzygies(polys: &[Polynomial], budget: &Budget) -> Result<SyzygyBasis> {
    let vs = polys
        .iter()
        .map(|p| VectorPoly::new(vec![p.clone()]))
        .collect::<Result<Vec<_>>>()?;
    module_syzygies(&vs, budget)
}

/// Syzygies of a list of vectors of rank ℓ, through one module Gröbner basis:
/// the columns `(Fᵢ | eᵢ)` of R^(ℓ+k) are processed under position-over-term
/// with the first ℓ positions dominant; basis elements living entirely in the
/// last k positions generate the syzygy module.
pub fn module_syzygies(vectors: &[VectorPoly], budget: &Budget) -> Result<SyzygyBasis> {
    let Some(first) = vectors.first() else {
        return Ok(SyzygyBasis {
            over: Vec::new(),
            gens: Vec::new(),
        });
    };
    let ring = first.ring().clone();
    let rank = first.rank();
    if vectors.iter().any(|v| v.rank() != rank || !same_ring(v.ring(), &ring)) {
        return Err(Error::usage("syzygies need elements of one module"));
    }
    let k = vectors.len();
    let tags: Vec<VectorPoly> = (0..k).map(|i| VectorPoly::unit(&ring, k, i)).collect();
    let reduced = tagged_kernel(vectors, &tags, 0, budget)?;
    Ok(SyzygyBasis {
        over: vectors.to_vec(),
        gens: reduced,
    })
}

/// For columns `(aᵢ | bᵢ)` with `aᵢ ∈ R^ℓ` and `bᵢ ∈ R^k`, generators of
/// `{Σ cᵢ·bᵢ : Σ cᵢ·aᵢ = 0}`: the reduced Gröbner basis under position-over-term
/// on R^k. The first `known` columns may be declared a Gröbner basis already.
pub(crate) fn tagged_kernel(
    heads: &[VectorPoly],
    tags: &[VectorPoly],
    known: usize,
    budget: &Budget,
) -> Result<Vec<VectorPoly>> {
    let (Some(a), Some(b)) = (heads.first(), tags.first()) else {
        return Ok(Vec::new());
    };
    let ring = a.ring().clone();
    let (l, k) = (a.rank(), b.rank());
    let order = ModuleOrder::pot(ring.order().clone());
    let columns: Vec<Elem> = heads
        .iter()
        .zip(tags)
        .map(|(a, b)| {
            let mut e = vec_to_elem(a, &order);
            e.extend(vec_to_elem(b, &order).into_iter().map(|t| MTerm {
                pos: t.pos + l as u32,
                ..t
            }));
            e
        })
        .collect();
    let (gb, _) = engine::buchberger_extending(columns, known, &order, budget)?;
    let kernel: Vec<Elem> = gb
        .into_iter()
        .filter(|e| e[0].pos as usize >= l)
        .map(|e| {
            e.into_iter()
                .map(|t| MTerm {
                    pos: t.pos - l as u32,
                    ..t
                })
                .collect()
        })
        .collect();
    let reduced = engine::interreduce(kernel, &order, budget)?;
    Ok(reduced.into_iter().map(|e| elem_to_vec(e, &ring, k)).collect())
}

#[cfg(test)]
mod tests;

//! Timing harness comparing the saturation route with the block-order route.
//!
//! Every instance is eliminated with each requested method three times; the
//! median wall-clock time is reported. Output rows follow the CSV header
//! [`CSV_HEADER`].

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::groebner::{module_equal, Budget, IdealBasis};
use crate::idealops::{eliminate, EliminationOptions, EliminationOutcome, EliminationProblem, Method};
use crate::io::ProblemFile;
use crate::orders::{ModuleOrder, MonomialOrder};
use crate::polyring::{Monomial, PolyRing, Polynomial, Term};

pub const CSV_HEADER: [&str; 8] = ["instance", "method", "order", "time_ms", "sat_steps", "gb_size", "max_deg", "outcome"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// A budget, time limit or exponent bound was exceeded.
    Budget,
    /// Both methods finished with different answers.
    Disagree,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Ok => "ok",
            Outcome::Budget => "budget",
            Outcome::Disagree => "disagree",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub method: Method,
    /// Order used by the method's Gröbner bases.
    pub order: String,
    pub time_ms: f64,
    pub sat_steps: usize,
    pub gb_size: usize,
    pub max_deg: u32,
    pub outcome: Outcome,
}

impl BenchRecord {
    fn fields(&self) -> [String; 8] {
        [
            self.instance.clone(),
            self.method.to_string(),
            self.order.clone(),
            format!("{:.3}", self.time_ms),
            self.sat_steps.to_string(),
            self.gb_size.to_string(),
            self.max_deg.to_string(),
            self.outcome.to_string(),
        ]
    }
}

/// A named elimination problem.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub problem: EliminationProblem,
}

/// The curve `t ↦ (t, t², …, t^m)`: generators `bᵢ − tⁱ`, eliminating `t`.
pub fn curve_instance(m: usize) -> Result<Instance> {
    if m == 0 {
        return Err(Error::usage("curve family starts at m = 1"));
    }
    let mut vars: Vec<String> = (1..=m).map(|i| format!("b{i}")).collect();
    vars.push("t".into());
    let ring = PolyRing::standard(FieldSpec::Rationals, &vars)?;
    let t = Polynomial::var(&ring, m);
    let mut gens = Vec::with_capacity(m);
    let mut power = Polynomial::one(&ring);
    for i in 0..m {
        power = power.try_mul(&t)?;
        gens.push(Polynomial::var(&ring, i).try_sub(&power)?);
    }
    Ok(Instance {
        id: format!("curve_{m}"),
        problem: EliminationProblem::ideal(&IdealBasis::new(&ring, gens)?, &["t"])?,
    })
}

/// Parameters of the random instance generator.
#[derive(Clone, Debug)]
pub struct RandomParams {
    pub field: FieldSpec,
    pub elim_vars: usize,
    pub base_vars: usize,
    /// Bound on the total degree of every term.
    pub max_degree: u32,
    /// Each instance has between 1 and `max_gens` generators.
    pub max_gens: usize,
    /// Each generator has between 1 and `max_terms` terms.
    pub max_terms: usize,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: i64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            field: FieldSpec::Rationals,
            elim_vars: 2,
            base_vars: 2,
            max_degree: 3,
            max_gens: 4,
            max_terms: 3,
            coeff_bound: 3,
        }
    }
}

impl RandomParams {
    /// The ring of generated instances: `x1..x_e` (eliminated), then `b1..b_m`.
    pub fn ring(&self) -> Result<std::sync::Arc<PolyRing>> {
        let mut vars: Vec<String> = (1..=self.elim_vars).map(|i| format!("x{i}")).collect();
        vars.extend((1..=self.base_vars).map(|i| format!("b{i}")));
        PolyRing::standard(self.field, &vars)
    }

    pub fn elim_names(&self) -> Vec<String> {
        (1..=self.elim_vars).map(|i| format!("x{i}")).collect()
    }

    /// A random polynomial with the configured shape.
    pub fn polynomial<R: Rng>(&self, ring: &std::sync::Arc<PolyRing>, rng: &mut R) -> Result<Polynomial> {
        let monomials = monomials_up_to(ring.nvars(), self.max_degree);
        let n = rng.gen_range(1..=self.max_terms.max(1));
        let terms = monomials
            .choose_multiple(rng, n)
            .map(|e| {
                let mut c = rng.gen_range(1..=self.coeff_bound.max(1));
                if rng.gen_bool(0.5) {
                    c = -c;
                }
                Ok(Term::new(self.field.from_i64(c), Monomial::from_exponents(e)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(ring, terms)
    }

    pub fn generators<R: Rng>(&self, ring: &std::sync::Arc<PolyRing>, rng: &mut R) -> Result<Vec<Polynomial>> {
        let k = rng.gen_range(1..=self.max_gens.max(1));
        (0..k).map(|_| self.polynomial(ring, rng)).collect()
    }
}

/// All exponent vectors in `nvars` variables of total degree at most `d`.
fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// `count` random instances named `random_<seed>_<i>`, reproducible from
/// `seed`.
pub fn random_instances(params: &RandomParams, count: usize, seed: u64) -> Result<Vec<Instance>> {
    let ring = params.ring()?;
    let elim = params.elim_names();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let gens = params.generators(&ring, &mut rng)?;
            Ok(Instance {
                id: format!("random_{seed}_{i}"),
                problem: EliminationProblem::ideal(&IdealBasis::new(&ring, gens)?, &elim)?,
            })
        })
        .collect()
}

/// Every `*.ideal` problem file of `dir`, sorted by file name. The instance id
/// is the file stem.
pub fn load_corpus(dir: &Path) -> Result<Vec<Instance>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::usage(format!("cannot read corpus {}: {e}", dir.display())))?;
    let mut paths = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Error::usage(format!("cannot read corpus {}: {e}", dir.display())))?.path();
        if path.extension().is_some_and(|x| x == "ideal") && path.is_file() {
            paths.push(path);
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let file = ProblemFile::read(&path).map_err(|e| Error::usage(format!("{}: {e}", path.display())))?;
            let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(Instance {
                id,
                problem: file.problem()?,
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub methods: Vec<Method>,
    /// Order of the saturation route.
    pub order: MonomialOrder,
    /// Caps for each single method call; the time limit restarts per call.
    pub max_pairs: u64,
    pub max_degree: u32,
    pub time_limit: Option<Duration>,
    pub repeats: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        let b = Budget::default();
        BenchConfig {
            methods: vec![Method::Saturation, Method::Block],
            order: MonomialOrder::DegRevLex,
            max_pairs: b.max_pairs,
            max_degree: b.max_degree,
            time_limit: None,
            repeats: 3,
        }
    }
}

impl BenchConfig {
    fn budget(&self) -> Budget {
        let b = Budget {
            max_pairs: self.max_pairs,
            max_degree: self.max_degree,
            deadline: None,
        };
        match self.time_limit {
            Some(limit) => b.with_time_limit(limit),
            None => b,
        }
    }

    fn order_label(&self, method: Method, problem: &EliminationProblem) -> String {
        match method {
            Method::Saturation => self.order.to_string(),
            Method::Block => MonomialOrder::elimination(problem.elim_vars().len()).to_string(),
        }
    }
}

/// Runs every method on every instance. Instances run in parallel; the rows
/// come back ordered by instance, then by method as listed in `config`.
pub fn run(instances: &[Instance], config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let per_instance: Vec<Result<Vec<BenchRecord>>> = instances.par_iter().map(|inst| run_instance(inst, config)).collect();
    let mut rows = Vec::new();
    for r in per_instance {
        rows.extend(r?);
    }
    Ok(rows)
}

fn run_instance(inst: &Instance, config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut rows = Vec::with_capacity(config.methods.len());
    let mut answers: Vec<EliminationOutcome> = Vec::new();
    for &method in &config.methods {
        let mut times = Vec::with_capacity(config.repeats.max(1));
        let mut result = None;
        for _ in 0..config.repeats.max(1) {
            let options = EliminationOptions {
                order: config.order.clone(),
                homog_var: None,
                budget: config.budget(),
            };
            let start = Instant::now();
            let out = eliminate(&inst.problem, method, &options);
            times.push(start.elapsed().as_secs_f64() * 1e3);
            match out {
                Ok(o) => result = Some(o),
                Err(Error::Budget(_) | Error::Overflow(_)) => {
                    result = None;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let mut record = BenchRecord {
            instance: inst.id.clone(),
            method,
            order: config.order_label(method, &inst.problem),
            time_ms: median(&mut times),
            sat_steps: 0,
            gb_size: 0,
            max_deg: 0,
            outcome: Outcome::Budget,
        };
        if let Some(o) = result {
            record.sat_steps = o.saturation_steps;
            record.gb_size = o.gb_size;
            record.max_deg = o.max_degree;
            record.outcome = Outcome::Ok;
            answers.push(o);
        }
        rows.push(record);
    }
    let finished = rows.iter().filter(|r| r.outcome == Outcome::Ok).count();
    if finished == rows.len() && answers.len() > 1 {
        let order = ModuleOrder::top(MonomialOrder::DegRevLex);
        let budget = Budget::default();
        for other in &answers[1..] {
            if !module_equal(&answers[0].basis, &other.basis, &order, &budget)? {
                for r in &mut rows {
                    r.outcome = Outcome::Disagree;
                }
                break;
            }
        }
    }
    Ok(rows)
}

fn median(times: &mut [f64]) -> f64 {
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

/// Writes the header and one line per record.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        w.write_record(r.fields()).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_family_members() {
        let c = curve_instance(3).unwrap();
        let gens: Vec<String> = c.problem.gens().gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["[b1 - t]", "[-t^2 + b2]", "[-t^3 + b3]"]);
        assert!(curve_instance(0).is_err());
    }

    #[test]
    fn monomial_count() {
        // C(4 + 3, 3)
        assert_eq!(monomials_up_to(4, 3).len(), 35);
        assert_eq!(monomials_up_to(0, 3), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn random_instances_are_reproducible() {
        let p = RandomParams::default();
        let a = random_instances(&p, 5, 7).unwrap();
        let b = random_instances(&p, 5, 7).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.problem, y.problem);
        }
        for inst in &a {
            let gens = inst.problem.gens();
            assert!(gens.len() <= p.max_gens);
            for g in gens.gens() {
                let f = &g.comps()[0];
                assert!(f.len() <= p.max_terms);
                assert!(f.total_degree().finite().unwrap() <= p.max_degree);
            }
        }
    }

    #[test]
    fn records_and_csv() {
        let inst = vec![curve_instance(2).unwrap()];
        let config = BenchConfig {
            repeats: 1,
            ..Default::default()
        };
        let rows = run(&inst, &config).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.outcome == Outcome::Ok));
        assert_eq!(rows[0].method, Method::Saturation);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("instance,method,order,time_ms,sat_steps,gb_size,max_deg,outcome\n"));
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn budget_outcome() {
        let inst = vec![curve_instance(3).unwrap()];
        let config = BenchConfig {
            repeats: 1,
            max_pairs: 0,
            ..Default::default()
        };
        let rows = run(&inst, &config).unwrap();
        assert!(rows.iter().all(|r| r.outcome == Outcome::Budget));
    }
}

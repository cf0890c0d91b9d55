//! Invariant suite run by `qha check` and the acceptance tests: internal
//! consistency of the path-module engine, agreement with the linear-algebra
//! engine, and the torsion-pair properties on seeded random modules.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, PathId};
use crate::bounds::Analysis;
use crate::linrep::{self, random, PdBound, Rep};
use crate::pathmod::{self, HomDim, PathHomology, SimpleSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub property: &'static str,
    pub detail: String,
    /// Seed of the failing case; `--seed <seed> --cases 1` replays it.
    pub seed: u64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated (seed {}): {}", self.property, self.seed, self.detail)
    }
}

/// Deliberate engine corruption, for testing that the suite notices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    LayerLengthOffByOne,
}

#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub seed: u64,
    /// Random module cases.
    pub cases: usize,
    /// Random sets `V` for the algebra-level comparisons.
    pub subsets: usize,
    pub fault: Fault,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { seed: 1, cases: 50, subsets: 10, fault: Fault::None }
    }
}

#[derive(Debug, Default)]
pub struct CheckReport {
    /// Property name and number of individual checks performed.
    pub tallies: Vec<(&'static str, usize)>,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, property: &'static str, outcome: Result<usize, Violation>) {
        match outcome {
            Ok(n) => match self.tallies.iter_mut().find(|(p, _)| *p == property) {
                Some((_, total)) => *total += n,
                None => self.tallies.push((property, n)),
            },
            Err(v) => {
                if !self.tallies.iter().any(|(p, _)| *p == property) {
                    self.tallies.push((property, 0));
                }
                self.violations.push(v);
            }
        }
    }
}

pub type Outcome = Result<usize, Violation>;

fn case_seed(base: u64, i: usize) -> u64 {
    base.wrapping_add(i as u64)
}

macro_rules! ensure {
    ($cond:expr, $prop:expr, $seed:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Violation { property: $prop, detail: format!($($fmt)+), seed: $seed });
        }
    };
}

/// Both engines on one algebra, plus its opposite for injective dimensions.
pub struct Checker<'a> {
    alg: &'a Algebra,
    op: Algebra,
    analysis: Analysis<'a>,
    fault: Fault,
}

impl<'a> Checker<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Self::with_fault(alg, Fault::None)
    }

    pub fn with_fault(alg: &'a Algebra, fault: Fault) -> Self {
        Self { alg, op: alg.opposite(), analysis: Analysis::new(alg), fault }
    }

    pub fn analysis(&self) -> &Analysis<'a> {
        &self.analysis
    }

    /// `ℓℓ^{t_V}(Λ)` from the path-module engine (corrupted under a fault).
    fn layer_length_algebra(&self, v: &SimpleSet) -> usize {
        let n = pathmod::layer_length_algebra(self.alg, v);
        match self.fault {
            Fault::None => n,
            Fault::LayerLengthOffByOne => n + 1,
        }
    }

    fn n(&self) -> usize {
        self.alg.num_vertices()
    }

    fn random_set(&self, rng: &mut ChaCha8Rng) -> SimpleSet {
        random::random_simple_set(rng, self.n())
    }

    fn random_finite_pd_subset(&self, rng: &mut ChaCha8Rng) -> SimpleSet {
        let finite = &self.analysis.classes().finite_pd;
        SimpleSet::from_vertices(self.n(), finite.iter().filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
    }

    fn names(&self, v: &SimpleSet) -> String {
        format!("{{{}}}", v.names(self.alg).join(","))
    }

    /// Basis bookkeeping: paths from/to each vertex partition the basis,
    /// no basis path contains a relation, `LL = 1 + longest path`, and the
    /// regular and coregular representations have dimension `dim Λ`.
    pub fn algebra_invariants(&self) -> Outcome {
        const P: &str = "algebra-invariants";
        let alg = self.alg;
        let dim = alg.dimension();
        let from: usize = (0..self.n()).map(|v| alg.paths_from(v).unwrap().len()).sum();
        let to: usize = (0..self.n()).map(|v| alg.paths_to(v).unwrap().len()).sum();
        ensure!(from == dim && to == dim, P, 0, "paths from/to sum to {from}/{to}, dimension {dim}");
        let longest = alg.basis().iter().map(|p| p.len()).max().unwrap_or(0);
        ensure!(alg.loewy_length() == longest + 1, P, 0, "LL {} but longest path {longest}", alg.loewy_length());
        for p in alg.basis() {
            for rel in &alg.presentation().relations {
                ensure!(
                    !p.arrows.windows(rel.len()).any(|w| w == rel.as_slice()),
                    P,
                    0,
                    "basis path contains relation {}",
                    alg.presentation().relation_names(rel)
                );
            }
        }
        ensure!(self.op.dimension() == dim, P, 0, "opposite algebra has dimension {}", self.op.dimension());
        let (reg, coreg) = (linrep::regular_rep(alg), linrep::coregular_rep(alg));
        ensure!(
            reg.total_dim() == dim && coreg.total_dim() == dim,
            P,
            0,
            "regular/coregular dimensions {}/{}",
            reg.total_dim(),
            coreg.total_dim()
        );
        let ll = linrep::loewy_length(&reg);
        ensure!(ll == alg.loewy_length(), P, 0, "linear-algebra Loewy length {ll} vs {}", alg.loewy_length());
        Ok(5)
    }

    /// `σ(p)` is exactly the set of minimal paths `q` with `pq = 0`.
    pub fn sigma_contract(&self) -> Outcome {
        const P: &str = "sigma-contract";
        let alg = self.alg;
        let h = PathHomology::new(alg);
        let mut checks = 0;
        for i in 0..alg.dimension() {
            let p = PathId(i);
            let sigma = h.sigma(p);
            for &q in sigma {
                let arrows = &alg.path(q).arrows;
                ensure!(!arrows.is_empty(), P, 0, "trivial path in σ({})", alg.path_name(p));
                ensure!(
                    alg.multiply(p, q).unwrap().is_none(),
                    P,
                    0,
                    "{} · {} is nonzero",
                    alg.path_name(p),
                    alg.path_name(q)
                );
                let prefix = alg.lookup(alg.source(q), &arrows[..arrows.len() - 1]).unwrap();
                ensure!(
                    alg.multiply(p, prefix).unwrap().is_some(),
                    P,
                    0,
                    "{} in σ({}) is not minimal",
                    alg.path_name(q),
                    alg.path_name(p)
                );
            }
            for &r in alg.paths_from(alg.target(p)).unwrap() {
                if alg.multiply(p, r).unwrap().is_none() {
                    let covered = sigma.iter().any(|&q| alg.path(r).arrows.starts_with(&alg.path(q).arrows));
                    ensure!(
                        covered,
                        P,
                        0,
                        "{} kills {} but no element of σ is a prefix",
                        alg.path_name(p),
                        alg.path_name(r)
                    );
                }
                checks += 1;
            }
        }
        Ok(checks)
    }

    /// `ℓℓ^{t_{S^{<∞}}}(Λ) ≠ 1`, and it is `0` exactly when `gldim Λ < ∞`.
    pub fn finite_pd_layer(&self) -> Outcome {
        const P: &str = "finite-pd-layer-length";
        let n = self.layer_length_algebra(&self.analysis.classes().finite_pd);
        ensure!(n != 1, P, 0, "layer length at S^<∞ is 1");
        let finite_gldim = self.analysis.gldim().is_finite();
        ensure!((n == 0) == finite_gldim, P, 0, "layer length {n} at S^<∞ but gldim {}", self.analysis.gldim());
        Ok(2)
    }

    /// The db bound at `V = ∅` is `LL − 1`; with finite global dimension it is
    /// `gldim` at `V = S`, where also `ℓℓ^{t_S}(Λ) = 0`.
    pub fn classical_recovery(&self) -> Outcome {
        const P: &str = "classical-recovery";
        let n = self.n();
        let ll = self.alg.loewy_length() as i64;
        let empty = SimpleSet::empty(n);
        let at_empty = match self.analysis.pd_set(&empty).min(self.analysis.id_set(&empty)) {
            HomDim::Finite(d) => (d + 2) * (self.layer_length_algebra(&empty) as i64 + 1) - 2,
            HomDim::Infinite => unreachable!("empty class has dimension -1"),
        };
        ensure!(at_empty == ll - 1, P, 0, "bound at V = ∅ is {at_empty}, LL − 1 = {}", ll - 1);
        if let HomDim::Finite(g) = self.analysis.gldim() {
            let all = SimpleSet::all(n);
            let layers = self.layer_length_algebra(&all);
            ensure!(layers == 0, P, 0, "layer length at V = S is {layers} with gldim {g}");
            let d = self.analysis.pd_set(&all).min(self.analysis.id_set(&all));
            ensure!(d == HomDim::Finite(g), P, 0, "d at V = S is {d}, gldim {g}");
            ensure!(self.analysis.bound_db(&all) == HomDim::Finite(g), P, 0, "bound at V = S differs from gldim {g}");
        }
        Ok(2)
    }

    /// pd and id of simples from syzygy combinatorics against iterated
    /// projective covers over the rationals.
    pub fn cross_engine_pd(&self) -> Outcome {
        const P: &str = "cross-engine-pd";
        let cutoff = 2 * self.alg.dimension();
        let mut checks = 0;
        for (alg, table, what) in
            [(self.alg, self.analysis.pd_simples(), "pd"), (&self.op, self.analysis.id_simples(), "id")]
        {
            for v in 0..self.n() {
                let s = linrep::simple_rep(alg, v).unwrap();
                let oracle = linrep::pd_bounded(&s, cutoff);
                let ok = match (oracle, table[v]) {
                    (PdBound::Finite(a), HomDim::Finite(b)) => a == b,
                    (PdBound::Finite(_), HomDim::Infinite) => false,
                    (PdBound::AtLeast(k), HomDim::Finite(b)) => b >= k as i64,
                    (PdBound::AtLeast(_), HomDim::Infinite) => true,
                };
                ensure!(ok, P, 0, "{what} S({}) is {} but linear algebra gives {oracle:?}", self.alg.vertex_name(v), table[v]);
                checks += 1;
            }
        }
        Ok(checks)
    }

    /// `ℓℓ^{t_V}` of `Λ` and of each `P(i)` agree between the engines, for
    /// `∅`, `S`, `S^{<∞}` and `subsets` random sets.
    pub fn cross_engine_layer_length(&self, seed: u64, subsets: usize) -> Outcome {
        const P: &str = "cross-engine-layer-length";
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sets = vec![SimpleSet::empty(self.n()), SimpleSet::all(self.n()), self.analysis.classes().finite_pd.clone()];
        sets.extend((0..subsets).map(|_| self.random_set(&mut rng)));
        let reg = linrep::regular_rep(self.alg);
        let projectives: Vec<Rep<'_>> = (0..self.n()).map(|i| linrep::projective_rep(self.alg, i).unwrap()).collect();
        for v in &sets {
            let (a, b) = (self.layer_length_algebra(v), linrep::layer_length(&reg, v));
            ensure!(a == b, P, seed, "V = {}: path modules give {a}, linear algebra {b}", self.names(v));
            for (i, p) in projectives.iter().enumerate() {
                let a = pathmod::layer_length(self.alg, &pathmod::PathModuleSum::projective(self.alg, i), v);
                let b = linrep::layer_length(p, v);
                ensure!(a == b, P, seed, "V = {}, P({}): {a} vs {b}", self.names(v), self.alg.vertex_name(i));
            }
        }
        Ok(sets.len() * (self.n() + 1))
    }

    /// `ℓℓ^{t_V}(Λ) = ℓℓ^{t_V}(DΛ)`.
    pub fn regular_vs_coregular(&self, seed: u64, subsets: usize) -> Outcome {
        const P: &str = "regular-equals-coregular";
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coreg = linrep::coregular_rep(self.alg);
        for _ in 0..subsets {
            let v = self.random_set(&mut rng);
            let (a, b) = (self.layer_length_algebra(&v), linrep::layer_length(&coreg, &v));
            ensure!(a == b, P, seed, "V = {}: Λ gives {a}, DΛ gives {b}", self.names(&v));
        }
        Ok(subsets)
    }

    /// `ℓℓ^{t_V}(M) ≤ ℓℓ^{t_V}(Λ)` for random `M`.
    pub fn module_bounded_by_algebra(&self, seed: u64, subsets: usize, modules: usize) -> Outcome {
        const P: &str = "module-layer-length-bounded";
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mods: Vec<Rep<'_>> = (0..modules).map(|_| random::random_module(&mut rng, self.alg)).collect();
        for _ in 0..subsets {
            let v = self.random_set(&mut rng);
            let n = self.layer_length_algebra(&v);
            for (k, m) in mods.iter().enumerate() {
                let l = linrep::layer_length(m, &v);
                ensure!(l <= n, P, seed, "module #{k} (dims {:?}) has layer length {l} > {n} at V = {}", m.dims(), self.names(&v));
            }
        }
        Ok(subsets * modules)
    }

    /// Torsion-pair axioms for one random `(M, V)`: the torsion and torsion-free
    /// characterizations, `q_{t_V}(M) ∈ F(V)`, dimension additivity, the shift
    /// identity `ℓℓ(M) = ℓℓ(F^j M) + j`, and the syzygy drop
    /// `ℓℓ(Ω¹ t_V M) ≤ ℓℓ(Λ) − 1` for `V ⊆ S^{<∞}`.
    pub fn torsion_axioms(&self, seed: u64) -> Outcome {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random::random_module(&mut rng, self.alg);
        let v = self.random_set(&mut rng);
        let vs = self.names(&v);
        let (t, _) = linrep::torsion_radical(&m, &v);
        let q = linrep::q_tv(&m, &v);

        let (top, _) = linrep::top(&m);
        let top_outside_v = top.iter().enumerate().all(|(x, &k)| k == 0 || !v.contains(x));
        ensure!(
            (t.dims() == m.dims()) == top_outside_v,
            "torsion-fixed-iff-top-in-complement",
            seed,
            "V = {vs}, M dims {:?}, top {top:?}, t_V(M) dims {:?}",
            m.dims(),
            t.dims()
        );
        ensure!(
            t.is_zero() == linrep::in_fv(&m, &v),
            "torsion-zero-iff-in-FV",
            seed,
            "V = {vs}, M dims {:?}, t_V(M) dims {:?}",
            m.dims(),
            t.dims()
        );
        ensure!(linrep::in_fv(&q, &v), "quotient-in-FV", seed, "V = {vs}, q dims {:?}", q.dims());
        ensure!(
            t.total_dim() + q.total_dim() == m.total_dim(),
            "dimension-additivity",
            seed,
            "{} + {} ≠ {}",
            t.total_dim(),
            q.total_dim(),
            m.total_dim()
        );

        let n = linrep::layer_length(&m, &v);
        let mut f = m.clone();
        for j in 0..=n {
            let l = linrep::layer_length(&f, &v);
            ensure!(l + j == n, "shift-identity", seed, "V = {vs}: ℓℓ(F^{j} M) = {l}, ℓℓ(M) = {n}");
            f = linrep::f_tv(&f, &v);
        }

        let w = self.random_finite_pd_subset(&mut rng);
        if linrep::layer_length(&m, &w) > 0 {
            let bound = self.layer_length_algebra(&w);
            let omega = linrep::syzygy(&linrep::torsion_radical(&m, &w).0, 1);
            let l = linrep::layer_length(&omega, &w);
            ensure!(
                l < bound,
                "syzygy-drop",
                seed,
                "V = {}: ℓℓ(Ω¹ t_V M) = {l}, ℓℓ(Λ) = {bound}",
                self.names(&w)
            );
        }
        Ok(7)
    }

    /// `t_V` sends random monomorphisms to monomorphisms and random
    /// epimorphisms to epimorphisms.
    pub fn torsion_functoriality(&self, seed: u64) -> Outcome {
        const P: &str = "torsion-preserves-monos-and-epis";
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = self.random_set(&mut rng);
        for (f, mono) in [(random::random_mono(&mut rng, self.alg), true), (random::random_epi(&mut rng, self.alg), false)] {
            let (_, tm) = linrep::torsion_radical(&f.domain, &v);
            let (_, tn) = linrep::torsion_radical(&f.codomain, &v);
            for x in 0..self.n() {
                let image = &f.maps[x] * &tm.maps[x];
                let Some(restricted) = tn.maps[x].solve(&image) else {
                    return Err(Violation { property: P, detail: format!("f(t_V M) ⊄ t_V N at vertex {x}"), seed });
                };
                let ok = if mono {
                    restricted.rank() == restricted.cols()
                } else {
                    restricted.rank() == restricted.rows()
                };
                ensure!(ok, P, seed, "V = {}: t_V of a {} fails at vertex {}", self.names(&v), if mono { "mono" } else { "epi" }, self.alg.vertex_name(x));
            }
        }
        Ok(2)
    }

    /// `F(V)` is closed under kernels and cokernels of morphisms between its
    /// members, and `M ∈ F(V)` whenever `t_V M = 0`.
    pub fn fv_closure(&self, seed: u64) -> Outcome {
        const P: &str = "FV-closure";
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = self.random_set(&mut rng);
        let a = linrep::q_tv(&random::random_module(&mut rng, self.alg), &v);
        let b = linrep::q_tv(&random::random_module(&mut rng, self.alg), &v);
        let mut checks = 0;
        for f in linrep::hom_space(&a, &b).into_iter().take(3) {
            let (k, _) = linrep::kernel(&f);
            let (c, _) = linrep::cokernel(&f);
            ensure!(linrep::in_fv(&k, &v) && linrep::in_fv(&c, &v), P, seed, "V = {}", self.names(&v));
            ensure!(linrep::torsion_radical(&k, &v).0.is_zero(), P, seed, "kernel has torsion at V = {}", self.names(&v));
            checks += 1;
        }
        Ok(checks)
    }

    /// Everything above, with `config.cases` random module cases.
    pub fn run(&self, config: &CheckConfig) -> CheckReport {
        let mut report = CheckReport::default();
        report.record("algebra-invariants", self.algebra_invariants());
        report.record("sigma-contract", self.sigma_contract());
        report.record("finite-pd-layer-length", self.finite_pd_layer());
        report.record("classical-recovery", self.classical_recovery());
        report.record("cross-engine-pd", self.cross_engine_pd());
        report.record("cross-engine-layer-length", self.cross_engine_layer_length(config.seed, config.subsets));
        report.record("regular-equals-coregular", self.regular_vs_coregular(config.seed, config.subsets));
        report.record(
            "module-layer-length-bounded",
            self.module_bounded_by_algebra(config.seed, config.subsets.min(5), config.cases.min(20)),
        );
        for i in 0..config.cases {
            let seed = case_seed(config.seed, i);
            report.record("torsion-axioms", self.torsion_axioms(seed));
            report.record("torsion-preserves-monos-and-epis", self.torsion_functoriality(seed));
            report.record("FV-closure", self.fv_closure(seed));
        }
        report
    }
}

/// Run the whole suite on one algebra.
pub fn run_checks(alg: &Algebra, config: &CheckConfig) -> CheckReport {
    Checker::with_fault(alg, config.fault).run(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_BASIS_LIMIT;
    use crate::corpus;

    #[test]
    fn corpus_passes() {
        for (name, text) in corpus::fixtures() {
            let alg = Algebra::from_text(&text, DEFAULT_BASIS_LIMIT).unwrap();
            let report = run_checks(&alg, &CheckConfig { cases: 5, subsets: 3, ..CheckConfig::default() });
            assert!(report.passed(), "{name}: {:?}", report.violations);
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let alg = Algebra::from_text(corpus::FIX_N3, DEFAULT_BASIS_LIMIT).unwrap();
        let config = CheckConfig { cases: 2, subsets: 2, fault: Fault::LayerLengthOffByOne, ..CheckConfig::default() };
        let report = run_checks(&alg, &config);
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.property == "cross-engine-layer-length"));
    }
}

//! Upper bounds on the dimensions of `D^b(mod Λ)` and `D^b_sg(mod Λ)`
//! attached to a set `V` of simples, the classical bounds, and an
//! exhaustive search for the best `V`.

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::pathmod::{self, HomDim, SimpleClasses, SimpleSet};

pub const DEFAULT_MAX_SIMPLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("simple at vertex {vertex} has infinite projective dimension")]
    VNotInFinitePdClass { vertex: String },
    #[error("{simples} simples exceed the optimizer limit of {max}")]
    TooManySimples { simples: usize, max: usize },
}

/// `(LL − 1, gldim, max{0, LL − 2})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalBounds {
    pub ll_minus1: usize,
    pub gldim: HomDim,
    pub ll_minus2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub v: SimpleSet,
    /// `pd V`
    pub a: HomDim,
    /// `id V`
    pub c: HomDim,
    pub d: HomDim,
    /// `ℓℓ^{t_V}(Λ)`
    pub n: usize,
    pub db_bound: HomDim,
    /// `None` when `V` contains a simple of infinite projective dimension.
    pub dsg_bound: Option<usize>,
    pub classical: ClassicalBounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub v: SimpleSet,
    pub value: usize,
}

/// Per-algebra data shared by every bound evaluation: the pd/id tables and
/// the Loewy length.
#[derive(Debug)]
pub struct Analysis<'a> {
    alg: &'a Algebra,
    pd: Vec<HomDim>,
    id: Vec<HomDim>,
    classes: SimpleClasses,
}

fn sup(values: &[HomDim], v: &SimpleSet) -> HomDim {
    v.iter().map(|x| values[x]).max().unwrap_or(HomDim::ZERO_MODULE)
}

fn db_formula(d: HomDim, n: usize) -> HomDim {
    match d {
        HomDim::Finite(d) => HomDim::Finite((d + 2) * (n as i64 + 1) - 2),
        HomDim::Infinite => HomDim::Infinite,
    }
}

fn dsg_formula(n: usize) -> usize {
    n.saturating_sub(2)
}

/// Smallest value, ties broken towards the lexicographically smallest set.
fn best(candidates: Vec<(usize, SimpleSet)>) -> Option<Optimum> {
    candidates
        .into_iter()
        .min_by(|(x, u), (y, w)| x.cmp(y).then_with(|| u.lex_cmp(w)))
        .map(|(value, v)| Optimum { v, value })
}

impl<'a> Analysis<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        let (pd, id) = pathmod::simple_dimensions(alg);
        let classes = pathmod::classes_from(&pd, &id);
        Self { alg, pd, id, classes }
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    pub fn pd_simples(&self) -> &[HomDim] {
        &self.pd
    }

    pub fn id_simples(&self) -> &[HomDim] {
        &self.id
    }

    pub fn classes(&self) -> &SimpleClasses {
        &self.classes
    }

    pub fn pd_set(&self, v: &SimpleSet) -> HomDim {
        sup(&self.pd, v)
    }

    pub fn id_set(&self, v: &SimpleSet) -> HomDim {
        sup(&self.id, v)
    }

    pub fn gldim(&self) -> HomDim {
        self.pd_set(&SimpleSet::all(self.alg.num_vertices()))
    }

    pub fn loewy_length(&self) -> usize {
        self.alg.loewy_length()
    }

    pub fn layer_length(&self, v: &SimpleSet) -> usize {
        pathmod::layer_length_algebra(self.alg, v)
    }

    /// `(d+2)(n+1) − 2` with `d = min{pd V, id V}` and `n = ℓℓ^{t_V}(Λ)`.
    pub fn bound_db(&self, v: &SimpleSet) -> HomDim {
        let d = self.pd_set(v).min(self.id_set(v));
        if d == HomDim::Infinite {
            return HomDim::Infinite;
        }
        db_formula(d, self.layer_length(v))
    }

    fn check_finite_pd(&self, v: &SimpleSet) -> Result<(), BoundsError> {
        match v.iter().find(|&x| !self.pd[x].is_finite()) {
            Some(x) => Err(BoundsError::VNotInFinitePdClass { vertex: self.alg.vertex_name(x).to_string() }),
            None => Ok(()),
        }
    }

    /// `max{0, n − 2}`, defined only for `V ⊆ S^{<∞}`.
    pub fn bound_dsg(&self, v: &SimpleSet) -> Result<usize, BoundsError> {
        self.check_finite_pd(v)?;
        Ok(dsg_formula(self.layer_length(v)))
    }

    /// `bound_dsg` at `V = S^{<∞}`.
    pub fn corollary_dsg(&self) -> usize {
        self.bound_dsg(&self.classes.finite_pd).expect("S^{<∞} has finite projective dimension")
    }

    pub fn classical(&self) -> ClassicalBounds {
        let ll = self.loewy_length();
        ClassicalBounds { ll_minus1: ll - 1, gldim: self.gldim(), ll_minus2: ll.saturating_sub(2) }
    }

    pub fn report(&self, v: &SimpleSet) -> BoundReport {
        let (a, c) = (self.pd_set(v), self.id_set(v));
        let d = a.min(c);
        let n = self.layer_length(v);
        let dsg_bound = self.check_finite_pd(v).ok().map(|()| dsg_formula(n));
        BoundReport { v: v.clone(), a, c, d, n, db_bound: db_formula(d, n), dsg_bound, classical: self.classical() }
    }

    fn check_size(&self, max_simples: usize) -> Result<usize, BoundsError> {
        let n = self.alg.num_vertices();
        if n > max_simples || n >= 64 {
            return Err(BoundsError::TooManySimples { simples: n, max: max_simples });
        }
        Ok(n)
    }

    /// The minimum of `bound_db` over all subsets of simples. `V = ∅` always
    /// gives the finite value `LL − 1`, so the minimum is finite.
    pub fn optimize_db(&self, max_simples: usize) -> Result<Optimum, BoundsError> {
        let n = self.check_size(max_simples)?;
        let candidates = (0..1u64 << n)
            .into_par_iter()
            .filter_map(|mask| {
                let v = SimpleSet::from_mask(n, mask);
                let value = self.bound_db(&v).finite()?;
                Some((usize::try_from(value).expect("db bound is nonnegative"), v))
            })
            .collect();
        Ok(best(candidates).expect("the empty set gives a finite bound"))
    }

    /// The minimum of `bound_dsg` over all `V ⊆ S^{<∞}`.
    pub fn optimize_dsg(&self, max_simples: usize) -> Result<Optimum, BoundsError> {
        let n = self.check_size(max_simples)?;
        let finite: Vec<usize> = self.classes.finite_pd.iter().collect();
        let candidates = (0..1u64 << finite.len())
            .into_par_iter()
            .map(|mask| {
                let v = SimpleSet::from_vertices(n, (0..finite.len()).filter(|i| mask >> i & 1 == 1).map(|i| finite[i]));
                (dsg_formula(self.layer_length(&v)), v)
            })
            .collect();
        Ok(best(candidates).expect("the empty set is a candidate"))
    }
}

/// The smallest available bounds: `min{db, LL − 1, gldim}` and
/// `min{dsg, max{0, LL − 2}}`, where finite global dimension makes the
/// singularity category zero.
pub fn headline(db: HomDim, dsg: Option<usize>, classical: &ClassicalBounds) -> (usize, usize) {
    let mut hd = classical.ll_minus1;
    for x in [db, classical.gldim] {
        if let HomDim::Finite(x) = x {
            hd = hd.min(x.max(0) as usize);
        }
    }
    let mut hs = dsg.map_or(classical.ll_minus2, |x| x.min(classical.ll_minus2));
    if classical.gldim.is_finite() {
        hs = 0;
    }
    (hd, hs)
}

pub fn pd_set(alg: &Algebra, v: &SimpleSet) -> HomDim {
    Analysis::new(alg).pd_set(v)
}

pub fn id_set(alg: &Algebra, v: &SimpleSet) -> HomDim {
    Analysis::new(alg).id_set(v)
}

pub fn bound_db(alg: &Algebra, v: &SimpleSet) -> HomDim {
    Analysis::new(alg).bound_db(v)
}

pub fn bound_dsg(alg: &Algebra, v: &SimpleSet) -> Result<usize, BoundsError> {
    Analysis::new(alg).bound_dsg(v)
}

pub fn corollary_dsg(alg: &Algebra) -> usize {
    Analysis::new(alg).corollary_dsg()
}

pub fn classical_bounds(alg: &Algebra) -> ClassicalBounds {
    Analysis::new(alg).classical()
}

pub fn optimize_db(alg: &Algebra, max_simples: usize) -> Result<Optimum, BoundsError> {
    Analysis::new(alg).optimize_db(max_simples)
}

pub fn optimize_dsg(alg: &Algebra, max_simples: usize) -> Result<Optimum, BoundsError> {
    Analysis::new(alg).optimize_dsg(max_simples)
}

//! Finite-dimensional representations of a bound quiver over the rationals.
//!
//! This is an independent oracle for [`crate::pathmod`]: it knows nothing
//! about syzygy combinatorics and works purely with linear algebra on
//! arbitrary modules. Modules are right modules; an arrow `α: i → j` acts by
//! a `dim M_j × dim M_i` matrix and a path acts by the product of its arrow
//! matrices, leftmost arrow first.

mod hom;
mod resolution;
pub mod random;
mod torsion;

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{Algebra, PathId};
use crate::linalg::{Matrix, Rational};

pub use hom::{hom_space, is_isomorphic, is_isomorphic_with_budget, DEFAULT_ISO_BUDGET};
pub use resolution::{pd_bounded, pd_bounded_with_budget, projective_cover, syzygy, PdBound, DEFAULT_SYZYGY_DIM_BUDGET};
pub use torsion::{
    composition_factors, f_tv, in_fv, layer_length, loewy_length, q_tv, torsion_radical,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinrepError {
    #[error("unknown vertex #{0}")]
    UnknownVertex(usize),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("not a morphism of representations: {0}")]
    NotAMorphism(String),
    #[error("projective cover lift is not surjective at vertex #{0}")]
    LiftFailure(usize),
    #[error("isomorphism test undecided after {0} attempts")]
    Undecided(usize),
}

/// A representation `M` of the bound quiver of `alg`.
#[derive(Clone, Debug)]
pub struct Rep<'a> {
    alg: &'a Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug)]
pub struct RepMorphism<'a> {
    pub domain: Rep<'a>,
    pub codomain: Rep<'a>,
    pub maps: Vec<Matrix>,
}

impl<'a> Rep<'a> {
    /// Checks matrix shapes and that every relation acts by zero.
    pub fn new(alg: &'a Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, LinrepError> {
        if dims.len() != alg.num_vertices() || maps.len() != alg.num_arrows() {
            return Err(LinrepError::InvalidRep("wrong number of vertex spaces or arrow maps".into()));
        }
        for (a, m) in maps.iter().enumerate() {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            if (m.rows(), m.cols()) != (dims[t], dims[s]) {
                return Err(LinrepError::InvalidRep(format!(
                    "arrow {} has a {}x{} matrix, expected {}x{}",
                    alg.presentation().quiver.arrows()[a].name,
                    m.rows(),
                    m.cols(),
                    dims[t],
                    dims[s]
                )));
            }
        }
        let rep = Self { alg, dims, maps };
        for rel in &alg.presentation().relations {
            if !rep.word_action(rel).is_zero() {
                return Err(LinrepError::InvalidRep(format!(
                    "relation {} does not act by zero",
                    alg.presentation().relation_names(rel)
                )));
            }
        }
        Ok(rep)
    }

    /// For maps produced by constructions that preserve the relations.
    fn from_parts(alg: &'a Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let rep = Self { alg, dims, maps };
        debug_assert!(alg.presentation().relations.iter().all(|r| rep.word_action(r).is_zero()));
        rep
    }

    pub fn zero(alg: &'a Algebra) -> Self {
        let dims = vec![0; alg.num_vertices()];
        let maps = (0..alg.num_arrows()).map(|_| Matrix::zeros(0, 0)).collect();
        Self { alg, dims, maps }
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// The matrix by which a word of arrows acts.
    pub fn word_action(&self, word: &[usize]) -> Matrix {
        let Some(&first) = word.first() else {
            panic!("word_action needs a nonempty word");
        };
        let mut acc = self.maps[first].clone();
        for &a in &word[1..] {
            acc = &self.maps[a] * &acc;
        }
        acc
    }

    fn identity_bases(&self) -> Vec<Matrix> {
        self.dims.iter().map(|&d| Matrix::identity(d)).collect()
    }

    fn empty_bases(&self) -> Vec<Matrix> {
        self.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect()
    }

    /// Images of all incoming arrows applied to `sub`, per vertex.
    fn radical_within(&self, sub: &[Matrix]) -> Vec<Matrix> {
        let mut parts: Vec<Vec<Matrix>> = vec![Vec::new(); self.dims.len()];
        for (a, m) in self.maps.iter().enumerate() {
            let (s, t) = (self.alg.arrow_source(a), self.alg.arrow_target(a));
            if sub[s].cols() > 0 && self.dims[t] > 0 {
                parts[t].push(m * &sub[s]);
            }
        }
        parts
            .iter()
            .enumerate()
            .map(|(v, ps)| Matrix::hstack_all(self.dims[v], ps).column_basis())
            .collect()
    }

    /// The subrepresentation spanned by arrow-closed column bases, with its inclusion.
    fn subrep(&self, bases: Vec<Matrix>) -> (Rep<'a>, RepMorphism<'a>) {
        let bases: Vec<Matrix> = bases.iter().map(Matrix::column_basis).collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = (0..self.maps.len())
            .map(|a| {
                let (s, t) = (self.alg.arrow_source(a), self.alg.arrow_target(a));
                bases[t]
                    .solve(&(&self.maps[a] * &bases[s]))
                    .expect("subspace family is closed under the arrows")
            })
            .collect();
        let sub = Rep::from_parts(self.alg, dims, maps);
        let inclusion = RepMorphism { domain: sub.clone(), codomain: self.clone(), maps: bases };
        (sub, inclusion)
    }

    /// `M / U` for an arrow-closed subspace family `U`, with the quotient map.
    fn quotient(&self, bases: &[Matrix]) -> (Rep<'a>, RepMorphism<'a>) {
        let mut sections = Vec::with_capacity(self.dims.len());
        let mut projections = Vec::with_capacity(self.dims.len());
        for (v, b) in bases.iter().enumerate() {
            let b = b.column_basis();
            let c = b.complement();
            let change = b.hstack(&c).inverse().expect("basis extended to the whole space");
            projections.push(change.row_range(b.cols(), self.dims[v]));
            sections.push(c);
        }
        let dims: Vec<usize> = sections.iter().map(Matrix::cols).collect();
        let maps = (0..self.maps.len())
            .map(|a| {
                let (s, t) = (self.alg.arrow_source(a), self.alg.arrow_target(a));
                &(&projections[t] * &self.maps[a]) * &sections[s]
            })
            .collect();
        let q = Rep::from_parts(self.alg, dims, maps);
        let map = RepMorphism { domain: self.clone(), codomain: q.clone(), maps: projections };
        (q, map)
    }

    /// The submodule generated by the given elements `(vertex, column vector)`.
    pub fn submodule_generated(&self, elements: &[(usize, Matrix)]) -> (Rep<'a>, RepMorphism<'a>) {
        let mut bases = self.empty_bases();
        for (v, x) in elements {
            bases[*v] = bases[*v].hstack(x).column_basis();
        }
        loop {
            let images = self.radical_within(&bases);
            let mut grown = false;
            for v in 0..bases.len() {
                let merged = bases[v].hstack(&images[v]).column_basis();
                if merged.cols() > bases[v].cols() {
                    bases[v] = merged;
                    grown = true;
                }
            }
            if !grown {
                return self.subrep(bases);
            }
        }
    }

    /// `(M ⊕ N)` with block-diagonal arrow maps.
    pub fn direct_sum(alg: &'a Algebra, parts: &[Rep<'a>]) -> Rep<'a> {
        let dims = (0..alg.num_vertices()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.num_arrows())
            .map(|a| Matrix::block_diagonal(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        Rep::from_parts(alg, dims, maps)
    }
}

impl<'a> RepMorphism<'a> {
    /// Checks shapes and the commuting square for every arrow.
    pub fn new(domain: Rep<'a>, codomain: Rep<'a>, maps: Vec<Matrix>) -> Result<Self, LinrepError> {
        let alg = domain.alg;
        if maps.len() != alg.num_vertices() {
            return Err(LinrepError::NotAMorphism("wrong number of vertex maps".into()));
        }
        for (v, f) in maps.iter().enumerate() {
            if (f.rows(), f.cols()) != (codomain.dims[v], domain.dims[v]) {
                return Err(LinrepError::NotAMorphism(format!("vertex #{v} has the wrong shape")));
            }
        }
        for a in 0..alg.num_arrows() {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            if &maps[t] * &domain.maps[a] != &codomain.maps[a] * &maps[s] {
                return Err(LinrepError::NotAMorphism(format!(
                    "square for arrow {} does not commute",
                    alg.presentation().quiver.arrows()[a].name
                )));
            }
        }
        Ok(Self { domain, codomain, maps })
    }

    pub fn identity(m: &Rep<'a>) -> Self {
        Self { domain: m.clone(), codomain: m.clone(), maps: m.identity_bases() }
    }

    pub fn zero(domain: &Rep<'a>, codomain: &Rep<'a>) -> Self {
        let maps = domain.dims.iter().zip(&codomain.dims).map(|(&d, &c)| Matrix::zeros(c, d)).collect();
        Self { domain: domain.clone(), codomain: codomain.clone(), maps }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RepMorphism<'a>) -> RepMorphism<'a> {
        let maps = self.maps.iter().zip(&other.maps).map(|(f, g)| g * f).collect();
        RepMorphism { domain: self.domain.clone(), codomain: other.codomain.clone(), maps }
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().zip(&self.domain.dims).all(|(f, &d)| f.rank() == d)
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().zip(&self.codomain.dims).all(|(f, &d)| f.rank() == d)
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }
}

fn check_vertex(alg: &Algebra, v: usize) -> Result<(), LinrepError> {
    if v < alg.num_vertices() {
        Ok(())
    } else {
        Err(LinrepError::UnknownVertex(v))
    }
}

/// Group basis paths by a vertex and record each path's coordinate.
fn coordinates(alg: &Algebra, paths: &[PathId], key: impl Fn(PathId) -> usize) -> (Vec<usize>, HashMap<PathId, usize>) {
    let mut dims = vec![0; alg.num_vertices()];
    let mut pos = HashMap::new();
    for &p in paths {
        let v = key(p);
        pos.insert(p, dims[v]);
        dims[v] += 1;
    }
    (dims, pos)
}

pub fn simple_rep(alg: &Algebra, v: usize) -> Result<Rep<'_>, LinrepError> {
    check_vertex(alg, v)?;
    let mut dims = vec![0; alg.num_vertices()];
    dims[v] = 1;
    let maps = (0..alg.num_arrows())
        .map(|a| Matrix::zeros(dims[alg.arrow_target(a)], dims[alg.arrow_source(a)]))
        .collect();
    Ok(Rep::from_parts(alg, dims, maps))
}

/// `P(v) = e_v Λ`: basis the paths starting at `v`, arrows act by appending.
pub fn projective_rep(alg: &Algebra, v: usize) -> Result<Rep<'_>, LinrepError> {
    check_vertex(alg, v)?;
    let paths = alg.paths_from(v).expect("vertex checked");
    let (dims, pos) = coordinates(alg, paths, |p| alg.target(p));
    let mut maps: Vec<Matrix> = (0..alg.num_arrows())
        .map(|a| Matrix::zeros(dims[alg.arrow_target(a)], dims[alg.arrow_source(a)]))
        .collect();
    for &p in paths {
        for &(a, pa) in alg.extensions(p) {
            maps[a][(pos[&pa], pos[&p])] = Rational::from_integer(1.into());
        }
    }
    Ok(Rep::from_parts(alg, dims, maps))
}

/// `I(v) = D(Λ e_v)`: basis dual to the paths ending at `v`; an arrow `α`
/// sends the dual of `α q` to the dual of `q` and kills the rest.
pub fn injective_rep(alg: &Algebra, v: usize) -> Result<Rep<'_>, LinrepError> {
    check_vertex(alg, v)?;
    let paths = alg.paths_to(v).expect("vertex checked");
    let (dims, pos) = coordinates(alg, paths, |p| alg.source(p));
    let mut maps: Vec<Matrix> = (0..alg.num_arrows())
        .map(|a| Matrix::zeros(dims[alg.arrow_target(a)], dims[alg.arrow_source(a)]))
        .collect();
    for &p in paths {
        let path = alg.path(p);
        if let Some((&first, rest)) = path.arrows.split_first() {
            let q = alg.lookup(alg.arrow_target(first), rest).expect("subpaths of nonzero paths are nonzero");
            maps[first][(pos[&q], pos[&p])] = Rational::from_integer(1.into());
        }
    }
    Ok(Rep::from_parts(alg, dims, maps))
}

/// `Λ_Λ = ⊕ P(v)`.
pub fn regular_rep(alg: &Algebra) -> Rep<'_> {
    let parts: Vec<Rep<'_>> = (0..alg.num_vertices()).map(|v| projective_rep(alg, v).unwrap()).collect();
    Rep::direct_sum(alg, &parts)
}

/// `D(Λ) = ⊕ I(v)`.
pub fn coregular_rep(alg: &Algebra) -> Rep<'_> {
    let parts: Vec<Rep<'_>> = (0..alg.num_vertices()).map(|v| injective_rep(alg, v).unwrap()).collect();
    Rep::direct_sum(alg, &parts)
}

/// `rad M` with its inclusion.
pub fn radical<'a>(m: &Rep<'a>) -> (Rep<'a>, RepMorphism<'a>) {
    m.subrep(m.radical_within(&m.identity_bases()))
}

/// Multiplicity of each simple in `top M`, and the quotient map `M → top M`.
pub fn top<'a>(m: &Rep<'a>) -> (Vec<usize>, RepMorphism<'a>) {
    let rad = m.radical_within(&m.identity_bases());
    let (q, map) = m.quotient(&rad);
    (q.dims.clone(), map)
}

/// `soc M`: at each vertex, the common kernel of the outgoing arrows.
pub fn socle<'a>(m: &Rep<'a>) -> Rep<'a> {
    socle_with_inclusion(m).0
}

pub fn socle_with_inclusion<'a>(m: &Rep<'a>) -> (Rep<'a>, RepMorphism<'a>) {
    let alg = m.alg;
    let bases = (0..alg.num_vertices())
        .map(|v| {
            let outgoing: Vec<Matrix> =
                (0..alg.num_arrows()).filter(|&a| alg.arrow_source(a) == v).map(|a| m.maps[a].clone()).collect();
            Matrix::vstack_all(m.dims[v], &outgoing).null_space()
        })
        .collect();
    m.subrep(bases)
}

pub fn kernel<'a>(f: &RepMorphism<'a>) -> (Rep<'a>, RepMorphism<'a>) {
    f.domain.subrep(f.maps.iter().map(Matrix::null_space).collect())
}

pub fn image<'a>(f: &RepMorphism<'a>) -> (Rep<'a>, RepMorphism<'a>) {
    f.codomain.subrep(f.maps.iter().map(Matrix::column_basis).collect())
}

pub fn cokernel<'a>(f: &RepMorphism<'a>) -> (Rep<'a>, RepMorphism<'a>) {
    let im: Vec<Matrix> = f.maps.iter().map(Matrix::column_basis).collect();
    f.codomain.quotient(&im)
}

/// `M / U` for a submodule given by its inclusion.
pub fn quotient<'a>(inclusion: &RepMorphism<'a>) -> (Rep<'a>, RepMorphism<'a>) {
    cokernel(inclusion)
}

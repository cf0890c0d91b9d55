use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{LinrepError, Rep, RepMorphism};
use crate::linalg::{rational, Matrix};

/// Random combinations tried before `is_isomorphic` reports `Undecided`.
pub const DEFAULT_ISO_BUDGET: usize = 64;

/// A basis of `Hom(M, N)`: the null space of the commuting-square system
/// `f_t A_α = B_α f_s` in the entries of the vertex maps.
pub fn hom_space<'a>(m: &Rep<'a>, n: &Rep<'a>) -> Vec<RepMorphism<'a>> {
    let alg = m.algebra();
    let mut offsets = Vec::with_capacity(alg.num_vertices());
    let mut vars = 0;
    for v in 0..alg.num_vertices() {
        offsets.push(vars);
        vars += n.dim(v) * m.dim(v);
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dim(v) + c;

    let mut rows: Vec<Vec<(usize, crate::linalg::Rational)>> = Vec::new();
    for a in 0..alg.num_arrows() {
        let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
        let (ma, na) = (m.map(a), n.map(a));
        for r in 0..n.dim(t) {
            for c in 0..m.dim(s) {
                let mut row = Vec::new();
                for k in 0..m.dim(t) {
                    row.push((var(t, r, k), ma[(k, c)].clone()));
                }
                for k in 0..n.dim(s) {
                    row.push((var(s, k, c), -na[(r, k)].clone()));
                }
                rows.push(row);
            }
        }
    }
    let mut system = Matrix::zeros(rows.len(), vars);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, x) in row {
            system[(i, j)] += x;
        }
    }

    let kernel = system.null_space();
    (0..kernel.cols())
        .map(|k| {
            let maps = (0..alg.num_vertices())
                .map(|v| Matrix::from_fn(n.dim(v), m.dim(v), |r, c| kernel[(var(v, r, c), k)].clone()))
                .collect();
            RepMorphism { domain: m.clone(), codomain: n.clone(), maps }
        })
        .collect()
}

pub fn is_isomorphic(m: &Rep<'_>, n: &Rep<'_>) -> Result<bool, LinrepError> {
    is_isomorphic_with_budget(m, n, DEFAULT_ISO_BUDGET)
}

/// `false` on differing dimension vectors or when `dim Hom(M, N)` differs
/// from `dim End(M)` or `dim End(N)`;
/// otherwise searches random integer combinations of a `Hom(M, N)` basis
/// for an invertible one. A generic combination is invertible whenever any
/// element is, so exhausting the budget is reported as `Undecided`.
pub fn is_isomorphic_with_budget(m: &Rep<'_>, n: &Rep<'_>, budget: usize) -> Result<bool, LinrepError> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_space(m, n);
    if basis.is_empty() || basis.len() != hom_space(m, m).len() || basis.len() != hom_space(n, n).len() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..budget {
        let coeffs: Vec<i64> = basis.iter().map(|_| rng.gen_range(-7..=7)).collect();
        let invertible = (0..m.dims().len()).all(|v| {
            let f = basis
                .iter()
                .zip(&coeffs)
                .fold(Matrix::zeros(n.dim(v), m.dim(v)), |acc, (b, &k)| acc.add(&b.maps[v].scale(&rational(k))));
            f.is_invertible()
        });
        if invertible {
            return Ok(true);
        }
    }
    Err(LinrepError::Undecided(budget))
}

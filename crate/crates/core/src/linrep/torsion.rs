//! The torsion pair `(T_V, F(V))` on representations. Everything is
//! computed as subspace families inside the ambient module, so no
//! intermediate representations need to be built.

use super::{Rep, RepMorphism};
use crate::linalg::Matrix;
use crate::pathmod::SimpleSet;

/// Peel `V`-isotypic top layers off `sub` until its top avoids `V`.
fn torsion_within(m: &Rep<'_>, sub: Vec<Matrix>, v: &SimpleSet) -> Vec<Matrix> {
    let mut cur = sub;
    loop {
        let rad = m.radical_within(&cur);
        let mut shrunk = false;
        for x in v.iter() {
            if rad[x].cols() < cur[x].cols() {
                cur[x] = rad[x].clone();
                shrunk = true;
            }
        }
        if !shrunk {
            return cur;
        }
    }
}

fn total(bases: &[Matrix]) -> usize {
    bases.iter().map(Matrix::cols).sum()
}

/// `t_V(M)` with its inclusion.
pub fn torsion_radical<'a>(m: &Rep<'a>, v: &SimpleSet) -> (Rep<'a>, RepMorphism<'a>) {
    m.subrep(torsion_within(m, m.identity_bases(), v))
}

/// `M / t_V(M)`.
pub fn q_tv<'a>(m: &Rep<'a>, v: &SimpleSet) -> Rep<'a> {
    m.quotient(&torsion_within(m, m.identity_bases(), v)).0
}

/// `F_{t_V}(M) = rad t_V(M)`.
pub fn f_tv<'a>(m: &Rep<'a>, v: &SimpleSet) -> Rep<'a> {
    let t = torsion_within(m, m.identity_bases(), v);
    m.subrep(m.radical_within(&t)).0
}

/// `ℓℓ^{t_V}(M)`: the number of `F_{t_V}` steps before the torsion part vanishes.
pub fn layer_length(m: &Rep<'_>, v: &SimpleSet) -> usize {
    let mut cur = torsion_within(m, m.identity_bases(), v);
    let mut steps = 0;
    while total(&cur) > 0 {
        steps += 1;
        cur = torsion_within(m, m.radical_within(&cur), v);
    }
    steps
}

/// Length of the radical series.
pub fn loewy_length(m: &Rep<'_>) -> usize {
    let mut cur = m.identity_bases();
    let mut steps = 0;
    while total(&cur) > 0 {
        steps += 1;
        cur = m.radical_within(&cur);
    }
    steps
}

/// `M ∈ F(V)`: every composition factor lies in `V`.
pub fn in_fv(m: &Rep<'_>, v: &SimpleSet) -> bool {
    m.dims().iter().enumerate().all(|(x, &d)| d == 0 || v.contains(x))
}

/// Composition factors as multiplicities per vertex.
pub fn composition_factors(m: &Rep<'_>) -> Vec<usize> {
    m.dims().to_vec()
}

use std::collections::HashMap;

use super::{kernel, projective_rep, LinrepError, Rep, RepMorphism};
use crate::linalg::Matrix;

/// Syzygies whose projective cover grows past this total dimension stop
/// `pd_bounded` early with a lower bound.
pub const DEFAULT_SYZYGY_DIM_BUDGET: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdBound {
    Finite(i64),
    /// `pd M ≥ k`, verified.
    AtLeast(usize),
}

/// `P(M) ↠ M`, lifting the identity-column complement of `rad M` as a basis of the top.
pub fn projective_cover<'a>(m: &Rep<'a>) -> Result<RepMorphism<'a>, LinrepError> {
    let alg = m.algebra();
    let rad = m.radical_within(&m.identity_bases());
    let mut summands = Vec::new();
    let mut columns: Vec<Vec<Matrix>> = vec![Vec::new(); alg.num_vertices()];
    let mut cache: HashMap<usize, Rep<'a>> = HashMap::new();

    for (i, r) in rad.iter().enumerate() {
        let lifts = r.complement();
        for g in 0..lifts.cols() {
            let x = lifts.select_columns(&[g]);
            let mut value = HashMap::new();
            for &p in alg.paths_from(i).expect("vertex in range") {
                let arrows = &alg.path(p).arrows;
                let v = match arrows.split_last() {
                    None => x.clone(),
                    Some((&last, init)) => {
                        let parent = alg.lookup(i, init).expect("prefix of a nonzero path");
                        m.map(last) * &value[&parent]
                    }
                };
                columns[alg.target(p)].push(v.clone());
                value.insert(p, v);
            }
            summands.push(cache.entry(i).or_insert_with(|| projective_rep(alg, i).unwrap()).clone());
        }
    }

    let cover = Rep::direct_sum(alg, &summands);
    let maps: Vec<Matrix> =
        columns.iter().enumerate().map(|(j, cs)| Matrix::hstack_all(m.dim(j), cs)).collect();
    for (j, f) in maps.iter().enumerate() {
        if f.rank() != m.dim(j) {
            return Err(LinrepError::LiftFailure(j));
        }
    }
    Ok(RepMorphism { domain: cover, codomain: m.clone(), maps })
}

/// `Ω^k(M)`.
pub fn syzygy<'a>(m: &Rep<'a>, k: usize) -> Rep<'a> {
    let mut cur = m.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        let cover = projective_cover(&cur).expect("projective cover lifts");
        cur = kernel(&cover).0;
    }
    cur
}

/// Smallest `d ≤ cutoff` with `Ω^d(M)` projective, or `AtLeast(cutoff)`.
pub fn pd_bounded(m: &Rep<'_>, cutoff: usize) -> PdBound {
    pd_bounded_with_budget(m, cutoff, DEFAULT_SYZYGY_DIM_BUDGET)
}

/// As [`pd_bounded`], but gives up once a projective cover exceeds
/// `dim_budget`; the lower bound returned is then the number of syzygies
/// shown to be non-projective.
pub fn pd_bounded_with_budget(m: &Rep<'_>, cutoff: usize, dim_budget: usize) -> PdBound {
    if m.is_zero() {
        return PdBound::Finite(-1);
    }
    let mut cur = m.clone();
    for k in 0..=cutoff {
        let cover = projective_cover(&cur).expect("projective cover lifts");
        if cover.domain.total_dim() == cur.total_dim() {
            return PdBound::Finite(k as i64);
        }
        if k == cutoff {
            break;
        }
        if cover.domain.total_dim() > dim_budget {
            return PdBound::AtLeast(k + 1);
        }
        cur = kernel(&cover).0;
    }
    PdBound::AtLeast(cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, DEFAULT_BASIS_LIMIT};
    use crate::corpus;
    use crate::linrep::{is_isomorphic, radical, simple_rep};

    fn alg(text: &str) -> Algebra {
        Algebra::from_text(text, DEFAULT_BASIS_LIMIT).unwrap()
    }

    #[test]
    fn covers() {
        let n3 = alg(corpus::FIX_N3);
        let s1 = simple_rep(&n3, 0).unwrap();
        let c = projective_cover(&s1).unwrap();
        assert!(is_isomorphic(&c.domain, &projective_rep(&n3, 0).unwrap()).unwrap());
        assert!(c.is_epi());

        let p2 = projective_rep(&n3, 1).unwrap();
        assert!(projective_cover(&p2).unwrap().is_iso());

        let rad = radical(&projective_rep(&n3, 0).unwrap()).0;
        let c = projective_cover(&rad).unwrap();
        assert!(is_isomorphic(&c.domain, &p2).unwrap());

        let zero = Rep::zero(&n3);
        assert!(projective_cover(&zero).unwrap().domain.is_zero());
    }

    #[test]
    fn syzygies() {
        let l2 = alg(corpus::FIX_L2);
        let s = simple_rep(&l2, 0).unwrap();
        assert!(is_isomorphic(&syzygy(&s, 1), &s).unwrap());
        assert!(syzygy(&projective_rep(&l2, 0).unwrap(), 1).is_zero());

        let n3 = alg(corpus::FIX_N3);
        let s1 = simple_rep(&n3, 0).unwrap();
        assert_eq!(syzygy(&s1, 0).dims(), s1.dims());
        assert!(is_isomorphic(&syzygy(&s1, 2), &simple_rep(&n3, 2).unwrap()).unwrap());
        assert!(syzygy(&s1, 3).is_zero());
    }

    #[test]
    fn bounded_projective_dimension() {
        let n3 = alg(corpus::FIX_N3);
        assert_eq!(pd_bounded(&simple_rep(&n3, 0).unwrap(), 10), PdBound::Finite(2));
        assert_eq!(pd_bounded(&projective_rep(&n3, 1).unwrap(), 10), PdBound::Finite(0));
        assert_eq!(pd_bounded(&Rep::zero(&n3), 10), PdBound::Finite(-1));
        let l2 = alg(corpus::FIX_L2);
        assert_eq!(pd_bounded(&simple_rep(&l2, 0).unwrap(), 10), PdBound::AtLeast(10));
        assert_eq!(pd_bounded_with_budget(&simple_rep(&l2, 0).unwrap(), 10, 1), PdBound::AtLeast(1));
    }
}

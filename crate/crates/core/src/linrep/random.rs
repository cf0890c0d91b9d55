//! Seeded random representations for property tests: quotients of small
//! projective sums and submodules of injective sums, plus monomorphisms and
//! epimorphisms between them.

use rand::Rng;

use super::{injective_rep, projective_rep, simple_rep, Rep, RepMorphism};
use crate::algebra::Algebra;
use crate::linalg::{rational, Matrix};
use crate::pathmod::SimpleSet;

/// A random element of `M_v` with small integer coordinates.
pub fn random_element<R: Rng>(rng: &mut R, m: &Rep<'_>, v: usize) -> Matrix {
    Matrix::from_fn(m.dim(v), 1, |_, _| rational(rng.gen_range(-2..=2)))
}

fn random_elements<R: Rng>(rng: &mut R, m: &Rep<'_>, count: usize) -> Vec<(usize, Matrix)> {
    let support: Vec<usize> = (0..m.dims().len()).filter(|&v| m.dim(v) > 0).collect();
    if support.is_empty() {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            let v = support[rng.gen_range(0..support.len())];
            (v, random_element(rng, m, v))
        })
        .collect()
}

fn random_sum<'a, R: Rng>(rng: &mut R, alg: &'a Algebra, injective: bool) -> Rep<'a> {
    let n = alg.num_vertices();
    let parts: Vec<Rep<'a>> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let v = rng.gen_range(0..n);
            if injective {
                injective_rep(alg, v).unwrap()
            } else {
                projective_rep(alg, v).unwrap()
            }
        })
        .collect();
    Rep::direct_sum(alg, &parts)
}

/// A random submodule of a small projective or injective sum, with its inclusion.
pub fn random_mono<'a, R: Rng>(rng: &mut R, alg: &'a Algebra) -> RepMorphism<'a> {
    let injective = rng.gen_bool(0.5);
    let ambient = random_sum(rng, alg, injective);
    let count = rng.gen_range(1..=2);
    let gens = random_elements(rng, &ambient, count);
    ambient.submodule_generated(&gens).1
}

/// A random quotient of a small projective or injective sum, with the quotient map.
pub fn random_epi<'a, R: Rng>(rng: &mut R, alg: &'a Algebra) -> RepMorphism<'a> {
    let injective = rng.gen_bool(0.5);
    let ambient = random_sum(rng, alg, injective);
    let count = rng.gen_range(0..=2);
    let gens = random_elements(rng, &ambient, count);
    let (_, inclusion) = ambient.submodule_generated(&gens);
    super::cokernel(&inclusion).1
}

/// A random module: a simple, an indecomposable projective or injective,
/// a submodule, or a quotient.
pub fn random_module<'a, R: Rng>(rng: &mut R, alg: &'a Algebra) -> Rep<'a> {
    let v = rng.gen_range(0..alg.num_vertices());
    match rng.gen_range(0..6) {
        0 => simple_rep(alg, v).unwrap(),
        1 => projective_rep(alg, v).unwrap(),
        2 => injective_rep(alg, v).unwrap(),
        3 => random_mono(rng, alg).domain,
        _ => random_epi(rng, alg).codomain,
    }
}

/// Each vertex independently with probability one half.
pub fn random_simple_set<R: Rng>(rng: &mut R, num_vertices: usize) -> SimpleSet {
    SimpleSet::from_vertices(num_vertices, (0..num_vertices).filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_BASIS_LIMIT;
    use crate::corpus;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_maps_have_the_right_shape() {
        let a = Algebra::from_text(&corpus::example41(10).unwrap(), DEFAULT_BASIS_LIMIT).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f = random_mono(&mut rng, &a);
            assert!(f.is_mono());
            assert!(RepMorphism::new(f.domain.clone(), f.codomain.clone(), f.maps.clone()).is_ok());
            let g = random_epi(&mut rng, &a);
            assert!(g.is_epi());
            assert!(RepMorphism::new(g.domain.clone(), g.codomain.clone(), g.maps.clone()).is_ok());
            let m = random_module(&mut rng, &a);
            assert!(Rep::new(&a, m.dims().to_vec(), (0..a.num_arrows()).map(|x| m.map(x).clone()).collect()).is_ok());
        }
    }
}

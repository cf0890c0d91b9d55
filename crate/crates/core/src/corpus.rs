//! Fixture algebras, the two parameterized example families, and a seeded
//! generator of small random monomial algebras.

use std::fmt::Write;

use rand::Rng;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::presentation::{self, Presentation, Quiver};

/// `1 → 2`, no relations.
pub const FIX_A2: &str = "vertices 1 2\narrow a 1 2\n";
/// One loop `x` with `x² = 0`.
pub const FIX_L2: &str = "vertices 1\narrow x 1 1\nrelation x x\n";
/// `1 → 2 → 3` with `ab = 0`.
pub const FIX_N3: &str = "vertices 1 2 3\narrow a 1 2\narrow b 2 3\nrelation a b\n";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Loop at 1, a long arm `1 → 2 → ⋯ → m`, and two extra sinks `m+1`, `m+2`.
    Example41,
    /// Two arms out of 1: a relation-free `1 → ⋯ → m` and a radical-square-zero `m+1 → ⋯ → 2m−1`.
    Example42,
}

impl Family {
    pub fn min_m(self) -> usize {
        match self {
            Family::Example41 => 10,
            Family::Example42 => 9,
        }
    }

    pub fn generate(self, m: usize) -> Result<String, FamilyError> {
        match self {
            Family::Example41 => example41(m),
            Family::Example42 => example42(m),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "example41" => Ok(Family::Example41),
            "example42" => Ok(Family::Example42),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("m = {m} is below the family minimum {min}")]
    MBelowMinimum { m: usize, min: usize },
    #[error("unknown family `{0}` (expected example41 or example42)")]
    UnknownFamily(String),
}

fn check_min(m: usize, min: usize) -> Result<(), FamilyError> {
    if m < min {
        Err(FamilyError::MBelowMinimum { m, min })
    } else {
        Ok(())
    }
}

fn vertices_line(n: usize) -> String {
    let ids: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    format!("vertices {}\n", ids.join(" "))
}

/// Arrows `a1 … a(m+2)`: `a1` a loop at 1, `a2: 1→2`, `ai: (i−1)→i` for
/// `3 ≤ i ≤ m`, `a(m+1): 1→m+1`, `a(m+2): 1→m+2`. Relations `a1 a1`,
/// `a1 a(m+1)`, `a1 a(m+2)`, `a1 a2` and `a2 a3 ⋯ am`.
pub fn example41(m: usize) -> Result<String, FamilyError> {
    check_min(m, Family::Example41.min_m())?;
    let mut s = format!("# example41, m = {m}\n");
    s += &vertices_line(m + 2);
    s += "arrow a1 1 1\narrow a2 1 2\n";
    for i in 3..=m {
        writeln!(s, "arrow a{i} {} {i}", i - 1).unwrap();
    }
    writeln!(s, "arrow a{} 1 {}", m + 1, m + 1).unwrap();
    writeln!(s, "arrow a{} 1 {}", m + 2, m + 2).unwrap();
    s += "relation a1 a1\n";
    writeln!(s, "relation a1 a{}", m + 1).unwrap();
    writeln!(s, "relation a1 a{}", m + 2).unwrap();
    s += "relation a1 a2\n";
    let long: Vec<String> = (2..=m).map(|i| format!("a{i}")).collect();
    writeln!(s, "relation {}", long.join(" ")).unwrap();
    Ok(s)
}

/// Arrows `ai: i→i+1` for `1 ≤ i ≤ m−1`, `a(m+1): 1→m+1`, and
/// `ai: (i−1)→i` for `m+2 ≤ i ≤ 2m−1`. Relations `ai a(i+1)` for
/// `m+1 ≤ i ≤ 2m−2`. There is no arrow `am`.
pub fn example42(m: usize) -> Result<String, FamilyError> {
    check_min(m, Family::Example42.min_m())?;
    let mut s = format!("# example42, m = {m}\n");
    s += &vertices_line(2 * m - 1);
    for i in 1..m {
        writeln!(s, "arrow a{i} {i} {}", i + 1).unwrap();
    }
    writeln!(s, "arrow a{} 1 {}", m + 1, m + 1).unwrap();
    for i in m + 2..=2 * m - 1 {
        writeln!(s, "arrow a{i} {} {i}", i - 1).unwrap();
    }
    for i in m + 1..=2 * m - 2 {
        writeln!(s, "relation a{i} a{}", i + 1).unwrap();
    }
    Ok(s)
}

/// Named fixtures used across the test suites, at their smallest parameters.
pub fn fixtures() -> Vec<(&'static str, String)> {
    vec![
        ("FIX-A2", FIX_A2.to_string()),
        ("FIX-L2", FIX_L2.to_string()),
        ("FIX-N3", FIX_N3.to_string()),
        ("FIX-E41(10)", example41(10).unwrap()),
        ("FIX-E42(9)", example42(9).unwrap()),
    ]
}

/// Shape limits for random algebras.
#[derive(Debug, Clone, Copy)]
pub struct FuzzShape {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relations: usize,
    pub min_relation_len: usize,
    pub max_relation_len: usize,
    /// Reject algebras of larger dimension.
    pub max_dimension: usize,
}

impl Default for FuzzShape {
    fn default() -> Self {
        Self {
            max_vertices: 5,
            max_arrows: 8,
            max_relations: 4,
            min_relation_len: 2,
            max_relation_len: 3,
            max_dimension: 40,
        }
    }
}

/// A random presentation of the given shape; not necessarily finite dimensional.
pub fn random_presentation<R: Rng>(rng: &mut R, shape: &FuzzShape) -> Presentation {
    let n = rng.gen_range(1..=shape.max_vertices);
    let mut quiver = Quiver::new();
    for v in 1..=n {
        quiver.add_vertex(v.to_string()).unwrap();
    }
    let num_arrows = rng.gen_range(1..=shape.max_arrows);
    for a in 0..num_arrows {
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        quiver.add_arrow(format!("x{a}"), s, t).unwrap();
    }
    let mut out_arrows = vec![Vec::new(); n];
    for (a, arrow) in quiver.arrows().iter().enumerate() {
        out_arrows[arrow.source].push(a);
    }

    let mut relations = Vec::new();
    for _ in 0..rng.gen_range(0..=shape.max_relations) {
        let len = rng.gen_range(shape.min_relation_len..=shape.max_relation_len);
        let mut word = vec![rng.gen_range(0..num_arrows)];
        while word.len() < len {
            let t = quiver.arrows()[*word.last().unwrap()].target;
            if out_arrows[t].is_empty() {
                break;
            }
            word.push(out_arrows[t][rng.gen_range(0..out_arrows[t].len())]);
        }
        if word.len() == len {
            relations.push(word);
        }
    }
    Presentation { quiver, relations }
}

/// Rejection-sample a finite-dimensional algebra of the given shape.
pub fn random_algebra<R: Rng>(rng: &mut R, shape: &FuzzShape) -> Algebra {
    loop {
        let p = random_presentation(rng, shape);
        let Ok(valid) = presentation::validate(&p) else { continue };
        match Algebra::build(&valid.presentation, shape.max_dimension) {
            Ok(alg) => return alg,
            Err(AlgebraError::InfiniteDimensional | AlgebraError::BasisLimitExceeded { .. }) => continue,
            Err(e) => unreachable!("validated presentation failed to build: {e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn example41_counts() {
        let p = parse(&example41(10).unwrap()).unwrap();
        assert_eq!((p.quiver.num_vertices(), p.quiver.num_arrows(), p.relations.len()), (12, 12, 5));
        assert_eq!(example41(9).unwrap_err(), FamilyError::MBelowMinimum { m: 9, min: 10 });
    }

    #[test]
    fn example42_counts() {
        let p = parse(&example42(9).unwrap()).unwrap();
        assert_eq!((p.quiver.num_vertices(), p.quiver.num_arrows(), p.relations.len()), (17, 16, 7));
        assert!(example42(8).is_err());
    }

    #[test]
    fn family_names() {
        assert_eq!("example41".parse::<Family>().unwrap(), Family::Example41);
        assert!("example43".parse::<Family>().is_err());
    }

    #[test]
    fn random_algebras_respect_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let shape = FuzzShape::default();
        for _ in 0..50 {
            let a = random_algebra(&mut rng, &shape);
            assert!(a.num_vertices() <= 5 && a.num_arrows() <= 8);
            assert!(a.presentation().relations.len() <= 4);
            assert!(a.presentation().relations.iter().all(|r| (2..=3).contains(&r.len())));
            assert!(a.dimension() <= shape.max_dimension);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let shape = FuzzShape::default();
        let a = random_algebra(&mut ChaCha8Rng::seed_from_u64(3), &shape);
        let b = random_algebra(&mut ChaCha8Rng::seed_from_u64(3), &shape);
        assert_eq!(a.presentation(), b.presentation());
    }
}

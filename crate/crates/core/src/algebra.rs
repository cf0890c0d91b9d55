//! Finite-dimensional monomial algebras `kQ/I`.
//!
//! The nonzero paths (paths containing no relation as a contiguous subword)
//! form a basis. They are stored once in canonical order, by length and then
//! lexicographically by declared arrow order, and referred to by [`PathId`].

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::presentation::{self, Presentation, PresentationError};

pub const DEFAULT_BASIS_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("the algebra is infinite dimensional (a cycle of nonzero paths exists)")]
    InfiniteDimensional,
    #[error("the path basis has more than {limit} elements")]
    BasisLimitExceeded { limit: usize },
    #[error("paths are not composable: {0} does not end where {1} starts")]
    NotComposable(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathId(pub usize);

/// A path of the quiver. Arrows are listed in the order they act.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Algebra {
    presentation: Presentation,
    basis_limit: usize,
    paths: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), PathId>,
    /// For each basis path p, the pairs (arrow, p·arrow) that are nonzero.
    extensions: Vec<Vec<(usize, PathId)>>,
    from: Vec<Vec<PathId>>,
    to: Vec<Vec<PathId>>,
    max_path_len: usize,
}

struct RelationSet {
    words: HashSet<Vec<usize>>,
    lengths: Vec<usize>,
}

impl RelationSet {
    fn new(relations: &[Vec<usize>]) -> Self {
        let mut lengths: Vec<usize> = relations.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths.dedup();
        Self { words: relations.iter().cloned().collect(), lengths }
    }

    /// Whether some relation is a suffix of `word`.
    fn ends_with_relation(&self, word: &[usize]) -> bool {
        self.lengths
            .iter()
            .any(|&l| l <= word.len() && self.words.contains(&word[word.len() - l..]))
    }

    fn max_len(&self) -> usize {
        self.lengths.last().copied().unwrap_or(0)
    }
}

impl Algebra {
    /// Validate `p`, decide finite dimensionality and enumerate the basis.
    pub fn build(p: &Presentation, basis_limit: usize) -> Result<Algebra, AlgebraError> {
        let presentation = presentation::validate(p)?.presentation;
        let quiver = &presentation.quiver;
        let rels = RelationSet::new(&presentation.relations);
        let mut out_arrows = vec![Vec::new(); quiver.num_vertices()];
        for (a, arrow) in quiver.arrows().iter().enumerate() {
            out_arrows[arrow.source].push(a);
        }

        let target_of = |word: &[usize], source: usize| word.last().map_or(source, |&a| quiver.arrows()[a].target);
        let extend_level = |level: &[(usize, Vec<usize>)]| {
            let mut next = Vec::new();
            for (source, word) in level {
                for &a in &out_arrows[target_of(word, *source)] {
                    let mut w = word.clone();
                    w.push(a);
                    if !rels.ends_with_relation(&w) {
                        next.push((*source, w));
                    }
                }
            }
            next.sort_by(|x, y| x.1.cmp(&y.1));
            next
        };

        let mut levels: Vec<Vec<(usize, Vec<usize>)>> = vec![(0..quiver.num_vertices()).map(|v| (v, Vec::new())).collect()];
        let mut total = levels[0].len();
        let window = rels.max_len().saturating_sub(1).max(1);

        // Nonzero paths of length `window` are the states of an automaton whose
        // infinite runs are exactly the infinite nonzero paths.
        while levels.len() <= window {
            let next = extend_level(levels.last().unwrap());
            total += next.len();
            if total > basis_limit {
                return Err(AlgebraError::BasisLimitExceeded { limit: basis_limit });
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        if levels.len() == window + 1 && has_cycle(&levels[window], quiver, &out_arrows, &rels) {
            return Err(AlgebraError::InfiniteDimensional);
        }

        loop {
            let next = extend_level(levels.last().unwrap());
            if next.is_empty() {
                break;
            }
            total += next.len();
            if total > basis_limit {
                return Err(AlgebraError::BasisLimitExceeded { limit: basis_limit });
            }
            levels.push(next);
        }

        let max_path_len = levels.len() - 1;
        let mut paths = Vec::with_capacity(total);
        let mut index = HashMap::with_capacity(total);
        for (source, word) in levels.into_iter().flatten() {
            let target = target_of(&word, source);
            index.insert((source, word.clone()), PathId(paths.len()));
            paths.push(Path { source, target, arrows: word });
        }

        let mut extensions = vec![Vec::new(); paths.len()];
        let mut from = vec![Vec::new(); quiver.num_vertices()];
        let mut to = vec![Vec::new(); quiver.num_vertices()];
        for (i, p) in paths.iter().enumerate() {
            from[p.source].push(PathId(i));
            to[p.target].push(PathId(i));
            for &a in &out_arrows[p.target] {
                let mut w = p.arrows.clone();
                w.push(a);
                if let Some(&q) = index.get(&(p.source, w)) {
                    extensions[i].push((a, q));
                }
            }
        }

        Ok(Algebra { presentation, basis_limit, paths, index, extensions, from, to, max_path_len })
    }

    /// Parse, validate and build in one step.
    pub fn from_text(text: &str, basis_limit: usize) -> Result<Algebra, AlgebraError> {
        Algebra::build(&presentation::parse(text)?, basis_limit)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn num_vertices(&self) -> usize {
        self.presentation.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.presentation.quiver.num_arrows()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.presentation.quiver.vertices()[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize, AlgebraError> {
        self.presentation
            .quiver
            .vertex_index(name)
            .ok_or_else(|| AlgebraError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_source(&self, a: usize) -> usize {
        self.presentation.quiver.arrows()[a].source
    }

    pub fn arrow_target(&self, a: usize) -> usize {
        self.presentation.quiver.arrows()[a].target
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn max_path_len(&self) -> usize {
        self.max_path_len
    }

    pub fn basis(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, p: PathId) -> &Path {
        &self.paths[p.0]
    }

    pub fn lookup(&self, source: usize, arrows: &[usize]) -> Option<PathId> {
        self.index.get(&(source, arrows.to_vec())).copied()
    }

    pub fn trivial(&self, v: usize) -> PathId {
        PathId(v)
    }

    /// The basis path consisting of the single arrow `a`.
    pub fn arrow_path(&self, a: usize) -> PathId {
        self.lookup(self.arrow_source(a), &[a]).expect("arrows are nonzero paths")
    }

    /// Nonzero one-arrow extensions `(arrow, p·arrow)` in arrow order.
    pub fn extensions(&self, p: PathId) -> &[(usize, PathId)] {
        &self.extensions[p.0]
    }

    pub fn target(&self, p: PathId) -> usize {
        self.paths[p.0].target
    }

    pub fn source(&self, p: PathId) -> usize {
        self.paths[p.0].source
    }

    /// Product in the algebra; `Ok(None)` when the concatenation contains a relation.
    pub fn multiply(&self, p: PathId, q: PathId) -> Result<Option<PathId>, AlgebraError> {
        let (pp, qq) = (self.path(p), self.path(q));
        if pp.target != qq.source {
            return Err(AlgebraError::NotComposable(self.path_name(p), self.path_name(q)));
        }
        let mut word = pp.arrows.clone();
        word.extend_from_slice(&qq.arrows);
        Ok(self.lookup(pp.source, &word))
    }

    /// All pairs `(q, p·q)` with `p·q ≠ 0`, breadth first from `(e, p)`.
    pub fn right_multiples(&self, p: PathId) -> Vec<(PathId, PathId)> {
        let mut out = vec![(self.trivial(self.target(p)), p)];
        let mut i = 0;
        while i < out.len() {
            let (q, pq) = out[i];
            let pq_ext = self.extensions(pq);
            for &(a, qa) in self.extensions(q) {
                if let Some(&(_, pqa)) = pq_ext.iter().find(|(b, _)| *b == a) {
                    out.push((qa, pqa));
                }
            }
            i += 1;
        }
        out
    }

    /// `1 + ` the length of the longest nonzero path.
    pub fn loewy_length(&self) -> usize {
        1 + self.max_path_len
    }

    pub fn opposite(&self) -> Algebra {
        Algebra::build(&self.presentation.opposite(), self.basis_limit)
            .expect("the opposite of a finite-dimensional monomial algebra is one")
    }

    pub fn paths_from(&self, v: usize) -> Result<&[PathId], AlgebraError> {
        self.from.get(v).map(Vec::as_slice).ok_or_else(|| AlgebraError::UnknownVertex(format!("#{v}")))
    }

    pub fn paths_to(&self, v: usize) -> Result<&[PathId], AlgebraError> {
        self.to.get(v).map(Vec::as_slice).ok_or_else(|| AlgebraError::UnknownVertex(format!("#{v}")))
    }

    pub fn path_name(&self, p: PathId) -> String {
        let path = self.path(p);
        if path.is_trivial() {
            format!("e{}", self.vertex_name(path.source))
        } else {
            self.presentation.relation_names(&path.arrows)
        }
    }
}

fn has_cycle(
    states: &[(usize, Vec<usize>)],
    quiver: &crate::presentation::Quiver,
    out_arrows: &[Vec<usize>],
    rels: &RelationSet,
) -> bool {
    let ids: HashMap<&[usize], usize> = states.iter().enumerate().map(|(i, (_, w))| (w.as_slice(), i)).collect();
    let successors = |i: usize| -> Vec<usize> {
        let word = &states[i].1;
        let t = quiver.arrows()[*word.last().unwrap()].target;
        out_arrows[t]
            .iter()
            .filter_map(|&a| {
                let mut w = word.clone();
                w.push(a);
                if rels.ends_with_relation(&w) {
                    None
                } else {
                    ids.get(&w[1..]).copied()
                }
            })
            .collect()
    };

    // 0 = unseen, 1 = on stack, 2 = done
    let mut colour = vec![0u8; states.len()];
    for start in 0..states.len() {
        if colour[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, successors(start), 0usize)];
        colour[start] = 1;
        while let Some((node, succ, pos)) = stack.last_mut() {
            if *pos < succ.len() {
                let next = succ[*pos];
                *pos += 1;
                match colour[next] {
                    0 => {
                        colour[next] = 1;
                        let s = successors(next);
                        stack.push((next, s, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                colour[*node] = 2;
                stack.pop();
            }
        }
    }
    false
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.presentation)
    }
}

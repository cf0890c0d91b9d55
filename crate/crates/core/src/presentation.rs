//! Textual quiver-with-relations presentations.
//!
//! The format is line based, one declaration per line, `#` starts a comment:
//!
//! ```text
//! vertices 1 2 3
//! arrow a 1 2
//! arrow b 2 3
//! relation a b
//! ```
//!
//! A relation is a path written as a sequence of arrow names; juxtaposition is
//! composition with the leftmost arrow acting first.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undefined {kind} `{name}`")]
    UndefinedSymbol { line: usize, kind: &'static str, name: String },
    #[error("line {line}: duplicate {kind} `{name}`")]
    DuplicateName { line: usize, kind: &'static str, name: String },
    #[error("line {line}: relations must be single paths, got a linear combination")]
    NonMonomialRelation { line: usize },
    #[error("relation {relation} is not a path: `{first}` ends at a different vertex than `{second}` starts")]
    NonComposableRelation { relation: usize, first: String, second: String },
    #[error("relation {relation} has length {length}; relations must have length at least 2")]
    NonAdmissibleRelation { relation: usize, length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are referred to by their index in
/// declaration order everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize, PresentationError> {
        let name = name.into();
        if self.vertex_index(&name).is_some() {
            return Err(PresentationError::DuplicateName { line: 0, kind: "vertex", name });
        }
        self.vertices.push(name);
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(
        &mut self,
        name: impl Into<String>,
        source: usize,
        target: usize,
    ) -> Result<usize, PresentationError> {
        let name = name.into();
        if self.arrow_index(&name).is_some() {
            return Err(PresentationError::DuplicateName { line: 0, kind: "arrow", name });
        }
        for v in [source, target] {
            if v >= self.vertices.len() {
                return Err(PresentationError::UndefinedSymbol {
                    line: 0,
                    kind: "vertex",
                    name: format!("#{v}"),
                });
            }
        }
        self.arrows.push(Arrow { name, source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The same vertices with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A quiver together with monomial relations, each a word of arrow indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationWarning {
    /// The relation contains another relation as a subword (or repeats one) and was dropped.
    RedundantRelationRemoved { relation: String },
}

impl fmt::Display for ValidationWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationWarning::RedundantRelationRemoved { relation } => {
                write!(f, "redundant relation `{relation}` removed")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validated {
    pub presentation: Presentation,
    pub warnings: Vec<ValidationWarning>,
}

impl Presentation {
    pub fn new(quiver: Quiver) -> Self {
        Self { quiver, relations: Vec::new() }
    }

    pub fn relation_names(&self, relation: &[usize]) -> String {
        relation
            .iter()
            .map(|&a| self.quiver.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Arrows reversed and every relation word read backwards.
    pub fn opposite(&self) -> Presentation {
        Presentation {
            quiver: self.quiver.opposite(),
            relations: self
                .relations
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }
}

fn is_identifier(token: &str) -> bool {
    !token.is_empty()
        && token
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '\''))
}

fn looks_like_combination(token: &str) -> bool {
    token.contains('+')
        || token.starts_with('-')
        || token.contains('*')
        || (token.parse::<f64>().is_ok() && !token.chars().all(|c| c.is_ascii_digit()))
}

/// Parse a presentation document. Relations are resolved to arrow indices but
/// not checked for composability; see [`validate`].
pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
    let mut quiver = Quiver::new();
    let mut relations = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        let args: Vec<&str> = tokens.collect();
        let syntax = |message: String| PresentationError::Syntax { line, message };

        match keyword {
            "vertices" => {
                if args.is_empty() {
                    return Err(syntax("`vertices` needs at least one identifier".into()));
                }
                for name in args {
                    if !is_identifier(name) {
                        return Err(syntax(format!("invalid vertex identifier `{name}`")));
                    }
                    quiver.add_vertex(name).map_err(|e| with_line(e, line))?;
                }
            }
            "arrow" => {
                let [name, source, target] = args[..] else {
                    return Err(syntax("expected `arrow <name> <source> <target>`".into()));
                };
                if !is_identifier(name) {
                    return Err(syntax(format!("invalid arrow name `{name}`")));
                }
                let lookup = |v: &str| {
                    quiver.vertex_index(v).ok_or_else(|| PresentationError::UndefinedSymbol {
                        line,
                        kind: "vertex",
                        name: v.to_string(),
                    })
                };
                let (s, t) = (lookup(source)?, lookup(target)?);
                quiver.add_arrow(name, s, t).map_err(|e| with_line(e, line))?;
            }
            "relation" => {
                if args.iter().any(|t| looks_like_combination(t)) {
                    return Err(PresentationError::NonMonomialRelation { line });
                }
                if args.is_empty() {
                    return Err(syntax("`relation` needs at least one arrow".into()));
                }
                let word = args
                    .iter()
                    .map(|name| {
                        quiver.arrow_index(name).ok_or_else(|| PresentationError::UndefinedSymbol {
                            line,
                            kind: "arrow",
                            name: name.to_string(),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                relations.push(word);
            }
            other => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }

    if quiver.num_vertices() == 0 {
        return Err(PresentationError::Syntax { line: 0, message: "no vertices declared".into() });
    }
    Ok(Presentation { quiver, relations })
}

fn with_line(err: PresentationError, line: usize) -> PresentationError {
    match err {
        PresentationError::DuplicateName { kind, name, .. } => {
            PresentationError::DuplicateName { line, kind, name }
        }
        PresentationError::UndefinedSymbol { kind, name, .. } => {
            PresentationError::UndefinedSymbol { line, kind, name }
        }
        other => other,
    }
}

fn contains_subword(word: &[usize], sub: &[usize]) -> bool {
    sub.len() <= word.len() && word.windows(sub.len()).any(|w| w == sub)
}

/// Check admissibility and drop relations made redundant by shorter ones.
pub fn validate(p: &Presentation) -> Result<Validated, PresentationError> {
    let arrows = p.quiver.arrows();
    for (i, rel) in p.relations.iter().enumerate() {
        if rel.len() < 2 {
            return Err(PresentationError::NonAdmissibleRelation { relation: i + 1, length: rel.len() });
        }
        for pair in rel.windows(2) {
            let (x, y) = (&arrows[pair[0]], &arrows[pair[1]]);
            if x.target != y.source {
                return Err(PresentationError::NonComposableRelation {
                    relation: i + 1,
                    first: x.name.clone(),
                    second: y.name.clone(),
                });
            }
        }
    }

    let mut kept: Vec<Vec<usize>> = Vec::new();
    let mut warnings = Vec::new();
    for (i, rel) in p.relations.iter().enumerate() {
        let redundant = p.relations.iter().enumerate().any(|(j, other)| {
            j != i
                && contains_subword(rel, other)
                // identical duplicates: keep the first occurrence only
                && (other.len() < rel.len() || j < i)
        });
        if redundant {
            warnings.push(ValidationWarning::RedundantRelationRemoved { relation: p.relation_names(rel) });
        } else {
            kept.push(rel.clone());
        }
    }

    Ok(Validated {
        presentation: Presentation { quiver: p.quiver.clone(), relations: kept },
        warnings,
    })
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.quiver.vertices.join(" "))?;
        for a in &self.quiver.arrows {
            writeln!(
                f,
                "arrow {} {} {}",
                a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            )?;
        }
        for rel in &self.relations {
            writeln!(f, "relation {}", self.relation_names(rel))?;
        }
        Ok(())
    }
}

/// Look up a vertex by identifier.
pub fn resolve_vertex(p: &Presentation, name: &str) -> Option<usize> {
    p.quiver.vertex_index(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parses_smallest_quiver() {
        let p = parse(corpus::FIX_A2).unwrap();
        assert_eq!(p.quiver.num_vertices(), 2);
        assert_eq!(p.quiver.num_arrows(), 1);
        assert!(p.relations.is_empty());
    }

    #[test]
    fn undeclared_arrow_in_relation() {
        let err = parse("vertices 1 2\narrow a 1 2\nrelation a z\n").unwrap_err();
        assert!(matches!(err, PresentationError::UndefinedSymbol { kind: "arrow", ref name, line: 3 } if name == "z"));
    }

    #[test]
    fn undeclared_vertex_in_arrow() {
        let err = parse("vertices 1\narrow a 1 2\n").unwrap_err();
        assert!(matches!(err, PresentationError::UndefinedSymbol { kind: "vertex", .. }));
    }

    #[test]
    fn duplicates_are_rejected() {
        assert!(matches!(
            parse("vertices 1 1").unwrap_err(),
            PresentationError::DuplicateName { kind: "vertex", .. }
        ));
        assert!(matches!(
            parse("vertices 1 2\narrow a 1 2\narrow a 2 1").unwrap_err(),
            PresentationError::DuplicateName { kind: "arrow", line: 3, .. }
        ));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse("arrow a 1").unwrap_err(), PresentationError::Syntax { line: 1, .. }));
        assert!(matches!(parse("vertices").unwrap_err(), PresentationError::Syntax { .. }));
        assert!(matches!(parse("loops 3").unwrap_err(), PresentationError::Syntax { .. }));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse("# header\n\nvertices 1 2 # trailing\n  arrow a 1 2   # arrow\n").unwrap();
        assert_eq!(p, parse(corpus::FIX_A2).unwrap());
    }

    #[test]
    fn linear_combinations_rejected() {
        let text = "vertices 1 2\narrow a 1 2\narrow b 1 2\narrow c 2 2\nrelation a c + b c\n";
        assert_eq!(parse(text).unwrap_err(), PresentationError::NonMonomialRelation { line: 5 });
        let text = "vertices 1\narrow x 1 1\nrelation 2 x x\n";
        assert!(matches!(parse(text).unwrap_err(), PresentationError::UndefinedSymbol { .. }));
    }

    #[test]
    fn example41_shape() {
        let p = parse(&corpus::example41(10).unwrap()).unwrap();
        assert_eq!(p.quiver.num_vertices(), 12);
        assert_eq!(p.quiver.num_arrows(), 12);
        assert_eq!(p.relations.len(), 5);
    }

    #[test]
    fn validate_keeps_admissible_presentation() {
        let p = parse(corpus::FIX_N3).unwrap();
        let v = validate(&p).unwrap();
        assert_eq!(v.presentation, p);
        assert!(v.warnings.is_empty());
    }

    #[test]
    fn validate_rejects_short_relation() {
        let p = parse("vertices 1 2\narrow a 1 2\nrelation a\n").unwrap();
        assert_eq!(
            validate(&p).unwrap_err(),
            PresentationError::NonAdmissibleRelation { relation: 1, length: 1 }
        );
    }

    #[test]
    fn validate_rejects_non_path() {
        let p = parse("vertices 1 2 3\narrow a 1 2\narrow b 1 3\nrelation a b\n").unwrap();
        assert!(matches!(validate(&p).unwrap_err(), PresentationError::NonComposableRelation { .. }));
    }

    #[test]
    fn validate_drops_redundant() {
        let text = "vertices 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\nrelation a b\nrelation a b c\nrelation a b\n";
        let v = validate(&parse(text).unwrap()).unwrap();
        assert_eq!(v.presentation.relations, vec![vec![0, 1]]);
        assert_eq!(v.warnings.len(), 2);
    }

    #[test]
    fn opposite_reverses_words() {
        let p = parse(corpus::FIX_N3).unwrap();
        let op = p.opposite();
        assert_eq!(op.quiver.arrows()[0], Arrow { name: "a".into(), source: 1, target: 0 });
        assert_eq!(op.relations, vec![vec![1, 0]]);
        assert_eq!(op.opposite(), p);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn presentation() -> impl Strategy<Value = Presentation> {
        (1usize..5, prop::collection::vec((0usize..5, 0usize..5), 0..7), prop::collection::vec(prop::collection::vec(0usize..7, 2..4), 0..5))
            .prop_map(|(n, arrows, rels)| {
                let mut q = Quiver::new();
                for v in 0..n {
                    q.add_vertex(format!("v{v}")).unwrap();
                }
                for (i, (s, t)) in arrows.iter().enumerate() {
                    q.add_arrow(format!("x{i}"), s % n, t % n).unwrap();
                }
                let m = q.num_arrows();
                let relations = if m == 0 {
                    Vec::new()
                } else {
                    rels.into_iter().map(|r| r.into_iter().map(|a| a % m).collect()).collect()
                };
                Presentation { quiver: q, relations }
            })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in presentation()) {
            if let Ok(v) = validate(&p) {
                let text = v.presentation.to_string();
                prop_assert_eq!(parse(&text).unwrap(), v.presentation);
            }
        }

        #[test]
        fn validate_is_idempotent(p in presentation()) {
            if let Ok(v) = validate(&p) {
                let again = validate(&v.presentation).unwrap();
                prop_assert!(again.warnings.is_empty());
                prop_assert_eq!(again.presentation, v.presentation);
            }
        }
    }
}

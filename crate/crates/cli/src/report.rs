//! The machine-readable report and its plain-text rendering.

use serde::Serialize;
use serde_json::Value;

use qha_core::bounds::{Analysis, BoundReport, ClassicalBounds, Optimum};
use qha_core::pathmod::{self, HomDim, PathModuleSum, SimpleSet};
use qha_core::Algebra;

/// Integers as numbers, `∞` as the string `"infinite"`.
pub fn hom_dim(d: HomDim) -> Value {
    match d {
        HomDim::Finite(n) => Value::from(n),
        HomDim::Infinite => Value::from("infinite"),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraStats {
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
    pub dimension: usize,
    pub loewy_length: usize,
}

#[derive(Serialize)]
pub struct SimpleRow {
    pub vertex: String,
    pub pd: Value,
    pub id: Value,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classes {
    pub finite_pd: Vec<String>,
    pub infinite_pd: Vec<String>,
    pub finite_id: Vec<String>,
}

#[derive(Serialize)]
pub struct ProjectiveLayer {
    pub vertex: String,
    pub ll: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Layer {
    #[serde(rename = "V")]
    pub v: Vec<String>,
    pub per_projective: Vec<ProjectiveLayer>,
    pub ll_algebra: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classical {
    pub ll_minus1: usize,
    pub gldim: Value,
    pub ll_minus2: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Bounds {
    #[serde(rename = "V")]
    pub v: Vec<String>,
    pub a: Value,
    pub c: Value,
    pub d: Value,
    pub n: usize,
    pub db_bound: Value,
    pub dsg_bound: Value,
    pub classical: Classical,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Optimize {
    pub best_v: Vec<String>,
    pub best_db: usize,
    #[serde(rename = "bestVDsg")]
    pub best_v_dsg: Vec<String>,
    pub best_dsg: usize,
}

#[derive(Serialize)]
pub struct Headline {
    pub db: usize,
    pub dsg: usize,
}

#[derive(Serialize, Default)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simples: Option<Vec<SimpleRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Classes>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layer: Option<Layer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimize: Option<Optimize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub headline: Option<Headline>,
}

pub fn algebra_stats(alg: &Algebra) -> AlgebraStats {
    AlgebraStats {
        vertices: alg.num_vertices(),
        arrows: alg.num_arrows(),
        relations: alg.presentation().relations.len(),
        dimension: alg.dimension(),
        loewy_length: alg.loewy_length(),
    }
}

pub fn simples(an: &Analysis<'_>) -> Vec<SimpleRow> {
    let alg = an.algebra();
    (0..alg.num_vertices())
        .map(|v| SimpleRow {
            vertex: alg.vertex_name(v).to_string(),
            pd: hom_dim(an.pd_simples()[v]),
            id: hom_dim(an.id_simples()[v]),
        })
        .collect()
}

pub fn classes(an: &Analysis<'_>) -> Classes {
    let (alg, c) = (an.algebra(), an.classes());
    Classes { finite_pd: c.finite_pd.names(alg), infinite_pd: c.infinite_pd.names(alg), finite_id: c.finite_id.names(alg) }
}

pub fn layer(alg: &Algebra, v: &SimpleSet) -> Layer {
    let per_projective: Vec<ProjectiveLayer> = (0..alg.num_vertices())
        .map(|i| ProjectiveLayer {
            vertex: alg.vertex_name(i).to_string(),
            ll: pathmod::layer_length(alg, &PathModuleSum::projective(alg, i), v),
        })
        .collect();
    let ll_algebra = per_projective.iter().map(|p| p.ll).max().unwrap_or(0);
    Layer { v: v.names(alg), per_projective, ll_algebra }
}

pub fn bounds(alg: &Algebra, r: &BoundReport) -> Bounds {
    Bounds {
        v: r.v.names(alg),
        a: hom_dim(r.a),
        c: hom_dim(r.c),
        d: hom_dim(r.d),
        n: r.n,
        db_bound: hom_dim(r.db_bound),
        dsg_bound: r.dsg_bound.map_or_else(|| Value::from("n/a"), Value::from),
        classical: Classical {
            ll_minus1: r.classical.ll_minus1,
            gldim: hom_dim(r.classical.gldim),
            ll_minus2: r.classical.ll_minus2,
        },
    }
}

pub fn optimize(alg: &Algebra, db: &Optimum, dsg: &Optimum) -> Optimize {
    Optimize { best_v: db.v.names(alg), best_db: db.value, best_v_dsg: dsg.v.names(alg), best_dsg: dsg.value }
}

pub fn headline(db: HomDim, dsg: Option<usize>, classical: &ClassicalBounds) -> Headline {
    let (db, dsg) = qha_core::bounds::headline(db, dsg, classical);
    Headline { db, dsg }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn set(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

impl Report {
    /// Aligned `key  value` lines, sections in the order of the JSON document.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<22}{v}\n"));
        if let Some(a) = &self.algebra {
            line("vertices", a.vertices.to_string());
            line("arrows", a.arrows.to_string());
            line("relations", a.relations.to_string());
            line("dimension", a.dimension.to_string());
            line("loewy length", a.loewy_length.to_string());
        }
        if let Some(rows) = &self.simples {
            line("vertex", "pd          id".to_string());
            for r in rows {
                line(&r.vertex, format!("{:<12}{}", text(&r.pd), text(&r.id)));
            }
        }
        if let Some(c) = &self.classes {
            line("finite pd", set(&c.finite_pd));
            line("infinite pd", set(&c.infinite_pd));
            line("finite id", set(&c.finite_id));
        }
        if let Some(l) = &self.layer {
            line("V", set(&l.v));
            for p in &l.per_projective {
                line(&format!("layer length P({})", p.vertex), p.ll.to_string());
            }
            line("layer length", l.ll_algebra.to_string());
        }
        if let Some(b) = &self.bounds {
            line("V", set(&b.v));
            line("a = pd V", text(&b.a));
            line("c = id V", text(&b.c));
            line("d = min(a, c)", text(&b.d));
            line("n = layer length", b.n.to_string());
            line("db bound", text(&b.db_bound));
            line("dsg bound", text(&b.dsg_bound));
            line("LL - 1", b.classical.ll_minus1.to_string());
            line("gldim", text(&b.classical.gldim));
            line("max(0, LL - 2)", b.classical.ll_minus2.to_string());
        }
        if let Some(o) = &self.optimize {
            line("best V for db", set(&o.best_v));
            line("best db bound", o.best_db.to_string());
            line("best V for dsg", set(&o.best_v_dsg));
            line("best dsg bound", o.best_dsg.to_string());
        }
        if let Some(h) = &self.headline {
            line("headline db", h.db.to_string());
            line("headline dsg", h.dsg.to_string());
        }
        out
    }
}

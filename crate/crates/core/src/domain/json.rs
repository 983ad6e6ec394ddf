//! Machine-readable triangles; the schema lives in `schemas/domain.schema.json`.

use rayon::prelude::*;
use serde::Serialize;

use super::{triangle_of, Base, Vertex};
use crate::cosets::{CosetList, Subgroup};
use crate::error::Result;
use crate::words::{GroupWord, Mat2};

#[derive(Serialize)]
struct Document {
    #[serde(rename = "N")]
    n: i64,
    group: Subgroup,
    verified: bool,
    triangles: Vec<Triangle>,
}

#[derive(Serialize)]
struct Triangle {
    word: GroupWord,
    cusp: String,
    vertices: [VertexJson; 3],
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum VertexJson {
    Cusp { p: i64, q: i64 },
    Interior { matrix: Mat2, base: Base },
}

impl From<&Vertex> for VertexJson {
    fn from(v: &Vertex) -> Self {
        match v {
            Vertex::Cusp(c) => VertexJson::Cusp {
                p: c.numerator(),
                q: c.denominator(),
            },
            Vertex::Interior(p) => VertexJson::Interior {
                matrix: p.matrix(),
                base: p.base(),
            },
        }
    }
}

/// Triangles in list order, vertices as `[γρ, γρ², γ∞]`.
pub fn render_json(list: &CosetList) -> Result<String> {
    let triangles = list
        .reps()
        .par_iter()
        .map(|r| {
            let t = triangle_of(r.word());
            let [a, b, c] = t.vertices();
            Triangle {
                word: r.word().clone(),
                cusp: t.cusp().to_string(),
                vertices: [a.into(), b.into(), c.into()],
            }
        })
        .collect();
    let doc = Document {
        n: list.level().n(),
        group: list.group(),
        verified: list.is_verified(),
        triangles,
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

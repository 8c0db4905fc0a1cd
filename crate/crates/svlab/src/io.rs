//! Surface wire format.
//!
//! ```json
//! { "coordinates": "rational" | "float",
//!   "triangles": [[[x,y],[x,y],[x,y]], ...],
//!   "gluing": [[[t,e],[t,e]], ...] }
//! ```
//!
//! Triangles are given by their three edge vectors. Rational coordinates are
//! serialized as "p/q" strings and round-trip bit-exactly; float coordinates
//! are JSON numbers.

use crate::scalar::{parse_rat, Rat, Scalar, Vec2};
use crate::surface::{Slot, SurfaceError, TranslationSurface};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad coordinate value: {0}")]
    BadCoordinate(String),
    #[error("unknown coordinate kind {0:?} (expected \"rational\" or \"float\")")]
    BadKind(String),
    #[error("surface: {0}")]
    Surface(#[from] SurfaceError),
}

#[derive(Serialize, Deserialize)]
struct SurfaceDoc {
    coordinates: String,
    triangles: Vec<[[Value; 2]; 3]>,
    gluing: Vec<[[usize; 2]; 2]>,
}

/// A parsed surface of either coordinate kind.
#[derive(Debug)]
pub enum AnySurface {
    Rational(TranslationSurface<Rat>),
    Float(TranslationSurface<f64>),
}

fn f64_value(x: f64) -> Value {
    serde_json::Number::from_f64(x)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn surface_to_json<S: Scalar>(s: &TranslationSurface<S>) -> Value {
    let kind = if S::EXACT { "rational" } else { "float" };
    let enc = |v: &S| -> Value {
        match v.to_exact_string() {
            Some(s) => Value::String(s),
            None => f64_value(v.to_f64()),
        }
    };
    let triangles: Vec<[[Value; 2]; 3]> = s
        .triangles()
        .iter()
        .map(|tri| {
            [0, 1, 2].map(|e| {
                let v: &Vec2<S> = &tri.edges[e];
                [enc(&v.x), enc(&v.y)]
            })
        })
        .collect();
    let gluing: Vec<[[usize; 2]; 2]> = s
        .gluing_pairs()
        .into_iter()
        .map(|(a, b)| [[a.0, a.1], [b.0, b.1]])
        .collect();
    serde_json::json!({
        "coordinates": kind,
        "triangles": triangles,
        "gluing": gluing,
    })
}

pub fn surface_to_string<S: Scalar>(s: &TranslationSurface<S>) -> String {
    serde_json::to_string_pretty(&surface_to_json(s)).expect("serializable")
}

pub fn surface_from_str(text: &str) -> Result<AnySurface, IoError> {
    let doc: SurfaceDoc = serde_json::from_str(text)?;
    let pairs: Vec<(Slot, Slot)> = doc
        .gluing
        .iter()
        .map(|[[a, b], [c, d]]| ((*a, *b), (*c, *d)))
        .collect();
    match doc.coordinates.as_str() {
        "rational" => {
            let mut tris = Vec::with_capacity(doc.triangles.len());
            for t in &doc.triangles {
                let mut edges: Vec<Vec2<Rat>> = Vec::with_capacity(3);
                for [x, y] in t {
                    edges.push(Vec2::new(value_to_rat(x)?, value_to_rat(y)?));
                }
                tris.push([edges[0].clone(), edges[1].clone(), edges[2].clone()]);
            }
            Ok(AnySurface::Rational(TranslationSurface::build(tris, &pairs)?))
        }
        "float" => {
            let mut tris = Vec::with_capacity(doc.triangles.len());
            for t in &doc.triangles {
                let mut edges: Vec<Vec2<f64>> = Vec::with_capacity(3);
                for [x, y] in t {
                    edges.push(Vec2::new(value_to_f64(x)?, value_to_f64(y)?));
                }
                tris.push([edges[0].clone(), edges[1].clone(), edges[2].clone()]);
            }
            Ok(AnySurface::Float(TranslationSurface::build(tris, &pairs)?))
        }
        other => Err(IoError::BadKind(other.to_string())),
    }
}

fn value_to_rat(v: &Value) -> Result<Rat, IoError> {
    match v {
        Value::String(s) => parse_rat(s).ok_or_else(|| IoError::BadCoordinate(s.clone())),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(<Rat as Scalar>::from_i64(i))
            } else {
                Err(IoError::BadCoordinate(n.to_string()))
            }
        }
        other => Err(IoError::BadCoordinate(other.to_string())),
    }
}

fn value_to_f64(v: &Value) -> Result<f64, IoError> {
    v.as_f64()
        .ok_or_else(|| IoError::BadCoordinate(v.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loci;

    #[test]
    fn rational_round_trip_is_identity() {
        let torus = loci::builtin("torus").unwrap();
        let text = surface_to_string(&torus);
        let parsed = match surface_from_str(&text).unwrap() {
            AnySurface::Rational(s) => s,
            _ => panic!("expected rational"),
        };
        let text2 = surface_to_string(&parsed);
        assert_eq!(text, text2, "bit-exact round trip");
        assert_eq!(parsed.area(), torus.area());
        assert_eq!(parsed.stratum_signature(), torus.stratum_signature());
    }

    #[test]
    fn unknown_kind_is_rejected() {
        let r = surface_from_str(r#"{"coordinates":"decimal","triangles":[],"gluing":[]}"#);
        assert!(matches!(r.unwrap_err(), IoError::BadKind(_)));
    }
}

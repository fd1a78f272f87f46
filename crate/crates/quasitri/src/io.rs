//! Facet-list text and JSON formats.
//!
//! Text: one facet per line, labels separated by single spaces, facets in
//! the complex's sorted order; `#` starts a comment. JSON:
//! `{"vertices": [...], "facets": [[...], ...]}` with integer labels as
//! numbers and named labels as strings.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vertex::Vertex;

pub fn to_facet_text(x: &SimplicialComplex) -> String {
    let mut s = String::new();
    for f in x.facets() {
        s.push_str(&f.to_string());
        s.push('\n');
    }
    s
}

pub fn from_facet_text(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let s = Simplex::parse(body).map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))?;
        facets.push(s);
    }
    Ok(SimplicialComplex::from_facets(facets))
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<Vertex>,
    facets: Vec<Vec<Vertex>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson {
            vertices: self.vertices(),
            facets: self
                .facets()
                .iter()
                .map(|f| f.vertices().to_vec())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ComplexJson::deserialize(d)?;
        let x = SimplicialComplex::from_facets(j.facets.into_iter().map(Simplex::new));
        let mut listed = j.vertices;
        listed.sort();
        listed.dedup();
        if listed != x.vertices() {
            return Err(serde::de::Error::custom(
                "vertex list does not match the facets",
            ));
        }
        Ok(x)
    }
}

pub fn to_json(x: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(x).expect("complex serializes")
}

pub fn from_json(s: &str) -> Result<SimplicialComplex> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Reads either format, guessing JSON from a leading `{`.
pub fn parse_any(s: &str) -> Result<SimplicialComplex> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_facet_text(s)
    }
}

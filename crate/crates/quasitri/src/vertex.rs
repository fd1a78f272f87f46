//! Vertex labels.
//!
//! A vertex is either a small integer or a symbolic name. Integers sort
//! before names, so the core labels `0..6` of the seven-vertex torus always
//! come first. Names compare in natural order (`u1_2 < u1_10`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A vertex label.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Vertex {
    Int(i64),
    Name(Arc<str>),
}

impl Vertex {
    pub fn name(s: &str) -> Vertex {
        Vertex::Name(Arc::from(s))
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Vertex::Int(i) => Some(*i),
            Vertex::Name(_) => None,
        }
    }

    /// Parses one token of the facet text format. Only canonical decimal
    /// integers (no sign prefix `+`, no leading zeros) become `Int`.
    pub fn parse(token: &str) -> Option<Vertex> {
        if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c == '#') {
            return None;
        }
        if is_canonical_int(token) {
            if let Ok(i) = token.parse::<i64>() {
                return Some(Vertex::Int(i));
            }
        }
        Some(Vertex::name(token))
    }
}

fn is_canonical_int(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return false;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return false;
    }
    !(s.starts_with('-') && digits == "0")
}

impl From<i64> for Vertex {
    fn from(i: i64) -> Self {
        Vertex::Int(i)
    }
}

impl From<&str> for Vertex {
    fn from(s: &str) -> Self {
        Vertex::parse(s).unwrap_or_else(|| Vertex::name(s))
    }
}

impl FromStr for Vertex {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Vertex::parse(s).ok_or_else(|| crate::Error::Parse(format!("bad vertex label {s:?}")))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Int(i) => write!(f, "{i}"),
            Vertex::Name(s) => f.write_str(s),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Vertex::Int(a), Vertex::Int(b)) => a.cmp(b),
            (Vertex::Int(_), Vertex::Name(_)) => Ordering::Less,
            (Vertex::Name(_), Vertex::Int(_)) => Ordering::Greater,
            (Vertex::Name(a), Vertex::Name(b)) => natural_cmp(a, b).then_with(|| a.cmp(b)),
        }
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut a, mut b) = (a.as_bytes(), b.as_bytes());
    loop {
        match (a.first(), b.first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let na = a.iter().take_while(|c| c.is_ascii_digit()).count();
                let nb = b.iter().take_while(|c| c.is_ascii_digit()).count();
                let (da, db) = (trim_zeros(&a[..na]), trim_zeros(&b[..nb]));
                let ord = da.len().cmp(&db.len()).then_with(|| da.cmp(db));
                if ord != Ordering::Equal {
                    return ord;
                }
                a = &a[na..];
                b = &b[nb..];
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(y);
                }
                a = &a[1..];
                b = &b[1..];
            }
        }
    }
}

fn trim_zeros(d: &[u8]) -> &[u8] {
    let k = d.iter().take_while(|&&c| c == b'0').count();
    &d[k.min(d.len().saturating_sub(1))..]
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Vertex::Int(i) => s.serialize_i64(*i),
            Vertex::Name(n) => s.serialize_str(n),
        }
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(i) => Ok(Vertex::Int(i)),
            Raw::Str(s) => Ok(Vertex::name(&s)),
        }
    }
}

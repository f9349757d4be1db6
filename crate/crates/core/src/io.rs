//! Reading and writing complexes, and canonical JSON output.
//!
//! The JSON format is `{"facets": [["a","b","c"], ...]}`; labels may also
//! be given as integers. The text format has one facet per line with
//! whitespace-separated labels; blank lines and lines starting with `#`
//! are ignored.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::Complex;
use crate::constructions;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FacetFile {
    facets: Vec<Vec<Label>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Label {
    Str(String),
    Int(i64),
}

impl Label {
    fn into_string(self) -> String {
        match self {
            Label::Str(s) => s,
            Label::Int(i) => i.to_string(),
        }
    }
}

pub fn parse_json(text: &str) -> Result<Complex> {
    let file: FacetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let facets: Vec<Vec<String>> = file
        .facets
        .into_iter()
        .map(|f| f.into_iter().map(Label::into_string).collect())
        .collect();
    if facets.iter().any(|f| f.is_empty()) {
        return Err(Error::Parse("empty facet".into()));
    }
    Complex::from_facets(facets)
}

pub fn parse_text(text: &str) -> Result<Complex> {
    let facets: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
        .collect();
    Complex::from_facets(facets)
}

/// Parses either format, deciding by the first non-blank character.
pub fn parse(text: &str) -> Result<Complex> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

/// Loads `named:<name>` from the built-in constructions, or else a file.
pub fn load(source: &str) -> Result<Complex> {
    match source.strip_prefix("named:") {
        Some(name) => constructions::named(name),
        None => {
            let text = std::fs::read_to_string(Path::new(source))?;
            parse(&text)
        }
    }
}

#[derive(Serialize)]
struct FacetsOut {
    facets: Vec<Vec<String>>,
}

/// The canonical JSON form: facets sorted, labels sorted within each.
pub fn to_json(c: &Complex) -> String {
    let mut facets = c.labeled_facets();
    facets.sort();
    to_canonical_string(&FacetsOut { facets })
}

pub fn to_text(c: &Complex) -> String {
    let mut facets = c.labeled_facets();
    facets.sort();
    facets.iter().map(|f| f.join(" ") + "\n").collect()
}

/// Integers at or beyond 2^53 in magnitude become decimal strings, so
/// every number survives a round trip through a double.
pub fn canonicalize(v: Value) -> Value {
    const LIMIT: u64 = 1 << 53;
    match v {
        Value::Number(n) => {
            let big = n.as_u64().is_some_and(|x| x >= LIMIT)
                || n.as_i64().is_some_and(|x| x.unsigned_abs() >= LIMIT);
            if big {
                Value::String(n.to_string())
            } else {
                Value::Number(n)
            }
        }
        Value::Array(a) => Value::Array(a.into_iter().map(canonicalize).collect()),
        // Objects are key-sorted by serde_json's default map.
        Value::Object(o) => {
            Value::Object(o.into_iter().map(|(k, v)| (k, canonicalize(v))).collect())
        }
        other => other,
    }
}

pub fn to_canonical_value<T: Serialize + ?Sized>(x: &T) -> Value {
    canonicalize(serde_json::to_value(x).expect("serializable"))
}

/// Pretty-printed canonical JSON with a trailing newline.
pub fn to_canonical_string<T: Serialize + ?Sized>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(&to_canonical_value(x)).expect("serializable");
    s.push('\n');
    s
}

//! Canonical JSON for complexes, weight files and reports.
//!
//! Output is compact with object keys sorted. Rationals are strings `"p"` or
//! `"p/q"` in lowest terms; integers are JSON numbers when they fit in `i64`
//! and decimal strings otherwise. The empty cell is never written.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::complex::{CellComplex, CellSpec, Monomial};
use crate::error::{Error, Result};
use crate::laplacian::{LaplacianKind, Specialization};
use crate::linalg::UniPoly;
use crate::trees::TreeCountReport;

pub fn integer_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn rational_value(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

fn format_err(what: impl Into<String>) -> Error {
    Error::Format(what.into())
}

pub fn parse_integer(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| format_err(format!("{n} is not an integer"))),
        Value::String(s) => BigInt::from_str(s).map_err(|_| format_err(format!("{s:?} is not an integer"))),
        other => Err(format_err(format!("expected an integer, got {other}"))),
    }
}

pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| format_err(format!("{n} is not an exact rational; write it as \"p/q\""))),
        Value::String(s) => {
            BigRational::from_str(s.trim()).map_err(|_| format_err(format!("{s:?} is not a rational \"p/q\"")))
        }
        other => Err(format_err(format!("expected a rational, got {other}"))),
    }
}

/// A named cell complex with free-form metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexDocument {
    pub name: String,
    pub complex: CellComplex,
    pub metadata: Map<String, Value>,
}

impl ComplexDocument {
    pub fn new(name: impl Into<String>, complex: CellComplex) -> Self {
        Self { name: name.into(), complex, metadata: Map::new() }
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn to_value(&self) -> Value {
        let cells: Vec<Value> = self
            .complex
            .to_specs()
            .into_iter()
            .map(|spec| {
                let boundary: Vec<Value> =
                    spec.boundary.iter().map(|(face, c)| json!([face, integer_value(c)])).collect();
                let weight: Map<String, Value> =
                    spec.weight.exponents().iter().map(|(v, e)| (v.clone(), Value::from(*e))).collect();
                json!({ "id": spec.id, "dim": spec.dim, "boundary": boundary, "weight": weight })
            })
            .collect();
        json!({ "name": self.name, "cells": cells, "metadata": self.metadata })
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_value().to_string()
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| format_err("complex document must be an object"))?;
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            None => String::new(),
            Some(other) => return Err(format_err(format!("name must be a string, got {other}"))),
        };
        let metadata = match obj.get("metadata") {
            Some(Value::Object(m)) => m.clone(),
            None => Map::new(),
            Some(other) => return Err(format_err(format!("metadata must be an object, got {other}"))),
        };
        let cells = obj
            .get("cells")
            .and_then(Value::as_array)
            .ok_or_else(|| format_err("complex document needs a \"cells\" array"))?;
        let specs = cells.iter().map(parse_cell).collect::<Result<Vec<_>>>()?;
        Ok(Self { name, complex: CellComplex::new(specs)?, metadata })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| format_err(format!("invalid JSON: {e}")))?;
        Self::from_value(&v)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_canonical_string() + "\n")?;
        Ok(())
    }
}

fn parse_cell(v: &Value) -> Result<CellSpec> {
    let obj = v.as_object().ok_or_else(|| format_err(format!("cell must be an object, got {v}")))?;
    let id = obj
        .get("id")
        .and_then(Value::as_str)
        .ok_or_else(|| format_err(format!("cell without string id: {v}")))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| format_err(format!("cell {id:?} needs a nonnegative integer dim")))?;
    let mut spec = CellSpec::new(id, dim as usize);
    if let Some(b) = obj.get("boundary") {
        let entries = b.as_array().ok_or_else(|| format_err(format!("boundary of {id:?} must be an array")))?;
        for entry in entries {
            match entry.as_array().map(Vec::as_slice) {
                Some([Value::String(face), c]) => spec.boundary.push((face.clone(), parse_integer(c)?)),
                _ => return Err(format_err(format!("boundary entry of {id:?} must be [face, coefficient]"))),
            }
        }
    }
    if let Some(w) = obj.get("weight") {
        let m = w.as_object().ok_or_else(|| format_err(format!("weight of {id:?} must be an object")))?;
        let mut pairs = Vec::with_capacity(m.len());
        for (var, e) in m {
            let e = e
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| format_err(format!("exponent of {var} on {id:?} must be a nonnegative integer")))?;
            pairs.push((var.clone(), e));
        }
        spec.weight = Monomial::from_exponents(pairs);
    }
    Ok(spec)
}

/// Parses `{"variables": {"name": "p/q", …}}`.
pub fn weights_from_json_str(s: &str) -> Result<Specialization> {
    let v: Value = serde_json::from_str(s).map_err(|e| format_err(format!("invalid JSON: {e}")))?;
    let vars = v
        .get("variables")
        .and_then(Value::as_object)
        .ok_or_else(|| format_err("weights file needs a \"variables\" object"))?;
    let mut x = Specialization::new();
    for (name, value) in vars {
        x.set(name.clone(), parse_rational(value)?)?;
    }
    Ok(x)
}

pub fn read_weights(path: impl AsRef<Path>) -> Result<Specialization> {
    weights_from_json_str(&fs::read_to_string(path)?)
}

pub fn weights_to_value(x: &Specialization) -> Value {
    let vars: Map<String, Value> = x.values().iter().map(|(k, v)| (k.clone(), rational_value(v))).collect();
    json!({ "variables": vars })
}

pub fn tree_report_value(complex: &str, report: &TreeCountReport) -> Value {
    json!({
        "complex": complex,
        "k": report.k,
        "tau": integer_value(&report.tau),
        "tau_hat": rational_value(&report.tau_hat),
        "tree_count": report.tree_count,
        "max_torsion": integer_value(&report.max_torsion),
    })
}

/// Characteristic polynomial (coefficients from the constant term up) and pseudodeterminant.
pub fn spectrum_value(complex: &str, kind: LaplacianKind, k: isize, size: usize, poly: &UniPoly) -> Value {
    let coeffs: Vec<Value> = poly.coeffs().iter().map(rational_value).collect();
    json!({
        "complex": complex,
        "kind": kind.to_string(),
        "k": k,
        "size": size,
        "char_poly": coeffs,
        "zero_multiplicity": poly.zero_root_multiplicity(),
        "pdet": rational_value(&poly.pdet()),
    })
}

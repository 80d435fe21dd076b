//! JSON formats for fields, points, codes and polynomials.
//!
//! Elements of a prime field are integers (written in the symmetric range);
//! elements of `GF(p^v)` with `v > 1` are coefficient lists over `GF(p)`,
//! lowest degree first. A string holding a field literal is also accepted.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::evalcode::LinearCode;
use crate::field::{Field, FiniteField, GaloisField, Gf};
use crate::points::PointSet;
use crate::polyring::{Monomial, PolyRing, Polynomial};

/// `{"p": 3, "v": 1}` or `{"p": 2, "v": 2, "irreducible": [1, 1, 1]}`; the
/// irreducible polynomial is listed lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    #[serde(default = "one")]
    pub v: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<Vec<i64>>,
}

fn one() -> u32 {
    1
}

impl FieldDescriptor {
    pub fn build(&self) -> Result<GaloisField> {
        GaloisField::new(self.p, self.v, self.irreducible.as_deref())
    }

    pub fn of(k: &GaloisField) -> Self {
        FieldDescriptor {
            p: u64::from(k.characteristic()),
            v: k.degree(),
            irreducible: (k.degree() > 1)
                .then(|| k.modulus().iter().map(|&c| i64::from(c)).collect()),
        }
    }
}

pub fn elem_to_json(k: &GaloisField, a: Gf) -> Value {
    if k.degree() == 1 {
        Value::from(
            k.format_elem(a)
                .parse::<i64>()
                .expect("prime-field literals are integers"),
        )
    } else {
        Value::from(k.coeffs(a))
    }
}

pub fn elem_from_json(k: &GaloisField, v: &Value) -> Result<Gf> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|n| k.from_int(n))
            .ok_or_else(|| Error::InvalidElement(n.to_string())),
        Value::String(s) => k.parse_elem(s),
        Value::Array(items) => {
            let c = items
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::InvalidElement(v.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            k.from_coeffs(&c)
        }
        _ => Err(Error::InvalidElement(v.to_string())),
    }
}

pub fn vector_to_json(k: &GaloisField, v: &[Gf]) -> Value {
    Value::Array(v.iter().map(|&a| elem_to_json(k, a)).collect())
}

/// `{"field": descriptor, "points": [[elem, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointsFile {
    pub field: FieldDescriptor,
    pub points: Vec<Vec<Value>>,
}

impl PointsFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<PointSet<GaloisField>> {
        let k = self.field.build()?;
        let pts = self
            .points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| elem_from_json(&k, x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(k, pts)
    }

    pub fn of(x: &PointSet<GaloisField>) -> Self {
        let k = x.field();
        PointsFile {
            field: FieldDescriptor::of(k),
            points: x
                .points()
                .iter()
                .map(|p| p.iter().map(|&a| elem_to_json(k, a)).collect())
                .collect(),
        }
    }
}

/// `{"length": m, "k": k, "generator": [[elem, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeJson {
    pub length: usize,
    pub k: usize,
    pub generator: Vec<Vec<Value>>,
}

impl CodeJson {
    pub fn of(c: &LinearCode<GaloisField>) -> Self {
        let k = c.field();
        CodeJson {
            length: c.length(),
            k: c.dim(),
            generator: c
                .generator()
                .rows()
                .map(|r| r.iter().map(|&a| elem_to_json(k, a)).collect())
                .collect(),
        }
    }

    pub fn build(&self, k: &GaloisField) -> Result<LinearCode<GaloisField>> {
        let rows = self
            .generator
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| elem_from_json(k, x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LinearCode::new(k.clone(), self.length, rows)
    }
}

/// One entry of a term list `[{"coeff": elem, "exps": [ints]}]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Value,
    pub exps: Vec<u32>,
}

pub fn poly_to_terms(ring: &PolyRing<GaloisField>, f: &Polynomial<Gf>) -> Vec<TermJson> {
    f.terms()
        .iter()
        .map(|(m, c)| TermJson {
            coeff: elem_to_json(ring.field(), *c),
            exps: m.exps().to_vec(),
        })
        .collect()
}

pub fn poly_from_terms(ring: &PolyRing<GaloisField>, terms: &[TermJson]) -> Result<Polynomial<Gf>> {
    let n = ring.nvars();
    let terms = terms
        .iter()
        .map(|t| {
            if t.exps.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.exps.len(),
                });
            }
            Ok((
                Monomial(t.exps.clone()),
                elem_from_json(ring.field(), &t.coeff)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ring.from_terms(terms))
}

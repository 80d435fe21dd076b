//! Reading point sets, polynomial spaces, monomial lists and axis specs.

use std::fs;
use std::path::Path;

use evcodes::families::Axis;
use evcodes::json::{FieldDescriptor, PointsFile};
use evcodes::{Error, Field, GaloisField, Monomial, PointSet, Poly, Result, Ring};
use serde_json::Value;

/// The contents of `arg` if it names a file, otherwise `arg` itself.
pub fn file_or_inline(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn field(text: &str) -> Result<GaloisField> {
    let d: FieldDescriptor =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("field descriptor: {e}")))?;
    d.build()
}

/// A points file or inline JSON. A bare list of points takes its field from
/// `--field`; a full points file must agree with `--field` when both are given.
pub fn points(arg: &str, field_arg: Option<&str>) -> Result<PointSet<GaloisField>> {
    let text = file_or_inline(arg)?;
    let value: Value = serde_json::from_str(text.trim())
        .map_err(|e| Error::Parse(format!("points `{arg}`: {e}")))?;
    let override_field = field_arg
        .map(|f| {
            serde_json::from_str::<FieldDescriptor>(f)
                .map_err(|e| Error::Parse(format!("field descriptor: {e}")))
        })
        .transpose()?;
    let file = match value {
        Value::Array(pts) => {
            let field = override_field
                .ok_or_else(|| Error::Parse("a bare point list needs --field".into()))?;
            let points = pts
                .into_iter()
                .map(|p| match p {
                    Value::Array(c) => Ok(c),
                    other => Err(Error::Parse(format!("point {other} is not a list"))),
                })
                .collect::<Result<Vec<_>>>()?;
            PointsFile { field, points }
        }
        obj @ Value::Object(_) => {
            let file: PointsFile = serde_json::from_value(obj)
                .map_err(|e| Error::Parse(format!("points file: {e}")))?;
            if let Some(f) = override_field {
                if FieldDescriptor::of(&f.build()?) != FieldDescriptor::of(&file.field.build()?) {
                    return Err(Error::Parse(
                        "--field disagrees with the points file".into(),
                    ));
                }
            }
            file
        }
        other => {
            return Err(Error::Parse(format!(
                "points `{other}` is not JSON list or object"
            )))
        }
    };
    file.build()
}

/// Entries separated by newlines, `;` or `,` outside brackets (extension
/// field literals such as `[0,1]` contain commas); blank entries and `#`
/// comments are skipped.
fn entries(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let mut depth = 0i32;
        let mut start = 0;
        for (i, ch) in line.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                ',' | ';' if depth == 0 => {
                    out.push(line[start..i].trim());
                    start = i + 1;
                }
                _ => {}
            }
        }
        out.push(line[start..].trim());
    }
    out.retain(|e| !e.is_empty());
    out
}

/// One polynomial per entry; `S<=d` (optionally written `basis of S<=d`)
/// expands to every monomial of degree at most `d`.
pub fn space(ring: &Ring, text: &str) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for entry in entries(text) {
        let bare = entry.strip_prefix("basis of").map_or(entry, str::trim);
        if let Some(d) = bare.strip_prefix("S<=") {
            let d: i64 = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("degree in `{entry}`")))?;
            out.extend(
                ring.monomials_up_to(d)
                    .into_iter()
                    .map(|m| ring.monomial(m)),
            );
        } else {
            out.push(ring.parse(entry)?);
        }
    }
    Ok(out)
}

/// Monomials written as polynomial text with a single unit-coefficient term.
pub fn monomials(ring: &Ring, text: &str) -> Result<Vec<Monomial>> {
    entries(text)
        .into_iter()
        .map(|entry| {
            let f = ring.parse(entry)?;
            match f.terms() {
                [(m, c)] if *c == ring.field().one() => Ok(m.clone()),
                _ => Err(Error::Parse(format!("`{entry}` is not a monomial"))),
            }
        })
        .collect()
}

/// `3,2` for orders of torus axes; an entry `0+d` adjoins zero to the
/// subgroup of order `d`.
pub fn axes(text: &str, with_zero: bool) -> Result<Vec<Axis>> {
    entries(text)
        .into_iter()
        .map(|entry| {
            let (zero, d) = match entry.strip_prefix("0+") {
                Some(rest) => (true, rest),
                None => (with_zero, entry),
            };
            let order = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("axis `{entry}`")))?;
            Ok(Axis {
                order,
                with_zero: zero,
            })
        })
        .collect()
}

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;

/// An ordered set of distinct points of `K^s`; the order fixes codeword
/// coordinates.
#[derive(Clone, Debug)]
pub struct PointSet<F: Field> {
    field: F,
    dim: usize,
    points: Vec<Vec<F::Elem>>,
}

impl<F: Field> PointSet<F> {
    pub fn new(field: F, points: Vec<Vec<F::Elem>>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyPointSet)?.len();
        let mut seen = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if seen.insert(p.as_slice(), i).is_some() {
                return Err(Error::DuplicatePoint(i + 1));
            }
        }
        Ok(PointSet { field, dim, points })
    }

    /// Parses each coordinate with [`Field::parse_elem`].
    pub fn parse(field: F, points: &[Vec<&str>]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|s| field.parse_elem(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, pts)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<F::Elem>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[F::Elem] {
        &self.points[i]
    }
}

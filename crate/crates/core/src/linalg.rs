//! Dense exact linear algebra over a [`Field`], plus the leading-term basis
//! algorithm for finite lists of polynomials.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{PolyRing, Polynomial};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Copy> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Builds a matrix with `cols` columns; every row must have that length.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> E {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        self.rows().map(<[E]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend((0..self.rows).map(|i| self.get(i, j)));
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

pub fn identity<F: Field>(k: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = Matrix::filled(n, n, k.zero());
    for i in 0..n {
        m.set(i, i, k.one());
    }
    m
}

pub fn mat_mul<F: Field>(
    k: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            found: b.rows,
        });
    }
    let mut out = Matrix::filled(a.rows, b.cols, k.zero());
    for i in 0..a.rows {
        for l in 0..a.cols {
            let x = a.get(i, l);
            if k.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let v = k.add(out.get(i, j), k.mul(x, b.get(l, j)));
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

/// `M v` for a column vector `v`.
pub fn mat_vec<F: Field>(k: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    m.rows().map(|r| dot(k, r, v)).collect()
}

pub fn dot<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter()
        .zip(b)
        .fold(k.zero(), |acc, (&x, &y)| k.add(acc, k.mul(x, y)))
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Copy> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows.
    pub fn basis(&self) -> Vec<Vec<E>> {
        (0..self.rank())
            .map(|i| self.matrix.row(i).to_vec())
            .collect()
    }
}

pub fn rref<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !k.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = k.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..a.cols {
            let v = k.mul(a.get(r, j), inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            let f = a.get(i, c);
            if i == r || k.is_zero(f) {
                continue;
            }
            for j in c..a.cols {
                let v = k.sub(a.get(i, j), k.mul(f, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots }
}

pub fn rank<F: Field>(k: &F, m: &Matrix<F::Elem>) -> usize {
    rref(k, m).rank()
}

/// Basis of the right kernel `{x : M x = 0}`, one vector per free column in
/// increasing column order.
pub fn null_space<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let red = rref(k, m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![k.zero(); m.cols];
            x[f] = k.one();
            for (i, &p) in red.pivots.iter().enumerate() {
                x[p] = k.neg(red.matrix.get(i, f));
            }
            x
        })
        .collect()
}

pub fn inverse<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if m.rows != m.cols {
        return Err(Error::NotSquare);
    }
    let n = m.rows;
    let mut aug = Matrix::filled(n, 2 * n, k.zero());
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, k.one());
    }
    let red = rref(k, &aug);
    if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    let mut out = Matrix::filled(n, n, k.zero());
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, red.matrix.get(i, n + j));
        }
    }
    Ok(out)
}

/// A basis of `span(A)` whose elements have pairwise distinct initial
/// monomials, listed in strictly decreasing order and normalized to be monic.
///
/// At each step the first element with the largest initial monomial is
/// emitted, and every other element sharing that initial monomial is replaced
/// by its difference with the emitted one, cancelling the leading terms.
pub fn basis_algorithm<F: Field>(
    ring: &PolyRing<F>,
    a: &[Polynomial<F::Elem>],
) -> Vec<Polynomial<F::Elem>> {
    let k = ring.field();
    let mut b: Vec<Polynomial<F::Elem>> = a.iter().filter(|f| !f.is_zero()).cloned().collect();
    let mut out = Vec::new();
    while !b.is_empty() {
        let top = b
            .iter()
            .map(|f| f.leading_monomial().unwrap())
            .reduce(|x, y| if ring.cmp(y, x).is_gt() { y } else { x })
            .unwrap()
            .clone();
        let pos = b
            .iter()
            .position(|f| f.leading_monomial() == Some(&top))
            .unwrap();
        let max = b[pos].clone();
        let lc_max = max.leading_coeff().unwrap();
        let next: Vec<_> = b
            .into_iter()
            .filter_map(|g| {
                if g.leading_monomial() != Some(&top) {
                    return Some(g);
                }
                let c = k.div(lc_max, g.leading_coeff().unwrap()).unwrap();
                let h = ring.sub(&max, &ring.scale(&g, c));
                (!h.is_zero()).then_some(h)
            })
            .collect();
        out.push(ring.make_monic(&max).unwrap());
        b = next;
    }
    out
}

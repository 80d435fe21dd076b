//! Linear codes and evaluation codes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};
use crate::groebner::VanishingIdeal;
use crate::linalg::{self, Matrix};
use crate::polyring::{Monomial, PolyRing, Polynomial};

/// Default cap on the number of messages `q^k` enumerated by
/// [`LinearCode::min_distance`].
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// A linear code stored by the reduced row echelon form of a generator
/// matrix, so two codes are equal exactly when their generators are.
#[derive(Clone, Debug)]
pub struct LinearCode<F: Field> {
    field: F,
    generator: Matrix<F::Elem>,
}

impl<F: Field> PartialEq for LinearCode<F> {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl<F: Field> LinearCode<F> {
    /// The row space of `rows`, each of length `length`.
    pub fn new(field: F, length: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let m = Matrix::from_rows(length, rows)?;
        let red = linalg::rref(&field, &m);
        let generator = Matrix::from_rows(length, red.basis())?;
        Ok(LinearCode { field, generator })
    }

    pub fn zero(field: F, length: usize) -> Self {
        LinearCode {
            generator: Matrix::filled(0, length, field.zero()),
            field,
        }
    }

    pub fn full(field: F, length: usize) -> Self {
        let generator = linalg::identity(&field, length);
        LinearCode { field, generator }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.generator.ncols()
    }

    pub fn dim(&self) -> usize {
        self.generator.nrows()
    }

    pub fn generator(&self) -> &Matrix<F::Elem> {
        &self.generator
    }

    pub fn contains(&self, word: &[F::Elem]) -> bool {
        if word.len() != self.length() {
            return false;
        }
        let mut rows = self.generator.to_rows();
        rows.push(word.to_vec());
        let m = Matrix::from_rows(self.length(), rows).unwrap();
        linalg::rank(&self.field, &m) == self.dim()
    }

    pub fn contains_code(&self, other: &LinearCode<F>) -> bool {
        other.generator.rows().all(|r| self.contains(r))
    }

    /// `C^⊥ = {y : <x, y> = 0 for all x in C}`.
    pub fn dual(&self) -> Self {
        let ns = linalg::null_space(&self.field, &self.generator);
        LinearCode::new(self.field.clone(), self.length(), ns).unwrap()
    }

    /// `β · C`, coordinatewise scaling by a vector without zero entries.
    pub fn scaled(&self, beta: &[F::Elem]) -> Result<Self> {
        if beta.len() != self.length() {
            return Err(Error::DimensionMismatch {
                expected: self.length(),
                found: beta.len(),
            });
        }
        if let Some(i) = beta.iter().position(|&b| self.field.is_zero(b)) {
            return Err(Error::ZeroScaling(i + 1));
        }
        let rows = self
            .generator
            .rows()
            .map(|r| {
                r.iter()
                    .zip(beta)
                    .map(|(&x, &b)| self.field.mul(x, b))
                    .collect()
            })
            .collect();
        LinearCode::new(self.field.clone(), self.length(), rows)
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.dual()
    }
}

impl<F: FiniteField> LinearCode<F> {
    /// Minimum Hamming weight of a nonzero codeword, by exhaustive
    /// enumeration of messages. Fails when `q^k` exceeds `budget`.
    pub fn min_distance(&self, budget: u128) -> Result<usize> {
        let k = self.dim();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        let q = u128::from(self.field.order());
        let needed = u32::try_from(k)
            .ok()
            .and_then(|k| q.checked_pow(k))
            .unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let elems = self.field.elements();
        let rows = self.generator.to_rows();
        // Scaling preserves weight, so only messages whose first nonzero
        // entry is 1 are visited. Tasks split on the lead position and, when
        // there is one, the next coordinate.
        let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
        for lead in 0..k {
            if lead + 1 < k {
                tasks.extend((0..elems.len()).map(|v| (lead, Some(v))));
            } else {
                tasks.push((lead, None));
            }
        }
        let best = tasks
            .par_iter()
            .map(|&(lead, next)| self.scan(&rows, &elems, lead, next))
            .min()
            .unwrap();
        Ok(best)
    }

    fn scan(
        &self,
        rows: &[Vec<F::Elem>],
        elems: &[F::Elem],
        lead: usize,
        next: Option<usize>,
    ) -> usize {
        let f = &self.field;
        let n = self.length();
        let mut word = rows[lead].clone();
        let mut start = lead + 1;
        if let Some(v) = next {
            for (w, &g) in word.iter_mut().zip(&rows[lead + 1]) {
                *w = f.add(*w, f.mul(elems[v], g));
            }
            start += 1;
        }
        let weight = |w: &[F::Elem]| w.iter().filter(|&&x| !f.is_zero(x)).count();
        let mut best = weight(&word);
        let free = rows.len() - start;
        let mut digits = vec![0usize; free];
        let q = elems.len();
        'outer: loop {
            let mut i = free;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                let old = elems[digits[i]];
                digits[i] = (digits[i] + 1) % q;
                let delta = f.sub(elems[digits[i]], old);
                for (w, &g) in word.iter_mut().zip(&rows[start + i]) {
                    *w = f.add(*w, f.mul(delta, g));
                }
                if digits[i] != 0 {
                    break;
                }
            }
            best = best.min(weight(&word));
            if best == 1 {
                break;
            }
        }
        debug_assert!(best <= n);
        best
    }
}

/// The code `L_X` spanned by the evaluations of `space` at the points.
pub fn evaluate_space<F: Field>(
    ideal: &VanishingIdeal<F>,
    space: &[Polynomial<F::Elem>],
) -> Result<LinearCode<F>> {
    check_dims(ideal, space)?;
    let rows = space.iter().map(|f| ideal.evaluate(f)).collect();
    LinearCode::new(ideal.field().clone(), ideal.len(), rows)
}

pub(crate) fn check_dims<F: Field>(
    ideal: &VanishingIdeal<F>,
    space: &[Polynomial<F::Elem>],
) -> Result<()> {
    let n = ideal.ring().nvars();
    match space.iter().find(|f| f.nvars() != n) {
        Some(f) => Err(Error::DimensionMismatch {
            expected: n,
            found: f.nvars(),
        }),
        None => Ok(()),
    }
}

/// A basis of the standard function space: the unique subspace of `KΔ`
/// with the same evaluation code as `space`. Elements are remainders modulo
/// the vanishing ideal, passed through the basis algorithm.
pub fn standard_function_space<F: Field>(
    ideal: &VanishingIdeal<F>,
    space: &[Polynomial<F::Elem>],
) -> Result<Vec<Polynomial<F::Elem>>> {
    check_dims(ideal, space)?;
    let rems: Vec<_> = space.iter().map(|f| ideal.gb().remainder(f)).collect();
    Ok(linalg::basis_algorithm(ideal.ring(), &rems))
}

/// Canonical basis of a subspace of `KΔ`: reduced row echelon form of the
/// coordinate matrix with columns ordered from the ≺-largest monomial down.
/// Two subspaces are equal exactly when their canonical bases are.
pub fn canonical_basis<F: Field>(
    ring: &PolyRing<F>,
    monomials: &[Monomial],
    space: &[Polynomial<F::Elem>],
) -> Vec<Polynomial<F::Elem>> {
    let cols: Vec<Monomial> = monomials.iter().rev().cloned().collect();
    let rows = space.iter().map(|f| ring.coords(f, &cols)).collect();
    let m = Matrix::from_rows(cols.len(), rows).unwrap();
    linalg::rref(ring.field(), &m)
        .basis()
        .iter()
        .map(|r| ring.from_coords(&cols, r))
        .collect()
}

/// The monomial basis of the standard function space, when it has one.
pub fn is_standard_monomial_code<F: Field>(
    ideal: &VanishingIdeal<F>,
    space: &[Polynomial<F::Elem>],
) -> Result<Option<Vec<Monomial>>> {
    let sfs = standard_function_space(ideal, space)?;
    let canon = canonical_basis(ideal.ring(), ideal.footprint().monomials(), &sfs);
    if canon.iter().all(|f| f.len() == 1) {
        let mut ms: Vec<Monomial> = canon
            .iter()
            .map(|f| f.leading_monomial().unwrap().clone())
            .collect();
        ideal.ring().sort_ascending(&mut ms);
        Ok(Some(ms))
    } else {
        Ok(None)
    }
}

/// An evaluation code together with its standard function space.
#[derive(Debug, Clone)]
pub struct EvaluationCode<'a, F: Field> {
    ideal: &'a VanishingIdeal<F>,
    space: Vec<Polynomial<F::Elem>>,
    standard: Vec<Polynomial<F::Elem>>,
    code: LinearCode<F>,
}

impl<'a, F: Field> EvaluationCode<'a, F> {
    pub fn new(ideal: &'a VanishingIdeal<F>, space: Vec<Polynomial<F::Elem>>) -> Result<Self> {
        let code = evaluate_space(ideal, &space)?;
        let standard = standard_function_space(ideal, &space)?;
        Ok(EvaluationCode {
            ideal,
            space,
            standard,
            code,
        })
    }

    /// The monomial space `K{t^a : a in monomials}`.
    pub fn monomial(ideal: &'a VanishingIdeal<F>, monomials: &[Monomial]) -> Result<Self> {
        let ring = ideal.ring();
        Self::new(
            ideal,
            monomials.iter().map(|m| ring.monomial(m.clone())).collect(),
        )
    }

    /// The Reed–Muller-type code `C_X(d)` of polynomials of degree at most
    /// `d`; empty for `d = -1`.
    pub fn reed_muller(ideal: &'a VanishingIdeal<F>, d: i64) -> Result<Self> {
        Self::monomial(ideal, &ideal.ring().monomials_up_to(d))
    }

    pub fn ideal(&self) -> &'a VanishingIdeal<F> {
        self.ideal
    }

    pub fn space(&self) -> &[Polynomial<F::Elem>] {
        &self.space
    }

    pub fn standard_space(&self) -> &[Polynomial<F::Elem>] {
        &self.standard
    }

    pub fn code(&self) -> &LinearCode<F> {
        &self.code
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    pub fn length(&self) -> usize {
        self.code.length()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{GaloisField, Gf};
    use crate::points::PointSet;
    use crate::polyring::MonomialOrder;

    fn code(p: u64, rows: &[&[u32]]) -> LinearCode<GaloisField> {
        let k = GaloisField::prime(p).unwrap();
        let n = rows[0].len();
        LinearCode::new(
            k,
            n,
            rows.iter()
                .map(|r| r.iter().map(|&x| Gf(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn repetition_and_duals() {
        let c = code(3, &[&[1, 1, 1, 1]]);
        assert_eq!(c.min_distance(DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(c.dual().dim(), 3);
        assert_eq!(c.dual().min_distance(DEFAULT_BUDGET).unwrap(), 2);
        let k = GaloisField::prime(3).unwrap();
        assert_eq!(
            LinearCode::full(k.clone(), 3).dual(),
            LinearCode::zero(k.clone(), 3)
        );
        assert_eq!(
            LinearCode::zero(k, 3)
                .min_distance(DEFAULT_BUDGET)
                .unwrap_err(),
            Error::ZeroCode
        );
    }

    #[test]
    fn scaling_and_budget() {
        let c = code(2, &[&[1, 0]]);
        assert_ne!(c.scaled(&[Gf(1), Gf(1)]).unwrap(), code(2, &[&[0, 1]]));
        assert_eq!(
            c.scaled(&[Gf(1), Gf(0)]).unwrap_err(),
            Error::ZeroScaling(2)
        );
        let h = code(
            2,
            &[
                &[1, 0, 0, 0, 0, 1, 1],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 1, 1, 0],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        );
        assert_eq!(h.min_distance(DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(h.dual().min_distance(DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(
            h.min_distance(15).unwrap_err(),
            Error::BudgetExceeded {
                needed: 16,
                budget: 15
            }
        );
    }

    #[test]
    fn non_monomial_standard_space() {
        let k = GaloisField::prime(3).unwrap();
        let pts = [
            ["1", "1", "1"],
            ["1", "1", "-1"],
            ["0", "0", "0"],
            ["0", "0", "1"],
            ["0", "0", "-1"],
            ["0", "1", "0"],
            ["0", "1", "1"],
            ["0", "1", "-1"],
        ];
        let x = PointSet::parse(k, &pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap();
        let v = VanishingIdeal::new(x, MonomialOrder::Grevlex).unwrap();
        let r = v.ring();
        assert_eq!(
            is_standard_monomial_code(&v, &[r.parse("t1+t2").unwrap()]).unwrap(),
            None
        );
        assert_eq!(
            is_standard_monomial_code(&v, &[r.one()]).unwrap(),
            Some(vec![Monomial::one(3)])
        );
        assert!(evaluate_space(
            &v,
            &[PolyRing::new(r.field().clone(), 2, MonomialOrder::Grevlex).one()]
        )
        .is_err());
    }
}

//! Dual codes, algebraic duals and monomial equivalence.
//!
//! The algebraic dual of `L` is `L^⊥ = (ker φ : L) ∩ KΔ` with
//! `φ(h) = h(P_1) + ... + h(P_m)`. Its evaluation code is `(L_X)^⊥`, which
//! is how it is computed here: every dual codeword is interpolated back into
//! `KΔ` through `M_ev^{-1}`.

use crate::error::{Error, Result};
use crate::evalcode::{canonical_basis, evaluate_space, standard_function_space, LinearCode};
use crate::field::Field;
use crate::groebner::VanishingIdeal;
use crate::invariants::{essential_monomials, indicator_functions};
use crate::linalg::{self, dot};
use crate::polyring::{Monomial, Polynomial};

pub fn dual_code<F: Field>(c: &LinearCode<F>) -> LinearCode<F> {
    c.dual()
}

/// A basis of `L^⊥` with distinct, decreasing initial monomials.
pub fn algebraic_dual<F: Field>(
    ideal: &VanishingIdeal<F>,
    space: &[Polynomial<F::Elem>],
) -> Result<Vec<Polynomial<F::Elem>>> {
    let dual = evaluate_space(ideal, space)?.dual();
    let lifted = dual
        .generator()
        .rows()
        .map(|r| ideal.interpolate(r))
        .collect::<Result<Vec<_>>>()?;
    let basis = linalg::basis_algorithm(ideal.ring(), &lifted);
    if basis.len() != dual.dim() || evaluate_space(ideal, &basis)? != dual {
        return Err(Error::Consistency(
            "algebraic dual does not evaluate onto the dual code".into(),
        ));
    }
    Ok(basis)
}

/// Outcome of the monomial-dual count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialDualCheck {
    /// Standard monomials `t^a` with `φ(t^a f) = 0` for all `f` in `L̃`.
    pub kernel_monomials: Vec<Monomial>,
    /// `|X| - dim L_X`.
    pub dual_dim: usize,
}

impl MonomialDualCheck {
    pub fn is_monomial(&self) -> bool {
        self.kernel_monomials.len() == self.dual_dim
    }

    pub fn certificate(&self) -> Option<&[Monomial]> {
        self.is_monomial()
            .then_some(self.kernel_monomials.as_slice())
    }
}

/// `L^⊥` is spanned by monomials exactly when the number of standard
/// monomials in `ker φ : L` equals `|X| - dim L_X`.
pub fn is_dual_monomial<F: Field>(
    ideal: &VanishingIdeal<F>,
    space: &[Polynomial<F::Elem>],
) -> Result<MonomialDualCheck> {
    let k = ideal.field();
    let sfs = standard_function_space(ideal, space)?;
    let evals: Vec<Vec<F::Elem>> = sfs.iter().map(|f| ideal.evaluate(f)).collect();
    let mev = ideal.evaluation_matrix();
    let kernel_monomials = ideal
        .footprint()
        .monomials()
        .iter()
        .enumerate()
        .filter(|&(j, _)| {
            let col = mev.column(j);
            evals.iter().all(|e| k.is_zero(dot(k, &col, e)))
        })
        .map(|(_, m)| m.clone())
        .collect();
    Ok(MonomialDualCheck {
        kernel_monomials,
        dual_dim: ideal.len() - sfs.len(),
    })
}

/// Checks `(L^⊥)^⊥ = L̃` as subspaces of `KΔ`.
pub fn double_dual_check<F: Field>(
    ideal: &VanishingIdeal<F>,
    space: &[Polynomial<F::Elem>],
) -> Result<bool> {
    let sfs = standard_function_space(ideal, space)?;
    let dd = algebraic_dual(ideal, &algebraic_dual(ideal, &sfs)?)?;
    let fp = ideal.footprint().monomials();
    Ok(canonical_basis(ideal.ring(), fp, &dd) == canonical_basis(ideal.ring(), fp, &sfs))
}

/// Whether `C2 = β · C1`.
pub fn verify_monomial_equivalence<F: Field>(
    c1: &LinearCode<F>,
    c2: &LinearCode<F>,
    beta: &[F::Elem],
) -> Result<bool> {
    if c1.length() != c2.length() {
        return Err(Error::DimensionMismatch {
            expected: c1.length(),
            found: c2.length(),
        });
    }
    Ok(c1.scaled(beta)? == *c2)
}

/// For exponent sets `Γ1, Γ2 ⊂ Λ` with `|Γ1| + |Γ2| = |X|` and
/// `e ∉ Γ1 + Γ2`, where `t^e` is the ≺-largest standard monomial and is
/// essential, returns `β` with `β · L(Γ1)_X = L(Γ2)_X^⊥`: `β_i` is the
/// coefficient of `t^e` in the `i`-th standard indicator function.
pub fn combinatorial_pairing<F: Field>(
    ideal: &VanishingIdeal<F>,
    gamma1: &[Monomial],
    gamma2: &[Monomial],
) -> Result<Vec<F::Elem>> {
    let fp = ideal.footprint();
    let n = ideal.ring().nvars();
    for m in gamma1.iter().chain(gamma2) {
        if m.nvars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.nvars(),
            });
        }
        if !fp.contains(m) {
            return Err(Error::NonStandardMonomial(m.to_string()));
        }
    }
    let (g1, g2) = (dedup(gamma1), dedup(gamma2));
    if g1.len() + g2.len() != ideal.len() {
        return Err(Error::PairingCardinality {
            sum: g1.len() + g2.len(),
            points: ideal.len(),
        });
    }
    let top = fp.top().ok_or(Error::EmptyPointSet)?.clone();
    if g1.iter().any(|a| g2.iter().any(|b| a.mul(b) == top)) {
        return Err(Error::PairingTopInSum(top.to_string()));
    }
    let ind = indicator_functions(ideal);
    if !essential_monomials(ideal, &ind).contains(&top) {
        return Err(Error::NotEssential(top.to_string()));
    }
    let ring = ideal.ring();
    let beta: Vec<F::Elem> = ind
        .functions()
        .iter()
        .map(|f| ring.coefficient(f, &top))
        .collect();
    let c1 = evaluate_space(
        ideal,
        &g1.iter()
            .map(|m| ring.monomial(m.clone()))
            .collect::<Vec<_>>(),
    )?;
    let c2 = evaluate_space(
        ideal,
        &g2.iter()
            .map(|m| ring.monomial(m.clone()))
            .collect::<Vec<_>>(),
    )?;
    if !verify_monomial_equivalence(&c1, &c2.dual(), &beta)? {
        return Err(Error::Consistency(
            "β · L(Γ1)_X differs from L(Γ2)_X^⊥".into(),
        ));
    }
    Ok(beta)
}

fn dedup(ms: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !out.contains(m) {
            out.push(m.clone());
        }
    }
    out
}

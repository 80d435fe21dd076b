//! Standard indicator functions, v-numbers, Hilbert functions and the
//! symmetry conditions on the h-vector.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::evalcode::{EvaluationCode, LinearCode};
use crate::field::{Field, FiniteField};
use crate::groebner::VanishingIdeal;
use crate::polyring::{Monomial, Polynomial};

/// The standard indicator functions `f_1, ..., f_m`: `f_i` lies in `KΔ`,
/// `f_i(P_i) = 1` and `f_i(P_j) = 0` for `j != i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorSet<E> {
    functions: Vec<Polynomial<E>>,
}

impl<E: Copy> IndicatorSet<E> {
    pub fn functions(&self) -> &[Polynomial<E>] {
        &self.functions
    }

    pub fn get(&self, i: usize) -> &Polynomial<E> {
        &self.functions[i]
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// `deg f_i`, the local v-number at the `i`-th point.
    pub fn degrees(&self) -> Vec<u32> {
        self.functions
            .iter()
            .map(|f| f.total_degree().unwrap())
            .collect()
    }

    pub fn leading_coeffs(&self) -> Vec<E> {
        self.functions
            .iter()
            .map(|f| f.leading_coeff().unwrap())
            .collect()
    }
}

/// Reads `f_i` off column `i` of `M_ev^{-1}`.
pub fn indicator_functions<F: Field>(ideal: &VanishingIdeal<F>) -> IndicatorSet<F::Elem> {
    let inv = ideal.evaluation_inverse();
    let basis = ideal.footprint().monomials();
    let functions = (0..ideal.len())
        .map(|i| ideal.ring().from_coords(basis, &inv.column(i)))
        .collect();
    IndicatorSet { functions }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VNumbers {
    pub local: Vec<u32>,
    pub global: u32,
}

/// Local v-numbers `deg f_i` and their minimum.
pub fn v_numbers<F: Field>(ideal: &VanishingIdeal<F>) -> Result<VNumbers> {
    if ideal.len() < 2 {
        return Err(Error::TooFewPoints);
    }
    let local = indicator_functions(ideal).degrees();
    let global = *local.iter().min().unwrap();
    Ok(VNumbers { local, global })
}

/// Degree profile of the footprint: `h_d = |Δ ∩ S_d|` and the affine
/// Hilbert function `H(d) = h_0 + ... + h_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub h_vector: Vec<usize>,
    pub hilbert: Vec<usize>,
    pub r0: u32,
    pub points: usize,
}

impl HilbertProfile {
    /// `H(d)` for any integer `d`, with `H(d) = 0` for `d < 0`.
    pub fn h(&self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.hilbert.get(d as usize).copied().unwrap_or(self.points)
        }
    }

    pub fn h_symmetric(&self) -> bool {
        self.h_vector.iter().eq(self.h_vector.iter().rev())
    }

    /// `H(d) + H(r0 - d - 1)` for `d = -1..=r0`.
    pub fn complement_sums(&self) -> Vec<(i64, usize)> {
        let r0 = i64::from(self.r0);
        (-1..=r0)
            .map(|d| (d, self.h(d) + self.h(r0 - d - 1)))
            .collect()
    }

    pub fn complement_holds(&self) -> bool {
        self.complement_sums()
            .iter()
            .all(|&(_, s)| s == self.points)
    }
}

pub fn hilbert_profile<F: Field>(ideal: &VanishingIdeal<F>) -> HilbertProfile {
    let h_vector = ideal.footprint().degree_counts();
    let hilbert = h_vector
        .iter()
        .scan(0, |acc, &h| {
            *acc += h;
            Some(*acc)
        })
        .collect();
    HilbertProfile {
        h_vector,
        hilbert,
        r0: ideal.r0(),
        points: ideal.len(),
    }
}

/// The four equivalent symmetry conditions, each evaluated by its own route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    /// h-vector from first differences of `H(d) = dim C_X(d)`.
    pub h_symmetric: bool,
    /// `H(d) + H(r0 - d - 1) = |X|` for `-1 <= d <= r0`.
    pub hilbert_complement: bool,
    /// Hilbert function of the initial ideal, counting degree-`d` monomials
    /// outside it.
    pub initial_symmetric: bool,
    /// Degree counts of the footprint.
    pub footprint_symmetric: bool,
    pub complement_sums: Vec<(i64, usize)>,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.hilbert_complement
    }
}

pub fn symmetry_report<F: Field>(ideal: &VanishingIdeal<F>) -> Result<SymmetryReport> {
    let profile = hilbert_profile(ideal);
    let r0 = profile.r0 as i64;
    let ring = ideal.ring();

    let mut dims = Vec::with_capacity(r0 as usize + 1);
    for d in 0..=r0 {
        dims.push(EvaluationCode::reed_muller(ideal, d)?.dim());
    }
    let diffs: Vec<usize> = (0..dims.len())
        .map(|i| dims[i] - if i == 0 { 0 } else { dims[i - 1] })
        .collect();
    let h_symmetric = diffs.iter().eq(diffs.iter().rev());

    let lms = ideal.gb().leading_monomials();
    let initial: Vec<usize> = (0..=r0)
        .map(|d| {
            let all = ring.monomials_up_to(d);
            all.iter()
                .filter(|m| m.degree() as i64 == d && !lms.iter().any(|l| l.divides(m)))
                .count()
        })
        .collect();
    let initial_symmetric = initial.iter().eq(initial.iter().rev());

    let report = SymmetryReport {
        h_symmetric,
        hilbert_complement: profile.complement_holds(),
        initial_symmetric,
        footprint_symmetric: profile.h_symmetric(),
        complement_sums: profile.complement_sums(),
    };
    let flags = [
        report.h_symmetric,
        report.hilbert_complement,
        report.initial_symmetric,
        report.footprint_symmetric,
    ];
    if flags.iter().any(|&b| b != flags[0]) {
        return Err(Error::Consistency(format!(
            "symmetry conditions disagree: {flags:?}"
        )));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RegMode {
    #[default]
    ViaV,
    BruteForce,
}

/// Regularity index of the minimum-distance function `d -> δ(C_X(d))`:
/// the least `d` with `δ = 1`.
pub fn reg_delta<F: FiniteField>(
    ideal: &VanishingIdeal<F>,
    mode: RegMode,
    budget: u128,
) -> Result<u32> {
    match mode {
        RegMode::ViaV => Ok(v_numbers(ideal)?.global),
        RegMode::BruteForce => {
            if ideal.len() < 2 {
                return Err(Error::TooFewPoints);
            }
            for d in 0..=ideal.r0() {
                let c: LinearCode<F> = EvaluationCode::reed_muller(ideal, i64::from(d))?
                    .code()
                    .clone();
                if c.min_distance(budget)? == 1 {
                    return Ok(d);
                }
            }
            Err(Error::Consistency(
                "C_X(r0) has minimum distance above 1".into(),
            ))
        }
    }
}

/// Standard monomials with a nonzero coefficient in every indicator function.
pub fn essential_monomials<F: Field>(
    ideal: &VanishingIdeal<F>,
    ind: &IndicatorSet<F::Elem>,
) -> Vec<Monomial> {
    let ring = ideal.ring();
    let k = ring.field();
    ideal
        .footprint()
        .monomials()
        .iter()
        .filter(|m| {
            ind.functions()
                .iter()
                .all(|f| !k.is_zero(ring.coefficient(f, m)))
        })
        .cloned()
        .collect()
}

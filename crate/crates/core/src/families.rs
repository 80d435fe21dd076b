//! Cartesian point sets built from multiplicative subgroups, closed-form
//! monomial duals on degenerate tori and degenerate affine spaces, the
//! Reed–Muller duality criterion and self-dual codes in characteristic 2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evalcode::{EvaluationCode, LinearCode};
use crate::field::{Field, FiniteField};
use crate::groebner::VanishingIdeal;
use crate::invariants::{hilbert_profile, indicator_functions, v_numbers};
use crate::points::PointSet;
use crate::polyring::{Monomial, MonomialOrder, Polynomial};

/// One factor `B_i` of a Cartesian set: the subgroup `A_i` of `K*` of
/// order `d_i`, with `0` adjoined when `with_zero` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axis {
    pub order: u32,
    #[serde(default)]
    pub with_zero: bool,
}

impl Axis {
    pub fn torus(order: u32) -> Self {
        Axis {
            order,
            with_zero: false,
        }
    }

    pub fn affine(order: u32) -> Self {
        Axis {
            order,
            with_zero: true,
        }
    }

    /// `e_i = |B_i|`.
    pub fn size(&self) -> u32 {
        self.order + u32::from(self.with_zero)
    }

    /// Largest exponent of `t_i` among standard monomials.
    fn max_exp(&self) -> u32 {
        self.size() - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Torus,
    Affine,
    Mixed,
}

/// `X = B_1 × ... × B_s`.
#[derive(Clone, Debug)]
pub struct CartesianSpec<F: FiniteField> {
    field: F,
    axes: Vec<Axis>,
    components: Vec<Vec<F::Elem>>,
}

impl<F: FiniteField> CartesianSpec<F> {
    /// Each axis lists `0` first when present, then `1, h, h^2, ...` with
    /// `h` generating the subgroup.
    pub fn new(field: F, axes: Vec<Axis>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let components = axes
            .iter()
            .map(|a| {
                let mut c = Vec::with_capacity(a.size() as usize);
                if a.with_zero {
                    c.push(field.zero());
                }
                c.extend(field.subgroup(a.order)?);
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CartesianSpec {
            field,
            axes,
            components,
        })
    }

    pub fn torus(field: F, orders: &[u32]) -> Result<Self> {
        Self::new(field, orders.iter().map(|&d| Axis::torus(d)).collect())
    }

    pub fn affine(field: F, orders: &[u32]) -> Result<Self> {
        Self::new(field, orders.iter().map(|&d| Axis::affine(d)).collect())
    }

    /// `K^s`, every axis being `K* ∪ {0}`.
    pub fn full_space(field: F, s: usize) -> Result<Self> {
        let d = field.order() - 1;
        Self::affine(field, &vec![d; s])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn nvars(&self) -> usize {
        self.axes.len()
    }

    pub fn components(&self) -> &[Vec<F::Elem>] {
        &self.components
    }

    pub fn shape(&self) -> Shape {
        if self.axes.iter().all(|a| !a.with_zero) {
            Shape::Torus
        } else if self.axes.iter().all(|a| a.with_zero) {
            Shape::Affine
        } else {
            Shape::Mixed
        }
    }

    /// `Σ (e_i - 1)`.
    pub fn r0(&self) -> u32 {
        self.axes.iter().map(Axis::max_exp).sum()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.size() as usize).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Points in lexicographic order, axis 1 varying slowest.
    pub fn point_set(&self) -> Result<PointSet<F>> {
        let mut points = Vec::with_capacity(self.len());
        let mut idx = vec![0usize; self.nvars()];
        loop {
            points.push(
                idx.iter()
                    .zip(&self.components)
                    .map(|(&i, c)| c[i])
                    .collect(),
            );
            let mut j = self.nvars();
            loop {
                if j == 0 {
                    return PointSet::new(self.field.clone(), points);
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < self.components[j].len() {
                    break;
                }
                idx[j] = 0;
            }
        }
    }

    pub fn vanishing_ideal(&self, order: MonomialOrder) -> Result<VanishingIdeal<F>> {
        VanishingIdeal::new(self.point_set()?, order)
    }

    /// Standard monomials `t^c` with `c_i < e_i`, ascending in `order`. The
    /// Gröbner basis `{t_i^{e_i} - t_i}` or `{t_i^{d_i} - 1}` makes this
    /// independent of the order.
    pub fn footprint(&self, order: MonomialOrder) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.len());
        let mut c = vec![0u32; self.nvars()];
        'outer: loop {
            out.push(Monomial(c.clone()));
            for j in (0..c.len()).rev() {
                c[j] += 1;
                if c[j] < self.axes[j].size() {
                    continue 'outer;
                }
                c[j] = 0;
            }
            break;
        }
        out.sort_by(|a, b| order.cmp(a, b));
        out
    }

    fn require(&self, shape: Shape) -> Result<()> {
        if self.shape() == shape {
            Ok(())
        } else {
            Err(Error::WrongFamily(match shape {
                Shape::Torus => "expected a degenerate torus",
                Shape::Affine => "expected a degenerate affine space",
                Shape::Mixed => "expected a mixed Cartesian set",
            }))
        }
    }

    fn check_standard(&self, a: &[Monomial]) -> Result<()> {
        for m in a {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
            if m.exps()
                .iter()
                .zip(&self.axes)
                .any(|(&c, ax)| c > ax.max_exp())
            {
                return Err(Error::NonStandardMonomial(m.to_string()));
            }
        }
        Ok(())
    }

    /// Requires `p | e_i` on every axis.
    fn check_characteristic(&self) -> Result<()> {
        let p = self.field.characteristic();
        match self.axes.iter().position(|a| a.size() % p != 0) {
            Some(i) => Err(Error::CharacteristicNotDividing {
                p,
                axis: i + 1,
                e: self.axes[i].size(),
            }),
            None => Ok(()),
        }
    }
}

/// The Reed–Muller-type code `C_X(d)`; `d = -1` gives the zero code.
pub fn reed_muller<F: Field>(ideal: &VanishingIdeal<F>, d: i64) -> Result<EvaluationCode<'_, F>> {
    if d < -1 {
        return Err(Error::DegreeOutOfRange {
            d,
            lo: -1,
            hi: None,
        });
    }
    EvaluationCode::reed_muller(ideal, d)
}

fn without(delta: Vec<Monomial>, b: &[Monomial]) -> Vec<Monomial> {
    delta.into_iter().filter(|m| !b.contains(m)).collect()
}

/// On a degenerate torus with `L = K(A)`, `L^⊥ = K(Δ \ B)` where `t^b = 1`
/// for `t^a = 1` and otherwise `t^b = Π_{t_j | t^a} t_j^{d_j - a_j}`.
pub fn torus_monomial_dual<F: FiniteField>(
    a: &[Monomial],
    spec: &CartesianSpec<F>,
    order: MonomialOrder,
) -> Result<Vec<Monomial>> {
    spec.require(Shape::Torus)?;
    spec.check_standard(a)?;
    let b: Vec<Monomial> = a
        .iter()
        .map(|m| {
            Monomial(
                m.exps()
                    .iter()
                    .zip(spec.axes())
                    .map(|(&c, ax)| if c == 0 { 0 } else { ax.order - c })
                    .collect(),
            )
        })
        .collect();
    Ok(without(spec.footprint(order), &b))
}

/// `t^b = Π t_j^{d_j - a_j}` for each `t^a` in `A`.
fn affine_complements(a: &[Monomial], spec: &CartesianSpec<impl FiniteField>) -> Vec<Monomial> {
    a.iter()
        .map(|m| {
            Monomial(
                m.exps()
                    .iter()
                    .zip(spec.axes())
                    .map(|(&c, ax)| ax.order - c)
                    .collect(),
            )
        })
        .collect()
}

/// Whether `A` is closed under dividing any `t^a` in `A` by any product of
/// the variables `t_j` that occur in it with the top exponent `d_j`.
pub fn weakly_divisor_closed<F: FiniteField>(
    a: &[Monomial],
    spec: &CartesianSpec<F>,
) -> Result<bool> {
    spec.require(Shape::Affine)?;
    spec.check_standard(a)?;
    if spec.nvars() == 1 {
        let top = spec.axes()[0].order;
        let reaches_top = a.iter().any(|m| m.exps()[0] == top);
        return Ok(!reaches_top || a.iter().any(Monomial::is_one));
    }
    for m in a {
        let full: Vec<usize> = (0..spec.nvars())
            .filter(|&j| m.exps()[j] == spec.axes()[j].order)
            .collect();
        for mask in 1u64..(1u64 << full.len()) {
            let mut q = m.exps().to_vec();
            for (bit, &j) in full.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    q[j] = 0;
                }
            }
            if !a.iter().any(|x| x.exps() == q.as_slice()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineDual {
    /// `L^⊥ = K(Δ \ B)`.
    Monomial(Vec<Monomial>),
    /// `A` is not weakly divisor-closed, so `(L_X)^⊥` is not a standard
    /// monomial code.
    NotMonomial,
}

/// On a degenerate affine space with `p | e_i` for all `i`, the algebraic
/// dual of `K(A)` is spanned by monomials exactly when `A` is weakly
/// divisor-closed, and is then `K(Δ \ B)` with `t^b = Π t_j^{d_j - a_j}`.
pub fn affine_monomial_dual<F: FiniteField>(
    a: &[Monomial],
    spec: &CartesianSpec<F>,
    order: MonomialOrder,
) -> Result<AffineDual> {
    spec.check_characteristic()?;
    if !weakly_divisor_closed(a, spec)? {
        return Ok(AffineDual::NotMonomial);
    }
    Ok(AffineDual::Monomial(without(
        spec.footprint(order),
        &affine_complements(a, spec),
    )))
}

/// The algebraic dual of `S_{≤d}` on a degenerate affine space with
/// `p | e_i`: the standard monomials of degree at most `r0 - d - 1`.
pub fn affine_rm_dual<F: FiniteField>(
    d: i64,
    spec: &CartesianSpec<F>,
    order: MonomialOrder,
) -> Result<Vec<Monomial>> {
    spec.require(Shape::Affine)?;
    spec.check_characteristic()?;
    let delta = spec.footprint(order);
    let r0 = i64::from(spec.r0());
    let top = delta
        .iter()
        .map(|m| i64::from(m.degree()))
        .max()
        .unwrap_or(0);
    if top != r0 {
        return Err(Error::Consistency(format!(
            "r0 = {r0} but the footprint reaches degree {top}"
        )));
    }
    if !(-1..=r0).contains(&d) {
        return Err(Error::DegreeOutOfRange {
            d,
            lo: -1,
            hi: Some(r0),
        });
    }
    let low: Vec<Monomial> = delta
        .iter()
        .filter(|m| i64::from(m.degree()) < r0 - d)
        .cloned()
        .collect();
    let a: Vec<Monomial> = delta
        .iter()
        .filter(|m| i64::from(m.degree()) <= d)
        .cloned()
        .collect();
    if without(delta, &affine_complements(&a, spec)) != low {
        return Err(Error::Consistency(
            "degree complement differs from Δ \\ B".into(),
        ));
    }
    Ok(low)
}

/// Result of the Reed–Muller duality criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport<E> {
    pub holds: bool,
    /// `H(d) + H(r0 - d - 1) = |X|` for `-1 <= d <= r0`.
    pub complement_holds: bool,
    /// Every local v-number equals `r0`.
    pub v_equals_r0: bool,
    pub r0: u32,
    pub v_local: Vec<u32>,
    /// `g = Σ lc(f_i) f_i` when the criterion holds.
    pub g: Option<Polynomial<E>>,
    /// `β_i = g(P_i) = lc(f_i)` when the criterion holds.
    pub beta: Option<Vec<E>>,
}

/// Decides whether `C_X(d)` is monomially equivalent to `C_X(r0 - d - 1)^⊥`
/// for all `-1 <= d <= r0`. When it is, `β · C_X(d) = C_X(r0 - d - 1)^⊥` is
/// checked for every such `d`.
pub fn duality_criterion<F: Field>(ideal: &VanishingIdeal<F>) -> Result<CriterionReport<F::Elem>> {
    let v = v_numbers(ideal)?;
    let profile = hilbert_profile(ideal);
    let r0 = profile.r0;
    let complement_holds = profile.complement_holds();
    let v_equals_r0 = v.local.iter().all(|&x| x == r0);
    let mut report = CriterionReport {
        holds: complement_holds && v_equals_r0,
        complement_holds,
        v_equals_r0,
        r0,
        v_local: v.local,
        g: None,
        beta: None,
    };
    if !report.holds {
        return Ok(report);
    }
    let ring = ideal.ring();
    let ind = indicator_functions(ideal);
    let beta = ind.leading_coeffs();
    let g = ind
        .functions()
        .iter()
        .zip(&beta)
        .fold(ring.zero(), |acc, (f, &c)| {
            ring.add(&acc, &ring.scale(f, c))
        });
    if ideal.evaluate(&g) != beta {
        return Err(Error::Consistency("g(P_i) differs from lc(f_i)".into()));
    }
    let r = i64::from(r0);
    let codes = (-1..=r)
        .map(|d| Ok(EvaluationCode::reed_muller(ideal, d)?.code().clone()))
        .collect::<Result<Vec<LinearCode<F>>>>()?;
    for d in -1..=r {
        let lhs = codes[(d + 1) as usize].scaled(&beta)?;
        let rhs = codes[(r - d) as usize].dual();
        if lhs != rhs {
            return Err(Error::Consistency(format!(
                "β · C_X({d}) differs from C_X({})^⊥",
                r - d - 1
            )));
        }
    }
    report.g = Some(g);
    report.beta = Some(beta);
    Ok(report)
}

/// In characteristic 2 with `r0` odd and the duality criterion holding,
/// `α · C_X((r0 - 1)/2)` is self-dual for `α_i^2 = lc(f_i)`.
pub fn self_dual_code<F: FiniteField>(ideal: &VanishingIdeal<F>) -> Result<LinearCode<F>> {
    let k = ideal.field();
    if k.characteristic() != 2 {
        return Err(Error::OddCharacteristic(k.characteristic()));
    }
    let r0 = ideal.r0();
    if r0.is_multiple_of(2) {
        return Err(Error::EvenRegularity(r0));
    }
    let report = duality_criterion(ideal)?;
    let beta = report.beta.ok_or(Error::CriterionFails)?;
    let alpha = beta
        .iter()
        .map(|&b| k.sqrt_char2(b))
        .collect::<Result<Vec<_>>>()?;
    let code = EvaluationCode::reed_muller(ideal, i64::from((r0 - 1) / 2))?
        .code()
        .scaled(&alpha)?;
    if !code.is_self_dual() {
        return Err(Error::Consistency("scaled code is not self-dual".into()));
    }
    Ok(code)
}

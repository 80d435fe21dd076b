//! Property checks shared by the proptest suite and the acceptance run.
//! Each returns `Err` with a description of the first violation.

use rand::seq::SliceRandom;
use rand::Rng;

use evcodes::duality::{algebraic_dual, double_dual_check, is_dual_monomial};
use evcodes::evalcode::{
    canonical_basis, evaluate_space, standard_function_space, EvaluationCode, LinearCode,
};
use evcodes::families::{
    affine_monomial_dual, affine_rm_dual, duality_criterion, self_dual_code, torus_monomial_dual,
    weakly_divisor_closed, AffineDual, CartesianSpec,
};
use evcodes::invariants::{
    hilbert_profile, indicator_functions, reg_delta, symmetry_report, v_numbers, RegMode,
};
use evcodes::linalg::{self, Matrix};
use evcodes::{
    Field, FiniteField, GaloisField, Gf, Monomial, MonomialOrder, PointSet, Poly, Ring,
    VanishingIdeal,
};

use super::{
    algebraic_dual_direct, all_points, min_indicator_degree, same_space, subsets,
    vanishing_ideal_by_buchberger, Ideal,
};

pub type Check = Result<(), String>;

pub const BUDGET: u128 = 1 << 22;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn small_fields() -> Vec<GaloisField> {
    vec![
        GaloisField::prime(2).unwrap(),
        GaloisField::prime(3).unwrap(),
        GaloisField::new(2, 2, None).unwrap(),
    ]
}

/// A random point set with `q ∈ {2,3,4}`, `s ≤ 3`, `m ≤ 9`, and a random
/// polynomial space of up to four elements of degree at most 2.
pub fn random_instance(rng: &mut impl Rng) -> (Ideal, Vec<Poly>) {
    let fields = small_fields();
    let k = fields.choose(rng).unwrap().clone();
    let s = rng.gen_range(1..=3);
    let all = all_points(&k, s);
    let m = rng.gen_range(1..=all.len().min(9));
    let pts: Vec<Vec<Gf>> = all.choose_multiple(rng, m).cloned().collect();
    let v = VanishingIdeal::new(
        PointSet::new(k.clone(), pts).unwrap(),
        MonomialOrder::Grevlex,
    )
    .unwrap();
    let space = random_space(rng, v.ring());
    (v, space)
}

/// A random point set of at most `max_m` points; `GF(4)` is limited to
/// `s <= 2` so the Buchberger oracle stays small.
pub fn random_ideal(rng: &mut impl Rng, max_m: usize) -> Ideal {
    let fields = small_fields();
    let k = fields.choose(rng).unwrap().clone();
    let s = if k.order() == 4 {
        rng.gen_range(1..=2)
    } else {
        rng.gen_range(1..=3)
    };
    let all = all_points(&k, s);
    let m = rng.gen_range(1..=all.len().min(max_m));
    let pts = all.choose_multiple(rng, m).cloned().collect();
    VanishingIdeal::new(PointSet::new(k, pts).unwrap(), MonomialOrder::Grevlex).unwrap()
}

pub fn random_space(rng: &mut impl Rng, ring: &Ring) -> Vec<Poly> {
    let k = ring.field();
    let ms = ring.monomials_up_to(2);
    let count = rng.gen_range(0..=4);
    (0..count)
        .map(|_| {
            let mut terms = Vec::new();
            for m in &ms {
                if rng.gen_bool(0.4) {
                    terms.push((m.clone(), k.element(rng.gen_range(0..k.order()))));
                }
            }
            ring.from_terms(terms)
        })
        .collect()
}

/// Footprint size, divisor closure, `r0` and remainders.
pub fn check_ideal(v: &Ideal) -> Check {
    let fp = v.footprint();
    ensure!(
        fp.len() == v.len(),
        "|Δ| = {} but |X| = {}",
        fp.len(),
        v.len()
    );
    ensure!(fp.is_divisor_closed(), "footprint is not divisor-closed");
    ensure!(
        v.gb().is_groebner() && v.gb().is_reduced(),
        "not a reduced Gröbner basis"
    );
    let p = hilbert_profile(v);
    ensure!(p.h(i64::from(p.r0)) == v.len(), "H(r0) != |X|");
    ensure!(
        p.r0 == 0 || p.h(i64::from(p.r0) - 1) < v.len(),
        "H(r0 - 1) = |X|"
    );
    ensure!(
        p.h_vector.iter().sum::<usize>() == v.len(),
        "h-vector does not sum to |X|"
    );
    let ring = v.ring();
    for m in ring.monomials_up_to(i64::from(p.r0) + 1) {
        let f = ring.monomial(m);
        let r = v.gb().remainder(&f);
        ensure!(r.monomials().all(|t| fp.contains(t)), "remainder leaves Δ");
        ensure!(
            v.evaluate(&r) == v.evaluate(&f),
            "remainder evaluates differently"
        );
    }
    Ok(())
}

/// Dimension identity, double dual, evaluation of the algebraic dual and
/// complementarity, with the direct linear-system dual as oracle.
pub fn check_space(v: &Ideal, space: &[Poly]) -> Check {
    let sfs = standard_function_space(v, space).map_err(|e| e.to_string())?;
    let code = evaluate_space(v, space).map_err(|e| e.to_string())?;
    ensure!(
        sfs.len() == code.dim(),
        "dim L̃ = {} but dim L_X = {}",
        sfs.len(),
        code.dim()
    );
    let dual = algebraic_dual(v, space).map_err(|e| e.to_string())?;
    ensure!(sfs.len() + dual.len() == v.len(), "dim L̃ + dim L^⊥ != |X|");
    ensure!(
        evaluate_space(v, &dual).unwrap() == code.dual(),
        "ev(L^⊥) != (L_X)^⊥"
    );
    ensure!(
        same_space(v, &dual, &algebraic_dual_direct(v, space)),
        "interpolated dual != direct dual"
    );
    ensure!(double_dual_check(v, space).unwrap(), "(L^⊥)^⊥ != L̃");
    let mut both = sfs.clone();
    both.extend(dual.iter().cloned());
    let sum_dim = canonical_basis(v.ring(), v.footprint().monomials(), &both).len();
    let trivial_meet = sum_dim == sfs.len() + dual.len();
    let spans = sum_dim == v.len();
    ensure!(
        trivial_meet == spans,
        "L̃ ∩ L^⊥ = 0 and L̃ + L^⊥ = KΔ disagree"
    );
    if code.dim() > 0 && code.is_self_dual() {
        ensure!(same_space(v, &sfs, &dual), "self-dual code but L̃ != L^⊥");
    }
    let check = is_dual_monomial(v, space).unwrap();
    let canon = canonical_basis(v.ring(), v.footprint().monomials(), &dual);
    ensure!(
        check.is_monomial() == canon.iter().all(|f| f.len() == 1),
        "monomial-dual count disagrees"
    );
    Ok(())
}

/// Symmetry conditions, indicator functions and v-numbers.
pub fn check_invariants(v: &Ideal) -> Check {
    symmetry_report(v).map_err(|e| e.to_string())?;
    let ind = indicator_functions(v);
    let ring = v.ring();
    let k = ring.field();
    for (i, f) in ind.functions().iter().enumerate() {
        let e = v.evaluate(f);
        ensure!(
            e.iter()
                .enumerate()
                .all(|(j, &x)| x == if i == j { k.one() } else { k.zero() }),
            "f_{} is not an indicator",
            i + 1
        );
    }
    let total = ind
        .functions()
        .iter()
        .fold(ring.zero(), |a, f| ring.add(&a, f));
    ensure!(total == ring.one(), "Σ f_i != 1");
    let r0 = v.r0();
    let degs = ind.degrees();
    ensure!(
        degs.iter().all(|&d| d <= r0) && degs.contains(&r0),
        "indicator degrees {degs:?} vs r0 = {r0}"
    );
    if v.len() < 2 {
        return Ok(());
    }
    let vn = v_numbers(v).unwrap();
    let brute = reg_delta(v, RegMode::BruteForce, BUDGET).map_err(|e| e.to_string())?;
    ensure!(
        vn.global == brute,
        "v(I) = {} but reg(δ) = {brute}",
        vn.global
    );
    let p = hilbert_profile(v);
    if vn.local.iter().all(|&x| x == r0) {
        for d in 0..=i64::from(r0) {
            ensure!(
                p.h(d) + p.h(i64::from(r0) - d - 1) <= v.len(),
                "H(d) + H(r0-d-1) > |X| at d = {d}"
            );
        }
        if p.h(i64::from(r0) - 1) + 1 == v.len() && r0 >= 1 {
            let c = EvaluationCode::reed_muller(v, i64::from(r0) - 1).unwrap();
            ensure!(
                c.code().min_distance(BUDGET).unwrap() == 2,
                "δ(C_X(r0 - 1)) != 2"
            );
        }
    }
    let report = duality_criterion(v).map_err(|e| e.to_string())?;
    ensure!(
        report.holds == (p.complement_holds() && vn.local.iter().all(|&x| x == r0)),
        "criterion flag"
    );
    Ok(())
}

/// `δ_X(d)` non-increasing, `H(d)` non-decreasing, Singleton bound.
pub fn check_rm_chain(v: &Ideal) -> Check {
    let mut prev: Option<(usize, usize)> = None;
    for d in 0..=i64::from(v.r0()) {
        let c = EvaluationCode::reed_muller(v, d).unwrap();
        let dist = c.code().min_distance(BUDGET).map_err(|e| e.to_string())?;
        ensure!(
            dist + c.dim() <= v.len() + 1,
            "Singleton bound fails at d = {d}"
        );
        if let Some((pd, ph)) = prev {
            ensure!(dist <= pd && c.dim() >= ph, "monotonicity fails at d = {d}");
        }
        prev = Some((dist, c.dim()));
    }
    Ok(())
}

/// Every subset `A` of `Δ`: weakly divisor-closed ⇔ the algebraic dual is
/// monomial ⇔ it equals `K(Δ \ B)`.
pub fn check_wdc_biconditional(spec: &CartesianSpec<GaloisField>) -> Check {
    let ord = MonomialOrder::Grevlex;
    let v = spec.vanishing_ideal(ord).unwrap();
    let ring = v.ring();
    let delta = v.footprint().monomials().to_vec();
    for a in subsets(&delta) {
        let l: Vec<Poly> = a.iter().map(|m| ring.monomial(m.clone())).collect();
        let wdc = weakly_divisor_closed(&a, spec).unwrap();
        let monomial = is_dual_monomial(&v, &l).unwrap().is_monomial();
        let b: Vec<Monomial> = a
            .iter()
            .map(|m| {
                Monomial(
                    m.exps()
                        .iter()
                        .zip(spec.axes())
                        .map(|(&c, ax)| ax.order - c)
                        .collect(),
                )
            })
            .collect();
        let rest: Vec<Poly> = delta
            .iter()
            .filter(|m| !b.contains(m))
            .map(|m| ring.monomial(m.clone()))
            .collect();
        let equals_rest = same_space(&v, &algebraic_dual(&v, &l).unwrap(), &rest);
        ensure!(
            wdc == monomial && monomial == equals_rest,
            "weakly divisor-closed, monomial dual and K(Δ \\ B) disagree for A = {a:?}"
        );
        let closed = affine_monomial_dual(&a, spec, ord).unwrap();
        ensure!(
            (closed != AffineDual::NotMonomial) == wdc,
            "closed form disagrees for A = {a:?}"
        );
    }
    Ok(())
}

/// `C_X(d)^⊥ = C_X(r0 - d - 1)` exactly, with the closed-form dual.
pub fn check_affine_rm(spec: &CartesianSpec<GaloisField>) -> Check {
    let ord = MonomialOrder::Grevlex;
    let v = spec.vanishing_ideal(ord).unwrap();
    let r0 = i64::from(v.r0());
    ensure!(
        r0 == i64::from(spec.r0()),
        "r0 = {r0} but Σ(e_i - 1) = {}",
        spec.r0()
    );
    for d in -1..=r0 {
        let c = EvaluationCode::reed_muller(&v, d).unwrap();
        let other = EvaluationCode::reed_muller(&v, r0 - d - 1).unwrap();
        ensure!(
            c.code().dual() == *other.code(),
            "C_X({d})^⊥ != C_X({})",
            r0 - d - 1
        );
        let closed = affine_rm_dual(d, spec, ord).unwrap();
        let closed: Vec<Poly> = closed.into_iter().map(|m| v.ring().monomial(m)).collect();
        let space: Vec<Poly> = v
            .ring()
            .monomials_up_to(d)
            .into_iter()
            .map(|m| v.ring().monomial(m))
            .collect();
        ensure!(
            same_space(&v, &algebraic_dual(&v, &space).unwrap(), &closed),
            "closed-form RM dual at d = {d}"
        );
    }
    Ok(())
}

pub fn check_self_dual(v: &Ideal) -> Result<LinearCode<GaloisField>, String> {
    let c = self_dual_code(v).map_err(|e| e.to_string())?;
    ensure!(
        2 * c.dim() == v.len(),
        "dimension {} for length {}",
        c.dim(),
        v.len()
    );
    ensure!(c == c.dual(), "C != C^⊥");
    Ok(c)
}

/// On a Cartesian set: criterion holds, `δ(C_X(r0-1)) = 2` and
/// `δ_X(d) >= r0 - d + 1` for `1 <= d < r0`.
pub fn check_cartesian_distances(spec: &CartesianSpec<GaloisField>) -> Check {
    let v = spec.vanishing_ideal(MonomialOrder::Grevlex).unwrap();
    let r0 = i64::from(v.r0());
    ensure!(
        duality_criterion(&v).unwrap().holds,
        "criterion fails on a Cartesian set"
    );
    if r0 >= 1 {
        let c = EvaluationCode::reed_muller(&v, r0 - 1).unwrap();
        ensure!(
            c.code().min_distance(BUDGET).unwrap() == 2,
            "δ(C_X(r0 - 1)) != 2"
        );
    }
    for d in 1..r0 {
        let c = EvaluationCode::reed_muller(&v, d).unwrap();
        let dist = c.code().min_distance(BUDGET).map_err(|e| e.to_string())?;
        ensure!(dist as i64 > r0 - d, "δ_X({d}) = {dist} < {}", r0 - d + 1);
    }
    Ok(())
}

/// `φ(t^c) = 0` iff some `c_i` is not a multiple of `d_i`, over exponents
/// up to twice the axis orders.
pub fn check_torus_kernel(spec: &CartesianSpec<GaloisField>) -> Check {
    let v = spec.vanishing_ideal(MonomialOrder::Grevlex).unwrap();
    let ring = v.ring();
    let k = ring.field();
    for m in ring.monomials_up_to(2 * spec.axes().iter().map(|a| a.order as i64).max().unwrap()) {
        let phi = v
            .evaluate(&ring.monomial(m.clone()))
            .into_iter()
            .fold(k.zero(), |a, x| k.add(a, x));
        let off = m
            .exps()
            .iter()
            .zip(spec.axes())
            .any(|(&c, ax)| c % ax.order != 0);
        ensure!(k.is_zero(phi) == off, "φ({m}) mismatch");
    }
    let a: Vec<Monomial> = v.footprint().monomials().to_vec();
    for sub in subsets(&a).take(64) {
        let l: Vec<Poly> = sub.iter().map(|m| ring.monomial(m.clone())).collect();
        let closed = torus_monomial_dual(&sub, spec, MonomialOrder::Grevlex).unwrap();
        let closed: Vec<Poly> = closed.into_iter().map(|m| ring.monomial(m)).collect();
        ensure!(
            same_space(&v, &algebraic_dual(&v, &l).unwrap(), &closed),
            "torus dual for {sub:?}"
        );
    }
    Ok(())
}

/// `Δ ∩ ker φ = Δ \ {t_1^{d_1} ... t_s^{d_s}}` when `p | e_i`.
pub fn check_affine_kernel(spec: &CartesianSpec<GaloisField>) -> Check {
    let v = spec.vanishing_ideal(MonomialOrder::Grevlex).unwrap();
    let ring = v.ring();
    let k = ring.field();
    let top = Monomial(spec.axes().iter().map(|a| a.order).collect());
    for m in v.footprint().monomials() {
        let phi = v
            .evaluate(&ring.monomial(m.clone()))
            .into_iter()
            .fold(k.zero(), |a, x| k.add(a, x));
        ensure!(k.is_zero(phi) == (*m != top), "φ({m}) mismatch");
    }
    Ok(())
}

/// Buchberger–Möller against Buchberger on independent generators.
pub fn check_bm_oracle(v: &Ideal) -> Check {
    let gb = vanishing_ideal_by_buchberger(v.points(), v.ring().order());
    ensure!(&gb == v.gb(), "Buchberger–Möller differs from Buchberger");
    Ok(())
}

/// Basis algorithm output size equals the rank of the coefficient matrix.
pub fn check_basis_rank(ring: &Ring, polys: &[Poly]) -> Check {
    let basis = linalg::basis_algorithm(ring, polys);
    let mut ms: Vec<Monomial> = polys.iter().flat_map(|f| f.monomials().cloned()).collect();
    ms.sort_by(|a, b| ring.cmp(a, b));
    ms.dedup();
    let rows = polys.iter().map(|f| ring.coords(f, &ms)).collect();
    let rank = linalg::rank(ring.field(), &Matrix::from_rows(ms.len(), rows).unwrap());
    ensure!(
        basis.len() == rank,
        "basis size {} vs rank {rank}",
        basis.len()
    );
    let lms: Vec<&Monomial> = basis
        .iter()
        .map(|f| f.leading_monomial().unwrap())
        .collect();
    ensure!(
        lms.windows(2).all(|w| ring.cmp(w[0], w[1]).is_gt()),
        "initial monomials not strictly decreasing"
    );
    ensure!(
        basis
            .iter()
            .all(|f| f.leading_coeff() == Some(ring.field().one())),
        "basis not monic"
    );
    Ok(())
}

/// Indicator degrees against exhaustive search.
pub fn check_indicator_search(v: &Ideal) -> Check {
    let degs = indicator_functions(v).degrees();
    for (i, &d) in degs.iter().enumerate() {
        let brute = min_indicator_degree(v, i);
        ensure!(
            d == brute,
            "deg f_{} = {d} but the least indicator degree is {brute}",
            i + 1
        );
    }
    Ok(())
}

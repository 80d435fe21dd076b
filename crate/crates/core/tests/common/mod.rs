//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

pub mod checks;

use evcodes::evalcode::{canonical_basis, standard_function_space, LinearCode};
use evcodes::groebner::GroebnerBasis;
use evcodes::linalg::{self, Matrix};
use evcodes::{
    Field, FiniteField, GaloisField, Gf, Monomial, MonomialOrder, PointSet, Poly, Ring,
    VanishingIdeal,
};

pub type Ideal = VanishingIdeal<GaloisField>;

pub fn gf(p: u64) -> GaloisField {
    GaloisField::prime(p).unwrap()
}

pub fn points(k: &GaloisField, pts: &[&[i64]]) -> PointSet<GaloisField> {
    PointSet::new(
        k.clone(),
        pts.iter()
            .map(|p| p.iter().map(|&c| k.from_int(c)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn ideal(k: &GaloisField, pts: &[&[i64]]) -> Ideal {
    VanishingIdeal::new(points(k, pts), MonomialOrder::Grevlex).unwrap()
}

pub fn polys(ring: &Ring, texts: &[&str]) -> Vec<Poly> {
    texts.iter().map(|t| ring.parse(t).unwrap()).collect()
}

pub fn monos(ring: &Ring, texts: &[&str]) -> Vec<Monomial> {
    texts
        .iter()
        .map(|t| {
            let f = ring.parse(t).unwrap();
            assert_eq!(f.len(), 1, "{t} is not a monomial");
            f.leading_monomial().unwrap().clone()
        })
        .collect()
}

pub fn show(ring: &Ring, fs: &[Poly]) -> Vec<String> {
    fs.iter().map(|f| ring.format(f)).collect()
}

pub fn show_monos(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(Monomial::to_string).collect()
}

pub fn elems(k: &GaloisField, v: &[i64]) -> Vec<Gf> {
    v.iter().map(|&c| k.from_int(c)).collect()
}

pub fn code(k: &GaloisField, rows: &[&[i64]]) -> LinearCode<GaloisField> {
    let n = rows[0].len();
    LinearCode::new(k.clone(), n, rows.iter().map(|r| elems(k, r)).collect()).unwrap()
}

/// Equality of two subspaces of `KΔ`.
pub fn same_space(v: &Ideal, a: &[Poly], b: &[Poly]) -> bool {
    let fp = v.footprint().monomials();
    canonical_basis(v.ring(), fp, a) == canonical_basis(v.ring(), fp, b)
}

/// `f = c g` for some nonzero scalar `c`.
pub fn projectively_equal(ring: &Ring, f: &Poly, g: &Poly) -> bool {
    match (ring.make_monic(f), ring.make_monic(g)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

pub fn all_points(k: &GaloisField, s: usize) -> Vec<Vec<Gf>> {
    let q = k.order() as usize;
    (0..q.pow(s as u32))
        .map(|mut n| {
            let mut p = vec![k.zero(); s];
            for c in p.iter_mut().rev() {
                *c = k.element((n % q) as u32);
                n /= q;
            }
            p
        })
        .collect()
}

/// `I(X)` by Buchberger on the field equations `t_j^q - t_j` together with
/// the indicator `Π_j (1 - (t_j - c_j)^(q-1))` of every point `c` of `K^s`
/// outside `X`. Any `f` vanishing on `X` reduces modulo the field equations
/// to a combination of those indicators, so these generate `I(X)`.
pub fn vanishing_ideal_by_buchberger(
    x: &PointSet<GaloisField>,
    order: MonomialOrder,
) -> GroebnerBasis<GaloisField> {
    let k = x.field();
    let s = x.dim();
    let q = u64::from(k.order());
    let ring = Ring::new(k.clone(), s, order);
    let mut gens: Vec<Poly> = (0..s)
        .map(|j| ring.sub(&ring.monomial(pow_var(s, j, q as u32)), &ring.var(j)))
        .collect();
    for c in all_points(k, s) {
        if x.points().contains(&c) {
            continue;
        }
        let mut ind = ring.one();
        for (j, &cj) in c.iter().enumerate() {
            let lin = ring.sub(&ring.var(j), &ring.constant(cj));
            let mut pw = ring.one();
            for _ in 0..q - 1 {
                pw = ring.mul(&pw, &lin);
            }
            ind = ring.mul(&ind, &ring.sub(&ring.one(), &pw));
        }
        gens.push(ind);
    }
    GroebnerBasis::buchberger(&ring, &gens)
}

fn pow_var(s: usize, j: usize, e: u32) -> Monomial {
    let mut v = vec![0; s];
    v[j] = e;
    Monomial(v)
}

/// Basis of `L^⊥` from the linear system `φ(g f) = 0` for every `f` in the
/// standard function space, solved for the coordinates of `g` over `KΔ`.
pub fn algebraic_dual_direct(v: &Ideal, space: &[Poly]) -> Vec<Poly> {
    let ring = v.ring();
    let k = ring.field();
    let fp = v.footprint().monomials();
    let sfs = standard_function_space(v, space).unwrap();
    let rows: Vec<Vec<Gf>> = sfs
        .iter()
        .map(|f| {
            fp.iter()
                .map(|m| {
                    let prod = ring.mul(&ring.monomial(m.clone()), f);
                    v.points()
                        .points()
                        .iter()
                        .fold(k.zero(), |a, p| k.add(a, ring.eval(&prod, p).unwrap()))
                })
                .collect()
        })
        .collect();
    let mat = Matrix::from_rows(fp.len(), rows).unwrap();
    linalg::null_space(k, &mat)
        .iter()
        .map(|c| ring.from_coords(fp, c))
        .collect()
}

/// Least degree of a nonzero `g` in `KΔ` with `g(P_j) = 0` for `j != i` and
/// `g(P_i) != 0`, by enumerating every coefficient vector on
/// `Δ ∩ S_{≤D}` for increasing `D`.
pub fn min_indicator_degree(v: &Ideal, i: usize) -> u32 {
    let ring = v.ring();
    let k = ring.field();
    let q = k.order() as usize;
    let pts = v.points().points();
    for d in 0..=v.r0() {
        let basis: Vec<Monomial> = v
            .footprint()
            .monomials()
            .iter()
            .filter(|m| m.degree() <= d)
            .cloned()
            .collect();
        let vals: Vec<Vec<Gf>> = basis
            .iter()
            .map(|m| pts.iter().map(|p| ring.eval_monomial(m, p)).collect())
            .collect();
        let total = q.pow(basis.len() as u32);
        for n in 1..total {
            let mut n = n;
            let mut ev = vec![k.zero(); pts.len()];
            for row in &vals {
                let c = k.element((n % q) as u32);
                n /= q;
                for (e, &x) in ev.iter_mut().zip(row) {
                    *e = k.add(*e, k.mul(c, x));
                }
            }
            if !k.is_zero(ev[i]) && ev.iter().enumerate().all(|(j, &e)| j == i || k.is_zero(e)) {
                return d;
            }
        }
    }
    unreachable!("the standard indicator function has degree at most r0")
}

/// `α((I : p_i) / I)`: least degree of a standard polynomial `g != 0` with
/// `g (t_j - p_{i,j}) ∈ I` for every `j`, searched over all of `KΔ`.
pub fn colon_alpha(v: &Ideal, i: usize) -> u32 {
    let ring = v.ring();
    let k = ring.field();
    let q = k.order() as usize;
    let fp = v.footprint().monomials();
    let p = v.points().point(i).to_vec();
    let lins: Vec<Poly> = (0..ring.nvars())
        .map(|j| ring.sub(&ring.var(j), &ring.constant(p[j])))
        .collect();
    let mut best = u32::MAX;
    for n in 1..q.pow(fp.len() as u32) {
        let mut n = n;
        let coords: Vec<Gf> = (0..fp.len())
            .map(|_| {
                let c = k.element((n % q) as u32);
                n /= q;
                c
            })
            .collect();
        let g = ring.from_coords(fp, &coords);
        let deg = g.total_degree().unwrap();
        if deg < best && lins.iter().all(|l| v.gb().contains(&ring.mul(&g, l))) {
            best = deg;
        }
    }
    best
}

/// Brute-force minimum distance by enumerating all `q^k` messages, kept
/// independent of the library's projective, parallel scan.
pub fn min_distance_naive(c: &LinearCode<GaloisField>) -> usize {
    let k = c.field();
    let q = k.order() as usize;
    let rows = c.generator().to_rows();
    let mut best = usize::MAX;
    for n in 1..q.pow(rows.len() as u32) {
        let mut n = n;
        let mut w = vec![k.zero(); c.length()];
        for r in &rows {
            let a = k.element((n % q) as u32);
            n /= q;
            for (x, &y) in w.iter_mut().zip(r) {
                *x = k.add(*x, k.mul(a, y));
            }
        }
        best = best.min(w.iter().filter(|x| !k.is_zero(**x)).count());
    }
    best
}

/// All subsets of `items`, as index masks.
pub fn subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, x)| x.clone())
            .collect()
    })
}

pub fn one_var_full(k: &GaloisField) -> Ideal {
    let x = PointSet::new(
        k.clone(),
        k.elements().into_iter().map(|e| vec![e]).collect(),
    )
    .unwrap();
    VanishingIdeal::new(x, MonomialOrder::Grevlex).unwrap()
}

//! Reduced Gröbner bases, division with remainder, footprints and vanishing
//! ideals of finite point sets.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::points::PointSet;
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// A reduced Gröbner basis, monic and sorted ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<Polynomial<F::Elem>>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order() == other.ring.order() && self.gens == other.gens
    }
}

/// Result of multivariate division.
#[derive(Clone, Debug)]
pub struct Division<E> {
    pub quotients: Vec<Polynomial<E>>,
    pub remainder: Polynomial<E>,
}

impl<F: Field> GroebnerBasis<F> {
    /// Buchberger's algorithm with the normal selection strategy (pair with
    /// the smallest lcm first), followed by minimization and inter-reduction.
    pub fn buchberger(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>]) -> Self {
        let k = ring.field();
        let mut g: Vec<Polynomial<F::Elem>> = gens
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| ring.make_monic(f).unwrap())
            .collect();
        let mut pairs: Vec<(usize, usize)> = (0..g.len())
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        while !pairs.is_empty() {
            let lcm = |&(i, j): &(usize, usize)| {
                g[i].leading_monomial()
                    .unwrap()
                    .lcm(g[j].leading_monomial().unwrap())
            };
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    ring.cmp(&lcm(&pairs[a]), &lcm(&pairs[b]))
                        .then(pairs[a].cmp(&pairs[b]))
                })
                .unwrap();
            let (i, j) = pairs.swap_remove(best);
            let (li, lj) = (
                g[i].leading_monomial().unwrap(),
                g[j].leading_monomial().unwrap(),
            );
            let l = li.lcm(lj);
            if l == li.mul(lj) {
                // Coprime leading monomials reduce to zero.
                continue;
            }
            let s = ring.sub(
                &ring.add_multiple(&ring.zero(), k.one(), &l.div(li).unwrap(), &g[i]),
                &ring.add_multiple(&ring.zero(), k.one(), &l.div(lj).unwrap(), &g[j]),
            );
            let r = reduce_by(ring, &s, &g);
            if !r.is_zero() {
                let n = g.len();
                g.push(ring.make_monic(&r).unwrap());
                pairs.extend((0..n).map(|i| (i, n)));
            }
        }
        Self::reduce(ring, g)
    }

    /// Minimizes and inter-reduces a Gröbner basis of monic polynomials.
    fn reduce(ring: &PolyRing<F>, mut g: Vec<Polynomial<F::Elem>>) -> Self {
        g.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let mut minimal: Vec<Polynomial<F::Elem>> = Vec::new();
        for f in g {
            let lm = f.leading_monomial().unwrap();
            if !minimal
                .iter()
                .any(|h| h.leading_monomial().unwrap().divides(lm))
            {
                minimal.push(f);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<_> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let f = &minimal[i];
            let lt = ring.term(f.leading_monomial().unwrap().clone(), ring.field().one());
            out.push(ring.add(&lt, &reduce_by(ring, &f.tail(), &others)));
        }
        GroebnerBasis {
            ring: ring.clone(),
            gens: out,
        }
    }

    /// Wraps polynomials already known to form a reduced basis.
    pub(crate) fn from_reduced(ring: &PolyRing<F>, gens: Vec<Polynomial<F::Elem>>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F::Elem>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Division by the generators in stored order.
    pub fn divide(&self, f: &Polynomial<F::Elem>) -> Division<F::Elem> {
        let ring = &self.ring;
        let k = ring.field();
        let mut quotients = vec![ring.zero(); self.gens.len()];
        let mut rem = Vec::new();
        let mut p = f.clone();
        while let Some((lm, lc)) = p.terms().first().cloned() {
            match self
                .gens
                .iter()
                .position(|g| g.leading_monomial().unwrap().divides(&lm))
            {
                Some(i) => {
                    let g = &self.gens[i];
                    let c = k.div(lc, g.leading_coeff().unwrap()).unwrap();
                    let m = lm.div(g.leading_monomial().unwrap()).unwrap();
                    quotients[i] = ring.add(&quotients[i], &ring.term(m.clone(), c));
                    p = ring.add_multiple(&p, k.neg(c), &m, g);
                }
                None => {
                    rem.push((lm, lc));
                    p = p.tail();
                }
            }
        }
        Division {
            quotients,
            remainder: ring.from_terms(rem),
        }
    }

    pub fn remainder(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        reduce_by(&self.ring, f, &self.gens)
    }

    pub fn contains(&self, f: &Polynomial<F::Elem>) -> bool {
        self.remainder(f).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let ring = &self.ring;
        let k = ring.field();
        for j in 0..self.gens.len() {
            for i in 0..j {
                let (gi, gj) = (&self.gens[i], &self.gens[j]);
                let (li, lj) = (
                    gi.leading_monomial().unwrap(),
                    gj.leading_monomial().unwrap(),
                );
                let l = li.lcm(lj);
                let a = k.inv(gi.leading_coeff().unwrap()).unwrap();
                let b = k.inv(gj.leading_coeff().unwrap()).unwrap();
                let s = ring.sub(
                    &ring.add_multiple(&ring.zero(), a, &l.div(li).unwrap(), gi),
                    &ring.add_multiple(&ring.zero(), b, &l.div(lj).unwrap(), gj),
                );
                if !self.remainder(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when no term of any generator is divisible by the leading
    /// monomial of another, and all generators are monic.
    pub fn is_reduced(&self) -> bool {
        let k = self.ring.field();
        let lms = self.leading_monomials();
        self.gens.iter().enumerate().all(|(i, g)| {
            g.leading_coeff() == Some(k.one())
                && g.monomials()
                    .all(|m| lms.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }

    pub fn footprint(&self) -> Result<Footprint> {
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        let mut bounds = Vec::with_capacity(n);
        for i in 0..n {
            let b = lms
                .iter()
                .filter(|m| m.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|m| m.exps()[i])
                .min()
                .ok_or(Error::InfiniteFootprint(i + 1))?;
            bounds.push(b);
        }
        let mut out = Vec::new();
        if bounds.iter().all(|&b| b > 0) {
            let mut cur = vec![0u32; n];
            'outer: loop {
                let m = Monomial(cur.clone());
                if !lms.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
                let mut i = n;
                loop {
                    if i == 0 {
                        break 'outer;
                    }
                    i -= 1;
                    cur[i] += 1;
                    if cur[i] < bounds[i] {
                        continue 'outer;
                    }
                    cur[i] = 0;
                }
            }
        }
        Ok(Footprint::new(self.ring.order(), n, out))
    }
}

/// Full reduction of `f` by `g`, divisors tried in list order.
fn reduce_by<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    g: &[Polynomial<F::Elem>],
) -> Polynomial<F::Elem> {
    let k = ring.field();
    let mut rem = Vec::new();
    let mut p = f.clone();
    while let Some((lm, lc)) = p.terms().first().cloned() {
        match g
            .iter()
            .find(|h| h.leading_monomial().unwrap().divides(&lm))
        {
            Some(h) => {
                let c = k.div(lc, h.leading_coeff().unwrap()).unwrap();
                let m = lm.div(h.leading_monomial().unwrap()).unwrap();
                p = ring.add_multiple(&p, k.neg(c), &m, h);
            }
            None => {
                rem.push((lm, lc));
                p = p.tail();
            }
        }
    }
    ring.from_terms(rem)
}

/// Standard monomials, sorted ascending under the monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Footprint {
    order: MonomialOrder,
    nvars: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Footprint {
    pub fn new(order: MonomialOrder, nvars: usize, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort_by(|a, b| order.cmp(a, b));
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Footprint {
            order,
            nvars,
            monomials,
            index,
        }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Largest degree of a standard monomial (the regularity index `r0` for
    /// a vanishing ideal).
    pub fn max_degree(&self) -> u32 {
        self.monomials
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// The ≺-largest standard monomial.
    pub fn top(&self) -> Option<&Monomial> {
        self.monomials.last()
    }

    /// `|Δ ∩ S_d|` for `d = 0..=max_degree`.
    pub fn degree_counts(&self) -> Vec<usize> {
        let mut h = vec![0; self.max_degree() as usize + 1];
        for m in &self.monomials {
            h[m.degree() as usize] += 1;
        }
        h
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.monomials.iter().all(|m| {
            (0..self.nvars).all(|i| {
                m.exps()[i] == 0 || {
                    let mut e = m.exps().to_vec();
                    e[i] -= 1;
                    self.contains(&Monomial(e))
                }
            })
        })
    }
}

struct Keyed(MonomialOrder, Monomial);

impl PartialEq for Keyed {
    fn eq(&self, other: &Self) -> bool {
        self.1 == other.1
    }
}

impl Eq for Keyed {}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&self.1, &other.1)
    }
}

/// Evaluation vector, pivot, and the combination of standard monomials
/// producing it.
type ReducedRow<E> = (Vec<E>, usize, Vec<E>);

/// Buchberger–Möller: walks border monomials in increasing order, reducing
/// their evaluation vectors against those of the standard monomials found so
/// far. A dependency yields a basis element, otherwise the monomial is standard.
pub fn buchberger_moller<F: Field>(
    ring: &PolyRing<F>,
    points: &PointSet<F>,
) -> Result<(GroebnerBasis<F>, Footprint)> {
    if points.dim() != ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            found: points.dim(),
        });
    }
    let k = ring.field();
    let order = ring.order();
    let n = ring.nvars();
    let m = points.len();
    let mut rows: Vec<ReducedRow<F::Elem>> = Vec::new();
    let mut standard: Vec<Monomial> = Vec::new();
    let mut gens = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut border = BTreeSet::new();
    border.insert(Keyed(order, Monomial::one(n)));
    while let Some(Keyed(_, t)) = border.pop_first() {
        if lms.iter().any(|l| l.divides(&t)) {
            continue;
        }
        let mut v: Vec<F::Elem> = points
            .points()
            .iter()
            .map(|p| ring.eval_monomial(&t, p))
            .collect();
        let mut combo = vec![k.zero(); standard.len() + 1];
        combo[standard.len()] = k.one();
        for (row, piv, rc) in &rows {
            let c = v[*piv];
            if k.is_zero(c) {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = k.sub(*x, k.mul(c, y));
            }
            for (x, &y) in combo.iter_mut().zip(rc) {
                *x = k.sub(*x, k.mul(c, y));
            }
        }
        match v.iter().position(|&x| !k.is_zero(x)) {
            None => {
                let mut terms: Vec<_> = standard
                    .iter()
                    .cloned()
                    .zip(combo.iter().copied())
                    .collect();
                terms.push((t.clone(), k.one()));
                gens.push(ring.from_terms(terms));
                lms.push(t);
            }
            Some(piv) => {
                let inv = k.inv(v[piv]).unwrap();
                v.iter_mut().for_each(|x| *x = k.mul(*x, inv));
                combo.iter_mut().for_each(|x| *x = k.mul(*x, inv));
                rows.push((v, piv, combo));
                for i in 0..n {
                    border.insert(Keyed(order, t.mul(&Monomial::var(n, i))));
                }
                standard.push(t);
                debug_assert!(standard.len() <= m);
            }
        }
    }
    Ok((
        GroebnerBasis::from_reduced(ring, gens),
        Footprint::new(order, n, standard),
    ))
}

/// The vanishing ideal `I(X)` with its reduced Gröbner basis, footprint and
/// the evaluation matrix `M_ev` (rows: points, columns: standard monomials).
#[derive(Debug)]
pub struct VanishingIdeal<F: Field> {
    points: PointSet<F>,
    ring: PolyRing<F>,
    gb: GroebnerBasis<F>,
    footprint: Footprint,
    mev: OnceLock<Matrix<F::Elem>>,
    mev_inv: OnceLock<Matrix<F::Elem>>,
}

impl<F: Field> VanishingIdeal<F> {
    pub fn new(points: PointSet<F>, order: MonomialOrder) -> Result<Self> {
        let ring = PolyRing::new(points.field().clone(), points.dim(), order);
        let (gb, footprint) = buchberger_moller(&ring, &points)?;
        Ok(VanishingIdeal {
            points,
            ring,
            gb,
            footprint,
            mev: OnceLock::new(),
            mev_inv: OnceLock::new(),
        })
    }

    pub fn points(&self) -> &PointSet<F> {
        &self.points
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn gb(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    pub fn footprint(&self) -> &Footprint {
        &self.footprint
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Regularity index of the affine Hilbert function.
    pub fn r0(&self) -> u32 {
        self.footprint.max_degree()
    }

    pub fn evaluate(&self, f: &Polynomial<F::Elem>) -> Vec<F::Elem> {
        self.points
            .points()
            .iter()
            .map(|p| self.ring.eval_unchecked(f, p))
            .collect()
    }

    pub fn evaluation_matrix(&self) -> &Matrix<F::Elem> {
        self.mev.get_or_init(|| {
            let rows = self
                .points
                .points()
                .iter()
                .map(|p| {
                    self.footprint
                        .monomials()
                        .iter()
                        .map(|m| self.ring.eval_monomial(m, p))
                        .collect()
                })
                .collect();
            Matrix::from_rows(self.footprint.len(), rows).unwrap()
        })
    }

    /// `M_ev^{-1}`; column `i` holds the coefficients of the standard
    /// indicator function of the `i`-th point.
    pub fn evaluation_inverse(&self) -> &Matrix<F::Elem> {
        self.mev_inv.get_or_init(|| {
            linalg::inverse(self.field(), self.evaluation_matrix())
                .expect("evaluation on the footprint is bijective")
        })
    }

    /// The unique element of `KΔ` taking the given values on the points.
    pub fn interpolate(&self, values: &[F::Elem]) -> Result<Polynomial<F::Elem>> {
        if values.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: values.len(),
            });
        }
        let coords = linalg::mat_vec(self.field(), self.evaluation_inverse(), values);
        Ok(self.ring.from_coords(self.footprint.monomials(), &coords))
    }

    /// Coordinates of a polynomial over the footprint after reduction.
    pub fn standard_coords(&self, f: &Polynomial<F::Elem>) -> Vec<F::Elem> {
        self.ring
            .coords(&self.gb.remainder(f), self.footprint.monomials())
    }
}

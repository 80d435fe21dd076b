//! Scalar fields.
//!
//! A field is a runtime context object (the order and modulus of `GF(p^v)` are
//! data, not types) that performs arithmetic on small `Copy` element handles.
//! Everything above this module is generic over [`Field`]; code constructions
//! additionally need [`FiniteField`].

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Upper bound on the field order.
pub const MAX_ORDER: u64 = 1 << 16;

pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;
    /// Image of an integer under the canonical ring map `Z -> K`.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    fn format_elem(&self, a: Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

pub trait FiniteField: Field {
    fn characteristic(&self) -> u32;
    fn degree(&self) -> u32;
    fn order(&self) -> u32;
    /// Element with the given index in `0..q`; index 0 is zero, 1 is one.
    fn element(&self, index: u32) -> Self::Elem;
    fn index(&self, a: Self::Elem) -> u32;
    fn primitive_element(&self) -> Self::Elem;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    /// The cyclic subgroup of `K*` of order `d`, listed as `1, h, h^2, ...`
    /// with `h = g^((q-1)/d)` for the fixed primitive element `g`.
    fn subgroup(&self, d: u32) -> Result<Vec<Self::Elem>> {
        let n = self.order() - 1;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::SubgroupOrder { d, order: n });
        }
        let h = self.pow(self.primitive_element(), u64::from(n / d));
        let mut out = Vec::with_capacity(d as usize);
        let mut x = self.one();
        for _ in 0..d {
            out.push(x);
            x = self.mul(x, h);
        }
        Ok(out)
    }

    /// Square root in characteristic two, `x -> x^(q/2)`.
    fn sqrt_char2(&self, a: Self::Elem) -> Result<Self::Elem> {
        let p = self.characteristic();
        if p != 2 {
            return Err(Error::OddCharacteristic(p));
        }
        Ok(self.pow(a, u64::from(self.order() / 2)))
    }
}

/// Element of a [`GaloisField`]: the index `sum c_i p^i` of the coefficient
/// vector `(c_0, ..., c_{v-1})` in the polynomial basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gf(pub u32);

/// `GF(p^v)` realised as `GF(p)[x]/(m(x))` with log/antilog tables.
#[derive(Clone)]
pub struct GaloisField {
    t: Arc<Tables>,
}

struct Tables {
    p: u32,
    v: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    /// `exp[k] = g^k`, doubled in length so log sums need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.v == other.t.v && self.t.modulus == other.t.modulus
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.v == 1 {
            write!(f, "GF({})", self.t.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.t.p, self.t.v, self.t.modulus)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo the monic `m`, coefficients low to high.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (c * mi) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let v = m.len() - 1;
    if v <= 1 {
        return true;
    }
    // Trial division by every monic polynomial of degree 1..=v/2.
    for k in 1..=v / 2 {
        let count = (p as u64).pow(k as u32);
        for enc in 0..count {
            let mut f = Vec::with_capacity(k + 1);
            let mut e = enc;
            for _ in 0..k {
                f.push((e % p as u64) as u32);
                e /= p as u64;
            }
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The first monic irreducible of degree `v` when the lower coefficients
/// `c_{v-1}, ..., c_0` are compared lexicographically from the top.
fn default_modulus(p: u32, v: u32) -> Vec<u32> {
    let count = (p as u64).pow(v);
    for enc in 0..count {
        let mut m = Vec::with_capacity(v as usize + 1);
        let mut e = enc;
        for _ in 0..v {
            m.push((e % p as u64) as u32);
            e /= p as u64;
        }
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl GaloisField {
    /// Builds `GF(p^v)`. Without an explicit modulus, `v > 1` uses the
    /// smallest monic irreducible (see `default_modulus`).
    pub fn new(p: u64, v: u32, irreducible: Option<&[i64]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if v == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p.checked_pow(v).filter(|&q| q <= MAX_ORDER);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge(p.saturating_pow(v))),
        };
        let p = p as u32;
        let modulus = match irreducible {
            Some(c) => {
                let m: Vec<u32> = c.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect();
                if m.len() != v as usize + 1 || m[v as usize] != 1 || !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus(v));
                }
                m
            }
            None if v == 1 => vec![0, 1],
            None => default_modulus(p, v),
        };
        let mut t = Tables {
            p,
            v,
            q,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        t.generator = (1..q)
            .find(|&g| t.slow_order_is_full(g))
            .expect("the multiplicative group is cyclic");
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for k in 0..n {
            exp[k] = x;
            exp[k + n] = x;
            log[x as usize] = k as u32;
            x = t.slow_mul(x, t.generator);
        }
        t.exp = exp;
        t.log = log;
        Ok(GaloisField { t: Arc::new(t) })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Modulus coefficients, low to high, ending in 1.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    pub fn coeffs(&self, a: Gf) -> Vec<u32> {
        self.t.digits(a.0)
    }

    pub fn from_coeffs(&self, c: &[i64]) -> Result<Gf> {
        if c.len() > self.t.v as usize {
            return Err(Error::InvalidElement(format!("{c:?}")));
        }
        let p = self.t.p as i64;
        let mut idx = 0u32;
        for &x in c.iter().rev() {
            idx = idx * self.t.p + x.rem_euclid(p) as u32;
        }
        Ok(Gf(idx))
    }
}

impl Tables {
    fn digits(&self, mut i: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.v as usize);
        for _ in 0..self.v {
            d.push(i % self.p);
            i /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * self.v as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let r = poly_rem(&prod, &self.modulus, self.p);
        let mut r = r;
        r.resize(self.v as usize, 0);
        self.undigits(&r)
    }

    fn slow_pow(&self, a: u32, mut e: u32) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn slow_order_is_full(&self, g: u32) -> bool {
        let n = self.q - 1;
        if n == 1 {
            return g == 1;
        }
        if self.slow_pow(g, n) != 1 {
            return false;
        }
        prime_factors(n)
            .into_iter()
            .all(|r| self.slow_pow(g, n / r) != 1)
    }
}

impl Field for GaloisField {
    type Elem = Gf;

    fn zero(&self) -> Gf {
        Gf(0)
    }

    fn one(&self) -> Gf {
        Gf(1)
    }

    fn add(&self, a: Gf, b: Gf) -> Gf {
        let t = &*self.t;
        if t.p == 2 {
            return Gf(a.0 ^ b.0);
        }
        if t.v == 1 {
            return Gf((a.0 + b.0) % t.p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % t.p + y % t.p) % t.p) * place;
            x /= t.p;
            y /= t.p;
            place *= t.p;
        }
        Gf(out)
    }

    fn neg(&self, a: Gf) -> Gf {
        let t = &*self.t;
        if t.p == 2 {
            return a;
        }
        if t.v == 1 {
            return Gf((t.p - a.0) % t.p);
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        while x > 0 {
            out += ((t.p - x % t.p) % t.p) * place;
            x /= t.p;
            place *= t.p;
        }
        Gf(out)
    }

    fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf(0);
        }
        let t = &*self.t;
        Gf(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    fn inv(&self, a: Gf) -> Result<Gf> {
        if a.0 == 0 {
            return Err(Error::InverseOfZero);
        }
        let t = &*self.t;
        let n = t.q - 1;
        Ok(Gf(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
    }

    fn pow(&self, a: Gf, e: u64) -> Gf {
        if e == 0 {
            return Gf(1);
        }
        if a.0 == 0 {
            return Gf(0);
        }
        let t = &*self.t;
        let n = u64::from(t.q - 1);
        let k = (u64::from(t.log[a.0 as usize]) * (e % n)) % n;
        Gf(t.exp[k as usize])
    }

    fn from_int(&self, n: i64) -> Gf {
        Gf(n.rem_euclid(self.t.p as i64) as u32)
    }

    fn format_elem(&self, a: Gf) -> String {
        let t = &*self.t;
        if t.v == 1 {
            let c = a.0 as i64;
            let p = t.p as i64;
            if t.p > 2 && c > p / 2 {
                (c - p).to_string()
            } else {
                c.to_string()
            }
        } else {
            let d: Vec<String> = t.digits(a.0).iter().map(u32::to_string).collect();
            format!("[{}]", d.join(","))
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Gf> {
        let s = s.trim();
        let bad = || Error::InvalidElement(s.to_string());
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let c: Vec<i64> = inner
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad())?;
            return self.from_coeffs(&c).map_err(|_| bad());
        }
        s.parse::<i64>()
            .map(|n| self.from_int(n))
            .map_err(|_| bad())
    }
}

impl FiniteField for GaloisField {
    fn characteristic(&self) -> u32 {
        self.t.p
    }

    fn degree(&self) -> u32 {
        self.t.v
    }

    fn order(&self) -> u32 {
        self.t.q
    }

    fn element(&self, index: u32) -> Gf {
        debug_assert!(index < self.t.q);
        Gf(index)
    }

    fn index(&self, a: Gf) -> u32 {
        a.0
    }

    fn primitive_element(&self) -> Gf {
        Gf(self.t.generator)
    }
}

/// Residue of a [`PrimeField`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fp(pub u32);

/// `Z/pZ` with plain modular arithmetic and no tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_ORDER {
            return Err(Error::FieldTooLarge(p));
        }
        Ok(PrimeField { p: p as u32 })
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp(0)
    }

    fn one(&self) -> Fp {
        Fp(1 % self.p)
    }

    fn add(&self, a: Fp, b: Fp) -> Fp {
        Fp((a.0 + b.0) % self.p)
    }

    fn neg(&self, a: Fp) -> Fp {
        Fp((self.p - a.0) % self.p)
    }

    fn mul(&self, a: Fp, b: Fp) -> Fp {
        Fp(((u64::from(a.0) * u64::from(b.0)) % u64::from(self.p)) as u32)
    }

    fn inv(&self, a: Fp) -> Result<Fp> {
        if a.0 == 0 {
            return Err(Error::InverseOfZero);
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(a.0));
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let k = r0 / r1;
            (r0, r1) = (r1, r0 - k * r1);
            (s0, s1) = (s1, s0 - k * s1);
        }
        Ok(Fp(s0.rem_euclid(i64::from(self.p)) as u32))
    }

    fn from_int(&self, n: i64) -> Fp {
        Fp(n.rem_euclid(i64::from(self.p)) as u32)
    }

    fn format_elem(&self, a: Fp) -> String {
        a.0.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<Fp> {
        s.trim()
            .parse::<i64>()
            .map(|n| self.from_int(n))
            .map_err(|_| Error::InvalidElement(s.to_string()))
    }
}

impl FiniteField for PrimeField {
    fn characteristic(&self) -> u32 {
        self.p
    }

    fn degree(&self) -> u32 {
        1
    }

    fn order(&self) -> u32 {
        self.p
    }

    fn element(&self, index: u32) -> Fp {
        Fp(index)
    }

    fn index(&self, a: Fp) -> u32 {
        a.0
    }

    fn primitive_element(&self) -> Fp {
        let n = self.p - 1;
        let factors = prime_factors(n);
        (1..self.p)
            .map(Fp)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow(g, u64::from(n / r)) != self.one())
            })
            .expect("the multiplicative group is cyclic")
    }
}

/// The rationals with `i64` numerators and denominators.
///
/// Overflow is not checked; intended for small exact computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Ratio<i64>;

    fn zero(&self) -> Ratio<i64> {
        Ratio::zero()
    }

    fn one(&self) -> Ratio<i64> {
        Ratio::one()
    }

    fn add(&self, a: Ratio<i64>, b: Ratio<i64>) -> Ratio<i64> {
        a + b
    }

    fn neg(&self, a: Ratio<i64>) -> Ratio<i64> {
        -a
    }

    fn mul(&self, a: Ratio<i64>, b: Ratio<i64>) -> Ratio<i64> {
        a * b
    }

    fn inv(&self, a: Ratio<i64>) -> Result<Ratio<i64>> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(a.recip())
    }

    fn from_int(&self, n: i64) -> Ratio<i64> {
        Ratio::from_integer(n)
    }

    fn format_elem(&self, a: Ratio<i64>) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}", a.abs())
        } else {
            a.to_string()
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Ratio<i64>> {
        s.trim()
            .parse::<Ratio<i64>>()
            .map_err(|_| Error::InvalidElement(s.to_string()))
    }
}

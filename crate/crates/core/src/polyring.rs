//! Sparse multivariate polynomials `K[t1, ..., ts]` under a monomial order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Exponent vector of a monomial `t^c`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "t{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders with variable precedence `t1 > t2 > ... > ts`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Grlex,
    Lex,
}

impl MonomialOrder {
    pub fn is_graded(self) -> bool {
        !matches!(self, MonomialOrder::Lex)
    }

    /// Compares exponent vectors of equal length.
    pub fn cmp_exps(self, a: &[u32], b: &[u32]) -> Ordering {
        let lex = || {
            a.iter()
                .zip(b)
                .find(|(x, y)| x != y)
                .map_or(Ordering::Equal, |(x, y)| x.cmp(y))
        };
        match self {
            MonomialOrder::Lex => lex(),
            MonomialOrder::Grlex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(lex)
            }
            MonomialOrder::Grevlex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    // Smaller exponent in the last differing variable wins.
                    a.iter()
                        .zip(b)
                        .rev()
                        .find(|(x, y)| x != y)
                        .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
                })
            }
        }
    }

    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(&a.0, &b.0)
    }

    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "grlex" => Ok(MonomialOrder::Grlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => Err(Error::Parse(format!("unknown monomial order `{s}`"))),
        }
    }
}

/// A polynomial whose terms are stored strictly descending under the order
/// of the ring that built it, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<E> {
    nvars: usize,
    terms: Vec<(Monomial, E)>,
}

impl<E: Copy> Polynomial<E> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree among the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<E> {
        self.terms.first().map(|&(_, c)| c)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    /// The polynomial without its leading term.
    pub fn tail(&self) -> Polynomial<E> {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }
}

/// The polynomial ring `K[t1, ..., ts]` with a fixed monomial order.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, nvars: usize, order: MonomialOrder) -> Self {
        PolyRing {
            field,
            nvars,
            order,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Sorts monomials ascending under the ring order.
    pub fn sort_ascending(&self, ms: &mut [Monomial]) {
        ms.sort_by(|a, b| self.cmp(a, b));
    }

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial {
            nvars: self.nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.term(Monomial::one(self.nvars), c)
    }

    /// The variable `t_{i+1}`.
    pub fn var(&self, i: usize) -> Polynomial<F::Elem> {
        self.term(Monomial::var(self.nvars, i), self.field.one())
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F::Elem> {
        self.term(m, self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F::Elem> {
        debug_assert_eq!(m.nvars(), self.nvars);
        let terms = if self.field.is_zero(c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining repeats.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Polynomial<F::Elem> {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), self.nvars);
            let e = acc.entry(m).or_insert(self.field.zero());
            *e = self.field.add(*e, c);
        }
        self.collect(acc)
    }

    fn collect(&self, acc: HashMap<Monomial, F::Elem>) -> Polynomial<F::Elem> {
        let mut terms: Vec<_> = acc
            .into_iter()
            .filter(|(_, c)| !self.field.is_zero(*c))
            .collect();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Combination `sum c_i m_i` over the given monomial basis.
    pub fn from_coords(&self, basis: &[Monomial], coords: &[F::Elem]) -> Polynomial<F::Elem> {
        self.from_terms(basis.iter().cloned().zip(coords.iter().copied()))
    }

    pub fn coefficient(&self, f: &Polynomial<F::Elem>, m: &Monomial) -> F::Elem {
        f.terms
            .binary_search_by(|(t, _)| self.cmp(m, t))
            .map_or(self.field.zero(), |i| f.terms[i].1)
    }

    /// Coordinates of `f` over the given monomials (terms outside are ignored).
    pub fn coords(&self, f: &Polynomial<F::Elem>, basis: &[Monomial]) -> Vec<F::Elem> {
        basis.iter().map(|m| self.coefficient(f, m)).collect()
    }

    fn merge(
        &self,
        f: &Polynomial<F::Elem>,
        g: &Polynomial<F::Elem>,
        scale: F::Elem,
        shift: &Monomial,
    ) -> Polynomial<F::Elem> {
        // f + scale * shift * g, with both inputs already sorted.
        let k = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g
            .terms
            .iter()
            .map(|(m, c)| (m.mul(shift), k.mul(*c, scale)))
            .peekable();
        while i < f.terms.len() || gi.peek().is_some() {
            let ord = match (f.terms.get(i), gi.peek()) {
                (Some(a), Some(b)) => self.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let (m, c) = gi.next().unwrap();
                    let s = k.add(f.terms[i].1, c);
                    if !k.is_zero(s) {
                        out.push((m, s));
                    }
                    i += 1;
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(f, g, self.field.one(), &Monomial::one(self.nvars))
    }

    pub fn sub(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(
            f,
            g,
            self.field.neg(self.field.one()),
            &Monomial::one(self.nvars),
        )
    }

    /// `f + c * m * g`.
    pub fn add_multiple(
        &self,
        f: &Polynomial<F::Elem>,
        c: F::Elem,
        m: &Monomial,
        g: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return f.clone();
        }
        self.merge(f, g, c, m)
    }

    pub fn neg(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let terms = f
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.field.neg(*c)))
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, f: &Polynomial<F::Elem>, c: F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        let terms = f
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.field.mul(*a, c)))
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (a, x) in &f.terms {
            for (b, y) in &g.terms {
                let e = acc.entry(a.mul(b)).or_insert(self.field.zero());
                *e = self.field.add(*e, self.field.mul(*x, *y));
            }
        }
        self.collect(acc)
    }

    /// `in(f)` together with `lc(f)`.
    pub fn leading_term<'a>(&self, f: &'a Polynomial<F::Elem>) -> Result<(&'a Monomial, F::Elem)> {
        f.terms
            .first()
            .map(|(m, c)| (m, *c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn make_monic(&self, f: &Polynomial<F::Elem>) -> Result<Polynomial<F::Elem>> {
        let (_, c) = self.leading_term(f)?;
        Ok(self.scale(f, self.field.inv(c)?))
    }

    pub fn eval(&self, f: &Polynomial<F::Elem>, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        Ok(self.eval_unchecked(f, point))
    }

    pub(crate) fn eval_unchecked(&self, f: &Polynomial<F::Elem>, point: &[F::Elem]) -> F::Elem {
        let k = &self.field;
        f.terms.iter().fold(k.zero(), |acc, (m, c)| {
            k.add(acc, k.mul(*c, self.eval_monomial(m, point)))
        })
    }

    /// `t^c` at a point, with `0^0 = 1`.
    pub fn eval_monomial(&self, m: &Monomial, point: &[F::Elem]) -> F::Elem {
        let k = &self.field;
        m.0.iter().zip(point).fold(k.one(), |acc, (&e, &x)| {
            if e == 0 {
                acc
            } else {
                k.mul(acc, k.pow(x, u64::from(e)))
            }
        })
    }

    /// All monomials of total degree at most `d`, ascending; empty for `d < 0`.
    pub fn monomials_up_to(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let mut cur = vec![0u32; self.nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d as u32, &mut cur, &mut out);
        self.sort_ascending(&mut out);
        out
    }

    pub fn format(&self, f: &Polynomial<F::Elem>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let k = &self.field;
        let mut s = String::new();
        for (i, (m, c)) in f.terms.iter().enumerate() {
            let lit = k.format_elem(*c);
            let (neg, mag, unit) = match lit.strip_prefix('-') {
                Some(rest) => (true, rest.to_string(), k.neg(*c) == k.one()),
                None => (false, lit.clone(), *c == k.one()),
            };
            if neg {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            if m.is_one() {
                s.push_str(&mag);
            } else {
                if !unit {
                    s.push_str(&mag);
                    s.push('*');
                }
                s.push_str(&m.to_string());
            }
        }
        s
    }

    /// Parses the text form, e.g. `t2*t3^2 - t2`, `2t1t3+[1,1]*t2`.
    pub fn parse(&self, text: &str) -> Result<Polynomial<F::Elem>> {
        Parser {
            ring: self,
            s: text.as_bytes(),
            pos: 0,
            text,
        }
        .poly()
    }
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in `{}`", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = self.text;
        (self.pos > start).then(|| &text[start..self.pos])
    }

    fn poly(&mut self) -> Result<Polynomial<F::Elem>> {
        let ring = self.ring;
        let k = ring.field();
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return Err(self.err("empty polynomial")),
                Some(b'+') => {
                    self.pos += 1;
                    k.one()
                }
                Some(b'-') => {
                    self.pos += 1;
                    k.neg(k.one())
                }
                Some(_) if first => k.one(),
                Some(_) => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let (m, c) = self.term()?;
            terms.push((m, k.mul(sign, c)));
        }
        Ok(ring.from_terms(terms))
    }

    fn term(&mut self) -> Result<(Monomial, F::Elem)> {
        let k = self.ring.field();
        let n = self.ring.nvars();
        let mut exps = vec![0u32; n];
        let mut coeff = k.one();
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(b't') => {
                    self.pos += 1;
                    let idx: usize = self
                        .digits()
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| self.err("expected variable index"))?;
                    if idx == 0 || idx > n {
                        return Err(self.err(&format!("variable t{idx} outside t1..t{n}")));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self
                            .digits()
                            .and_then(|d| d.parse().ok())
                            .ok_or_else(|| self.err("expected exponent"))?;
                    }
                    exps[idx - 1] += e;
                }
                Some(b'[') => {
                    let start = self.pos;
                    while self.pos < self.s.len() && self.s[self.pos] != b']' {
                        self.pos += 1;
                    }
                    if self.pos == self.s.len() {
                        return Err(self.err("unterminated `[`"));
                    }
                    self.pos += 1;
                    coeff = k.mul(coeff, k.parse_elem(&self.text[start..self.pos])?);
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    self.digits();
                    if self.s.get(self.pos) == Some(&b'/') {
                        self.pos += 1;
                        if self.digits().is_none() {
                            return Err(self.err("expected denominator"));
                        }
                    }
                    coeff = k.mul(coeff, k.parse_elem(&self.text[start..self.pos])?);
                }
                _ => break,
            }
            factors += 1;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(b't' | b'[' | b'0'..=b'9')) {
                    return Err(self.err("expected factor after `*`"));
                }
            }
        }
        if factors == 0 {
            return Err(self.err("expected a term"));
        }
        Ok((Monomial(exps), coeff))
    }
}

//! Sparse exact polynomials in one variable (`UniPoly`) and two variables
//! (`BiPoly`) over arbitrary-precision rationals.
//!
//! Both types are immutable values: every operation returns a new
//! polynomial. No zero coefficient is ever stored, so structural equality is
//! polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-7"` or `"5/2"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::CoefficientParse(s.to_string());
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Exponent pair `x^x y^y`, ordered graded-lexicographically
/// (total degree first, then the power of `x`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(Rational::one(), 0, 0)
    }

    pub fn x() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, Monomial::new(i, j), c);
        BiPoly { terms }
    }

    /// Builds a polynomial from `(i, j, c)` triples; repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (i, j, c) in terms {
            add_into(&mut map, Monomial::new(i, j), c);
        }
        BiPoly { terms: map }
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        BiPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, rat(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(n)` if every term has degree `n`; `None` otherwise or for zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by `c x^i y^j`.
    pub fn mul_monomial(&self, c: &Rational, i: u32, j: u32) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.x + i, m.y + j), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: Var) -> BiPoly {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, shifted) = match var {
                Var::X if m.x > 0 => (m.x, Monomial::new(m.x - 1, m.y)),
                Var::Y if m.y > 0 => (m.y, Monomial::new(m.x, m.y - 1)),
                _ => continue,
            };
            add_into(&mut out, shifted, c * rat(e as i64));
        }
        BiPoly { terms: out }
    }

    /// Repeated partial derivative: `∂x^a ∂y^b`.
    pub fn derivative(&self, dx: u32, dy: u32) -> BiPoly {
        let mut p = self.clone();
        for _ in 0..dx {
            p = p.partial_derivative(Var::X);
        }
        for _ in 0..dy {
            p = p.partial_derivative(Var::Y);
        }
        p
    }

    pub fn swap_xy(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }

    pub fn is_xy_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| self.terms.get(&Monomial::new(m.y, m.x)) == Some(c))
    }

    /// Exact division by `y`, or `None` if some term has no factor of `y`.
    pub fn div_y(&self) -> Option<BiPoly> {
        if self.terms.keys().any(|m| m.y == 0) {
            return None;
        }
        Some(BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x, m.y - 1), c.clone()))
                .collect(),
        })
    }

    pub fn set_y_to_one(&self) -> UniPoly {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            add_into(&mut out, m.x, c.clone());
        }
        UniPoly { coeffs: out }
    }

    /// Largest monomial dividing every term, `(0, 0)` for zero.
    pub fn min_monomial(&self) -> Monomial {
        let mx = self.terms.keys().map(|m| m.x).min().unwrap_or(0);
        let my = self.terms.keys().map(|m| m.y).min().unwrap_or(0);
        Monomial::new(mx, my)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c
                * num_traits::pow(x.clone(), m.x as usize)
                * num_traits::pow(y.clone(), m.y as usize);
        }
        acc
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut terms, *m, c.clone());
        }
        BiPoly { terms }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut terms, *m, -c);
        }
        BiPoly { terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                add_into(&mut terms, Monomial::new(a.x + b.x, a.y + b.y), ca * cb);
            }
        }
        BiPoly { terms }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $f:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $f(self, rhs: $ty) -> $ty {
                $tr::$f(&self, &rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $f(self, rhs: &$ty) -> $ty {
                $tr::$f(&self, rhs)
            }
        }
    )*};
}

forward_owned!(BiPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::monomial(Rational::one(), 0)
    }

    pub fn x() -> Self {
        UniPoly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, i: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        add_into(&mut coeffs, i, c);
        UniPoly { coeffs }
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `x^i`.
    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = Rational>,
    {
        let mut map = BTreeMap::new();
        for (i, c) in coeffs.into_iter().enumerate() {
            add_into(&mut map, i as u32, c);
        }
        UniPoly { coeffs: map }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)))
    }

    pub fn from_sparse<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (i, c) in terms {
            add_into(&mut map, i, c);
        }
        UniPoly { coeffs: map }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, i: u32) -> Rational {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    /// Dense coefficient vector `f_0 ..= f_len-1`, zero-padded.
    pub fn dense(&self, len: usize) -> Vec<Rational> {
        (0..len as u32).map(|i| self.coeff(i)).collect()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn shift(&self, by: u32) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, c)| (i + by, c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .range(..=max_degree)
                .map(|(i, c)| (*i, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `x^n f(1/x)`.
    pub fn reciprocal(&self, n: u32) -> Result<UniPoly> {
        if let Some(d) = self.degree() {
            if d > n {
                return Err(Error::DegreeExceedsN { degree: d, n });
            }
        }
        Ok(UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, c)| (n - i, c.clone()))
                .collect(),
        })
    }

    /// `f_i = f_{n-i}` for all `i`; false when `deg f > n`.
    pub fn is_symmetric(&self, n: u32) -> bool {
        match self.reciprocal(n) {
            Ok(r) => r == *self,
            Err(_) => false,
        }
    }

    /// Exact quotient by `(1 - x)`; `None` if the division leaves a remainder.
    pub fn div_one_minus_x(&self) -> Option<UniPoly> {
        // f = (1 - x) q  =>  q_i = f_0 + ... + f_i, and the full sum must vanish.
        let Some(deg) = self.degree() else {
            return Some(UniPoly::zero());
        };
        let mut running = Rational::zero();
        let mut q = Vec::with_capacity(deg as usize);
        for i in 0..=deg {
            running += self.coeff(i);
            if i < deg {
                q.push(running.clone());
            }
        }
        running.is_zero().then(|| UniPoly::from_coeffs(q))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in &self.coeffs {
            acc += c * num_traits::pow(x.clone(), *i as usize);
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn first_negative(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(i, _)| *i)
    }

    /// `sum f_i x^i y^(d-i)`; terms with `i > d` are invalid and rejected.
    pub fn homogenize(&self, d: u32) -> Result<BiPoly> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::DegreeExceedsN { degree: deg, n: d });
            }
        }
        Ok(BiPoly::from_terms(
            self.coeffs.iter().map(|(i, c)| (*i, d - i, c.clone())),
        ))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        for (i, c) in &rhs.coeffs {
            add_into(&mut coeffs, *i, c.clone());
        }
        UniPoly { coeffs }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        for (i, c) in &rhs.coeffs {
            add_into(&mut coeffs, *i, -c);
        }
        UniPoly { coeffs }
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                add_into(&mut coeffs, a + b, ca * cb);
            }
        }
        UniPoly { coeffs }
    }
}

forward_owned!(UniPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    powers: &[(&str, u32)],
) -> fmt::Result {
    let abs = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let vars: Vec<String> = powers
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if vars.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{}", vars.join("*"))
    } else {
        write!(f, "{abs}*{}", vars.join("*"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.coeffs.iter().enumerate() {
            write_term(f, n == 0, c, &[("x", *i)])?;
        }
        Ok(())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            write_term(f, n == 0, c, &[("x", m.x), ("y", m.y)])?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// JSON: a list of {"i", "j", "num", "den"} records, coefficients as decimal
// strings. Univariate polynomials drop "j".
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct BiTermRecord {
    i: u32,
    j: u32,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct UniTermRecord {
    i: u32,
    num: String,
    den: String,
}

fn record_coeff<E: serde::de::Error>(num: &str, den: &str) -> std::result::Result<Rational, E> {
    let num: BigInt = num.parse().map_err(E::custom)?;
    let den: BigInt = den.parse().map_err(E::custom)?;
    if den.is_zero() {
        return Err(E::custom("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let recs: Vec<BiTermRecord> = self
            .terms
            .iter()
            .map(|(m, c)| BiTermRecord {
                i: m.x,
                j: m.y,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        recs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<BiTermRecord>::deserialize(d)?;
        let mut terms = Vec::with_capacity(recs.len());
        for r in recs {
            terms.push((r.i, r.j, record_coeff::<D::Error>(&r.num, &r.den)?));
        }
        Ok(BiPoly::from_terms(terms))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let recs: Vec<UniTermRecord> = self
            .coeffs
            .iter()
            .map(|(i, c)| UniTermRecord {
                i: *i,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        recs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<UniTermRecord>::deserialize(d)?;
        let mut terms = Vec::with_capacity(recs.len());
        for r in recs {
            terms.push((r.i, record_coeff::<D::Error>(&r.num, &r.den)?));
        }
        Ok(UniPoly::from_sparse(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(t: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    #[test]
    fn add_examples() {
        let xy = bi(&[(1, 1, 1)]);
        assert_eq!(&xy + &xy, bi(&[(1, 1, 2)]));
        assert!((&xy + &(-&xy)).is_zero());
        let sum = &bi(&[(1, 2, 1)]) + &bi(&[(2, 2, 1)]);
        assert_eq!(sum, bi(&[(1, 2, 1), (2, 2, 1)]));
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn mul_examples() {
        let xy = bi(&[(1, 1, 1)]);
        let x_plus_y = &BiPoly::x() + &BiPoly::y();
        assert_eq!(&xy * &x_plus_y, bi(&[(2, 1, 1), (1, 2, 1)]));
        assert_eq!(&xy * &BiPoly::one(), xy);
        assert!((&xy * &BiPoly::zero()).is_zero());
    }

    #[test]
    fn partial_derivative_examples() {
        assert_eq!(
            bi(&[(2, 1, 1)]).partial_derivative(Var::X),
            bi(&[(1, 1, 2)])
        );
        assert_eq!(
            bi(&[(1, 2, 1)]).partial_derivative(Var::Y),
            bi(&[(1, 1, 2)])
        );
        assert!(bi(&[(0, 3, 1)]).partial_derivative(Var::X).is_zero());
    }

    #[test]
    fn homogeneous_degree_examples() {
        assert_eq!(bi(&[(2, 1, 1), (1, 2, 1)]).homogeneous_degree(), Some(3));
        assert_eq!(bi(&[(1, 0, 1), (1, 1, 1)]).homogeneous_degree(), None);
        assert_eq!(BiPoly::zero().homogeneous_degree(), None);
        // xy^2 (y^3 + 12xy^2 + 15x^2y + 2x^3)
        let a212 = bi(&[(1, 5, 1), (2, 4, 12), (3, 3, 15), (4, 2, 2)]);
        assert_eq!(a212.homogeneous_degree(), Some(6));
    }

    #[test]
    fn set_y_to_one_examples() {
        // xy^2(y + 2x)
        let a12 = bi(&[(1, 3, 1), (2, 2, 2)]);
        assert_eq!(a12.set_y_to_one(), UniPoly::from_ints(&[0, 1, 2]));
        assert_eq!(BiPoly::x().set_y_to_one(), UniPoly::x());
        let a11 = bi(&[(2, 1, 1), (1, 2, 1)]);
        assert_eq!(a11.set_y_to_one(), UniPoly::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn reciprocal_examples() {
        let f = UniPoly::from_ints(&[0, 1, 2]);
        assert_eq!(f.reciprocal(3).unwrap(), UniPoly::from_ints(&[0, 2, 1]));
        let s = UniPoly::from_ints(&[1, 4, 1]);
        assert_eq!(s.reciprocal(2).unwrap(), s);
        let cube = UniPoly::from_ints(&[0, 0, 0, 1]);
        assert_eq!(
            cube.reciprocal(2),
            Err(Error::DegreeExceedsN { degree: 3, n: 2 })
        );
    }

    #[test]
    fn is_symmetric_examples() {
        assert!(UniPoly::from_ints(&[0, 1, 4, 1]).is_symmetric(4));
        assert!(!UniPoly::from_ints(&[0, 1, 2]).is_symmetric(3));
        assert!(UniPoly::zero().is_symmetric(0));
        assert!(UniPoly::zero().is_symmetric(7));
        assert!(!UniPoly::from_ints(&[0, 0, 0, 1]).is_symmetric(2));
    }

    #[test]
    fn division_by_one_minus_x() {
        let f = UniPoly::from_ints(&[0, 1, 10, 0, -10, -1]);
        assert_eq!(
            f.div_one_minus_x().unwrap(),
            UniPoly::from_ints(&[0, 1, 11, 11, 1])
        );
        assert!(UniPoly::from_ints(&[1, 1]).div_one_minus_x().is_none());
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(BiPoly::zero().total_degree(), None);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("12").unwrap(), rat(12));
        assert_eq!(
            parse_rational(" -3/6 ").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn display_is_readable() {
        let p = bi(&[(1, 2, 1), (2, 1, -3)]);
        assert_eq!(p.to_string(), "x*y^2 - 3*x^2*y");
        assert_eq!(UniPoly::from_ints(&[1, 0, 2]).to_string(), "1 + 2*x^2");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_schema() {
        let p = BiPoly::from_terms([(1, 2, Rational::new(3.into(), 2.into()))]);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"[{"i":1,"j":2,"num":"3","den":"2"}]"#);
        let u = UniPoly::from_ints(&[0, 5]);
        assert_eq!(
            serde_json::to_string(&u).unwrap(),
            r#"[{"i":1,"num":"5","den":"1"}]"#
        );
        // Coefficients beyond 64 bits survive.
        let big = BiPoly::monomial(
            Rational::from_integer("123456789012345678901234567890".parse().unwrap()),
            0,
            0,
        );
        let back: BiPoly = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn serialization_order_is_graded_lex() {
        let p = bi(&[(3, 0, 1), (0, 1, 1), (1, 1, 1), (0, 3, 1)]);
        let order: Vec<(u32, u32)> = p.terms().map(|(m, _)| (m.x, m.y)).collect();
        assert_eq!(order, vec![(0, 1), (1, 1), (0, 3), (3, 0)]);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0u32..5, 0u32..5, arb_rational()), 0..7).prop_map(BiPoly::from_terms)
    }

    fn arb_unipoly(max_deg: u32) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((0..=max_deg, arb_rational()), 0..6).prop_map(UniPoly::from_sparse)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_bipoly(), q in arb_bipoly(), r in arb_bipoly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn reciprocal_is_an_involution(f in arb_unipoly(6), extra in 0u32..3) {
            let n = 6 + extra;
            let back = f.reciprocal(n).unwrap().reciprocal(n).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn set_y_to_one_is_a_ring_homomorphism(p in arb_bipoly(), q in arb_bipoly()) {
            prop_assert_eq!((&p * &q).set_y_to_one(), &p.set_y_to_one() * &q.set_y_to_one());
            prop_assert_eq!((&p + &q).set_y_to_one(), &p.set_y_to_one() + &q.set_y_to_one());
        }

        #[test]
        fn leibniz_rule(p in arb_bipoly(), q in arb_bipoly()) {
            for var in [Var::X, Var::Y] {
                let lhs = (&p * &q).partial_derivative(var);
                let rhs = &(&p.partial_derivative(var) * &q) + &(&p * &q.partial_derivative(var));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn json_round_trip(p in arb_bipoly(), f in arb_unipoly(8)) {
            let back: BiPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
            let back: UniPoly = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}

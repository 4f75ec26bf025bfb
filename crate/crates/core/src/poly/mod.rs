//! Univariate polynomials with exact rational coefficients.
//!
//! A [`Poly`] is stored either in the binomial basis (`Σ c_i·C(X, i)`), which is
//! what exact-color counting produces, or in the monomial basis. Equality and
//! evaluation are basis independent.

mod interp;

pub use interp::{lagrange_interpolate, NewtonInterpolator};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsMismatch { n: usize, sum: usize },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error("unknown basis {0:?}")]
    BadBasis(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Binomial,
    Monomial,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Binomial => "binomial",
            Basis::Monomial => "monomial",
        })
    }
}

impl FromStr for Basis {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        match s {
            "binomial" => Ok(Basis::Binomial),
            "monomial" => Ok(Basis::Monomial),
            other => Err(PolyError::BadBasis(other.to_string())),
        }
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn int_to_rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::BadRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone)]
pub struct Poly {
    basis: Basis,
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(basis: Basis, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { basis, coeffs }
    }

    pub fn monomial(coeffs: Vec<BigRational>) -> Self {
        Self::new(Basis::Monomial, coeffs)
    }

    pub fn binomial(coeffs: Vec<BigRational>) -> Self {
        Self::new(Basis::Binomial, coeffs)
    }

    pub fn from_ints(basis: Basis, coeffs: &[i64]) -> Self {
        Self::new(basis, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self::monomial(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::from_ints(Basis::Monomial, &[0, 1])
    }

    /// `X - a`
    pub fn x_minus(a: &BigRational) -> Self {
        Self::monomial(vec![-a.clone(), BigRational::one()])
    }

    /// `C(X, i)` as a binomial-basis polynomial.
    pub fn choose(i: usize) -> Self {
        let mut c = vec![BigRational::zero(); i + 1];
        c[i] = BigRational::one();
        Self::binomial(c)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial. The same in both bases.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn to_monomial(&self) -> Poly {
        match self.basis {
            Basis::Monomial => self.clone(),
            Basis::Binomial => {
                // Σ c_i · X_(i) / i!
                let mut out = vec![BigRational::zero(); self.coeffs.len()];
                let mut ff = vec![BigRational::one()];
                let mut fact = BigRational::one();
                for (i, c) in self.coeffs.iter().enumerate() {
                    if i > 0 {
                        ff = mul_linear(&ff, &rat(i as i64 - 1));
                        fact *= rat(i as i64);
                    }
                    if !c.is_zero() {
                        let scale = c / &fact;
                        for (o, f) in out.iter_mut().zip(&ff) {
                            *o += &scale * f;
                        }
                    }
                }
                Poly::monomial(out)
            }
        }
    }

    pub fn to_binomial(&self) -> Poly {
        match self.basis {
            Basis::Binomial => self.clone(),
            Basis::Monomial => {
                // c_i = Δ^i p(0)
                let d = self.coeffs.len();
                let mut diffs: Vec<BigRational> = (0..d).map(|k| self.eval(&rat(k as i64))).collect();
                let mut out = Vec::with_capacity(d);
                for _ in 0..d {
                    out.push(diffs[0].clone());
                    diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
                }
                Poly::binomial(out)
            }
        }
    }

    pub fn in_basis(&self, basis: Basis) -> Poly {
        match basis {
            Basis::Monomial => self.to_monomial(),
            Basis::Binomial => self.to_binomial(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        match self.basis {
            Basis::Monomial => self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c),
            Basis::Binomial => {
                let mut acc = BigRational::zero();
                let mut term = BigRational::one();
                for (i, c) in self.coeffs.iter().enumerate() {
                    if i > 0 {
                        term = term * (x - rat(i as i64 - 1)) / rat(i as i64);
                    }
                    acc += c * &term;
                }
                acc
            }
        }
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&rat(x))
    }

    pub fn scale(&self, s: &BigRational) -> Poly {
        Poly::new(self.basis, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `p(X + a)`
    pub fn shift(&self, a: &BigRational) -> Poly {
        let m = self.to_monomial();
        let xa = Poly::monomial(vec![a.clone(), BigRational::one()]);
        m.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * &xa) + &Poly::constant(c.clone()))
    }

    /// Are all coefficients integers?
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Non-negative integer coefficients in the current basis.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }
}

fn mul_linear(p: &[BigRational], a: &BigRational) -> Vec<BigRational> {
    // p · (X - a)
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * a;
    }
    out
}

/// `X_(n) = X(X-1)…(X-n+1)` in the monomial basis.
pub fn falling_factorial(n: usize) -> Poly {
    let mut c = vec![BigRational::one()];
    for i in 0..n {
        c = mul_linear(&c, &rat(i as i64));
    }
    Poly::monomial(c)
}

/// `C(n, k)` for rational `n`, via `n(n-1)…(n-k+1)/k!`.
pub fn binomial(n: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (n - rat(i as i64)) / rat(i as i64 + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n! / (p_1! p_2! …)`; the parts must sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigInt, PolyError> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(PolyError::PartsMismatch { n, sum });
    }
    Ok(parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p)))
}

fn add_coeffs(a: &[BigRational], b: &[BigRational], sign: bool) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            if sign {
                x + y
            } else {
                x - y
            }
        })
        .collect()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        if self.basis == rhs.basis {
            Poly::new(self.basis, add_coeffs(&self.coeffs, &rhs.coeffs, true))
        } else {
            Poly::monomial(add_coeffs(&self.to_monomial().coeffs, &rhs.to_monomial().coeffs, true))
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        if self.basis == rhs.basis {
            Poly::new(self.basis, add_coeffs(&self.coeffs, &rhs.coeffs, false))
        } else {
            Poly::monomial(add_coeffs(&self.to_monomial().coeffs, &rhs.to_monomial().coeffs, false))
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.basis, self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Products are formed and returned in the monomial basis.
impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let (a, b) = (self.to_monomial(), rhs.to_monomial());
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Poly::monomial(out)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        if self.basis == other.basis {
            self.coeffs == other.coeffs
        } else {
            self.to_monomial().coeffs == other.to_monomial().coeffs
        }
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}](", self.basis)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

/// Human-readable form in the monomial basis, highest degree first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.to_monomial();
        if m.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in m.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({})", format_rational(&mag))?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    basis: Basis,
    coeffs: Vec<String>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyWire { basis: self.basis, coeffs: self.coeffs.iter().map(format_rational).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = PolyWire::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Poly::new(wire.basis, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn evaluation() {
        let p = Poly::from_ints(Basis::Monomial, &[0, -1, 1]);
        assert_eq!(p.eval_int(3), rat(6));
        assert_eq!(Poly::choose(2).eval(&q(7, 2)), q(35, 8));
        // chromatic polynomial of K_3 is X_(3)
        assert_eq!(falling_factorial(3).eval_int(-1), rat(-6));
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(0), Poly::constant(rat(1)));
        assert_eq!(falling_factorial(2), Poly::from_ints(Basis::Monomial, &[0, -1, 1]));
        assert_eq!(falling_factorial(3).eval_int(5), rat(60));
    }

    #[test]
    fn ring_operations() {
        let x = Poly::x();
        assert_eq!(&x * &x, Poly::from_ints(Basis::Monomial, &[0, 0, 1]));
        assert_eq!(Poly::choose(1), x);
        let prod = &falling_factorial(2) * &falling_factorial(1);
        assert_eq!(prod.eval_int(3), rat(18));
        assert!((&x - &x).is_zero());
        assert_eq!(&Poly::choose(2) + &Poly::choose(2), Poly::from_ints(Basis::Monomial, &[0, -1, 1]));
    }

    #[test]
    fn basis_conversion() {
        let k3 = Poly::from_ints(Basis::Binomial, &[0, 0, 0, 6]);
        assert_eq!(k3.to_monomial().coeffs(), Poly::from_ints(Basis::Monomial, &[0, 2, -3, 1]).coeffs());
        assert_eq!(k3.to_monomial().to_binomial().coeffs(), k3.coeffs());
        assert_eq!(Poly::x().to_binomial().coeffs(), &[rat(0), rat(1)]);
    }

    #[test]
    fn binomials_and_multinomials() {
        assert_eq!(multinomial(6, &[2, 2, 2]).unwrap(), BigInt::from(90));
        assert_eq!(binomial(&rat(-1), 3), rat(-1));
        assert_eq!(binomial(&rat(5), 2), rat(10));
        assert_eq!(multinomial(5, &[2, 2]), Err(PolyError::PartsMismatch { n: 5, sum: 4 }));
    }

    #[test]
    fn shifting() {
        // (X + 1)^2
        let sq = &Poly::x() * &Poly::x();
        assert_eq!(sq.shift(&rat(1)), Poly::from_ints(Basis::Monomial, &[1, 2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(Basis::Binomial, &[0, 0, 0, 6]).to_string(), "X^3 - 3X^2 + 2X");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::constant(q(-1, 2)).to_string(), "-(1/2)");
    }

    #[test]
    fn json_wire_format() {
        let p = Poly::binomial(vec![rat(0), q(1, 3), rat(-2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"basis":"binomial","coeffs":["0","1/3","-2"]}"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back.coeffs(), p.coeffs());
        assert!(serde_json::from_str::<Poly>(r#"{"basis":"binomial","coeffs":["1/0"]}"#).is_err());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("x").is_err());
    }
}

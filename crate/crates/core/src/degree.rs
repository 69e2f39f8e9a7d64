//! Polynomials in the formal curve degree `d`.
//!
//! A [`DegreeCoeff`] is a polynomial in `d` with a common positive integer
//! denominator. Ring arithmetic never produces a denominator; one appears only
//! when a count is divided by the order of a symmetric group, and the result is
//! then required to be integer-valued at every integer `d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Element of `Q[d]` stored as a `Z[d]` numerator over a positive denominator.
///
/// Canonical form: no zero numerator coefficients, denominator positive, and
/// the gcd of the numerator content with the denominator is one. The zero
/// polynomial has denominator one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeCoeff {
    num: BTreeMap<u32, BigInt>,
    den: BigInt,
}

impl DegreeCoeff {
    pub fn zero() -> Self {
        DegreeCoeff {
            num: BTreeMap::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The formal degree symbol `d`.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * d^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let c = c.into();
        let mut num = BTreeMap::new();
        if !c.is_zero() {
            num.insert(exp, c);
        }
        DegreeCoeff {
            num,
            den: BigInt::one(),
        }
    }

    /// Builds `d - k`, a convenience for factored closed forms.
    pub fn d_minus(k: i64) -> Self {
        Self::var() - Self::constant(k)
    }

    /// Builds from ascending integer coefficients `[c0, c1, ...]` over `den`.
    pub fn from_coeffs(coeffs: &[i64], den: i64) -> Self {
        let num = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (i as u32, BigInt::from(*c)))
            .collect();
        Self::normalized(num, BigInt::from(den))
    }

    fn normalized(mut num: BTreeMap<u32, BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        num.retain(|_, c| !c.is_zero());
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in num.values_mut() {
                *c = -std::mem::take(c);
            }
        }
        let g = num.values().fold(den.clone(), |g, c| g.gcd(c));
        if !g.is_one() {
            for c in num.values_mut() {
                *c /= &g;
            }
            den /= &g;
        }
        DegreeCoeff { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.num.keys().all(|&e| e == 0)
    }

    /// The value as an integer, when this is an integral constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_constant() && self.den.is_one() {
            Some(self.num.get(&0).cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Numerator coefficients, ascending in the exponent of `d`.
    pub fn numerator_terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.num.iter().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `d^exp` as an exact rational.
    pub fn coeff(&self, exp: u32) -> BigRational {
        match self.num.get(&exp) {
            Some(c) => BigRational::new(c.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    /// Polynomial degree in `d`; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.num.keys().next_back().copied()
    }

    pub fn eval(&self, d: &BigInt) -> BigRational {
        let acc: BigInt = self.num.iter().map(|(&e, c)| c * pow(d, e)).sum();
        BigRational::new(acc, self.den.clone())
    }

    /// Evaluates at an integer degree, returning `None` if the value is not integral.
    pub fn eval_integer(&self, d: i64) -> Option<BigInt> {
        let v = self.eval(&BigInt::from(d));
        v.is_integer().then(|| v.to_integer())
    }

    /// Substitutes an integer for `d`, producing a constant.
    pub fn at(&self, d: i64) -> DegreeCoeff {
        let v = self.eval(&BigInt::from(d));
        Self::normalized(BTreeMap::from([(0, v.numer().clone())]), v.denom().clone())
    }

    /// True when the polynomial takes integer values at every integer `d`.
    ///
    /// A polynomial of degree `n` is integer-valued iff it is integral at
    /// `n + 1` consecutive integers.
    pub fn is_integer_valued(&self) -> bool {
        if self.den.is_one() {
            return true;
        }
        let n = self.degree().unwrap_or(0) as i64;
        (0..=n).all(|d| self.eval_integer(d).is_some())
    }

    /// Divides by a nonzero integer, requiring the quotient to stay integer-valued.
    pub fn div_exact(&self, divisor: i64, what: &str) -> Result<DegreeCoeff> {
        assert!(divisor != 0, "division by zero");
        let q = Self::normalized(self.num.clone(), &self.den * BigInt::from(divisor));
        if q.is_integer_valued() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision {
                what: what.to_string(),
                value: self.to_string(),
                divisor: divisor.to_string(),
            })
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> DegreeCoeff {
        let k = k.into();
        let num = self.num.iter().map(|(e, c)| (*e, c * &k)).collect();
        Self::normalized(num, self.den.clone())
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        if self.den == other.den {
            let mut num = self.num.clone();
            for (e, c) in &other.num {
                let slot = num.entry(*e).or_default();
                if sign > 0 {
                    *slot += c;
                } else {
                    *slot -= c;
                }
            }
            return Self::normalized(num, self.den.clone());
        }
        let mut num: BTreeMap<u32, BigInt> =
            self.num.iter().map(|(e, c)| (*e, c * &other.den)).collect();
        for (e, c) in &other.num {
            let slot = num.entry(*e).or_default();
            let t = c * &self.den;
            if sign > 0 {
                *slot += t;
            } else {
                *slot -= t;
            }
        }
        Self::normalized(num, &self.den * &other.den)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut num: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.num {
            for (eb, cb) in &other.num {
                *num.entry(ea + eb).or_default() += ca * cb;
            }
        }
        Self::normalized(num, &self.den * &other.den)
    }
}

fn pow(base: &BigInt, exp: u32) -> BigInt {
    num_traits::pow(base.clone(), exp as usize)
}

impl Default for DegreeCoeff {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for DegreeCoeff {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for DegreeCoeff {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&DegreeCoeff> for &DegreeCoeff {
            type Output = DegreeCoeff;
            fn $method(self, rhs: &DegreeCoeff) -> DegreeCoeff {
                let f: fn(&DegreeCoeff, &DegreeCoeff) -> DegreeCoeff = $body;
                f(self, rhs)
            }
        }
        impl $trait<DegreeCoeff> for DegreeCoeff {
            type Output = DegreeCoeff;
            fn $method(self, rhs: DegreeCoeff) -> DegreeCoeff {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&DegreeCoeff> for DegreeCoeff {
            type Output = DegreeCoeff;
            fn $method(self, rhs: &DegreeCoeff) -> DegreeCoeff {
                (&self).$method(rhs)
            }
        }
        impl $trait<DegreeCoeff> for &DegreeCoeff {
            type Output = DegreeCoeff;
            fn $method(self, rhs: DegreeCoeff) -> DegreeCoeff {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.combine(b, 1));
forward_binop!(Sub, sub, |a, b| a.combine(b, -1));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl AddAssign<&DegreeCoeff> for DegreeCoeff {
    fn add_assign(&mut self, rhs: &DegreeCoeff) {
        *self = self.combine(rhs, 1);
    }
}

impl Neg for DegreeCoeff {
    type Output = DegreeCoeff;
    fn neg(self) -> DegreeCoeff {
        self.scale(-1)
    }
}

impl Neg for &DegreeCoeff {
    type Output = DegreeCoeff;
    fn neg(self) -> DegreeCoeff {
        self.scale(-1)
    }
}

impl fmt::Display for DegreeCoeff {
    /// Canonical form: descending powers of `d`, explicit signs, e.g.
    /// `9*d^3 - 27*d^2 - d + 30`; a denominator is written `(...)/k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut body = String::new();
        for (i, (&e, c)) in self.num.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => body.push('-'),
                (0, false) => {}
                (_, true) => body.push_str(" - "),
                (_, false) => body.push_str(" + "),
            }
            let mag = c.abs();
            match e {
                0 => body.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        body.push_str(&mag.to_string());
                        body.push('*');
                    }
                    body.push('d');
                    if e > 1 {
                        body.push('^');
                        body.push_str(&e.to_string());
                    }
                }
            }
        }
        if self.den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({})/{}", body, self.den)
        }
    }
}

impl fmt::Debug for DegreeCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeCoeff({self})")
    }
}

/// Failure to parse a polynomial string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial `{0}`")]
pub struct ParseDegreeCoeffError(pub String);

impl FromStr for DegreeCoeff {
    type Err = ParseDegreeCoeffError;

    /// Parses the canonical form written by `Display`. Whitespace is
    /// insignificant and terms may come in any order.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseDegreeCoeffError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, den) = match compact.strip_prefix('(') {
            Some(rest) => {
                let close = rest.rfind(")/").ok_or_else(err)?;
                let den: BigInt = rest[close + 2..].parse().map_err(|_| err())?;
                if den.is_zero() {
                    return Err(err());
                }
                (rest[..close].to_string(), den)
            }
            None => (compact, BigInt::one()),
        };
        if body.is_empty() {
            return Err(err());
        }
        let mut num: BTreeMap<u32, BigInt> = BTreeMap::new();
        let bytes = body.as_bytes();
        let mut start = 0;
        let mut idx = 1;
        let mut terms = Vec::new();
        while idx <= bytes.len() {
            if idx == bytes.len() || bytes[idx] == b'+' || bytes[idx] == b'-' {
                terms.push(&body[start..idx]);
                start = idx;
            }
            idx += 1;
        }
        for term in terms {
            let (neg, t) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if t.is_empty() {
                return Err(err());
            }
            let (coeff, exp) = match t.find('d') {
                None => (t.parse::<BigInt>().map_err(|_| err())?, 0),
                Some(pos) => {
                    let coeff = match &t[..pos] {
                        "" => BigInt::one(),
                        c => c
                            .strip_suffix('*')
                            .ok_or_else(err)?
                            .parse::<BigInt>()
                            .map_err(|_| err())?,
                    };
                    let exp = match &t[pos + 1..] {
                        "" => 1,
                        e => e
                            .strip_prefix('^')
                            .ok_or_else(err)?
                            .parse::<u32>()
                            .map_err(|_| err())?,
                    };
                    (coeff, exp)
                }
            };
            *num.entry(exp).or_default() += if neg { -coeff } else { coeff };
        }
        Ok(Self::normalized(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DegreeCoeff {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_display() {
        let d = DegreeCoeff::var();
        let x = d.clone() * &d * &d * DegreeCoeff::constant(9) - (d.clone() * &d).scale(27) - d
            + DegreeCoeff::constant(30);
        assert_eq!(x.to_string(), "9*d^3 - 27*d^2 - d + 30");
        assert_eq!(DegreeCoeff::zero().to_string(), "0");
        assert_eq!(DegreeCoeff::constant(-5).to_string(), "-5");
        assert_eq!((-DegreeCoeff::var()).to_string(), "-d");
    }

    #[test]
    fn parse_matches_display() {
        for s in [
            "9*d^3 - 27*d^2 - d + 30",
            "(9*d^6 - 54*d^5 + 9*d^4 + 423*d^3 - 458*d^2 - 829*d + 1050)/2",
            "-d",
            "0",
            "d^2 - 1",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("30 - d"), p("-d + 30"));
        assert!("d^".parse::<DegreeCoeff>().is_err());
        assert!("(d)/0".parse::<DegreeCoeff>().is_err());
        assert!("".parse::<DegreeCoeff>().is_err());
    }

    #[test]
    fn normalization_reduces_content() {
        let x = DegreeCoeff::from_coeffs(&[4, 2], 2);
        assert_eq!(x, p("d + 2"));
        assert!(x.denominator().is_one());
        assert_eq!(DegreeCoeff::from_coeffs(&[3], -6), p("(-1)/2"));
    }

    #[test]
    fn exact_division() {
        // d(d-1) is always even.
        let x = DegreeCoeff::var() * DegreeCoeff::d_minus(1);
        let half = x.div_exact(2, "pairs").unwrap();
        assert_eq!(half.to_string(), "(d^2 - d)/2");
        assert_eq!(half.eval_integer(5), Some(BigInt::from(10)));
        assert!(DegreeCoeff::var().div_exact(2, "odd").is_err());
        assert!(DegreeCoeff::constant(7).div_exact(7, "seven").is_ok());
    }

    #[test]
    fn evaluation_and_substitution() {
        let x = p("3*d^2 - 6*d + 3");
        assert_eq!(x.eval_integer(4), Some(BigInt::from(27)));
        assert_eq!(x.at(4), DegreeCoeff::constant(27));
        assert_eq!(x.degree(), Some(2));
        assert_eq!(DegreeCoeff::zero().degree(), None);
        assert_eq!(x.at(1).as_integer(), Some(BigInt::zero()));
    }
}

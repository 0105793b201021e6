//! Exact scalars: Laurent polynomials in `s = q^{1/2}` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum c_e s^e` with `c_e` rational, stored without zero terms.
///
/// `q` is `s^2`, so every coefficient that appears in the skein and quantum group
/// relations (`q^{-1/2}`, `-q^2 - q^{-2}`, `q - q^{-3}`, ...) is a value of this type.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigRational>,
}

fn exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow in HalfLaurent")
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::s_pow(0)
    }

    /// `s^e`.
    pub fn s_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// `q^e = s^{2e}`.
    pub fn q_pow(e: i64) -> Self {
        Self::s_pow(e.checked_mul(2).expect("exponent overflow in HalfLaurent"))
    }

    pub fn monomial(coeff: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e, coeff);
        }
        Self { terms }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    /// Builds `sum c s^e` from `(e, c)` pairs with small integer coefficients.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lowest and highest exponent, if nonzero.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    /// The rational constant, if this is a constant (including zero).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (exp_add(*e, k), c.clone()))
                .collect(),
        }
    }

    /// Inverse of a monomial `c s^e`; `None` for anything else.
    pub fn inverse_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.recip(), e.checked_neg()?))
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `s = s0`.
    pub fn specialize(&self, s0: &BigRational) -> Result<BigRational> {
        if s0.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        Ok(self.eval_nonzero(s0))
    }

    pub(crate) fn eval_nonzero(&self, s0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(s0, *e);
        }
        acc
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Add<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&HalfLaurent> for HalfLaurent {
    fn sub_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl Mul<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(exp_add(*e1, *e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

impl std::iter::Sum for HalfLaurent {
    fn sum<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        let mut acc = HalfLaurent::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl std::iter::Product for HalfLaurent {
    fn product<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        let mut acc = HalfLaurent::one();
        for x in iter {
            acc = &acc * &x;
        }
        acc
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for HalfLaurent {
    /// Highest power of `s` first, e.g. `-s^4 - s^-4` or `3/2*s^5 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match *e {
                0 => None,
                1 => Some("s".to_string()),
                e => Some(format!("s^{e}")),
            };
            match var {
                None => write!(f, "{}", fmt_rational(&mag))?,
                Some(v) if mag.is_one() => write!(f, "{v}")?,
                Some(v) => write!(f, "{}*{v}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

impl FromStr for HalfLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::expr::parse_scalar(s)
    }
}

/// A specialization point `s0` for rank computations: a rational other than `0, 1, -1`.
///
/// Such a point is never a root of unity, so ranks computed there bound the generic
/// rank from below.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Specialization(BigRational);

impl Specialization {
    pub fn new(s0: BigRational) -> Result<Self> {
        if s0.is_zero() || s0.abs().is_one() {
            return Err(Error::InvalidSpecialization(fmt_rational(&s0)));
        }
        Ok(Self(s0))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn eval(&self, x: &HalfLaurent) -> BigRational {
        x.eval_nonzero(&self.0)
    }

    /// The default pair `7/5`, `11/7`.
    pub fn defaults() -> Vec<Self> {
        vec![
            Self(BigRational::new(7.into(), 5.into())),
            Self(BigRational::new(11.into(), 7.into())),
        ]
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.0))
    }
}

impl FromStr for Specialization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let parsed = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad_point(t))?;
                let d: BigInt = d.trim().parse().map_err(|_| bad_point(t))?;
                if d.is_zero() {
                    return Err(bad_point(t));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad_point(t))?),
        };
        Self::new(parsed)
    }
}

fn bad_point(t: &str) -> Error {
    Error::InvalidSpecialization(t.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn s_times_s_is_q() {
        let s = HalfLaurent::s_pow(1);
        assert_eq!(&s * &s, HalfLaurent::q_pow(1));
    }

    #[test]
    fn loop_value_squared() {
        // (-q^2 - q^-2)^2 = q^4 + 2 + q^-4, expanded by hand
        let delta = HalfLaurent::from_terms([(4, -1), (-4, -1)]);
        let sq = &delta * &delta;
        assert_eq!(sq, HalfLaurent::from_terms([(8, 1), (0, 2), (-8, 1)]));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = HalfLaurent::from_terms([(3, 2), (-1, -5)]);
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn specialize_examples() {
        let delta = HalfLaurent::from_terms([(4, -1), (-4, -1)]);
        assert_eq!(delta.specialize(&rat(1, 1)).unwrap(), rat(-2, 1));
        let s = HalfLaurent::s_pow(1);
        assert_eq!(s.specialize(&rat(7, 5)).unwrap(), rat(7, 5));
        let x = HalfLaurent::from_terms([(2, 1), (-6, -1)]);
        assert_eq!(x.specialize(&rat(2, 1)).unwrap(), rat(255, 64));
    }

    #[test]
    fn zero_point_rejected() {
        let s = HalfLaurent::s_pow(1);
        assert_eq!(
            s.specialize(&BigRational::zero()),
            Err(Error::ZeroSpecialization)
        );
        assert!(Specialization::new(rat(1, 1)).is_err());
        assert!(Specialization::new(rat(-1, 1)).is_err());
        assert!("0".parse::<Specialization>().is_err());
        assert_eq!(
            "7/5".parse::<Specialization>().unwrap().value(),
            &rat(7, 5)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(HalfLaurent::from_terms([(4, -1), (-4, -1)]).to_string(), "-s^4 - s^-4");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        assert_eq!(HalfLaurent::s_pow(1).to_string(), "s");
        let x = HalfLaurent::monomial(rat(-3, 2), -5) + HalfLaurent::s_pow(4);
        assert_eq!(x.to_string(), "s^4 - 3/2*s^-5");
    }

    #[test]
    fn monomial_inverse() {
        let x = HalfLaurent::monomial(rat(-2, 3), 5);
        let y = x.inverse_monomial().unwrap();
        assert!((&x * &y).is_one());
        assert!(HalfLaurent::from_terms([(1, 1), (0, 1)]).inverse_monomial().is_none());
    }
}

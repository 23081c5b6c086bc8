use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::dense;
use super::poly::lcm_of_denominators;
use super::{Rational, TauPolynomial};
use crate::error::{Error, Result};

/// A rational function in `τ` kept in canonical reduced form.
///
/// Canonical form: numerator and denominator are coprime, the denominator has
/// lowest τ-exponent 0, integer coefficients with content 1 and a positive
/// leading coefficient. Zero is `0/1`. Two equal values therefore have
/// identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TauRational {
    num: TauPolynomial,
    den: TauPolynomial,
}

impl TauRational {
    pub fn new(num: TauPolynomial, den: TauPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(canonicalize(num, den))
    }

    pub fn from_poly(p: TauPolynomial) -> Self {
        Self {
            num: p,
            den: TauPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(TauPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(TauPolynomial::one())
    }

    pub fn numerator(&self) -> &TauPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &TauPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&TauPolynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn recanonicalize(&self) -> Self {
        canonicalize(self.num.clone(), self.den.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(canonicalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn invert_variable(&self) -> Self {
        canonicalize(self.num.invert_variable(), self.den.invert_variable())
    }

    pub fn is_palindromic(&self) -> bool {
        self.invert_variable() == *self
    }

    pub fn substitute_power(&self, k: u32) -> Self {
        canonicalize(self.num.substitute_power(k), self.den.substitute_power(k))
    }

    /// Value at `τ = 1` from the reduced numerator and denominator.
    pub fn evaluate_at_one(&self) -> Result<Rational> {
        let d = self.den.evaluate_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.evaluate_at_one() / d)
    }

    pub fn is_integral_polynomial(&self) -> bool {
        self.is_polynomial() && self.num.is_integral()
    }
}

impl From<TauPolynomial> for TauRational {
    fn from(p: TauPolynomial) -> Self {
        Self::from_poly(p)
    }
}

fn canonicalize(num: TauPolynomial, den: TauPolynomial) -> TauRational {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return TauRational::zero();
    }
    let (sn, mut dn) = dense::from_laurent(&num);
    let (sd, mut dd) = dense::from_laurent(&den);
    let g = dense::gcd(&dn, &dd);
    if g.len() > 1 {
        dn = dense::div_rem(&dn, &g).0;
        dd = dense::div_rem(&dd, &g).0;
    }
    let lcm = lcm_of_denominators(dd.iter());
    let content = dd
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
    let mut factor = Rational::new(lcm, content);
    if dd.last().is_some_and(|c| c.is_negative()) {
        factor = -factor;
    }
    for c in dn.iter_mut().chain(dd.iter_mut()) {
        *c *= &factor;
    }
    TauRational {
        num: dense::to_laurent(sn - sd, &dn),
        den: dense::to_laurent(0, &dd),
    }
}

/// Exact quotient `a / b` when `b` divides `a` in the Laurent ring.
pub fn exact_div(a: &TauPolynomial, b: &TauPolynomial) -> Option<TauPolynomial> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(TauPolynomial::zero());
    }
    let (sa, da) = dense::from_laurent(a);
    let (sb, db) = dense::from_laurent(b);
    let (q, r) = dense::div_rem(&da, &db);
    r.is_empty().then(|| dense::to_laurent(sa - sb, &q))
}

impl<'a> Add<&'a TauRational> for &TauRational {
    type Output = TauRational;
    fn add(self, rhs: &'a TauRational) -> TauRational {
        if self.den == rhs.den {
            return canonicalize(&self.num + &rhs.num, self.den.clone());
        }
        canonicalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a TauRational> for &TauRational {
    type Output = TauRational;
    fn sub(self, rhs: &'a TauRational) -> TauRational {
        self + &(-rhs)
    }
}

impl Neg for &TauRational {
    type Output = TauRational;
    fn neg(self) -> TauRational {
        TauRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a TauRational> for &TauRational {
    type Output = TauRational;
    fn mul(self, rhs: &'a TauRational) -> TauRational {
        canonicalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`TauRational::checked_div`] for a `Result`.
impl<'a> Div<&'a TauRational> for &TauRational {
    type Output = TauRational;
    fn div(self, rhs: &'a TauRational) -> TauRational {
        self.checked_div(rhs).expect("zero denominator")
    }
}

impl fmt::Display for TauRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for TauRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TauRational({self})")
    }
}

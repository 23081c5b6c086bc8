use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Sparse Laurent polynomial in `τ = t^(1/2)` with exact rational coefficients.
///
/// `t^k` is stored under the τ-exponent `2k`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TauPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl TauPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c·τ^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `τ^exp` with unit coefficient.
    pub fn tau_power(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// `t^k = τ^(2k)`.
    pub fn t_power(k: i64) -> Self {
        Self::tau_power(2 * k)
    }

    /// Builds from `(τ-exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, Rational::from_integer(c.into()))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Largest `|e|` over stored exponents; 0 for the zero polynomial.
    pub fn degree_abs(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => lo.abs().max(hi.abs()),
            _ => 0,
        }
    }

    /// Returns the constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exp: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `τ^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e + k, v.clone()))
                .collect(),
        }
    }

    /// `τ ↦ τ^k`, i.e. `t ↦ t^k`. A ring homomorphism.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitute_power requires k >= 1");
        let k = i64::from(k);
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e * k, v.clone()))
                .collect(),
        }
    }

    /// `τ ↦ τ^(-1)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Sum of all coefficients, i.e. the value at `τ = 1`.
    pub fn evaluate_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn evaluate(&self, tau: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            acc += c * pow_rational(tau, e);
        }
        acc
    }

    /// All coefficients have denominator 1.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when only even τ-exponents occur, so the value is a Laurent polynomial in t.
    pub fn is_in_t(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// The balanced quantum integer `[n]_t = τ^(n-1) + τ^(n-3) + … + τ^(1-n)`.
pub fn quantum_integer(n: u32) -> TauPolynomial {
    let n = i64::from(n);
    TauPolynomial::from_terms((0..n).map(|i| (n - 1 - 2 * i, Rational::one())))
}

impl<'a> Add<&'a TauPolynomial> for &TauPolynomial {
    type Output = TauPolynomial;
    fn add(self, rhs: &'a TauPolynomial) -> TauPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TauPolynomial {
    type Output = TauPolynomial;
    fn add(mut self, rhs: TauPolynomial) -> TauPolynomial {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a TauPolynomial> for TauPolynomial {
    fn add_assign(&mut self, rhs: &'a TauPolynomial) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> SubAssign<&'a TauPolynomial> for TauPolynomial {
    fn sub_assign(&mut self, rhs: &'a TauPolynomial) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl<'a> Sub<&'a TauPolynomial> for &TauPolynomial {
    type Output = TauPolynomial;
    fn sub(self, rhs: &'a TauPolynomial) -> TauPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TauPolynomial {
    type Output = TauPolynomial;
    fn sub(mut self, rhs: TauPolynomial) -> TauPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &TauPolynomial {
    type Output = TauPolynomial;
    fn neg(self) -> TauPolynomial {
        TauPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for TauPolynomial {
    type Output = TauPolynomial;
    fn neg(self) -> TauPolynomial {
        -&self
    }
}

impl<'a> Mul<&'a TauPolynomial> for &TauPolynomial {
    type Output = TauPolynomial;
    fn mul(self, rhs: &'a TauPolynomial) -> TauPolynomial {
        let mut out = TauPolynomial::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for TauPolynomial {
    type Output = TauPolynomial;
    fn mul(self, rhs: TauPolynomial) -> TauPolynomial {
        &self * &rhs
    }
}

/// Renders with `t` as the variable; odd τ-powers appear as `t^(k/2)`.
impl fmt::Display for TauPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let var = t_power_str(e);
            match var {
                None => write!(f, "{abs}")?,
                Some(v) if abs.is_one() => write!(f, "{v}")?,
                Some(v) => write!(f, "{abs}*{v}")?,
            }
        }
        Ok(())
    }
}

fn t_power_str(tau_exp: i64) -> Option<String> {
    match tau_exp {
        0 => None,
        2 => Some("t".to_string()),
        e if e % 2 == 0 => Some(format!("t^{}", e / 2)),
        e => Some(format!("t^({e}/2)")),
    }
}

impl fmt::Debug for TauPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TauPolynomial({self})")
    }
}

/// Integer content helper used by fraction normalization.
pub(crate) fn lcm_of_denominators<'a, I: IntoIterator<Item = &'a Rational>>(it: I) -> BigInt {
    use num_integer::Integer;
    it.into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

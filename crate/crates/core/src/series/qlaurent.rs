use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::One;

use crate::laurent::{Rational, TauPolynomial};

/// A monomial `c·τ^a·q^b` with integer-valued rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub tau: i64,
    pub q: i64,
}

/// Sparse Laurent polynomial in `q` with [`TauPolynomial`] coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct QLaurent {
    terms: BTreeMap<i64, TauPolynomial>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(TauPolynomial::one())
    }

    pub fn constant(c: TauPolynomial) -> Self {
        Self::term(c, 0)
    }

    /// `c·q^exp`.
    pub fn term(c: TauPolynomial, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, TauPolynomial)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    /// The symmetric kernel `q^(-1) + [2]_t + q`.
    pub fn kernel() -> Self {
        Self::from_terms([
            (-1, TauPolynomial::one()),
            (0, crate::laurent::quantum_integer(2)),
            (1, TauPolynomial::one()),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &TauPolynomial)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn as_map(&self) -> &BTreeMap<i64, TauPolynomial> {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> TauPolynomial {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Largest `|e|` over q-exponents; 0 for zero.
    pub fn degree_abs(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => lo.abs().max(hi.abs()),
            _ => 0,
        }
    }

    pub fn add_term(&mut self, exp: i64, c: &TauPolynomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Palindromic in `q`: the coefficient of `q^k` equals that of `q^(-k)`.
    pub fn is_palindromic_in_q(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let scale = TauPolynomial::monomial(m.coeff.clone(), m.tau);
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + m.q, &scale * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &TauPolynomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, v)| (e, c * v)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q ↦ sign·τ^tau_exp`, collapsing to a [`TauPolynomial`].
    pub fn substitute_q(&self, negate: bool, tau_exp: i64) -> TauPolynomial {
        let mut out = TauPolynomial::zero();
        for (&e, c) in &self.terms {
            let mut term = c.shift(e * tau_exp);
            if negate && e % 2 != 0 {
                term = -term;
            }
            out += &term;
        }
        out
    }

    /// All τ-coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(TauPolynomial::is_integral)
    }
}

impl Monomial {
    pub fn one() -> Self {
        Self {
            coeff: Rational::one(),
            tau: 0,
            q: 0,
        }
    }
}

impl<'a> AddAssign<&'a QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &'a QLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> SubAssign<&'a QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &'a QLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl<'a> Add<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::quantum_integer;

    #[test]
    fn kernel_is_palindromic_and_vanishes_at_minus_tau() {
        let k = QLaurent::kernel();
        assert!(k.is_palindromic_in_q());
        assert!(k.substitute_q(true, 1).is_zero());
        assert!(!k.substitute_q(false, 1).is_zero());
    }

    #[test]
    fn monomial_shift() {
        let x = QLaurent::term(quantum_integer(2), 1);
        let m = Monomial {
            coeff: Rational::from_integer((-3).into()),
            tau: 2,
            q: -2,
        };
        let y = x.mul_monomial(&m);
        assert_eq!(
            y,
            QLaurent::term(TauPolynomial::from_int_terms(&[(1, -3), (3, -3)]), -1)
        );
    }

    #[test]
    fn products_cancel_cleanly() {
        let a = QLaurent::from_terms([(1, TauPolynomial::one()), (0, TauPolynomial::one())]);
        let b = QLaurent::from_terms([(1, TauPolynomial::one()), (0, -TauPolynomial::one())]);
        // (q + 1)(q - 1) = q^2 - 1
        assert_eq!(
            &a * &b,
            QLaurent::from_terms([(2, TauPolynomial::one()), (0, -TauPolynomial::one())])
        );
    }
}

//! Dense univariate polynomials over the rationals, used only to reduce
//! Laurent fractions. Coefficients are stored lowest degree first with no
//! trailing zeros.

use num_traits::Zero;

use super::{Rational, TauPolynomial};

pub(crate) type Dense = Vec<Rational>;

/// Splits a Laurent polynomial as `τ^shift · dense(τ)` with `dense(0) != 0`.
pub(crate) fn from_laurent(p: &TauPolynomial) -> (i64, Dense) {
    let Some(lo) = p.min_exp() else {
        return (0, Vec::new());
    };
    let hi = p.max_exp().unwrap_or(lo);
    let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        out[(e - lo) as usize] = c.clone();
    }
    (lo, out)
}

pub(crate) fn to_laurent(shift: i64, d: &[Rational]) -> TauPolynomial {
    TauPolynomial::from_terms(
        d.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (shift + i as i64, c.clone())),
    )
}

fn trim(d: &mut Dense) {
    while d.last().is_some_and(|c| c.is_zero()) {
        d.pop();
    }
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Dense, Dense) {
    let mut rem: Dense = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by zero polynomial");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Monic greatest common divisor.
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Dense {
    let mut x: Dense = a.to_vec();
    let mut y: Dense = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c /= &lead;
        }
    }
    x
}

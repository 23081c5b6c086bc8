use num_bigint::BigInt;
use num_traits::One;

use super::qlaurent::{Monomial, QLaurent};
use super::truncated::UTruncatedSeries;
use crate::error::{Error, Result};
use crate::laurent::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The factor `(1 − s·τ^a·q^b·u^n)^(−k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductFactor {
    pub sign: Sign,
    pub tau_shift: i64,
    pub q_shift: i64,
    pub u_power: usize,
    pub multiplicity: u32,
}

impl ProductFactor {
    fn check(&self) -> Result<()> {
        if self.u_power == 0 {
            return Err(Error::NonUnitalFactor);
        }
        Ok(())
    }

    /// Terms `C(k+j−1, j)·(s·τ^a·q^b)^j` of the binomial expansion, `j·n ≤ order`.
    fn binomial_terms(&self, order: usize) -> Vec<Monomial> {
        let k = BigInt::from(self.multiplicity);
        let s = self.sign.value();
        let mut binom = BigInt::one();
        let mut out = Vec::new();
        for j in 0..=(order / self.u_power) {
            if j > 0 {
                binom = binom * (&k + (j as i64 - 1)) / j as i64;
            }
            let signed = if s < 0 && j % 2 == 1 {
                -&binom
            } else {
                binom.clone()
            };
            let j = j as i64;
            out.push(Monomial {
                coeff: Rational::from_integer(signed),
                tau: self.tau_shift * j,
                q: self.q_shift * j,
            });
        }
        out
    }

    /// The factor on its own as a truncated series.
    pub fn expand(&self, order: usize) -> Result<UTruncatedSeries> {
        self.check()?;
        let mut coeffs = vec![QLaurent::zero(); order + 1];
        for (j, m) in self.binomial_terms(order).into_iter().enumerate() {
            coeffs[j * self.u_power] = QLaurent::one().mul_monomial(&m);
        }
        Ok(UTruncatedSeries::from_coeffs(coeffs, order))
    }
}

/// Multiplies out `Π factors` modulo `u^(order+1)`.
///
/// Callers enumerate only factors with `u_power ≤ order`; larger ones are
/// congruent to 1 and contribute nothing, so they are skipped here as well.
pub fn expand_product(factors: &[ProductFactor], order: usize) -> Result<UTruncatedSeries> {
    let mut acc = UTruncatedSeries::one(order);
    for f in factors {
        f.check()?;
        if f.u_power > order || f.multiplicity == 0 {
            continue;
        }
        acc = acc.mul_sparse_monomials(f.u_power, &f.binomial_terms(order));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{quantum_integer, TauPolynomial};

    fn factor(sign: Sign, a: i64, b: i64, n: usize, k: u32) -> ProductFactor {
        ProductFactor {
            sign,
            tau_shift: a,
            q_shift: b,
            u_power: n,
            multiplicity: k,
        }
    }

    #[test]
    fn single_factor_binomials() {
        let s = expand_product(&[factor(Sign::Plus, 0, 0, 1, 24)], 5).unwrap();
        let want = [1, 24, 300, 2600, 17550, 98280];
        for (h, w) in want.iter().enumerate() {
            assert_eq!(s.coeff(h), &QLaurent::constant(TauPolynomial::from_int(*w)));
        }
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(expand_product(&[], 4).unwrap(), UTruncatedSeries::one(4));
    }

    #[test]
    fn zero_u_power_is_rejected() {
        let bad = factor(Sign::Plus, 0, 0, 0, 1);
        assert_eq!(expand_product(&[bad], 3), Err(Error::NonUnitalFactor));
        assert_eq!(bad.expand(3), Err(Error::NonUnitalFactor));
    }

    #[test]
    fn first_order_ky_shape() {
        let fs = vec![
            factor(Sign::Minus, -1, 1, 1, 1),
            factor(Sign::Minus, 1, -1, 1, 1),
            factor(Sign::Minus, 1, 1, 1, 1),
            factor(Sign::Minus, -1, -1, 1, 1),
            factor(Sign::Plus, 0, 0, 1, 18),
            factor(Sign::Plus, 2, 0, 1, 1),
            factor(Sign::Plus, -2, 0, 1, 1),
        ];
        let s = expand_product(&fs, 1).unwrap();
        let minus_q2 = -&quantum_integer(2);
        let want = QLaurent::from_terms([
            (-1, minus_q2.clone()),
            (
                0,
                TauPolynomial::from_int_terms(&[(-2, 1), (0, 18), (2, 1)]),
            ),
            (1, minus_q2),
        ]);
        assert_eq!(s.coeff(1), &want);
    }

    #[test]
    fn fast_path_matches_naive_multiplication() {
        let fs = [
            factor(Sign::Minus, -1, 1, 1, 1),
            factor(Sign::Plus, 2, 0, 1, 3),
            factor(Sign::Minus, 1, -1, 2, 2),
            factor(Sign::Plus, 0, 0, 3, 5),
            factor(Sign::Plus, -2, 1, 9, 1),
        ];
        for n in 0..=5 {
            let fast = expand_product(&fs, n).unwrap();
            let naive = fs.iter().fold(UTruncatedSeries::one(n), |acc, f| {
                acc.multiply_truncated(&f.expand(n).unwrap())
            });
            assert_eq!(fast, naive, "order {n}");
        }
    }
}

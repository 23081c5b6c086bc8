use super::qlaurent::{Monomial, QLaurent};

/// Power series in `u` truncated after `u^order`, with [`QLaurent`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTruncatedSeries {
    coeffs: Vec<QLaurent>,
}

impl UTruncatedSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![QLaurent::zero(); order + 1];
        coeffs[0] = QLaurent::one();
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![QLaurent::zero(); order + 1],
        }
    }

    /// Pads with zeros (or truncates) to length `order + 1`.
    pub fn from_coeffs(mut coeffs: Vec<QLaurent>, order: usize) -> Self {
        coeffs.resize(order + 1, QLaurent::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, h: usize) -> &QLaurent {
        &self.coeffs[h]
    }

    pub fn coeffs(&self) -> &[QLaurent] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Coefficient of `u^m` is `Σ_{i+j=m} A_i·B_j` for `m ≤ min(order(A), order(B))`.
    pub fn multiply_truncated(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }

    /// Multiplies by `Σ_j terms[j]·u^(j·step)` where each `terms[j]` is a monomial.
    /// This is the fast path used when applying a single product factor.
    pub(crate) fn mul_sparse_monomials(&self, step: usize, terms: &[Monomial]) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (j, m) in terms.iter().enumerate() {
            let offset = j * step;
            if offset > order {
                break;
            }
            for src in 0..=(order - offset) {
                let c = &self.coeffs[src];
                if !c.is_zero() {
                    out.coeffs[src + offset] += &c.mul_monomial(m);
                }
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(QLaurent::is_integral)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::TauPolynomial;
    use proptest::prelude::*;

    fn scalar(c: i64) -> QLaurent {
        QLaurent::constant(TauPolynomial::from_int(c))
    }

    #[test]
    fn unit_is_neutral() {
        let b = UTruncatedSeries::from_coeffs(vec![scalar(3), scalar(-1), scalar(7)], 2);
        assert_eq!(UTruncatedSeries::one(4).multiply_truncated(&b), b);
    }

    #[test]
    fn geometric_inverse() {
        let n = 6;
        let one_minus_u = UTruncatedSeries::from_coeffs(vec![scalar(1), scalar(-1)], n);
        let geom = UTruncatedSeries::from_coeffs((0..=n).map(|_| scalar(1)).collect(), n);
        assert_eq!(
            one_minus_u.multiply_truncated(&geom),
            UTruncatedSeries::one(n)
        );
    }

    #[test]
    fn result_uses_minimum_order() {
        let a = UTruncatedSeries::one(3);
        let b = UTruncatedSeries::one(5);
        assert_eq!(a.multiply_truncated(&b).order(), 3);
    }

    fn small_series() -> impl Strategy<Value = UTruncatedSeries> {
        let coeff = prop::collection::vec((-2i64..=2, -2i64..=2, -3i64..=3), 0..3).prop_map(|v| {
            QLaurent::from_terms(
                v.into_iter()
                    .map(|(q, t, c)| (q, TauPolynomial::from_int_terms(&[(t, c)]))),
            )
        });
        prop::collection::vec(coeff, 1..5).prop_map(|v| {
            let n = v.len() - 1;
            UTruncatedSeries::from_coeffs(v, n)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn multiplication_is_associative(a in small_series(), b in small_series(), c in small_series()) {
            let left = a.multiply_truncated(&b).multiply_truncated(&c);
            let right = a.multiply_truncated(&b.multiply_truncated(&c));
            prop_assert_eq!(&left, &right);

            // direct triple convolution
            let n = a.order().min(b.order()).min(c.order());
            let mut naive = vec![QLaurent::zero(); n + 1];
            for i in 0..=n {
                for j in 0..=(n - i) {
                    for k in 0..=(n - i - j) {
                        naive[i + j + k] += &(&(a.coeff(i) * b.coeff(j)) * c.coeff(k));
                    }
                }
            }
            prop_assert_eq!(left, UTruncatedSeries::from_coeffs(naive, n));
        }

        #[test]
        fn multiplication_is_commutative(a in small_series(), b in small_series()) {
            prop_assert_eq!(a.multiply_truncated(&b), b.multiply_truncated(&a));
        }
    }
}

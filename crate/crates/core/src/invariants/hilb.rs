use num_bigint::BigInt;
use num_traits::Zero;

use crate::laurent::TauPolynomial;

/// `χ_{-t}(Hilb^d S)` for `d = 0..=d_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbGenusTable {
    entries: Vec<TauPolynomial>,
}

impl HilbGenusTable {
    pub(crate) fn new(entries: Vec<TauPolynomial>) -> Self {
        Self { entries }
    }

    pub fn d_max(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, d: usize) -> Option<&TauPolynomial> {
        self.entries.get(d)
    }

    pub fn entries(&self) -> &[TauPolynomial] {
        &self.entries
    }

    /// `t^(−d)·χ_{-t}(Hilb^d)`, the palindromic normalization.
    pub fn centered(&self, d: usize) -> Option<TauPolynomial> {
        self.get(d).map(|p| p.shift(-2 * d as i64))
    }

    /// Checks the table's shape: entry 0 is 1, entry d is supported on even
    /// τ-exponents in `0..=4d`, and its centered form is palindromic.
    pub fn shape_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.entries.first().is_some_and(|e| !e.is_one()) {
            out.push("entry 0 is not 1".to_string());
        }
        for (d, e) in self.entries.iter().enumerate() {
            let top = 4 * d as i64;
            if !e.terms().all(|(x, _)| x % 2 == 0 && (0..=top).contains(&x)) {
                out.push(format!("entry {d} has support outside even 0..={top}"));
            }
            if !e.shift(-top / 2).is_palindromic() {
                out.push(format!("entry {d} is not symmetric about t^{d}"));
            }
        }
        out
    }
}

/// Coefficients of `Π_{m≥1} (1 − q^m)^(−k)` up to `q^n_max`, by the divisor-sum
/// recurrence `n·a_n = k·Σ_{j=1..n} σ(j)·a_{n−j}`.
///
/// Deliberately shares no code with the factor-by-factor product expansion.
pub fn eta_power_coefficients(k: u32, n_max: usize) -> Vec<BigInt> {
    let sigma: Vec<BigInt> = (0..=n_max)
        .map(|j| {
            if j == 0 {
                BigInt::zero()
            } else {
                (1..=j).filter(|d| j % d == 0).map(BigInt::from).sum()
            }
        })
        .collect();
    let mut a = vec![BigInt::zero(); n_max + 1];
    a[0] = BigInt::from(1);
    for n in 1..=n_max {
        let s: BigInt = (1..=n).map(|j| &sigma[j] * &a[n - j]).sum();
        a[n] = s * k / n;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_minus_24() {
        let want: [i64; 11] = [
            1, 24, 324, 3200, 25650, 176256, 1073720, 5930496, 30178575, 143184000, 639249300,
        ];
        let got = eta_power_coefficients(24, 10);
        assert_eq!(
            got,
            want.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn eta_minus_one_is_partitions() {
        let got = eta_power_coefficients(1, 10);
        let p: Vec<BigInt> = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(got, p);
    }

    #[test]
    fn shape_check_flags_bad_entries() {
        let good = HilbGenusTable::new(vec![
            TauPolynomial::one(),
            TauPolynomial::from_int_terms(&[(0, 2), (2, 20), (4, 2)]),
        ]);
        assert!(good.shape_violations().is_empty());
        let bad = HilbGenusTable::new(vec![
            TauPolynomial::one(),
            TauPolynomial::from_int_terms(&[(0, 2), (2, 20), (4, 3)]),
        ]);
        assert_eq!(bad.shape_violations().len(), 1);
    }
}

//! Division by the kernel `q^(−1) + [2]_t + q` and decomposition of
//! palindromic Laurent polynomials in the basis `(x^(−1) + c + x)^g`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::qlaurent::QLaurent;
use crate::error::{Error, Result};
use crate::laurent::{quantum_integer, Rational, TauPolynomial};

/// The commutative-ring operations basis extraction needs.
pub trait KernelRing: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

impl KernelRing for TauPolynomial {
    fn zero() -> Self {
        TauPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        TauPolynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl KernelRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Single-variable Laurent polynomial over a [`KernelRing`], keyed by exponent.
pub type RingLaurent<R> = BTreeMap<i64, R>;

fn get_or_zero<R: KernelRing>(p: &RingLaurent<R>, e: i64) -> R {
    p.get(&e).cloned().unwrap_or_else(R::zero)
}

fn mul_laurent<R: KernelRing>(a: &RingLaurent<R>, b: &RingLaurent<R>) -> RingLaurent<R> {
    let mut out: RingLaurent<R> = BTreeMap::new();
    for (&ea, ca) in a {
        for (&eb, cb) in b {
            let prod = ca.mul(cb);
            let slot = out.entry(ea + eb).or_insert_with(R::zero);
            *slot = slot.add(&prod);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn basis_element<R: KernelRing>(center: &R, one: &R) -> RingLaurent<R> {
    let mut b = BTreeMap::new();
    b.insert(-1, one.clone());
    b.insert(0, center.clone());
    b.insert(1, one.clone());
    b.retain(|_, c: &mut R| !c.is_zero());
    b
}

/// Writes a palindromic `C(x)` as `Σ_g coeff_g·(x^(−1) + center + x)^g`,
/// stripping the top degree repeatedly. `one` is the ring's unit.
pub fn extract_kernel_basis<R: KernelRing>(
    input: &RingLaurent<R>,
    center: &R,
    one: &R,
) -> Result<Vec<R>> {
    let is_palindromic = input.iter().all(|(&e, c)| get_or_zero(input, -e) == *c);
    if !is_palindromic {
        return Err(Error::NotPalindromic);
    }
    let degree = input
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&e, _)| e.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);

    let base = basis_element(center, one);
    let mut powers: Vec<RingLaurent<R>> = Vec::with_capacity(degree + 1);
    powers.push(BTreeMap::from([(0, one.clone())]));
    for g in 1..=degree {
        let next = mul_laurent(&powers[g - 1], &base);
        powers.push(next);
    }

    let mut rem = input.clone();
    rem.retain(|_, c| !c.is_zero());
    let mut coeffs = vec![R::zero(); degree + 1];
    for g in (0..=degree).rev() {
        let top = get_or_zero(&rem, g as i64);
        if top.is_zero() {
            continue;
        }
        for (&e, b) in &powers[g] {
            let slot = rem.entry(e).or_insert_with(R::zero);
            *slot = slot.sub(&top.mul(b));
        }
        rem.retain(|_, c| !c.is_zero());
        coeffs[g] = top;
    }
    if !rem.is_empty() {
        return Err(Error::NotPalindromic);
    }
    Ok(coeffs)
}

/// Inverse of [`extract_kernel_basis`].
pub fn reconstruct_from_basis<R: KernelRing>(coeffs: &[R], center: &R, one: &R) -> RingLaurent<R> {
    let base = basis_element(center, one);
    let mut power: RingLaurent<R> = BTreeMap::from([(0, one.clone())]);
    let mut out: RingLaurent<R> = BTreeMap::new();
    for c in coeffs {
        for (&e, b) in &power {
            let slot = out.entry(e).or_insert_with(R::zero);
            *slot = slot.add(&c.mul(b));
        }
        power = mul_laurent(&power, &base);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Solves `(q^(−1) + [2]_t + q)·Σ_χ P_χ q^χ = C` for `chi_min ≤ χ ≤ chi_max`
/// by the forward recurrence `P_χ = C_{χ−1} − [2]_t·P_{χ−1} − P_{χ−2}`,
/// with `P_χ = 0` below `chi_min`.
pub fn divide_by_kernel(c: &QLaurent, chi_min: i64, chi_max: i64) -> BTreeMap<i64, TauPolynomial> {
    let q2 = quantum_integer(2);
    let mut out = BTreeMap::new();
    let mut prev2 = TauPolynomial::zero();
    let mut prev1 = TauPolynomial::zero();
    for chi in chi_min..=chi_max {
        let mut p = c.coeff(chi - 1);
        p -= &(&q2 * &prev1);
        p -= &prev2;
        out.insert(chi, p.clone());
        prev2 = std::mem::replace(&mut prev1, p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::quantum_integer;
    use proptest::prelude::*;

    fn q2() -> TauPolynomial {
        quantum_integer(2)
    }

    #[test]
    fn unit_gives_alternating_quantum_integers() {
        let p = divide_by_kernel(&QLaurent::one(), 1, 15);
        for chi in 1..=15i64 {
            let mut want = quantum_integer(chi as u32);
            if chi % 2 == 0 {
                want = -want;
            }
            assert_eq!(p[&chi], want, "chi = {chi}");
        }
    }

    #[test]
    fn kernel_divides_to_one() {
        let p = divide_by_kernel(&QLaurent::kernel(), 0, 8);
        assert_eq!(p[&0], TauPolynomial::one());
        assert!(p.iter().filter(|(&k, _)| k != 0).all(|(_, v)| v.is_zero()));
    }

    fn ky_first_order() -> QLaurent {
        QLaurent::from_terms([
            (-1, -q2()),
            (
                0,
                TauPolynomial::from_int_terms(&[(-2, 1), (0, 18), (2, 1)]),
            ),
            (1, -q2()),
        ])
    }

    #[test]
    fn first_order_recurrence() {
        let p = divide_by_kernel(&ky_first_order(), 0, 1);
        assert_eq!(p[&0], -q2());
        assert_eq!(
            p[&1],
            TauPolynomial::from_int_terms(&[(-2, 2), (0, 20), (2, 2)])
        );
    }

    #[test]
    fn basis_element_itself() {
        let c = TauPolynomial::from_int_terms(&[(3, 5), (-1, 2)]);
        let one = TauPolynomial::one();
        let input = BTreeMap::from([(-1, one.clone()), (0, c.clone()), (1, one.clone())]);
        let got = extract_kernel_basis(&input, &c, &one).unwrap();
        assert_eq!(got, vec![TauPolynomial::zero(), one]);
    }

    #[test]
    fn first_order_extraction() {
        let one = TauPolynomial::one();
        let got = extract_kernel_basis(ky_first_order().as_map(), &q2(), &one).unwrap();
        assert_eq!(got[1], -q2());
        assert_eq!(
            got[0],
            TauPolynomial::from_int_terms(&[(-2, 2), (0, 20), (2, 2)])
        );
    }

    #[test]
    fn constant_input() {
        let seven = Rational::from_integer(7.into());
        let one = Rational::from_integer(1.into());
        let got = extract_kernel_basis(&BTreeMap::from([(0, seven.clone())]), &one, &one).unwrap();
        assert_eq!(got, vec![seven]);
    }

    #[test]
    fn non_palindromic_rejected() {
        let one = Rational::from_integer(1.into());
        let input = BTreeMap::from([(1, one.clone()), (0, one.clone())]);
        assert_eq!(
            extract_kernel_basis(&input, &one, &one),
            Err(Error::NotPalindromic)
        );
    }

    fn palindromic_input() -> impl Strategy<Value = (BTreeMap<i64, TauPolynomial>, TauPolynomial)> {
        let coeff = prop::collection::vec((-3i64..=3, -5i64..=5), 0..3)
            .prop_map(|v| TauPolynomial::from_int_terms(&v));
        (prop::collection::vec(coeff.clone(), 1..=9), coeff).prop_map(|(halves, center)| {
            let mut m = BTreeMap::new();
            for (k, c) in halves.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                m.insert(k as i64, c.clone());
                m.insert(-(k as i64), c);
            }
            (m, center)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn extraction_round_trip((input, center) in palindromic_input()) {
            let one = TauPolynomial::one();
            let coeffs = extract_kernel_basis(&input, &center, &one).unwrap();
            prop_assert!(coeffs.len() <= 9);
            prop_assert_eq!(reconstruct_from_basis(&coeffs, &center, &one), input);
        }

        #[test]
        fn kernel_division_round_trip(
            raw in prop::collection::vec((-4i64..=4, -3i64..=3, -6i64..=6), 1..8),
            window in 1i64..12,
        ) {
            let c = QLaurent::from_terms(
                raw.into_iter().map(|(q, t, v)| (q, TauPolynomial::from_int_terms(&[(t, v)]))),
            );
            prop_assume!(!c.is_zero());
            let chi_min = c.min_exp().unwrap() + 1;
            let chi_max = chi_min + window;
            let p = divide_by_kernel(&c, chi_min, chi_max);
            let series = QLaurent::from_terms(p.into_iter());
            let back = &series * &QLaurent::kernel();
            // exact on q^k for chi_min-1 <= k <= chi_max-1
            for k in (chi_min - 1)..chi_max {
                prop_assert_eq!(back.coeff(k), c.coeff(k));
            }
        }
    }
}

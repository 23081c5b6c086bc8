//! Exact arithmetic in `τ = t^(1/2)`: rationals, Laurent polynomials and
//! their fraction field.
//!
//! Serialization: a [`TauPolynomial`] is a JSON array of
//! `[exponent, "p/q"]` pairs in ascending τ-exponent; a [`TauRational`] is
//! `{"num": <poly>, "den": <poly>}`.

mod dense;
mod fraction;
mod poly;

use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub use fraction::{exact_div, TauRational};
pub use poly::{quantum_integer, TauPolynomial};

/// Arbitrary-precision rational; always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    Rational::from_str(s.trim()).ok()
}

impl Serialize for TauPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, format_rational(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TauPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let mut out = TauPolynomial::zero();
        for (e, s) in raw {
            let c = parse_rational(&s)
                .ok_or_else(|| de::Error::custom(format!("bad rational {s:?}")))?;
            out.add_term(e, &c);
        }
        Ok(out)
    }
}

impl Serialize for TauRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("num", self.numerator())?;
        map.serialize_entry("den", self.denominator())?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for TauRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: TauPolynomial,
            den: TauPolynomial,
        }
        let raw = Raw::deserialize(deserializer)?;
        TauRational::new(raw.num, raw.den).map_err(de::Error::custom)
    }
}

/// `"exponent:p/q"` tokens joined by `;`, ascending.
pub fn poly_tokens(p: &TauPolynomial) -> String {
    p.terms()
        .map(|(e, c)| format!("{e}:{}", format_rational(c)))
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hilb_one_serializes_as_expected() {
        let p = TauPolynomial::from_int_terms(&[(0, 2), (2, 20), (4, 2)]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[[0,"2"],[2,"20"],[4,"2"]]"#
        );
        assert_eq!(poly_tokens(&p), "0:2;2:20;4:2");
    }

    #[test]
    fn fraction_serializes_num_then_den() {
        let r = TauRational::new(TauPolynomial::one(), quantum_integer(2)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"num":[[1,"1"]],"den":[[0,"1"],[2,"1"]]}"#
        );
    }

    #[test]
    fn non_integer_coefficients_use_slash() {
        let p = TauPolynomial::monomial(Rational::new((-3).into(), 4.into()), -1);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"[[-1,"-3/4"]]"#);
    }

    fn small_poly() -> impl Strategy<Value = TauPolynomial> {
        prop::collection::vec((-6i64..=6, -9i64..=9, 1i64..=4), 0..6).prop_map(|v| {
            TauPolynomial::from_terms(
                v.into_iter()
                    .map(|(e, n, d)| (e, Rational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(p in small_poly(), q in small_poly()) {
            let s = serde_json::to_string(&p).unwrap();
            let back: TauPolynomial = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(&back, &p);
            if !q.is_zero() {
                let r = TauRational::new(p, q).unwrap();
                let s = serde_json::to_string(&r).unwrap();
                let back: TauRational = serde_json::from_str(&s).unwrap();
                prop_assert_eq!(back, r);
            }
        }
    }
}

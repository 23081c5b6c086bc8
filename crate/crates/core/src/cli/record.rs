use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::laurent::{format_rational, poly_tokens, Rational, TauPolynomial, TauRational};

/// A record's value: a Laurent polynomial, a fraction, or a number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordValue {
    Polynomial(TauPolynomial),
    Fraction(TauRational),
    Scalar(Rational),
}

impl RecordValue {
    /// Polynomials stay polynomials; fractions with unit denominator are
    /// reported as polynomials.
    pub fn from_fraction(r: TauRational) -> Self {
        match r.as_polynomial() {
            Some(p) => RecordValue::Polynomial(p.clone()),
            None => RecordValue::Fraction(r),
        }
    }

    pub fn flags(&self) -> Flags {
        match self {
            RecordValue::Polynomial(p) => Flags {
                palindromic: p.is_palindromic(),
                polynomial: true,
                integral: p.is_integral(),
            },
            RecordValue::Fraction(r) => Flags {
                palindromic: r.is_palindromic(),
                polynomial: r.is_polynomial(),
                integral: r.is_integral_polynomial(),
            },
            RecordValue::Scalar(x) => Flags {
                palindromic: true,
                polynomial: true,
                integral: x.is_integer(),
            },
        }
    }

    /// Lossless single-field rendering for CSV.
    pub fn tokens(&self) -> String {
        match self {
            RecordValue::Polynomial(p) => poly_tokens(p),
            RecordValue::Fraction(r) => format!(
                "({})/({})",
                poly_tokens(r.numerator()),
                poly_tokens(r.denominator())
            ),
            RecordValue::Scalar(x) => format_rational(x),
        }
    }

    pub fn display(&self) -> String {
        match self {
            RecordValue::Polynomial(p) => p.to_string(),
            RecordValue::Fraction(r) => r.to_string(),
            RecordValue::Scalar(x) => format_rational(x),
        }
    }
}

impl Serialize for RecordValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            RecordValue::Polynomial(p) => p.serialize(serializer),
            RecordValue::Fraction(r) => r.serialize(serializer),
            RecordValue::Scalar(x) => serializer.serialize_str(&format_rational(x)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub palindromic: bool,
    pub polynomial: bool,
    pub integral: bool,
}

/// Parameters in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(Vec<(&'static str, i64)>);

impl Params {
    pub fn new(entries: &[(&'static str, i64)]) -> Self {
        Params(entries.to_vec())
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.0.iter().map(|(k, _)| *k)
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().map(|(_, v)| *v)
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub invariant: &'static str,
    pub params: Params,
    pub result: RecordValue,
    pub flags: Flags,
}

impl InvariantRecord {
    /// Flags are computed from `result` here and nowhere else.
    pub fn new(invariant: &'static str, params: Params, result: RecordValue) -> Self {
        let flags = result.flags();
        Self {
            invariant,
            params,
            result,
            flags,
        }
    }
}

/// One JSON object per line.
pub fn render_json(records: &[InvariantRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Header from the first record's parameter names; all records of one
/// command share them.
pub fn render_csv(records: &[InvariantRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let keys: Vec<&str> = records
        .first()
        .map(|r| r.params.keys().collect())
        .unwrap_or_default();
    let mut header = vec!["invariant"];
    header.extend(&keys);
    header.extend(["palindromic", "polynomial", "integral", "result"]);
    w.write_record(&header).expect("in-memory write");
    for r in records {
        let mut row = vec![r.invariant.to_string()];
        row.extend(r.params.values().map(|v| v.to_string()));
        row.extend(
            [r.flags.palindromic, r.flags.polynomial, r.flags.integral].map(|b| b.to_string()),
        );
        row.push(r.result.tokens());
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
}

pub fn render_pretty(records: &[InvariantRecord]) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            let params = r
                .params
                .0
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            [
                r.invariant.to_string(),
                params,
                yes_no(r.flags.palindromic).to_string(),
                yes_no(r.flags.polynomial).to_string(),
                yes_no(r.flags.integral).to_string(),
                r.result.display(),
            ]
        })
        .collect();
    let header = [
        "invariant",
        "params",
        "palindromic",
        "polynomial",
        "integral",
        "result",
    ]
    .map(String::from);
    table(&header, &rows)
}

/// Left-aligned columns; the last column is not padded.
pub(crate) fn table<const N: usize>(header: &[String; N], rows: &[[String; N]]) -> String {
    let mut widths = header.each_ref().map(|h| h.chars().count());
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == N {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<width$}  ", width = widths[i]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

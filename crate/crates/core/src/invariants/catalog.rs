//! The three infinite products as data, so the identity suite can be run
//! against deliberately mutated definitions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::{ProductFactor, Sign};

/// One factor family `Π_{n≥1} (1 − s·τ^a·q^b·u^n)^(−k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductFamily {
    pub sign: Sign,
    pub tau_shift: i64,
    pub q_shift: i64,
    pub multiplicity: u32,
}

impl ProductFamily {
    const fn new(sign: Sign, tau_shift: i64, q_shift: i64, multiplicity: u32) -> Self {
        Self {
            sign,
            tau_shift,
            q_shift,
            multiplicity,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    /// Hilbert-scheme genera, in the variable `u` standing for the modular `q`.
    Jac,
    /// Refined stable pairs (Kawai-Yoshioka form).
    Ky,
    /// Generating series of the instanton contributions `n^h_0(t)`.
    Kkv,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [ProductKind::Jac, ProductKind::Ky, ProductKind::Kkv];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Jac => "jac",
            ProductKind::Ky => "ky",
            ProductKind::Kkv => "kkv",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jac" => Ok(ProductKind::Jac),
            "ky" => Ok(ProductKind::Ky),
            "kkv" => Ok(ProductKind::Kkv),
            _ => Err(Error::InvalidArgument(format!("unknown product {s:?}"))),
        }
    }
}

/// Which field of a family a mutation perturbs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationField {
    /// multiplicity + 1
    Multiplicity,
    /// τ-exponent + 2, i.e. one extra power of t
    TauShift,
    /// q-exponent + 1
    QShift,
    /// s ↦ −s
    Sign,
}

impl FromStr for MutationField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mult" | "multiplicity" => Ok(MutationField::Multiplicity),
            "tau" => Ok(MutationField::TauShift),
            "q" => Ok(MutationField::QShift),
            "sign" => Ok(MutationField::Sign),
            _ => Err(Error::InvalidArgument(format!(
                "unknown mutation field {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub jac: Vec<ProductFamily>,
    pub ky: Vec<ProductFamily>,
    pub kkv: Vec<ProductFamily>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::standard()
    }
}

impl Catalog {
    pub fn standard() -> Self {
        use Sign::{Minus, Plus};
        // (1-u^n)^-20 (1-t u^n)^-2 (1-t^-1 u^n)^-2
        let genus = vec![
            ProductFamily::new(Plus, 0, 0, 20),
            ProductFamily::new(Plus, 2, 0, 2),
            ProductFamily::new(Plus, -2, 0, 2),
        ];
        let ky = vec![
            ProductFamily::new(Minus, -1, 1, 1),
            ProductFamily::new(Minus, 1, -1, 1),
            ProductFamily::new(Minus, 1, 1, 1),
            ProductFamily::new(Minus, -1, -1, 1),
            ProductFamily::new(Plus, 0, 0, 18),
            ProductFamily::new(Plus, 2, 0, 1),
            ProductFamily::new(Plus, -2, 0, 1),
        ];
        Self {
            jac: genus.clone(),
            ky,
            kkv: genus,
        }
    }

    pub fn families(&self, kind: ProductKind) -> &[ProductFamily] {
        match kind {
            ProductKind::Jac => &self.jac,
            ProductKind::Ky => &self.ky,
            ProductKind::Kkv => &self.kkv,
        }
    }

    fn families_mut(&mut self, kind: ProductKind) -> &mut Vec<ProductFamily> {
        match kind {
            ProductKind::Jac => &mut self.jac,
            ProductKind::Ky => &mut self.ky,
            ProductKind::Kkv => &mut self.kkv,
        }
    }

    /// All factors with `u_power ≤ order`.
    pub fn factors(&self, kind: ProductKind, order: usize) -> Vec<ProductFactor> {
        let fams = self.families(kind);
        (1..=order)
            .flat_map(|n| {
                fams.iter().map(move |f| ProductFactor {
                    sign: f.sign,
                    tau_shift: f.tau_shift,
                    q_shift: f.q_shift,
                    u_power: n,
                    multiplicity: f.multiplicity,
                })
            })
            .collect()
    }

    /// A copy with one family perturbed.
    pub fn mutated(&self, kind: ProductKind, family: usize, field: MutationField) -> Result<Self> {
        let mut out = self.clone();
        let fams = out.families_mut(kind);
        let len = fams.len();
        let f = fams.get_mut(family).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{kind} has {len} factor families, no index {family}"
            ))
        })?;
        match field {
            MutationField::Multiplicity => f.multiplicity += 1,
            MutationField::TauShift => f.tau_shift += 2,
            MutationField::QShift => f.q_shift += 1,
            MutationField::Sign => {
                f.sign = match f.sign {
                    Sign::Plus => Sign::Minus,
                    Sign::Minus => Sign::Plus,
                }
            }
        }
        Ok(out)
    }

    /// Parses `product:family[:field]`, with field defaulting to `mult`.
    pub fn mutated_by_spec(&self, spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split(':').collect();
        let bad = || {
            Error::InvalidArgument(format!(
                "bad mutation {spec:?}, expected product:family[:field]"
            ))
        };
        let (kind, family, field) = match parts.as_slice() {
            [k, i] => (
                k.parse()?,
                i.parse().map_err(|_| bad())?,
                MutationField::Multiplicity,
            ),
            [k, i, f] => (k.parse()?, i.parse().map_err(|_| bad())?, f.parse()?),
            _ => return Err(bad()),
        };
        self.mutated(kind, family, field)
    }
}

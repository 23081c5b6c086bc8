use super::{divisors, Engine};
use crate::error::{Error, Result};
use crate::laurent::{quantum_integer, TauRational};

/// A Mukai vector, described by its Hilbert index `points` (`v² = 2 − 2·points`)
/// and its divisibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VWParams {
    points: u64,
    divisibility: u64,
}

impl VWParams {
    /// Requires `divisibility² | points − 1`.
    pub fn new(points: u64, divisibility: u64) -> Result<Self> {
        check_square_divisibility(points as i64 - 1, divisibility)?;
        Ok(Self {
            points,
            divisibility,
        })
    }

    pub fn points(&self) -> u64 {
        self.points
    }

    pub fn divisibility(&self) -> u64 {
        self.divisibility
    }

    /// `(r, d_r)` for each divisor `r`, with `d_r = 1 + (points − 1)/r²`.
    pub fn terms(&self) -> Vec<(u64, u64)> {
        divisors(self.divisibility)
            .into_iter()
            .map(|r| {
                let r2 = (r * r) as i64;
                (r, (1 + (self.points as i64 - 1) / r2) as u64)
            })
            .collect()
    }
}

/// Every divisor `r` of `m` must have `r² | value`; reports the smallest failure.
pub(crate) fn check_square_divisibility(value: i64, m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "divisibility must be positive".into(),
        ));
    }
    for r in divisors(m) {
        let r2 = (r * r) as i64;
        if value.rem_euclid(r2) != 0 {
            return Err(Error::DivisibilityIncompatible { divisor: r, value });
        }
    }
    Ok(())
}

/// `base(t^d) / [d]_t²`.
pub fn mcf_sheaf(base: &TauRational, d: u32) -> Result<TauRational> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "cover degree must be positive".into(),
        ));
    }
    let q = quantum_integer(d);
    let covered = base.substitute_power(d);
    TauRational::new(
        covered.numerator().clone(),
        covered.denominator() * &(&q * &q),
    )
}

impl Engine {
    /// `Σ_{r|m} t^(−r·d_r)·χ_{-t^r}(Hilb^{d_r} S) / [r]_t²`, computed from the
    /// Hilbert-scheme genus table.
    pub fn vw_full(&self, params: &VWParams) -> Result<TauRational> {
        let terms = params.terms();
        let d_max = terms.iter().map(|&(_, d)| d).max().unwrap_or(0) as usize;
        let hilb = self.hilb_chi_series(d_max)?;
        let mut total = TauRational::zero();
        for (r, d_r) in terms {
            let r = r as u32;
            let centered = hilb.centered(d_r as usize).expect("table covers d_r");
            let q = quantum_integer(r);
            let term = TauRational::new(centered.substitute_power(r), &q * &q)?;
            total = &total + &term;
        }
        Ok(total)
    }
}

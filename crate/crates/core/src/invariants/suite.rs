//! One pass over every identity connecting the invariant families.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::gv::{kkv_oracle, CenterOutcome};
use super::{
    eta_power_coefficients, lemma_shape_violations, mcf_sheaf, Engine, ProductKind, VWParams,
};
use crate::error::Error;
use crate::laurent::{exact_div, quantum_integer, Rational, TauPolynomial, TauRational};
use crate::series::reconstruct_from_basis;

/// Failure messages kept per check; the count is always exact.
const MAX_FAILURE_DETAILS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub instances: usize,
    pub failed: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub h_max: usize,
    pub chi_max: i64,
    pub passed: bool,
    pub checks: Vec<IdentityCheck>,
    /// Basis element adopted for the numerical KKV extraction, if any.
    pub basis_center: Option<String>,
    pub center_outcomes: Vec<CenterOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &IdentityCheck> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Check {
    name: &'static str,
    instances: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.instances += 1;
        } else {
            self.fail(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.instances += 1;
        self.failed += 1;
        if self.failures.len() < MAX_FAILURE_DETAILS {
            self.failures.push(detail);
        }
    }

    fn error(&mut self, context: &str, e: &Error) {
        self.fail(format!("{context}: {e}"));
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name.to_string(),
            instances: self.instances,
            failed: self.failed,
            passed: self.failed == 0,
            failures: self.failures,
        }
    }
}

pub const QUANTUM_IDENTITY: &str = "quantum-integer identity";
pub const JAC_KKV: &str = "jac/kkv cross-link";
pub const PAIRS_KKV: &str = "stable-pairs instanton vs kkv product";
pub const Q_SUBSTITUTION: &str = "q = -t^(1/2) substitution";
pub const LEMMA: &str = "lemma reconstruction";
pub const GENUS_ZERO: &str = "genus-0 pairs closed form";
pub const PAIRS_SHAPE: &str = "pairs symmetry and support";
pub const PAIRS_FULL: &str = "pairs multiple cover, m = 1";
pub const WALL_CROSSING: &str = "wall-crossing residual";
pub const MCF: &str = "multiple cover term match";
pub const SYMMETRY: &str = "tau-inversion symmetry";
pub const SPECIALIZATION: &str = "t = 1 specialization";
pub const INTEGRALITY: &str = "integrality";
pub const KKV_NUMERIC: &str = "numerical KKV";

/// The Mukai vectors `(points, divisibility)` checked by default.
pub fn default_vw_samples() -> Vec<VWParams> {
    [(1, 1), (1, 2), (2, 1), (5, 2), (10, 3)]
        .into_iter()
        .map(|(d, m)| VWParams::new(d, m).expect("valid sample"))
        .collect()
}

/// Runs every identity and collects a report. Failures are report entries;
/// this function does not return errors.
pub fn identity_suite(
    engine: &Engine,
    h_max: usize,
    chi_max: i64,
    vw_samples: &[VWParams],
) -> VerificationReport {
    let mut checks = Vec::new();

    // [dχ]_t = [χ]_{t^d}·[d]_t
    let mut c = Check::new(QUANTUM_IDENTITY);
    for d in 1..=20u32 {
        for chi in 1..=20u32 {
            let lhs = quantum_integer(d * chi);
            let rhs = &quantum_integer(chi).substitute_power(d) * &quantum_integer(d);
            let quotient = exact_div(&lhs, &quantum_integer(d));
            c.record(
                lhs == rhs && quotient == Some(quantum_integer(chi).substitute_power(d)),
                || format!("d = {d}, chi = {chi}"),
            );
        }
    }
    checks.push(c.finish());

    let hilb = engine.hilb_chi_series(h_max);
    let kkv = engine.product(ProductKind::Kkv, h_max);
    let ky = engine.product(ProductKind::Ky, h_max);
    let bps = engine.bps_refined(h_max);

    let mut c = Check::new(JAC_KKV);
    match (&hilb, &kkv) {
        (Ok(hilb), Ok(kkv)) => {
            for v in hilb.shape_violations() {
                c.fail(format!("genus table: {v}"));
            }
            for h in 0..=h_max {
                let coeff = kkv.coeff(h);
                let q_free = coeff.terms().all(|(e, _)| e == 0);
                c.record(q_free && hilb.centered(h) == Some(coeff.coeff(0)), || {
                    format!("h = {h}: t^-h chi(Hilb^h) differs from the kkv coefficient")
                });
            }
        }
        (Err(e), _) | (_, Err(e)) => c.error("expansion", e),
    }
    checks.push(c.finish());

    let mut c = Check::new(PAIRS_KKV);
    match (&bps, &kkv) {
        (Ok(bps), Ok(kkv)) => {
            for h in 0..=h_max {
                c.record(bps.get(h, 0) == kkv.coeff(h).coeff(0), || {
                    format!("h = {h}: n^h_0 from stable pairs differs from the kkv coefficient")
                });
            }
        }
        (Err(e), _) | (_, Err(e)) => c.error("expansion", e),
    }
    checks.push(c.finish());

    let mut c = Check::new(Q_SUBSTITUTION);
    match (&ky, &kkv) {
        (Ok(ky), Ok(kkv)) => {
            for h in 0..=h_max {
                c.record(
                    ky.coeff(h).substitute_q(true, 1) == kkv.coeff(h).coeff(0),
                    || format!("h = {h}"),
                );
            }
        }
        (Err(e), _) | (_, Err(e)) => c.error("expansion", e),
    }
    checks.push(c.finish());

    let mut c = Check::new(LEMMA);
    match &ky {
        Ok(ky) => {
            for v in lemma_shape_violations(ky) {
                c.fail(v);
            }
            match &bps {
                Ok(bps) => {
                    let center = quantum_integer(2);
                    let one = TauPolynomial::one();
                    for h in 0..=h_max {
                        let row = bps.row(h);
                        let back = reconstruct_from_basis(row, &center, &one);
                        c.record(&back == ky.coeff(h).as_map(), || {
                            format!("h = {h}: reconstruction")
                        });
                        c.record(row.iter().skip(h + 1).all(TauPolynomial::is_zero), || {
                            format!("h = {h}: nonzero n^h_g with g > h")
                        });
                        for (g, n) in row.iter().enumerate() {
                            c.record(n.is_palindromic(), || format!("n^{h}_{g} not palindromic"));
                        }
                    }
                }
                Err(e) => c.error("extraction", e),
            }
        }
        Err(e) => c.error("expansion", e),
    }
    checks.push(c.finish());

    let mut c = Check::new(GENUS_ZERO);
    match engine.pairs_primitive(0, chi_max.max(15)) {
        Ok(t) => {
            for chi in 1..=chi_max.max(15) {
                let mut want = quantum_integer(chi as u32);
                if chi % 2 == 0 {
                    want = -want;
                }
                c.record(t.value(chi) == Some(want), || format!("chi = {chi}"));
            }
        }
        Err(e) => c.error("h = 0", &e),
    }
    checks.push(c.finish());

    // Pair tables on the window [1-h, max(chi_max, h-1)] cover both P_chi and P_-chi.
    let mut tables = BTreeMap::new();
    let mut c = Check::new(PAIRS_SHAPE);
    for h in 0..=h_max {
        let top = chi_max.max(h as i64 - 1).max(1 - h as i64);
        match engine.pairs_primitive(h, top) {
            Ok(t) => {
                for (chi, p) in t.entries() {
                    c.record(p.is_palindromic(), || {
                        format!("P^{h}_{chi} not palindromic")
                    });
                }
                c.record(
                    (1..=3).all(|k| t.value(1 - h as i64 - k).is_some_and(|p| p.is_zero())),
                    || format!("h = {h}: support below 1 - h"),
                );
                tables.insert(h, t);
            }
            Err(e) => c.error(&format!("h = {h}"), &e),
        }
    }
    checks.push(c.finish());

    let mut c = Check::new(PAIRS_FULL);
    for (&h, t) in &tables {
        for (chi, p) in t.entries() {
            match engine.pairs_full(h, 1, chi) {
                Ok(v) => c.record(v == TauRational::from_poly(p.clone()), || {
                    format!("h = {h}, chi = {chi}")
                }),
                Err(e) => c.error(&format!("h = {h}, chi = {chi}"), &e),
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new(WALL_CROSSING);
    for h in 0..=h_max {
        for chi in 1..=chi_max.max(0) {
            match engine.wall_crossing_residual(h, chi as u32) {
                Ok(r) => c.record(r.is_zero(), || {
                    format!("h = {h}, chi = {chi}: residual {r}")
                }),
                Err(e) => c.error(&format!("h = {h}, chi = {chi}"), &e),
            }
        }
    }
    checks.push(c.finish());

    let vw_values: Vec<_> = vw_samples.iter().map(|p| (p, engine.vw_full(p))).collect();

    let mut c = Check::new(MCF);
    for (params, value) in &vw_values {
        let label = format!("(d, m) = ({}, {})", params.points(), params.divisibility());
        let cover_sum =
            params
                .terms()
                .into_iter()
                .try_fold(TauRational::zero(), |acc, (r, h_r)| {
                    let base = TauRational::from_poly(engine.vw_instanton(h_r as usize)?);
                    Ok::<_, Error>(&acc + &mcf_sheaf(&base, r as u32)?)
                });
        match (value, cover_sum) {
            (Ok(v), Ok(s)) => c.record(*v == s, || label.clone()),
            (Err(e), _) => c.error(&label, e),
            (_, Err(e)) => c.error(&label, &e),
        }
    }
    checks.push(c.finish());

    let mut c = Check::new(SYMMETRY);
    for (params, value) in &vw_values {
        let label = format!("(d, m) = ({}, {})", params.points(), params.divisibility());
        match value {
            Ok(v) => c.record(v.is_palindromic(), || label.clone()),
            Err(e) => c.error(&label, e),
        }
    }
    checks.push(c.finish());

    let mut c = Check::new(SPECIALIZATION);
    for n in 0..=20u32 {
        c.record(
            quantum_integer(n).evaluate_at_one() == Rational::from_integer(n.into()),
            || format!("[{n}] at t = 1"),
        );
    }
    let d_needed = vw_samples
        .iter()
        .flat_map(|p| p.terms().into_iter().map(|(_, d)| d as usize))
        .chain(std::iter::once(h_max))
        .max()
        .unwrap_or(0);
    let euler = engine.euler_hilb(d_needed);
    match &euler {
        Ok(euler) => {
            let eta = eta_power_coefficients(24, d_needed);
            for (d, (a, b)) in euler.iter().zip(&eta).enumerate() {
                c.record(a == b, || format!("e(Hilb^{d}) = {a}, eta oracle {b}"));
            }
            for (params, value) in &vw_values {
                let label = format!("(d, m) = ({}, {})", params.points(), params.divisibility());
                let want: Rational = params
                    .terms()
                    .into_iter()
                    .map(|(r, d_r)| Rational::new(euler[d_r as usize].clone(), BigInt::from(r * r)))
                    .sum();
                match value
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(TauRational::evaluate_at_one)
                {
                    Ok(got) => c.record(got == want, || format!("{label}: {got} vs {want}")),
                    Err(e) => c.error(&label, &e),
                }
            }
        }
        Err(e) => c.error("euler numbers", e),
    }
    checks.push(c.finish());

    let mut c = Check::new(INTEGRALITY);
    for kind in ProductKind::ALL {
        match engine.product(kind, h_max) {
            Ok(s) => c.record(s.is_integral(), || format!("{kind} product")),
            Err(e) => c.error(kind.name(), &e),
        }
    }
    for (h, t) in &tables {
        c.record(t.entries().all(|(_, p)| p.is_integral()), || {
            format!("pairs h = {h}")
        });
    }
    if let Ok(bps) = &bps {
        for h in 0..=h_max {
            c.record(bps.row(h).iter().all(TauPolynomial::is_integral), || {
                format!("bps h = {h}")
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new(KKV_NUMERIC);
    let mut basis_center = None;
    let mut center_outcomes = Vec::new();
    match engine.gv_numeric(h_max) {
        Ok(gv) => {
            basis_center = Some(gv.center().label().to_string());
            center_outcomes = gv.outcomes().to_vec();
            let oracle = kkv_oracle(h_max);
            for h in 0..=h_max {
                c.record(gv.row(h) == oracle[h].as_slice(), || {
                    format!("h = {h}: {:?} vs oracle {:?}", gv.row(h), oracle[h])
                });
                if let Ok(euler) = &euler {
                    c.record(gv.get(h, 0) == euler[h], || {
                        format!("h = {h}: n^h_0 vs e(Hilb^h)")
                    });
                }
            }
        }
        Err(e) => c.error("extraction", &e),
    }
    checks.push(c.finish());

    let passed = checks.iter().all(|c| c.passed);
    VerificationReport {
        h_max,
        chi_max,
        passed,
        checks,
        basis_center,
        center_outcomes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{Catalog, MutationField};

    fn samples() -> Vec<VWParams> {
        [(1, 1), (1, 2), (2, 1), (5, 2)]
            .iter()
            .map(|&(d, m)| VWParams::new(d, m).unwrap())
            .collect()
    }

    #[test]
    fn small_suite_passes() {
        let r = identity_suite(&Engine::new(), 4, 5, &samples());
        for c in &r.checks {
            assert!(c.passed, "{c:?}");
            assert!(c.instances > 0, "{}", c.name);
        }
        assert!(r.passed());
        assert_eq!(r.basis_center.as_deref(), Some("t^-1 - 2 + t"));
    }

    #[test]
    fn degenerate_suite_passes() {
        let r = identity_suite(&Engine::new(), 0, 1, &[]);
        assert!(r.passed(), "{:?}", r.failed_checks().collect::<Vec<_>>());
    }

    #[test]
    fn corrupted_genus_product_is_caught() {
        let cat = Catalog::standard()
            .mutated(ProductKind::Jac, 1, MutationField::TauShift)
            .unwrap();
        let r = identity_suite(&Engine::with_catalog(cat), 3, 3, &samples());
        assert!(!r.passed());
        assert!(!r.check(JAC_KKV).unwrap().passed);
    }
}

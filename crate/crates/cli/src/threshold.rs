//! Threshold queries, reported as JSON.

use bellsim_core::bell::{threshold_eta2, Threshold};
use serde::Serialize;

use crate::config::PointSpec;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Found,
    NoViolation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdRecord {
    /// `null` when there is no violation even at `eta2 = 1`.
    pub eta_star: Option<f64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_max_at_one: Option<f64>,
    pub scenario: PointSpec,
    pub tol: f64,
    /// `(eta2, |B|_max)` on the bracketing pre-scan.
    pub scan: Vec<(f64, f64)>,
}

/// Detector efficiency threshold of `spec`; `eta2` in `spec` is ignored.
pub fn run_threshold(spec: &PointSpec, tol: f64) -> Result<ThresholdRecord, CliError> {
    if !(tol > 0.0 && tol < 0.5) {
        return Err(CliError::Config(format!("tol = {tol} must lie in (0, 0.5)")));
    }
    let mut spec = spec.clone();
    spec.eta2 = None;
    let scenario = spec.scenario()?;
    let r = threshold_eta2(&scenario, tol)?;
    let (eta_star, status, b_max_at_one) = match r.threshold {
        Threshold::Found(e) => (Some(e), Status::Found, None),
        Threshold::NoViolation { b_max_at_one } => (None, Status::NoViolation, Some(b_max_at_one)),
    };
    Ok(ThresholdRecord {
        eta_star,
        status,
        b_max_at_one,
        scenario: spec,
        tol,
        scan: r.scan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::FamilyName;

    #[test]
    fn polarization_two_photons() {
        let spec = PointSpec {
            n: Some(2),
            ..PointSpec::new(FamilyName::Pol)
        };
        let r = run_threshold(&spec, 1e-4).unwrap();
        assert_eq!(r.status, Status::Found);
        assert!((r.eta_star.unwrap() - 0.5858).abs() < 1e-3);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["status"], "found");
        assert_eq!(json["scenario"]["family"], "pol");
        assert_eq!(json["scenario"]["n"], 2);
    }

    #[test]
    fn no_violation_is_reported_not_raised() {
        let spec = PointSpec {
            v: Some(10.0),
            d: Some(0.5),
            ..PointSpec::new(FamilyName::Ets)
        };
        let r = run_threshold(&spec, 1e-3).unwrap();
        assert_eq!(r.status, Status::NoViolation);
        assert!(r.eta_star.is_none());
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["eta_star"].is_null());
        assert_eq!(json["status"], "no_violation");
    }

    #[test]
    fn bad_tolerance() {
        let spec = PointSpec {
            n: Some(1),
            ..PointSpec::new(FamilyName::Pol)
        };
        assert!(matches!(run_threshold(&spec, 0.0), Err(CliError::Config(_))));
    }
}

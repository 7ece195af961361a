//! Structured pass/fail records for identity-verification suites.

use serde::Serialize;

/// Outcome of sweeping one identity over a parameter range.
///
/// `passed` is derived, never set directly: it holds exactly when the
/// maximum observed deviation is within tolerance and no counterexamples
/// were collected.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// Short stable name of the identity being checked.
    #[serde(rename = "identity")]
    pub identity_id: String,
    /// Human-readable description of the swept parameter range.
    #[serde(rename = "range")]
    pub parameter_range: String,
    /// Largest absolute deviation observed (0 for exact checks that count
    /// mismatches instead of measuring them).
    #[serde(rename = "max_dev")]
    pub max_abs_deviation: f64,
    /// Tolerance the deviations are held to (0 for exact checks).
    #[serde(rename = "tol")]
    pub tolerance: f64,
    /// Whether the identity held everywhere in the range.
    pub passed: bool,
    /// Parameters at which the identity failed, formatted for display.
    pub counterexamples: Vec<String>,
}

impl VerificationReport {
    /// Builds a report, deriving `passed` from the deviation and the
    /// counterexample list.
    pub fn new(
        identity_id: impl Into<String>,
        parameter_range: impl Into<String>,
        max_abs_deviation: f64,
        tolerance: f64,
        counterexamples: Vec<String>,
    ) -> Self {
        let passed = max_abs_deviation <= tolerance && counterexamples.is_empty();
        VerificationReport {
            identity_id: identity_id.into(),
            parameter_range: parameter_range.into(),
            max_abs_deviation,
            tolerance,
            passed,
            counterexamples,
        }
    }

    /// JSON form matching the serialized field names.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }
}

/// Tracks the worst deviation and the offending parameters during a sweep.
pub struct DeviationTracker {
    tol: f64,
    max_dev: f64,
    counterexamples: Vec<String>,
}

impl DeviationTracker {
    /// Starts a sweep held to the given tolerance.
    pub fn new(tol: f64) -> Self {
        DeviationTracker {
            tol,
            max_dev: 0.0,
            counterexamples: Vec::new(),
        }
    }

    /// Records one comparison; `params` is only formatted on failure.
    pub fn observe(&mut self, dev: f64, params: impl FnOnce() -> String) {
        if dev > self.max_dev {
            self.max_dev = dev;
        }
        if !(dev <= self.tol) {
            self.counterexamples.push(params());
        }
    }

    /// Records an exact check; a mismatch is a counterexample with no
    /// numeric deviation.
    pub fn observe_exact(&mut self, equal: bool, params: impl FnOnce() -> String) {
        if !equal {
            self.counterexamples.push(params());
        }
    }

    /// Finishes the sweep into a report.
    pub fn finish(
        self,
        identity_id: impl Into<String>,
        parameter_range: impl Into<String>,
    ) -> VerificationReport {
        VerificationReport::new(
            identity_id,
            parameter_range,
            self.max_dev,
            self.tol,
            self.counterexamples,
        )
    }
}

//! Machine-readable verification reports.

use bihilbert::verify::SuiteOutcome;
use serde::Deserialize;

/// One suite's outcome, as printed on standard output.
///
/// Everything except `elapsed_ms` is deterministic for a fixed
/// `(suite, trials, seed, dim)`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub trials: u64,
    pub failures: u64,
    pub max_violation: f64,
    pub seed: u64,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn new(outcome: &SuiteOutcome, seed: u64, elapsed_ms: f64) -> Self {
        VerificationReport {
            suite: outcome.suite.name().to_owned(),
            trials: outcome.trials,
            failures: outcome.failures,
            max_violation: outcome.max_violation,
            seed,
            elapsed_ms,
        }
    }

    /// Hand-rendered JSON: fixed field order, floats with 17 significant
    /// digits so the numbers round-trip exactly.
    pub fn render(&self) -> String {
        format!(
            "{{\"suite\":\"{}\",\"trials\":{},\"failures\":{},\"max_violation\":{:.16e},\"seed\":{},\"elapsed_ms\":{:.3}}}",
            self.suite, self.trials, self.failures, self.max_violation, self.seed, self.elapsed_ms
        )
    }
}

/// Renders a batch as a JSON array, one report per line.
pub fn render_batch(reports: &[VerificationReport]) -> String {
    let mut out = String::from("[");
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('\n');
        out.push_str(&r.render());
    }
    out.push_str("\n]");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendered_report_round_trips() {
        let report = VerificationReport {
            suite: "norms".to_owned(),
            trials: 1000,
            failures: 0,
            max_violation: 1.2345678901234567e-13,
            seed: 42,
            elapsed_ms: 12.5,
        };
        let back: VerificationReport = serde_json::from_str(&report.render()).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.max_violation, 1.2345678901234567e-13);
    }

    #[test]
    fn batch_rendering_is_valid_json() {
        let report = VerificationReport {
            suite: "moduli".to_owned(),
            trials: 10,
            failures: 0,
            max_violation: 0.0,
            seed: 0,
            elapsed_ms: 1.0,
        };
        let parsed: Vec<VerificationReport> =
            serde_json::from_str(&render_batch(&[report.clone(), report])).unwrap();
        assert_eq!(parsed.len(), 2);
    }
}

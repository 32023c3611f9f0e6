//! Verification report: a named list of checks, each with a measured value,
//! an expected value, and a tolerance. The suite passes iff every check
//! passes.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: Option<u64>) -> Self {
        Self {
            suite: suite.to_string(),
            seed,
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, id: &str, description: &str, measured: f64, expected: f64, tolerance: f64) {
        let pass = (measured - expected).abs() <= tolerance;
        self.pass &= pass;
        self.checks.push(Check {
            id: id.to_string(),
            description: description.to_string(),
            measured,
            expected,
            tolerance,
            pass,
        });
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(seed) = self.seed {
            out.push_str(&format!("suite {} (seed {seed})\n", self.suite));
        } else {
            out.push_str(&format!("suite {}\n", self.suite));
        }
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {} {}: measured={:.12e} expected={:.12e} tol={:.1e}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.description,
                c.measured,
                c.expected,
                c.tolerance,
            ));
        }
        out.push_str(&format!(
            "{}: {} of {} checks passed\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len(),
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

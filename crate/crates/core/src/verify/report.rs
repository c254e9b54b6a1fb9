use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde::Deserialize;

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotProportional,
    Overflow,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotProportional => "not-proportional",
            Verdict::Overflow => "overflow",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Whether a failing verdict counts against the run, or is only recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    MustPass,
    Record,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportMode {
    Exact,
    Float,
}

pub type Params = BTreeMap<String, String>;

/// Outcome of one parameterized check. The residual is the max-norm of the
/// difference object, relative to the reference side for float checks.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: Params,
    pub mode: ReportMode,
    pub precision: Option<u32>,
    pub residual: Scalar,
    pub tolerance: Scalar,
    pub verdict: Verdict,
    pub expectation: Expectation,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Exact check: passes only on a zero residual.
    pub fn exact(check_id: &str, params: Params, residual: Scalar) -> Self {
        let verdict = if residual.is_zero() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            check_id: check_id.to_string(),
            params,
            mode: ReportMode::Exact,
            precision: None,
            residual,
            tolerance: Scalar::zero(),
            verdict,
            expectation: Expectation::MustPass,
            notes: Vec::new(),
        }
    }

    /// Float check at `precision` digits: passes when `residual ≤ tolerance`.
    pub fn float(
        check_id: &str,
        params: Params,
        precision: u32,
        residual: Scalar,
        tolerance: Scalar,
    ) -> Self {
        let verdict = if residual <= tolerance {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            check_id: check_id.to_string(),
            params,
            mode: ReportMode::Float,
            precision: Some(precision),
            residual,
            tolerance,
            verdict,
            expectation: Expectation::MustPass,
            notes: Vec::new(),
        }
    }

    /// A check that could not produce a residual. Overflow gets its own
    /// verdict; other errors are failures with the message in the notes.
    pub fn from_error(check_id: &str, params: Params, err: &Error) -> Self {
        let verdict = match err {
            Error::DegreeOverflow { .. } => Verdict::Overflow,
            _ => Verdict::Fail,
        };
        VerificationReport {
            check_id: check_id.to_string(),
            params,
            mode: ReportMode::Exact,
            precision: None,
            residual: Scalar::zero(),
            tolerance: Scalar::zero(),
            verdict,
            expectation: Expectation::MustPass,
            notes: vec![err.to_string()],
        }
    }

    pub fn with_expectation(mut self, e: Expectation) -> Self {
        self.expectation = e;
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// True when this report should make the run fail.
    pub fn is_gating_failure(&self) -> bool {
        self.expectation == Expectation::MustPass && !self.passed()
    }

    pub fn residual_string(&self) -> String {
        render_residual(&self.residual)
    }

    pub fn tolerance_string(&self) -> String {
        render_tolerance(&self.tolerance)
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn render_residual(r: &Scalar) -> String {
    match r {
        Scalar::Exact(_) => r.to_string(),
        Scalar::Float(x) => x.to_scientific(6),
    }
}

/// Tolerances are powers of ten in practice; print those as `1e-k`.
fn render_tolerance(t: &Scalar) -> String {
    if t.is_zero() {
        return "0".into();
    }
    if let Some(r) = t.as_rational() {
        let (num, den) = (r.numerator().to_string(), r.denominator().to_string());
        let is_pow10 = |s: &str| s.starts_with('1') && s[1..].bytes().all(|b| b == b'0');
        if num == "1" && is_pow10(&den) {
            return format!("1e-{}", den.len() - 1);
        }
        return t.to_string();
    }
    render_residual(t)
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 9)?;
        st.serialize_field("check_id", &self.check_id)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("mode", &self.mode)?;
        st.serialize_field("precision", &self.precision)?;
        st.serialize_field("residual", &self.residual_string())?;
        st.serialize_field("tolerance", &self.tolerance_string())?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("expectation", &self.expectation)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}

/// Params map from `(key, value)` pairs.
pub fn params<const K: usize>(pairs: [(&str, String); K]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// `10^-k` as an exact scalar.
pub fn tolerance_exp10(k: u32) -> Scalar {
    Scalar::one() / Scalar::int(10).pow(k)
}

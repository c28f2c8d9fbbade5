use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::ideals::IdealSpec;

pub const TRACE_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named verification result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
}

impl Check {
    pub fn new(name: &str, pass: bool, witness: Option<String>) -> Self {
        Check {
            name: name.to_string(),
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            witness,
            millis: 0,
        }
    }

    /// Runs `f` and records its wall time.
    pub fn timed(name: &str, f: impl FnOnce() -> (bool, Option<String>)) -> Self {
        let start = Instant::now();
        let (pass, witness) = f();
        let mut c = Check::new(name, pass, witness);
        c.millis = start.elapsed().as_millis() as u64;
        c
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseTag {
    MixedLadder,
    RReduction,
    Cone,
    Empty,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepCertificate {
    pub index: usize,
    pub cell: String,
    pub j_family: String,
    pub n_family: String,
    pub i_family: String,
    pub trivial: bool,
    pub checks: Vec<Check>,
    /// Shifts in {0,1,2,3} for which the Hilbert chain held (nontrivial steps only).
    pub passing_shifts: Vec<u32>,
    pub millis: u64,
}

impl StepCertificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InductionTrace {
    pub schema: u32,
    pub spec: IdealSpec,
    pub path: String,
    pub steps: Vec<StepCertificate>,
    /// Absent when the replay stopped at a failing step.
    pub base: Option<BaseTag>,
    pub base_checks: Vec<Check>,
    pub passed: bool,
    /// Some nontrivial step had 1 as its only passing shift.
    pub shift_unique: bool,
}

impl InductionTrace {
    pub fn nontrivial_steps(&self) -> impl Iterator<Item = &StepCertificate> {
        self.steps.iter().filter(|s| !s.trivial)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("trace serializes")
    }

    /// JSON with every `millis` field zeroed, for reproducibility comparisons.
    pub fn to_json_untimed(&self) -> Value {
        let mut v = self.to_json();
        zero_millis(&mut v);
        v
    }
}

fn zero_millis(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map.iter_mut() {
                if k == "millis" {
                    *x = Value::from(0);
                } else {
                    zero_millis(x);
                }
            }
        }
        Value::Array(xs) => xs.iter_mut().for_each(zero_millis),
        _ => {}
    }
}

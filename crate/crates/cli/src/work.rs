//! Default sweep ranges per suite and the `HNSTRATA_MAX_WORK` cap.

use crate::{Failure, Suite};

pub const MAX_WORK_VAR: &str = "HNSTRATA_MAX_WORK";

#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub n_max: i64,
    pub k_max: i64,
    pub g_max: i64,
    pub bound: i64,
}

impl SuiteParams {
    pub fn resolve(suite: Suite, n_max: Option<i64>, k_max: Option<i64>, g_max: Option<i64>, bound: Option<i64>) -> Self {
        let d = match suite {
            Suite::Cyclic => SuiteParams { n_max: 12, k_max: 12, g_max: 1, bound: 1 },
            Suite::Orientable => SuiteParams { n_max: 8, k_max: 8, g_max: 3, bound: 1 },
            Suite::NonMinimal => SuiteParams { n_max: 6, k_max: 2, g_max: 3, bound: 1 },
            Suite::Nonorientable => SuiteParams { n_max: 14, k_max: 0, g_max: 3, bound: 1 },
            Suite::Klein => SuiteParams { n_max: 12, k_max: 0, g_max: 1, bound: 1 },
            Suite::SmallNonorientable => SuiteParams { n_max: 8, k_max: 0, g_max: 4, bound: 1 },
            Suite::Symmetric => SuiteParams { n_max: 10, k_max: 0, g_max: 3, bound: 1 },
            Suite::Extension => SuiteParams { n_max: 5, k_max: 5, g_max: 3, bound: 15 },
            Suite::Covers => SuiteParams { n_max: 5, k_max: 5, g_max: 1, bound: 1 },
            Suite::Monotone => SuiteParams { n_max: 6, k_max: 6, g_max: 3, bound: 20 },
            Suite::Enumeration => SuiteParams { n_max: 5, k_max: 5, g_max: 3, bound: 15 },
            Suite::Reductions => SuiteParams { n_max: 6, k_max: 6, g_max: 3, bound: 1 },
        };
        SuiteParams {
            n_max: n_max.unwrap_or(d.n_max),
            k_max: k_max.unwrap_or(d.k_max),
            g_max: g_max.unwrap_or(d.g_max),
            bound: bound.unwrap_or(d.bound),
        }
    }
}

/// Number of parameter points a suite visits.
pub fn work(suite: Suite, p: &SuiteParams) -> u128 {
    let n = p.n_max.max(0) as u128;
    let k = (2 * p.k_max.max(0) + 1) as u128;
    let g = p.g_max.max(0) as u128;
    let d = p.bound.max(0) as u128;
    match suite {
        Suite::Cyclic | Suite::Covers => n * k,
        Suite::Orientable | Suite::Enumeration | Suite::Monotone => n * k * g,
        Suite::Extension => n * k * g * d,
        Suite::Reductions => n * k * g,
        Suite::NonMinimal => 1,
        Suite::Nonorientable | Suite::SmallNonorientable | Suite::Symmetric => n * g,
        Suite::Klein => n,
    }
}

pub fn check_budget(suite: Suite, p: &SuiteParams) -> Result<(), Failure> {
    let Ok(raw) = std::env::var(MAX_WORK_VAR) else {
        return Ok(());
    };
    let cap: u128 = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Input(format!("{MAX_WORK_VAR} must be a non-negative integer, got '{raw}'")))?;
    let needed = work(suite, p);
    if needed > cap {
        return Err(Failure::Input(format!(
            "suite {suite:?} needs {needed} parameter points, over {MAX_WORK_VAR}={cap}"
        )));
    }
    Ok(())
}

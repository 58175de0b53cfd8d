//! Acceptance criteria. Runs every criterion, prints one line each, and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hnstrata_core::connectivity::{connectivity_nonorientable, BundleClass, ConnectivityStatus, SurfaceBundleSpec};
use hnstrata_core::oracle::suites::*;
use hnstrata_core::oracle::VerificationReport;
use hnstrata_core::Result;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<VerificationReport>,
}

fn cyclic() -> Result<VerificationReport> {
    let mut rep = suite_cyclic(12, 12)?;
    // the report must say which residue the values follow
    let recorded = rep.notes.iter().any(|n| n.contains("c1(mu_m) = [-km]_n for all cases: true"))
        && rep.notes.iter().any(|n| n.contains("c1(mu_m) = [km]_n for all cases: false"));
    if !recorded {
        rep.passed = false;
        rep.counterexamples.push("residue comparison not recorded".into());
    }
    Ok(rep)
}

fn small_nonorientable() -> Result<VerificationReport> {
    let mut rep = suite_small_nonorientable(8, 4)?;
    for g in [2, 4] {
        let spec = SurfaceBundleSpec::NonOrientable { cover_genus: g, rank: 5, class: BundleClass::Unspecified };
        let status = connectivity_nonorientable(&spec)?.status;
        if status != ConnectivityStatus::LowerBoundOnly {
            rep.passed = false;
            rep.counterexamples.push(format!("n=5 gt={g}: {status:?}"));
        }
    }
    Ok(rep)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "cyclic set formula, n<=12, |k|<=12", limit: Some(Duration::from_secs(1)), run: cyclic },
    Criterion {
        id: 2,
        name: "orientable closed form = brute force, n<=8, |k|<=8, g<=3",
        limit: Some(Duration::from_secs(30)),
        run: || suite_orientable(8, 8, 3),
    },
    Criterion { id: 3, name: "non-minimal example at n=6, k=2", limit: None, run: suite_non_minimal_example },
    Criterion {
        id: 4,
        name: "non-orientable closed form, 9<=n<=14, gt in {2,3}",
        limit: Some(Duration::from_secs(60)),
        run: || suite_nonorientable(9..=14, &[2, 3]),
    },
    Criterion { id: 5, name: "Klein bottle connectivity, n<=12", limit: None, run: || suite_klein(12) },
    Criterion { id: 6, name: "n=5, gt in {2,4} is lower_bound_only", limit: None, run: small_nonorientable },
    Criterion {
        id: 7,
        name: "linear extensions valid, n<=5, |k|<=5, g<=3, D<=15",
        limit: Some(Duration::from_secs(30)),
        run: || suite_extension(5, 5, 3, 15),
    },
    Criterion {
        id: 8,
        name: "minimal covers = naive covers, n<=5, |k|<=5",
        limit: Some(Duration::from_secs(60)),
        run: || suite_covers(5, 5),
    },
    Criterion {
        id: 9,
        name: "critical values monotone, n<=6, c<20",
        limit: Some(Duration::from_secs(60)),
        run: || suite_monotone(6, 6, 3, 20),
    },
    Criterion {
        id: 10,
        name: "enumeration = box oracle, n<=5, |k|<=5, g<=3, D<=15",
        limit: None,
        run: || suite_enumeration(5, 5, 3, 15),
    },
];

fn main() -> ExitCode {
    let mut all = true;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match &outcome {
            Ok(rep) => {
                let in_time = c.limit.map_or(true, |l| elapsed < l);
                let mut detail = format!("{} cases", rep.cases);
                if !in_time {
                    detail.push_str(&format!(", over time limit {:?}", c.limit.unwrap()));
                }
                if let Some(first) = rep.counterexamples.first() {
                    detail.push_str(&format!(", first failure: {first}"));
                }
                (rep.passed && in_time, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!(
            "criterion {:>2} {}: {} ({detail}, {:.2?})",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            elapsed
        );
        if let Ok(rep) = &outcome {
            for note in rep.notes.iter().filter(|_| c.id == 1 || c.id == 3) {
                println!("    note: {note}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

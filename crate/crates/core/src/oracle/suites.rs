//! Parameter sweeps pitting the optimized modules against the naive
//! routines and the closed forms. Each returns a [`VerificationReport`].

use std::collections::BTreeSet;
use std::time::Instant;

use super::{
    check_monotone_critical, fmt_pairs, is_admissible, length_two_minimum, naive_codim, naive_covers,
    naive_dominates, oracle_enumerate_box_multi, verify_reductions, Pairs, VerificationReport,
};
use crate::connectivity::{
    connectivity_nonorientable, enumerate_symmetric, min_codim_orientable_bruteforce, min_codim_orientable_formula,
    nonorientable_bruteforce, symmetric_mu, symmetric_mu_codim, BundleClass, ConnectivityStatus, EmptinessStatus,
    SurfaceBundleSpec,
};
use crate::error::Result;
use crate::poset::{
    cover_search_bounds, dominates, dominates_by_path, enumerate_strata, linear_extension, minimal_covers,
    slope_threshold_point, validate_extension,
};
use crate::strata::{codimension, make_sequence};

/// Codimension bound (genus 1) used to pick the sequences whose covers are compared.
pub const COVER_SWEEP_BOUND: i64 = 10;

pub use super::suite_cyclic;

fn report(suite: &str) -> VerificationReport {
    VerificationReport::new(suite)
}

/// Closed form against brute force for `2 <= n <= n_max`, `|k| <= k_max`, `1 <= g <= g_max`.
pub fn suite_orientable(n_max: i64, k_max: i64, g_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("orientable");
    for n in 2..=n_max {
        for k in -k_max..=k_max {
            for g in 1..=g_max {
                let formula = min_codim_orientable_formula(n, k, g)?;
                let brute = min_codim_orientable_bruteforce(n, k, g)?;
                rep.check(formula.min_codim == brute.min_codim, || {
                    format!("n={n} k={k} g={g}: formula {:?} vs brute force {:?}", formula.min_codim, brute.min_codim)
                });
                let w = formula.witness.as_ref().expect("n >= 2 has a witness");
                rep.check(Some(2 * codimension(w, g)?.c) == formula.min_codim, || {
                    format!("n={n} k={k} g={g}: witness {w} does not attain d")
                });
                rep.check(brute.gap_certificate && formula.status == ConnectivityStatus::Exact, || {
                    format!("n={n} k={k} g={g}: status not exact")
                });
            }
        }
    }
    Ok(rep.timed(start))
}

/// The rank 6, degree 2 example: a stratum above another with smaller codimension.
pub fn suite_non_minimal_example() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("non-minimal-example");
    let upper = make_sequence(&[(1, 1), (5, 1)])?;
    let lower = make_sequence(&[(2, 1), (4, 1)])?;
    for g in [2, 3] {
        let (cu, cl) = (codimension(&upper, g)?.c, codimension(&lower, g)?.c);
        rep.check(cu == 4 + 5 * (g - 1), || format!("g={g}: c{upper} = {cu}"));
        rep.check(cl == 2 + 8 * (g - 1), || format!("g={g}: c{lower} = {cl}"));
    }
    rep.check(dominates(&upper, &lower)?, || format!("{upper} does not dominate {lower}"));
    let (cu, cl) = (codimension(&upper, 2)?.c, codimension(&lower, 2)?.c);
    rep.check(cu < cl, || format!("g=2: expected {cu} < {cl}"));
    let brute = min_codim_orientable_bruteforce(6, 2, 2)?;
    let witness = make_sequence(&[(5, 2), (1, 0)])?;
    rep.check(brute.min_codim == Some(14) && brute.witness.as_ref() == Some(&witness), || {
        format!("global minimum at g=2 is {:?} with witness {:?}", brute.min_codim, brute.witness)
    });
    let (c, w) = length_two_minimum(6, 2, 2);
    rep.check(c == 7 && w == vec![vec![(5, 2), (1, 0)]], || format!("length-2 minimum {c} at {w:?}"));
    rep.notes.push(format!(
        "{upper} is not the minimum-codimension stratum for n=6, k=2: c = 4+5(g-1) exceeds c{witness} = 2+5(g-1)"
    ));
    Ok(rep.timed(start))
}

/// `2n g - 3g + 1` against the brute-force minimum over certified non-empty
/// symmetric strata, with witness `mu_1` and a certified gap.
pub fn suite_nonorientable(n_range: std::ops::RangeInclusive<i64>, genera: &[i64]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("nonorientable");
    for n in n_range {
        for &g in genera {
            let expected = 2 * n * g - 3 * g + 1;
            let brute = nonorientable_bruteforce(n, g, BundleClass::Unspecified)?;
            let mu1 = symmetric_mu(n, 1)?.full().clone();
            rep.check(brute.min_codim == Some(expected), || {
                format!("n={n} gt={g}: brute force {:?} vs {expected}", brute.min_codim)
            });
            rep.check(brute.witness.as_ref() == Some(&mu1), || {
                format!("n={n} gt={g}: witness {:?}", brute.witness)
            });
            rep.check(brute.gap_certificate && brute.status == ConnectivityStatus::Exact, || {
                format!("n={n} gt={g}: gap not certified")
            });
            let spec = SurfaceBundleSpec::NonOrientable { cover_genus: g, rank: n, class: BundleClass::Unspecified };
            let res = connectivity_nonorientable(&spec)?;
            rep.check(res.connectivity == Some(2 * n * g - 3 * g - 1), || {
                format!("n={n} gt={g}: connectivity {:?}", res.connectivity)
            });
        }
    }
    Ok(rep.timed(start))
}

/// Klein bottle: odd `n` gives `n - 1`; even `n` gives `n - 2` for the
/// minus class and `n` for the plus class.
pub fn suite_klein(n_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("klein");
    for n in 2..=n_max {
        let classes: &[(BundleClass, i64)] = if n % 2 == 1 {
            &[(BundleClass::Unspecified, n - 1), (BundleClass::Plus, n - 1), (BundleClass::Minus, n - 1)]
        } else {
            &[(BundleClass::Minus, n - 2), (BundleClass::Plus, n)]
        };
        for &(class, expected) in classes {
            let spec = SurfaceBundleSpec::NonOrientable { cover_genus: 1, rank: n, class };
            let res = connectivity_nonorientable(&spec)?;
            rep.check(res.connectivity == Some(expected), || {
                format!("n={n} class={class:?}: connectivity {:?}, expected {expected}", res.connectivity)
            });
            rep.check(res.status == ConnectivityStatus::Exact, || format!("n={n} class={class:?}: not exact"));
            let brute = nonorientable_bruteforce(n, 1, class)?;
            rep.check(brute.min_codim == res.min_codim, || {
                format!("n={n} class={class:?}: brute force {:?} vs {:?}", brute.min_codim, res.min_codim)
            });
        }
        if n % 2 == 0 {
            // pure pairs ((n/2,k),(n/2,-k)) carry exactly one class, by parity of n + k + 2
            for s in enumerate_symmetric(n, 1, 4 * n + 1)?.iter().filter(|s| s.sequence.is_pure_pair()) {
                let k = s.sequence.half()[0].degree;
                let plus_side = (n + k + 2) % 2 == 0;
                let ok = (s.plus == EmptinessStatus::Nonempty) == plus_side
                    && (s.minus == EmptinessStatus::Nonempty) == !plus_side
                    && s.plus != s.minus;
                rep.check(ok, || format!("n={n} k={k}: plus {:?} minus {:?}", s.plus, s.minus));
            }
        }
    }
    Ok(rep.timed(start))
}

/// Statuses for small ranks over non-orientable surfaces with `gt >= 2`.
pub fn suite_small_nonorientable(n_max: i64, gt_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("small-nonorientable");
    for n in 2..=n_max {
        for g in 2..=gt_max {
            let spec = SurfaceBundleSpec::NonOrientable { cover_genus: g, rank: n, class: BundleClass::Unspecified };
            let res = connectivity_nonorientable(&spec)?;
            if n == 5 && (g == 2 || g == 4) {
                rep.check(res.status == ConnectivityStatus::LowerBoundOnly && !res.gap_certificate, || {
                    format!("n=5 gt={g}: expected lower_bound_only, got {}", res.status.as_str())
                });
            }
            rep.notes.push(format!(
                "n={n} gt={g}: d={} status={} gap={} witness={}",
                res.min_codim.map_or("-".into(), |d| d.to_string()),
                res.status.as_str(),
                res.gap_certificate,
                res.witness.as_ref().map_or("-".into(), |w| w.to_string())
            ));
        }
    }
    Ok(rep.timed(start))
}

/// `c(mu_i)` closed form against the generic codimension, and the two
/// symmetric reduction inequalities, on naively generated sequences.
pub fn suite_symmetric(n_max: i64, gt_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("symmetric");
    for n in 2..=n_max.max(14) {
        for g in 1..=gt_max.max(4) {
            for i in 1..=n / 2 {
                let mut mu: Pairs = vec![(i, 1)];
                if n > 2 * i {
                    mu.push((n - 2 * i, 0));
                }
                mu.push((i, -1));
                let c = naive_codim(&mu, g);
                rep.check(c == symmetric_mu_codim(n, i, g), || format!("n={n} gt={g} i={i}: c = {c}"));
            }
        }
    }
    const MAX_HALF_DEGREE: i64 = 4;
    for n in 2..=n_max {
        for half_rank in 1..=n / 2 {
            for comp in super::compositions(half_rank) {
                for degs in super::degree_tuples(comp.len(), MAX_HALF_DEGREE) {
                    let half: Pairs = comp.iter().copied().zip(degs).collect();
                    if half.iter().any(|b| b.1 < 1) || !is_admissible(&half) {
                        continue;
                    }
                    let n0 = n - 2 * half_rank;
                    let full = |h: &[(i64, i64)]| {
                        let mut v = h.to_vec();
                        if n0 > 0 {
                            v.push((n0, 0));
                        }
                        v.extend(h.iter().rev().map(|&(r, d)| (r, -d)));
                        v
                    };
                    for g in 1..=gt_max {
                        let c = naive_codim(&full(&half), g);
                        let reduced = if half.len() > 1 {
                            vec![(half_rank, half.iter().map(|b| b.1).sum())]
                        } else if half[0].1 > 1 {
                            vec![(half_rank, 1)]
                        } else {
                            continue;
                        };
                        let c0 = naive_codim(&full(&reduced), g);
                        rep.check(c >= c0 + 2, || {
                            format!("gt={g}: c{} = {c} < c{} + 2 = {}", fmt_pairs(&full(&half)), fmt_pairs(&full(&reduced)), c0 + 2)
                        });
                    }
                }
            }
        }
    }
    Ok(rep.timed(start))
}

/// Linear extensions of every `enumerate_strata(n, k, g, D)` in range.
pub fn suite_extension(n_max: i64, k_max: i64, g_max: i64, d_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("extension");
    for n in 1..=n_max {
        for k in -k_max..=k_max {
            for g in 1..=g_max {
                for d in 1..=d_max {
                    let set = enumerate_strata(n, k, g, d)?;
                    let ext = linear_extension(&set)?;
                    let semistable = make_sequence(&[(n, k)])?;
                    rep.check(ext.order.first() == Some(&semistable), || {
                        format!("n={n} k={k} g={g} D={d}: order starts with {:?}", ext.order.first())
                    });
                    rep.check(ext.order.len() == set.len(), || format!("n={n} k={k} g={g} D={d}: not a permutation"));
                    rep.check(validate_extension(&ext), || format!("n={n} k={k} g={g} D={d}: validation failed"));
                }
            }
        }
    }
    Ok(rep.timed(start))
}

/// `minimal_covers` against [`naive_covers`] for every sequence of
/// `enumerate_strata(n, k, 1, COVER_SWEEP_BOUND)`, plus the region bound
/// for covers of paths with three or more segments.
pub fn suite_covers(n_max: i64, k_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("covers");
    for n in 1..=n_max {
        for k in -k_max..=k_max {
            for mu in enumerate_strata(n, k, 1, COVER_SWEEP_BOUND)?.members {
                let fast: BTreeSet<Pairs> = minimal_covers(&mu)?.iter().map(|c| c.pairs()).collect();
                let naive = naive_covers(&mu.pairs());
                rep.check(fast == naive, || format!("covers of {mu}: {fast:?} vs naive {naive:?}"));
                if mu.len() > 2 {
                    let bounds = cover_search_bounds(&mu)?;
                    for c in &fast {
                        let q = make_sequence(c)?;
                        let h = slope_threshold_point(&q).expect("a cover is not the straight path");
                        rep.check(h.1 <= bounds.h2_bound, || {
                            format!("cover {q} of {mu}: h2 = {} > {}", h.1, bounds.h2_bound)
                        });
                    }
                }
            }
        }
    }
    Ok(rep.timed(start))
}

/// Critical values never decrease along dominance, over all comparable
/// pairs of `enumerate_strata(n, k, g, c_bound)`.
pub fn suite_monotone(n_max: i64, k_max: i64, g_max: i64, c_bound: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("monotone");
    for n in 1..=n_max {
        for k in -k_max..=k_max {
            for g in 1..=g_max {
                let members: Vec<Pairs> =
                    enumerate_strata(n, k, g, c_bound)?.members.iter().map(|m| m.pairs()).collect();
                check_monotone_critical(&members, &mut rep);
            }
        }
    }
    Ok(rep.timed(start))
}

/// `enumerate_strata` against the box enumeration as sets, and the two
/// dominance formulations against each other and the naive one.
pub fn suite_enumeration(n_max: i64, k_max: i64, g_max: i64, d_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("enumeration");
    let genera: Vec<i64> = (1..=g_max).collect();
    for n in 1..=n_max {
        for k in -k_max..=k_max {
            let boxes = oracle_enumerate_box_multi(n, k, &genera, d_max)?;
            for oracle in &boxes {
                let g = oracle.genus;
                for d in 1..=d_max {
                    let expected: BTreeSet<Pairs> =
                        oracle.members.iter().filter(|p| naive_codim(p, g) < d).cloned().collect();
                    let set = enumerate_strata(n, k, g, d)?;
                    let got: BTreeSet<Pairs> = set.members.iter().map(|m| m.pairs()).collect();
                    rep.check(got.len() == set.len() && got == expected, || {
                        format!("n={n} k={k} g={g} D={d}: {} members vs oracle {}", set.len(), expected.len())
                    });
                }
                let set = enumerate_strata(n, k, g, d_max)?;
                for a in &set.members {
                    for b in &set.members {
                        let (x, y, z) = (dominates(a, b)?, dominates_by_path(a, b)?, naive_dominates(&a.pairs(), &b.pairs()));
                        rep.check(x == y && y == z, || format!("dominance disagrees on {a} vs {b}"));
                    }
                }
            }
        }
    }
    Ok(rep.timed(start))
}

/// [`verify_reductions`] for every `2 <= n <= n_max`.
pub fn suite_reductions(n_max: i64, k_bound: i64, g_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = report("reductions");
    for n in 2..=n_max {
        rep.merge(verify_reductions(n, k_bound, g_max)?);
    }
    Ok(rep.timed(start))
}

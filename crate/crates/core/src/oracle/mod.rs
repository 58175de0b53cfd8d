//! Naive brute-force verifiers.
//!
//! Nothing here calls into the optimized modules except where a check is
//! explicitly *about* their output; sequences are plain `(rank, degree)`
//! lists, and codimension, admissibility and dominance are recomputed from
//! their definitions. Only [`crate::arith`] is shared.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::arith::{gcd, residue, Rational};
use crate::error::{Error, Result};

pub mod suites;

pub type Pairs = Vec<(i64, i64)>;

/// Desk-scale limits for the box enumeration.
pub const MAX_RANK: i64 = 6;
pub const MAX_DEGREE: i64 = 6;
pub const MAX_BOUND: i64 = 20;

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub(crate) fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            passed: true,
            cases: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    fn fail(&mut self, what: String) {
        self.passed = false;
        // keep reports readable on large sweeps
        if self.counterexamples.len() < 50 {
            self.counterexamples.push(what);
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.passed &= other.passed;
        self.cases += other.cases;
        for c in other.counterexamples {
            if self.counterexamples.len() < 50 {
                self.counterexamples.push(c);
            }
        }
        self.notes.extend(other.notes);
    }
}

pub fn fmt_pairs(p: &[(i64, i64)]) -> String {
    let inner: Vec<String> = p.iter().map(|(n, k)| format!("({n},{k})")).collect();
    format!("({})", inner.join(","))
}

pub fn is_admissible(p: &[(i64, i64)]) -> bool {
    !p.is_empty()
        && p.iter().all(|&(n, _)| n > 0)
        && p.windows(2).all(|w| w[0].1 * w[1].0 > w[1].1 * w[0].0)
}

/// `c(mu)` straight from the double sum.
pub fn naive_codim(p: &[(i64, i64)], genus: i64) -> i64 {
    let mut c = 0;
    for i in 0..p.len() {
        for j in 0..i {
            let (ni, ki) = p[i];
            let (nj, kj) = p[j];
            c += ni * kj - nj * ki + ni * nj * (genus - 1);
        }
    }
    c
}

pub fn naive_c1(p: &[(i64, i64)]) -> i64 {
    naive_codim(p, 1)
}

pub fn naive_critical_value(p: &[(i64, i64)]) -> Rational {
    p.iter().fold(Rational::ZERO, |acc, &(n, k)| {
        acc.checked_add(Rational::new(k * k, n).unwrap()).unwrap()
    })
}

/// `lambda >= mu` by prefix sums of the expanded slope vectors.
pub fn naive_dominates(lambda: &[(i64, i64)], mu: &[(i64, i64)]) -> bool {
    let expand = |p: &[(i64, i64)]| -> Vec<Rational> {
        let mut v = Vec::new();
        for &(n, k) in p {
            for _ in 0..n {
                v.push(Rational::new(k, n).unwrap());
            }
        }
        v
    };
    let (a, b) = (expand(lambda), expand(mu));
    if a.len() != b.len() {
        return false;
    }
    let (mut sa, mut sb) = (Rational::ZERO, Rational::ZERO);
    for (x, y) in a.into_iter().zip(b) {
        sa = sa.checked_add(x).unwrap();
        sb = sb.checked_add(y).unwrap();
        if sa < sb {
            return false;
        }
    }
    let total = |p: &[(i64, i64)]| p.iter().map(|b| b.1).sum::<i64>();
    total(lambda) == total(mu)
}

/// Every admissible sequence of rank `n`, degree `k` whose block degrees lie
/// in `[lo, hi]`, passed to `visit`. Partial tuples are dropped as soon as
/// they break admissibility.
fn box_sequences(n: i64, k: i64, lo: i64, hi: i64, visit: &mut dyn FnMut(&[(i64, i64)])) {
    fn rec(
        rem_n: i64,
        rem_k: i64,
        lo: i64,
        hi: i64,
        cur: &mut Pairs,
        visit: &mut dyn FnMut(&[(i64, i64)]),
    ) {
        let prev = cur.last().copied();
        let slope_ok = |n: i64, d: i64| prev.map_or(true, |(pn, pk)| pk * n > d * pn);
        if (lo..=hi).contains(&rem_k) && slope_ok(rem_n, rem_k) {
            cur.push((rem_n, rem_k));
            visit(cur);
            cur.pop();
        }
        for ni in 1..rem_n {
            // whatever follows has smaller slope than this block: d > ni*rem_k/rem_n
            let d_min = lo.max((ni * rem_k).div_euclid(rem_n) + 1);
            // strictly below the previous slope: d < ni*pk/pn
            let d_max = prev.map_or(hi, |(pn, pk)| hi.min(-(-(ni * pk)).div_euclid(pn) - 1));
            for d in d_min..=d_max {
                debug_assert!(slope_ok(ni, d) && (rem_k - d) * ni < d * (rem_n - ni));
                cur.push((ni, d));
                rec(rem_n - ni, rem_k - d, lo, hi, cur, visit);
                cur.pop();
            }
        }
    }
    rec(n, k, lo, hi, &mut Vec::new(), visit);
}

/// Box limits `[k - D - nD, k + D + nD]`. Every block degree of a sequence
/// with `c < D` lies within `D/n` of `n_i k / n`, well inside this box.
pub fn box_limits(n: i64, k: i64, bound: i64) -> (i64, i64) {
    (k - bound - n * bound, k + bound + n * bound)
}

fn check_limits(n: i64, k: i64, bound: i64) -> Result<()> {
    if !(1..=MAX_RANK).contains(&n) || k.abs() > MAX_DEGREE || !(1..=MAX_BOUND).contains(&bound) {
        return Err(Error::OracleLimit(format!(
            "n={n}, k={k}, D={bound}; limits are 1<=n<={MAX_RANK}, |k|<={MAX_DEGREE}, 1<=D<={MAX_BOUND}"
        )));
    }
    Ok(())
}

/// Result of the box enumeration, as plain pair lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleStrata {
    pub rank: i64,
    pub degree: i64,
    pub genus: i64,
    pub bound: i64,
    pub members: BTreeSet<Pairs>,
}

/// All admissible sequences in the explicit degree box, filtered by `c < D`.
pub fn oracle_enumerate_box(n: i64, k: i64, genus: i64, bound: i64) -> Result<OracleStrata> {
    check_limits(n, k, bound)?;
    if genus < 1 {
        return Err(Error::UnsupportedGenus(genus));
    }
    let per_genus = oracle_enumerate_box_multi(n, k, &[genus], bound)?;
    Ok(per_genus.into_iter().next().expect("one genus requested"))
}

/// One box pass serving several genera: for each `g`, every sequence with
/// `c(mu, g) < bound`. Smaller bounds are obtained by filtering.
pub fn oracle_enumerate_box_multi(n: i64, k: i64, genera: &[i64], bound: i64) -> Result<Vec<OracleStrata>> {
    check_limits(n, k, bound)?;
    let (lo, hi) = box_limits(n, k, bound);
    let mut out: Vec<OracleStrata> = genera
        .iter()
        .map(|&genus| OracleStrata { rank: n, degree: k, genus, bound, members: BTreeSet::new() })
        .collect();
    box_sequences(n, k, lo, hi, &mut |p| {
        debug_assert!(is_admissible(p));
        for set in out.iter_mut() {
            if naive_codim(p, set.genus) < bound {
                set.members.insert(p.to_vec());
            }
        }
    });
    Ok(out)
}

/// `mu_m` built directly: `ceil_strict(km/n) = floor(km/n) + 1`.
pub fn naive_mu_m(n: i64, k: i64, m: i64) -> Pairs {
    let head = (k * m).div_euclid(n) + 1;
    vec![(m, head), (n - m, k - head)]
}

/// Details of one `(n, k)` cyclic check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicCase {
    pub n: i64,
    pub k: i64,
    pub values: BTreeSet<i64>,
    pub expected: BTreeSet<i64>,
    /// `c1(mu_m) = [-km]_n` for every `m`.
    pub matches_negative_residue: bool,
    /// `c1(mu_m) = [km]_n` for every `m`.
    pub matches_positive_residue: bool,
}

pub fn cyclic_case(n: i64, k: i64) -> Result<CyclicCase> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cyclic check needs n >= 2, got {n}")));
    }
    let mut values = BTreeSet::new();
    let (mut neg, mut pos) = (true, true);
    for m in 1..n {
        let mu = naive_mu_m(n, k, m);
        if !is_admissible(&mu) {
            return Err(Error::SlopeOrder { block: 2 });
        }
        let c1 = naive_c1(&mu);
        values.insert(c1);
        neg &= c1 == residue(-k * m, n)?;
        pos &= c1 == residue(k * m, n)?;
    }
    let d = gcd(n, k);
    let mut expected: BTreeSet<i64> = (1..=n / d).map(|i| i * d).collect();
    if d == 1 {
        expected.remove(&n);
    }
    Ok(CyclicCase {
        n,
        k,
        values,
        expected,
        matches_negative_residue: neg,
        matches_positive_residue: pos,
    })
}

pub fn verify_cyclic(n: i64, k: i64) -> Result<VerificationReport> {
    let case = cyclic_case(n, k)?;
    let mut report = VerificationReport::new("cyclic");
    report.check(case.values == case.expected, || {
        format!("n={n} k={k}: c1 values {:?} != expected {:?}", case.values, case.expected)
    });
    report.check(case.matches_negative_residue, || {
        format!("n={n} k={k}: c1(mu_m) differs from [-km]_n")
    });
    if !case.matches_positive_residue {
        report.notes.push(format!("n={n} k={k}: c1(mu_m) = [-km]_n, not [km]_n"));
    }
    Ok(report)
}

/// Sweep of the cyclic set formula over `2 <= n <= n_max`, `|k| <= k_max`.
pub fn suite_cyclic(n_max: i64, k_max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("cyclic");
    let (mut neg_all, mut pos_all) = (true, true);
    let mut pos_mismatches = 0u64;
    for n in 2..=n_max {
        for k in -k_max..=k_max {
            let case = cyclic_case(n, k)?;
            report.check(case.values == case.expected, || {
                format!("n={n} k={k}: c1 values {:?} != expected {:?}", case.values, case.expected)
            });
            neg_all &= case.matches_negative_residue;
            pos_all &= case.matches_positive_residue;
            pos_mismatches += u64::from(!case.matches_positive_residue);
        }
    }
    report.check(neg_all, || "c1(mu_m) differs from [-km]_n somewhere".into());
    report.notes.push(format!(
        "c1(mu_m) = [-km]_n for all cases: {neg_all}; c1(mu_m) = [km]_n for all cases: {pos_all} ({pos_mismatches} (n,k) pairs disagree with [km]_n)"
    ));
    Ok(report.timed(start))
}

/// Pairwise critical-value check over a list of sequences of one `(n, k)`.
pub fn check_monotone_critical(members: &[Pairs], report: &mut VerificationReport) {
    let values: Vec<Rational> = members.iter().map(|p| naive_critical_value(p)).collect();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate() {
            if naive_dominates(a, b) {
                report.check(values[i] >= values[j], || {
                    format!("{} >= {} but l = {} < {}", fmt_pairs(a), fmt_pairs(b), values[i], values[j])
                });
            }
        }
    }
}

/// `lambda >= mu => l(lambda) >= l(mu)` on every comparable pair of
/// `poset::enumerate_strata(n, k, g, D)`.
pub fn verify_monotone_critical(n: i64, k: i64, genus: i64, bound: i64) -> Result<VerificationReport> {
    let set = crate::poset::enumerate_strata(n, k, genus, bound)?;
    let members: Vec<Pairs> = set.members.iter().map(|m| m.pairs()).collect();
    let mut report = VerificationReport::new("monotone");
    check_monotone_critical(&members, &mut report);
    Ok(report)
}

/// Minimum codimension over all admissible length-2 splits of `(n, k)`,
/// scanning `l` in a window of width `2n` around `km/n`. Returns the
/// minimum and every split attaining it.
pub fn length_two_minimum(n: i64, k: i64, genus: i64) -> (i64, Vec<Pairs>) {
    let mut best = i64::MAX;
    let mut witnesses = Vec::new();
    for m in 1..n {
        let centre = (k * m).div_euclid(n);
        for l in centre - n..=centre + n {
            let mu = vec![(m, l), (n - m, k - l)];
            if !is_admissible(&mu) {
                continue;
            }
            let c = naive_codim(&mu, genus);
            if c < best {
                best = c;
                witnesses.clear();
            }
            if c == best {
                witnesses.push(mu);
            }
        }
    }
    (best, witnesses)
}

pub(crate) fn compositions(n: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub(crate) fn degree_tuples(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (-bound..=bound).map(move |d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

/// Exhaustive checks of the two codimension reductions:
/// collapsing the first `r - 1` blocks strictly lowers `c` when `r > 2`,
/// and among length-2 splits with first rank `m`, `mu_m` is the unique
/// minimizer.
pub fn verify_reductions(n: i64, k_bound: i64, g_max: i64) -> Result<VerificationReport> {
    if !(2..=MAX_RANK).contains(&n) || !(0..=MAX_DEGREE).contains(&k_bound) || !(1..=3).contains(&g_max) {
        return Err(Error::OracleLimit(format!(
            "n={n}, k_bound={k_bound}, g_max={g_max}; limits are 2<=n<={MAX_RANK}, 0<=k_bound<={MAX_DEGREE}, 1<=g_max<=3"
        )));
    }
    let mut report = VerificationReport::new("reductions");
    for comp in compositions(n).into_iter().filter(|c| c.len() > 2) {
        for degs in degree_tuples(comp.len(), k_bound) {
            let mu: Pairs = comp.iter().copied().zip(degs).collect();
            if !is_admissible(&mu) {
                continue;
            }
            let head = &mu[..mu.len() - 1];
            let collapsed = vec![
                (head.iter().map(|b| b.0).sum(), head.iter().map(|b| b.1).sum()),
                mu[mu.len() - 1],
            ];
            for g in 1..=g_max {
                let (a, b) = (naive_codim(&mu, g), naive_codim(&collapsed, g));
                report.check(a > b, || {
                    format!("g={g}: c{} = {a} <= c{} = {b}", fmt_pairs(&mu), fmt_pairs(&collapsed))
                });
            }
        }
    }
    for k in -k_bound..=k_bound {
        for m in 1..n {
            let canonical = naive_mu_m(n, k, m);
            let centre = (k * m).div_euclid(n);
            for l in centre - n..=centre + n {
                let mu = vec![(m, l), (n - m, k - l)];
                if !is_admissible(&mu) {
                    continue;
                }
                for g in 1..=g_max {
                    let (c, c0) = (naive_codim(&mu, g), naive_codim(&canonical, g));
                    let ok = if mu == canonical { c == c0 } else { c > c0 };
                    report.check(ok, || {
                        format!("g={g}: c{} = {c} vs c{} = {c0}", fmt_pairs(&mu), fmt_pairs(&canonical))
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Covers of `mu` by full pairwise dominance on a superset.
///
/// The superset holds every admissible sequence of the same `(n, k)` whose
/// path vertices lie in a height band from `floor(min P(mu))` to
/// `ceil(max P(mu)) + 2`. The band contains every path between `mu` and any
/// member, and every cover of `mu` stays within one unit above `P(mu)`, so
/// the minimal members strictly above `mu` are exactly its covers.
pub fn naive_covers(mu: &[(i64, i64)]) -> BTreeSet<Pairs> {
    let n: i64 = mu.iter().map(|b| b.0).sum();
    let k: i64 = mu.iter().map(|b| b.1).sum();
    let mut heights = vec![0i64];
    let mut acc = 0;
    for &(_, d) in mu {
        acc += d;
        heights.push(acc);
    }
    let y_lo = *heights.iter().min().unwrap();
    let y_hi = *heights.iter().max().unwrap() + 2;
    let span = y_hi - y_lo;
    let mut above: Vec<Pairs> = Vec::new();
    box_sequences(n, k, -span, span, &mut |p| {
        let mut y = 0;
        let inside = p.iter().all(|&(_, d)| {
            y += d;
            (y_lo..=y_hi).contains(&y)
        });
        if inside && p != mu && naive_dominates(p, mu) {
            above.push(p.to_vec());
        }
    });
    above
        .iter()
        .filter(|lam| !above.iter().any(|nu| nu != *lam && naive_dominates(lam, nu)))
        .cloned()
        .collect()
}

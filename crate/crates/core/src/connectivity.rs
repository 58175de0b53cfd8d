//! Minimum positive stratum codimension `d(E)` and the connectivity `d - 2`
//! of the minimum critical set, by closed form and by brute force.
//!
//! Orientable surfaces use complex codimensions (real codimension `2c`).
//! Non-orientable surfaces use symmetric strata on the orientable double
//! cover, whose fixed-point sets have real codimension `c` computed at the
//! cover's genus.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{self, gcd, residue};
use crate::error::{Error, Result};
use crate::poset::enumerate_strata;
use crate::strata::{canonical_length_two, codimension, make_sequence, AdmissibleSequence, Block, CodimensionReport};

/// The two complex bundle classes over the Klein bottle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BundleClass {
    Plus,
    Minus,
    Unspecified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceBundleSpec {
    Orientable { genus: i64, rank: i64, degree: i64 },
    NonOrientable { cover_genus: i64, rank: i64, class: BundleClass },
}

impl FromStr for SurfaceBundleSpec {
    type Err = Error;

    /// Comma-separated `key=value` list led by `orientable` or
    /// `nonorientable`, e.g. `orientable,g=2,n=6,k=2` or
    /// `nonorientable,gt=1,n=4,class=minus`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidSurface(msg);
        let mut parts = s.split(',').map(str::trim);
        let kind = parts.next().unwrap_or_default();
        let orientable = match kind {
            "orientable" => true,
            "nonorientable" => false,
            other => return Err(bad(format!("expected 'orientable' or 'nonorientable', got '{other}'"))),
        };
        let (mut genus, mut rank, mut degree, mut class) = (None, None, None, BundleClass::Unspecified);
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got '{part}'")))?;
            let int = || value.parse::<i64>().map_err(|_| bad(format!("'{key}' needs an integer, got '{value}'")));
            match (key, orientable) {
                ("g", true) | ("gt", false) => genus = Some(int()?),
                ("n", _) => rank = Some(int()?),
                ("k", true) => degree = Some(int()?),
                ("class", false) => {
                    class = match value {
                        "plus" | "+" => BundleClass::Plus,
                        "minus" | "-" => BundleClass::Minus,
                        _ => return Err(bad(format!("class must be plus or minus, got '{value}'"))),
                    }
                }
                _ => return Err(bad(format!("unexpected key '{key}' for {kind} surface"))),
            }
        }
        let genus_key = if orientable { "g" } else { "gt" };
        let genus = genus.ok_or_else(|| bad(format!("missing '{genus_key}'")))?;
        let rank = rank.ok_or_else(|| bad("missing 'n'".into()))?;
        Ok(if orientable {
            SurfaceBundleSpec::Orientable { genus, rank, degree: degree.unwrap_or(0) }
        } else {
            SurfaceBundleSpec::NonOrientable { cover_genus: genus, rank, class }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityStatus {
    Exact,
    LowerBoundOnly,
    /// Rank one over an orientable surface: there is no non-central stratum.
    NoStratum,
}

impl ConnectivityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ConnectivityStatus::Exact => "exact",
            ConnectivityStatus::LowerBoundOnly => "lower_bound_only",
            ConnectivityStatus::NoStratum => "no_stratum",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityResult {
    #[serde(rename = "d")]
    pub min_codim: Option<i64>,
    pub connectivity: Option<i64>,
    pub witness: Option<AdmissibleSequence>,
    pub status: ConnectivityStatus,
    pub gap_certificate: bool,
}

impl ConnectivityResult {
    fn found(d: i64, witness: AdmissibleSequence, gap: bool, exact: bool) -> Self {
        ConnectivityResult {
            min_codim: Some(d),
            connectivity: Some(d - 2),
            witness: Some(witness),
            status: if exact && gap { ConnectivityStatus::Exact } else { ConnectivityStatus::LowerBoundOnly },
            gap_certificate: gap,
        }
    }

    fn no_stratum() -> Self {
        ConnectivityResult {
            min_codim: None,
            connectivity: None,
            witness: None,
            status: ConnectivityStatus::NoStratum,
            gap_certificate: true,
        }
    }
}

fn check_orientable(n: i64, genus: i64) -> Result<()> {
    if genus < 1 {
        return Err(Error::UnsupportedGenus(genus));
    }
    if n < 1 {
        return Err(Error::InvalidParameter(format!("rank {n} must be positive")));
    }
    Ok(())
}

/// Closed form: `d = 2 gcd(n, k)` in genus 1 and
/// `d = 2 min([k]_n, [-k]_n) + 2 (g - 1)(n - 1)` otherwise.
pub fn min_codim_orientable_formula(n: i64, k: i64, genus: i64) -> Result<ConnectivityResult> {
    check_orientable(n, genus)?;
    if n == 1 {
        return Ok(ConnectivityResult::no_stratum());
    }
    let (d, witness) = if genus == 1 {
        let g = gcd(n, k);
        // c1(mu_m) = [-km]_n; take the largest m attaining the gcd
        let mut m = n - 1;
        while residue(-k * m, n)? != g {
            m -= 1;
        }
        (2 * g, canonical_length_two(n, k, m)?)
    } else {
        let (up, down) = (residue(k, n)?, residue(-k, n)?);
        let spread = arith::mul(arith::mul(genus - 1, n - 1)?, 2)?;
        if up <= down {
            (2 * up + spread, canonical_length_two(n, k, n - 1)?)
        } else {
            (2 * down + spread, canonical_length_two(n, k, 1)?)
        }
    };
    Ok(ConnectivityResult::found(d, witness, true, true))
}

/// Minimum of `2 c(mu, g)` over non-central strata, by growing the
/// codimension bound until it clears the minimum by more than one.
pub fn min_codim_orientable_bruteforce(n: i64, k: i64, genus: i64) -> Result<ConnectivityResult> {
    check_orientable(n, genus)?;
    if n == 1 {
        return Ok(ConnectivityResult::no_stratum());
    }
    let mut bound = 2;
    loop {
        let set = enumerate_strata(n, k, genus, bound)?;
        let mut best: Option<(i64, &AdmissibleSequence)> = None;
        for mu in set.members.iter().filter(|m| !m.is_semistable()) {
            let c = codimension(mu, genus)?.c;
            if best.map_or(true, |(b, _)| c < b) {
                best = Some((c, mu));
            }
        }
        if let Some((c, mu)) = best {
            if bound > c + 1 {
                // real codimensions 2c are even, so 2c + 1 never occurs
                return Ok(ConnectivityResult::found(2 * c, mu.clone(), true, true));
            }
        }
        bound = arith::mul(bound, 2)?;
    }
}

/// `((n_1,k_1),...,(n_r,k_r),(n_0,0),(n_r,-k_r),...,(n_1,-k_1))`, the middle
/// block omitted when `n_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricSequence {
    half: Vec<Block>,
    middle_rank: i64,
    #[serde(skip)]
    full: AdmissibleSequence,
}

impl SymmetricSequence {
    pub fn new(half: Vec<Block>, middle_rank: i64) -> Result<Self> {
        if middle_rank < 0 {
            return Err(Error::InvalidParameter(format!("middle rank {middle_rank} is negative")));
        }
        if half.is_empty() && middle_rank == 0 {
            return Err(Error::EmptySequence);
        }
        if let Some(b) = half.iter().find(|b| b.degree < 1) {
            return Err(Error::InvalidParameter(format!(
                "half-sequence degrees must be positive, got ({},{})",
                b.rank, b.degree
            )));
        }
        let mut blocks = half.clone();
        if middle_rank > 0 {
            blocks.push(Block::new(middle_rank, 0));
        }
        blocks.extend(half.iter().rev().map(|b| Block::new(b.rank, -b.degree)));
        let full = AdmissibleSequence::new(blocks)?;
        Ok(SymmetricSequence { half, middle_rank, full })
    }

    pub fn half(&self) -> &[Block] {
        &self.half
    }

    pub fn middle_rank(&self) -> i64 {
        self.middle_rank
    }

    pub fn full(&self) -> &AdmissibleSequence {
        &self.full
    }

    /// `((n/2, k), (n/2, -k))`
    pub fn is_pure_pair(&self) -> bool {
        self.half.len() == 1 && self.middle_rank == 0
    }
}

impl fmt::Display for SymmetricSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.full.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EmptinessStatus {
    Nonempty,
    Empty,
    Unknown,
}

/// Whether the fixed points of a symmetric stratum are non-empty for the
/// given bundle class.
pub fn emptiness(seq: &SymmetricSequence, cover_genus: i64, class: BundleClass) -> EmptinessStatus {
    if seq.middle_rank > 0 {
        return EmptinessStatus::Nonempty;
    }
    if cover_genus == 1 && seq.is_pure_pair() {
        // the pair ((n/2,k),(n/2,-k)) carries E+ when n + k + 2 is even, E- otherwise
        let n = seq.full.rank();
        let carrier = if (n + seq.half[0].degree + 2) % 2 == 0 { BundleClass::Plus } else { BundleClass::Minus };
        return match class {
            BundleClass::Unspecified => EmptinessStatus::Unknown,
            c if c == carrier => EmptinessStatus::Nonempty,
            _ => EmptinessStatus::Empty,
        };
    }
    EmptinessStatus::Unknown
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricStratum {
    pub sequence: SymmetricSequence,
    pub codim: CodimensionReport,
    pub plus: EmptinessStatus,
    pub minus: EmptinessStatus,
}

impl SymmetricStratum {
    pub fn status(&self, class: BundleClass) -> EmptinessStatus {
        match class {
            BundleClass::Plus => self.plus,
            BundleClass::Minus => self.minus,
            BundleClass::Unspecified if self.plus == self.minus => self.plus,
            BundleClass::Unspecified => EmptinessStatus::Unknown,
        }
    }
}

/// Every symmetric sequence of total rank `n` (the central `((n,0))`
/// included) with `c(full, cover_genus) < bound`, sorted by codimension and
/// then by vertex list.
pub fn enumerate_symmetric(n: i64, cover_genus: i64, bound: i64) -> Result<Vec<SymmetricStratum>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("rank {n} must be at least 2")));
    }
    if cover_genus < 1 {
        return Err(Error::UnsupportedGenus(cover_genus));
    }
    if bound < 1 {
        return Err(Error::InvalidParameter(format!("bound {bound} must be positive")));
    }

    // Growing the half refines the middle block, and merging blocks lowers
    // c, so c only grows along the search; a block (r, d) and its mirror
    // alone contribute 2rd.
    fn grow(
        half: &mut Vec<Block>,
        n: i64,
        genus: i64,
        bound: i64,
        out: &mut Vec<SymmetricSequence>,
    ) -> Result<()> {
        let used: i64 = half.iter().map(|b| b.rank).sum();
        for rank in 1..=(n - 2 * used) / 2 {
            let mut degree = 1;
            while 2 * rank * degree < bound {
                if let Some(p) = half.last() {
                    if degree * p.rank >= p.degree * rank {
                        break;
                    }
                }
                half.push(Block::new(rank, degree));
                let seq = SymmetricSequence::new(half.clone(), n - 2 * (used + rank))?;
                if codimension(seq.full(), genus)?.c < bound {
                    out.push(seq);
                    grow(half, n, genus, bound, out)?;
                }
                half.pop();
                degree += 1;
            }
        }
        Ok(())
    }

    let mut seqs = vec![SymmetricSequence::new(Vec::new(), n)?];
    grow(&mut Vec::new(), n, cover_genus, bound, &mut seqs)?;
    let mut out = Vec::with_capacity(seqs.len());
    for seq in seqs {
        let codim = codimension(seq.full(), cover_genus)?;
        out.push(SymmetricStratum {
            plus: emptiness(&seq, cover_genus, BundleClass::Plus),
            minus: emptiness(&seq, cover_genus, BundleClass::Minus),
            sequence: seq,
            codim,
        });
    }
    out.sort_by(|a, b| (a.codim.c, a.sequence.full.vertices()).cmp(&(b.codim.c, b.sequence.full.vertices())));
    Ok(out)
}

/// `mu_i = ((i,1),(n-2i,0),(i,-1))`.
pub fn symmetric_mu(n: i64, i: i64) -> Result<SymmetricSequence> {
    if i < 1 || 2 * i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n / 2 });
    }
    SymmetricSequence::new(vec![Block::new(i, 1)], n - 2 * i)
}

/// `c(mu_i) = 2n - 2i + (2ni - 3i^2)(g - 1)`.
pub fn symmetric_mu_codim(n: i64, i: i64, cover_genus: i64) -> i64 {
    2 * n - 2 * i + (2 * n * i - 3 * i * i) * (cover_genus - 1)
}

/// Minimum positive codimension over symmetric strata that are not known to
/// be empty for `class`.
///
/// The reported value is exact only when a certified non-empty stratum
/// attains it and no stratum that may be non-empty sits one above it.
pub fn nonorientable_bruteforce(n: i64, cover_genus: i64, class: BundleClass) -> Result<ConnectivityResult> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("rank {n} must be at least 2")));
    }
    if cover_genus < 1 {
        return Err(Error::UnsupportedGenus(cover_genus));
    }
    // mu_1 (or the pair ((1,2),(1,-2)) when n = 2) is non-empty for every
    // class except possibly one; 2n + 4 more covers the alternatives.
    let probe = symmetric_mu_codim(n, 1, cover_genus).max(4);
    let bound = arith::add(probe, 2 * n + 4)?;
    let strata = enumerate_symmetric(n, cover_genus, bound)?;
    let live: Vec<&SymmetricStratum> = strata
        .iter()
        .filter(|s| s.codim.c > 0 && s.status(class) != EmptinessStatus::Empty)
        .collect();
    let d = live.iter().map(|s| s.codim.c).min().ok_or_else(|| {
        Error::InvalidParameter(format!("no candidate stratum below {bound}"))
    })?;
    if d + 1 >= bound {
        return Err(Error::InvalidParameter(format!("bound {bound} does not certify the gap above {d}")));
    }
    let at_min: Vec<&&SymmetricStratum> = live.iter().filter(|s| s.codim.c == d).collect();
    let certified = at_min.iter().find(|s| s.status(class) == EmptinessStatus::Nonempty);
    let witness = certified.unwrap_or(&at_min[0]).sequence.full().clone();
    let gap = !live.iter().any(|s| s.codim.c == d + 1);
    Ok(ConnectivityResult::found(d, witness, gap, certified.is_some()))
}

fn klein_closed_form(n: i64, class: BundleClass) -> Result<(i64, AdmissibleSequence)> {
    if n % 2 == 1 {
        return Ok((n + 1, symmetric_mu(n, (n - 1) / 2)?.full().clone()));
    }
    match class {
        BundleClass::Unspecified => Err(Error::AmbiguousBundle),
        BundleClass::Minus => Ok((n, make_sequence(&[(n / 2, 1), (n / 2, -1)])?)),
        BundleClass::Plus if n == 2 => Ok((4, make_sequence(&[(1, 2), (1, -2)])?)),
        BundleClass::Plus => Ok((n + 2, symmetric_mu(n, n / 2 - 1)?.full().clone())),
    }
}

/// Connectivity of the space of flat connections over a non-orientable
/// surface whose double cover has genus `cover_genus`.
pub fn connectivity_nonorientable(spec: &SurfaceBundleSpec) -> Result<ConnectivityResult> {
    let SurfaceBundleSpec::NonOrientable { cover_genus, rank: n, class } = *spec else {
        return Err(Error::InvalidSurface("expected a non-orientable surface".into()));
    };
    if cover_genus < 1 {
        return Err(Error::UnsupportedGenus(cover_genus));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("rank {n} must be at least 2")));
    }
    let pinned = if cover_genus == 1 {
        Some(klein_closed_form(n, class)?)
    } else if n >= 9 {
        Some((2 * n * cover_genus - 3 * cover_genus + 1, symmetric_mu(n, 1)?.full().clone()))
    } else {
        None
    };
    match pinned {
        Some((d, witness)) => {
            let strata = enumerate_symmetric(n, cover_genus, d + 2)?;
            let gap = !strata
                .iter()
                .any(|s| s.codim.c == d + 1 && s.status(class) != EmptinessStatus::Empty);
            Ok(ConnectivityResult::found(d, witness, gap, true))
        }
        None => nonorientable_bruteforce(n, cover_genus, class),
    }
}

/// Dispatches on the surface kind.
pub fn connectivity(spec: &SurfaceBundleSpec) -> Result<ConnectivityResult> {
    match *spec {
        SurfaceBundleSpec::Orientable { genus, rank, degree } => min_codim_orientable_formula(rank, degree, genus),
        SurfaceBundleSpec::NonOrientable { .. } => connectivity_nonorientable(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(pairs: &[(i64, i64)]) -> AdmissibleSequence {
        make_sequence(pairs).unwrap()
    }

    fn klein(n: i64, class: BundleClass) -> SurfaceBundleSpec {
        SurfaceBundleSpec::NonOrientable { cover_genus: 1, rank: n, class }
    }

    #[test]
    fn orientable_formula_examples() {
        let r = min_codim_orientable_formula(6, 2, 2).unwrap();
        assert_eq!((r.min_codim, r.connectivity), (Some(14), Some(12)));
        assert_eq!(r.witness, Some(seq(&[(5, 2), (1, 0)])));
        assert_eq!(r.status, ConnectivityStatus::Exact);
        let r = min_codim_orientable_formula(2, 1, 1).unwrap();
        assert_eq!((r.min_codim, r.connectivity), (Some(2), Some(0)));
        let r = min_codim_orientable_formula(2, 0, 2).unwrap();
        assert_eq!((r.min_codim, r.connectivity), (Some(6), Some(4)));
        assert_eq!(min_codim_orientable_formula(2, 0, 0), Err(Error::UnsupportedGenus(0)));
    }

    #[test]
    fn formula_witness_tie_breaks_to_last_split() {
        // [3]_6 = [-3]_6 = 3
        let r = min_codim_orientable_formula(6, 3, 2).unwrap();
        assert_eq!(r.witness, Some(canonical_length_two(6, 3, 5).unwrap()));
        // genus 1 witness attains the gcd
        let r = min_codim_orientable_formula(6, 2, 1).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(2 * codimension(&w, 1).unwrap().c, r.min_codim.unwrap());
    }

    #[test]
    fn rank_one_has_no_stratum() {
        for r in [min_codim_orientable_formula(1, 4, 2).unwrap(), min_codim_orientable_bruteforce(1, 4, 2).unwrap()] {
            assert_eq!(r.status, ConnectivityStatus::NoStratum);
            assert_eq!(r.min_codim, None);
        }
    }

    #[test]
    fn orientable_bruteforce_examples() {
        let r = min_codim_orientable_bruteforce(6, 2, 2).unwrap();
        assert_eq!(r.min_codim, Some(14));
        assert_eq!(r.witness, Some(seq(&[(5, 2), (1, 0)])));
        let r = min_codim_orientable_bruteforce(3, 1, 1).unwrap();
        assert_eq!(r.min_codim, Some(2));
        assert_eq!(r.witness, Some(seq(&[(2, 1), (1, 0)])));
        assert!(r.gap_certificate);
    }

    #[test]
    fn symmetric_enumeration_examples() {
        let all = enumerate_symmetric(3, 2, 20).unwrap();
        let mu = all.iter().find(|s| s.sequence.full() == &seq(&[(1, 1), (1, 0), (1, -1)])).unwrap();
        assert_eq!(mu.codim.c, 7);
        assert_eq!(symmetric_mu_codim(3, 1, 2), 7);
        assert_eq!(mu.status(BundleClass::Plus), EmptinessStatus::Nonempty);

        let all = enumerate_symmetric(2, 1, 10).unwrap();
        let pair = all.iter().find(|s| s.sequence.full() == &seq(&[(1, 1), (1, -1)])).unwrap();
        assert_eq!(pair.codim.c, 2);
        assert_eq!(pair.status(BundleClass::Minus), EmptinessStatus::Nonempty);
        assert_eq!(pair.status(BundleClass::Plus), EmptinessStatus::Empty);
        assert_eq!(pair.status(BundleClass::Unspecified), EmptinessStatus::Unknown);

        for n in 2..=8 {
            for s in enumerate_symmetric(n, 2, 40).unwrap() {
                assert_eq!(s.sequence.full().degree(), 0);
                assert_eq!(s.sequence.full().rank(), n);
                assert!(s.codim.c < 40);
            }
        }
    }

    #[test]
    fn symmetric_enumeration_matches_filtered_strata() {
        // symmetric = admissible, degree 0, and invariant under reverse-and-negate
        for (n, g, bound) in [(4, 1, 12), (5, 2, 20), (6, 2, 24)] {
            let mut expected: Vec<AdmissibleSequence> = enumerate_strata(n, 0, g, bound)
                .unwrap()
                .members
                .into_iter()
                .filter(|m| {
                    let b = m.blocks();
                    (0..b.len()).all(|i| b[i].rank == b[b.len() - 1 - i].rank && b[i].degree == -b[b.len() - 1 - i].degree)
                })
                .collect();
            let mut got: Vec<AdmissibleSequence> =
                enumerate_symmetric(n, g, bound).unwrap().into_iter().map(|s| s.sequence.full().clone()).collect();
            expected.sort_by_key(|m| m.vertices());
            got.sort_by_key(|m| m.vertices());
            assert_eq!(got, expected, "n={n} g={g}");
        }
    }

    #[test]
    fn symmetric_sequence_validation() {
        assert!(SymmetricSequence::new(vec![Block::new(1, 0)], 1).is_err());
        assert!(SymmetricSequence::new(vec![], 0).is_err());
        assert!(SymmetricSequence::new(vec![Block::new(1, 1), Block::new(1, 2)], 0).is_err());
        let s = SymmetricSequence::new(vec![Block::new(2, 3), Block::new(1, 1)], 1).unwrap();
        assert_eq!(s.full(), &seq(&[(2, 3), (1, 1), (1, 0), (1, -1), (2, -3)]));
    }

    #[test]
    fn nonorientable_examples() {
        let spec = SurfaceBundleSpec::NonOrientable { cover_genus: 2, rank: 9, class: BundleClass::Unspecified };
        let r = connectivity_nonorientable(&spec).unwrap();
        assert_eq!((r.min_codim, r.connectivity), (Some(31), Some(29)));
        assert_eq!(r.witness, Some(seq(&[(1, 1), (7, 0), (1, -1)])));
        assert_eq!(r.status, ConnectivityStatus::Exact);

        let r = connectivity_nonorientable(&klein(4, BundleClass::Minus)).unwrap();
        assert_eq!((r.min_codim, r.connectivity), (Some(4), Some(2)));
        assert_eq!(r.witness, Some(seq(&[(2, 1), (2, -1)])));
        let r = connectivity_nonorientable(&klein(4, BundleClass::Plus)).unwrap();
        assert_eq!((r.min_codim, r.connectivity), (Some(6), Some(4)));

        let spec = SurfaceBundleSpec::NonOrientable { cover_genus: 2, rank: 5, class: BundleClass::Unspecified };
        assert_eq!(connectivity_nonorientable(&spec).unwrap().status, ConnectivityStatus::LowerBoundOnly);

        assert_eq!(connectivity_nonorientable(&klein(4, BundleClass::Unspecified)), Err(Error::AmbiguousBundle));
        let r = connectivity_nonorientable(&klein(5, BundleClass::Unspecified)).unwrap();
        assert_eq!(r.connectivity, Some(4));
    }

    #[test]
    fn surface_spec_grammar() {
        assert_eq!(
            "orientable,g=1,n=2,k=1".parse::<SurfaceBundleSpec>().unwrap(),
            SurfaceBundleSpec::Orientable { genus: 1, rank: 2, degree: 1 }
        );
        assert_eq!(
            "orientable,g=3,n=4".parse::<SurfaceBundleSpec>().unwrap(),
            SurfaceBundleSpec::Orientable { genus: 3, rank: 4, degree: 0 }
        );
        assert_eq!(
            "nonorientable,gt=2,n=9".parse::<SurfaceBundleSpec>().unwrap(),
            SurfaceBundleSpec::NonOrientable { cover_genus: 2, rank: 9, class: BundleClass::Unspecified }
        );
        assert_eq!(
            "nonorientable, gt=1, n=4, class=minus".parse::<SurfaceBundleSpec>().unwrap(),
            SurfaceBundleSpec::NonOrientable { cover_genus: 1, rank: 4, class: BundleClass::Minus }
        );
        for bad in ["torus,g=1,n=2", "orientable,n=2", "orientable,g=x,n=2", "nonorientable,gt=2,n=3,k=1", "orientable,g=1,n=2,class=plus", "orientable,g"] {
            assert!(matches!(bad.parse::<SurfaceBundleSpec>(), Err(Error::InvalidSurface(_))), "{bad}");
        }
    }

    #[test]
    fn result_json_shape() {
        let r = min_codim_orientable_formula(2, 1, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"d":2,"connectivity":0,"witness":[[1,1],[1,0]],"status":"exact","gap_certificate":true}"#
        );
    }
}

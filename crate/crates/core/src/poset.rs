//! Dominance order on admissible sequences: bounded enumeration, minimal
//! covers and the level-by-level linear extension.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::{self, ceil_strict, cmp_fractions, Rational};
use crate::error::{Error, Result};
use crate::strata::{codimension, slope_vector, to_path, AdmissibleSequence, Block, ConvexPath};

fn check_context(a: &AdmissibleSequence, b: &AdmissibleSequence) -> Result<()> {
    if a.rank() != b.rank() || a.degree() != b.degree() {
        return Err(Error::IncomparableContext {
            n1: a.rank(),
            k1: a.degree(),
            n2: b.rank(),
            k2: b.degree(),
        });
    }
    Ok(())
}

/// `lambda >= mu`: every prefix sum of the slope vector of `lambda` is at
/// least the corresponding prefix sum for `mu`.
pub fn dominates(lambda: &AdmissibleSequence, mu: &AdmissibleSequence) -> Result<bool> {
    check_context(lambda, mu)?;
    let (mut sl, mut sm) = (Rational::ZERO, Rational::ZERO);
    for (a, b) in slope_vector(lambda).into_iter().zip(slope_vector(mu)) {
        sl = sl.checked_add(a)?;
        sm = sm.checked_add(b)?;
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Path form of [`dominates`]: `P(lambda)` lies on or above `P(mu)`.
/// Both paths are piecewise linear, so comparing at the union of their
/// breakpoints is enough.
pub fn dominates_by_path(lambda: &AdmissibleSequence, mu: &AdmissibleSequence) -> Result<bool> {
    check_context(lambda, mu)?;
    let (pl, pm) = (to_path(lambda), to_path(mu));
    let above = |x: i64| pl.height_at(x) >= pm.height_at(x);
    Ok(pl.vertices().iter().chain(pm.vertices()).all(|&(x, _)| above(x)))
}

/// All admissible sequences of a fixed `(n, k)` with codimension below a
/// bound at a fixed genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumSet {
    pub rank: i64,
    pub degree: i64,
    pub genus: i64,
    pub bound: i64,
    /// Sorted by codimension, then by vertex list.
    pub members: Vec<AdmissibleSequence>,
}

impl StratumSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mu: &AdmissibleSequence) -> bool {
        self.members.contains(mu)
    }
}

/// Orders strata by `(codimension, vertex list)`.
pub(crate) fn sort_strata(members: &mut [AdmissibleSequence], genus: i64) -> Result<()> {
    let mut keyed = Vec::with_capacity(members.len());
    for m in members.iter() {
        keyed.push((codimension(m, genus)?.c, m.vertices(), m.clone()));
    }
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    for (slot, (_, _, m)) in members.iter_mut().zip(keyed) {
        *slot = m;
    }
    Ok(())
}

struct Search {
    genus: i64,
    bound: i64,
    found: Vec<AdmissibleSequence>,
}

impl Search {
    fn codim_of(&self, blocks: &[Block]) -> Result<i64> {
        let seq = AdmissibleSequence::new(blocks.to_vec())?;
        Ok(codimension(&seq, self.genus)?.c)
    }

    /// Extends `prefix` by one block, leaving `(rem_rank, rem_degree)` to place.
    ///
    /// Merging adjacent blocks drops exactly one positive pairwise term, so
    /// `prefix + block + (merged remainder)` bounds the codimension of every
    /// completion from below. That bound grows with the new block's degree.
    fn extend(&mut self, prefix: &mut Vec<Block>, rem_rank: i64, rem_degree: i64) -> Result<()> {
        let last = prefix.last().copied();
        let below_last = |d: i64, r: i64| match last {
            Some(p) => cmp_fractions(d, r, p.degree, p.rank).is_lt(),
            None => true,
        };

        // Final block takes everything left.
        if below_last(rem_degree, rem_rank) {
            prefix.push(Block::new(rem_rank, rem_degree));
            if self.codim_of(prefix)? < self.bound {
                self.found.push(AdmissibleSequence::new(prefix.clone())?);
            }
            prefix.pop();
        }

        for rank in 1..rem_rank {
            // The remainder must have a smaller slope than the new block.
            let mut degree = arith::mul(rank, rem_degree)?.div_euclid(rem_rank) + 1;
            while below_last(degree, rank) {
                let tail = Block::new(rem_rank - rank, arith::sub(rem_degree, degree)?);
                prefix.push(Block::new(rank, degree));
                prefix.push(tail);
                let lower = self.codim_of(prefix)?;
                prefix.pop();
                if lower >= self.bound {
                    prefix.pop();
                    break;
                }
                self.extend(prefix, tail.rank, tail.degree)?;
                prefix.pop();
                degree = arith::add(degree, 1)?;
            }
        }
        Ok(())
    }
}

/// Every admissible sequence of total rank `n`, degree `k` with `c(mu, g) < bound`.
pub fn enumerate_strata(n: i64, k: i64, genus: i64, bound: i64) -> Result<StratumSet> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("rank {n} must be positive")));
    }
    if genus < 1 {
        return Err(Error::UnsupportedGenus(genus));
    }
    if bound < 1 {
        return Err(Error::InvalidParameter(format!("bound {bound} must be positive")));
    }
    let mut search = Search { genus, bound, found: Vec::new() };
    search.extend(&mut Vec::new(), n, k)?;
    let mut members = search.found;
    sort_strata(&mut members, genus)?;
    Ok(StratumSet { rank: n, degree: k, genus, bound, members })
}

/// Region bounds from the finiteness argument for minimal covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSearchBounds {
    /// `max(k_1/n_1, 0)`
    pub s1: Rational,
    /// `min(k_r/n_r, 0)`
    pub sr: Rational,
    /// `floor(n (s1 - sr) + max(k, 0))`; covers of a path with at least
    /// three segments have `h2 <= h2_bound`.
    pub h2_bound: i64,
}

pub fn cover_search_bounds(mu: &AdmissibleSequence) -> Result<CoverSearchBounds> {
    let blocks = mu.blocks();
    let s1 = blocks[0].slope().max(Rational::ZERO);
    let sr = blocks[blocks.len() - 1].slope().min(Rational::ZERO);
    let spread = Rational::from_integer(mu.rank()).checked_mul(s1.checked_sub(sr)?)?;
    let h2 = spread.checked_add(Rational::from_integer(mu.degree().max(0)))?;
    Ok(CoverSearchBounds { s1, sr, h2_bound: h2.floor() })
}

/// `h(Q)`: right endpoint of the rightmost segment of `Q` whose slope is at
/// least `k/n`. `None` for the straight path.
pub fn slope_threshold_point(q: &AdmissibleSequence) -> Option<(i64, i64)> {
    if q.is_semistable() {
        return None;
    }
    let (n, k) = (q.rank(), q.degree());
    let verts = q.vertices();
    q.blocks()
        .iter()
        .enumerate()
        .filter(|(_, b)| cmp_fractions(b.degree, b.rank, k, n).is_ge())
        .map(|(i, _)| verts[i + 1])
        .last()
}

/// Upper concave hull of points sorted by abscissa, dropping collinear points.
fn upper_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(points.len());
    for &p in points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // keep b only if slope(a,b) > slope(b,p)
            if cmp_fractions(b.1 - a.1, b.0 - a.0, p.1 - b.1, p.0 - b.0).is_gt() {
                break;
            }
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

fn sequence_from_vertices(vertices: Vec<(i64, i64)>) -> Result<AdmissibleSequence> {
    crate::strata::from_path(&ConvexPath::new(vertices)?)
}

/// Calls `visit` on every convex lattice path from `(0,0)` to `(n,k)` lying
/// between `lower` and `upper` (inclusive).
fn paths_between(
    lower: &ConvexPath,
    upper: &ConvexPath,
    visit: &mut dyn FnMut(&[(i64, i64)]) -> Result<()>,
) -> Result<()> {
    let (n, k) = lower.end();
    // exact bounds at each integer abscissa, and the lattice heights between them
    let bounds: Vec<(Rational, Rational)> = (0..=n).map(|x| (lower.height_at(x), upper.height_at(x))).collect();
    let lattice: Vec<(i64, i64)> = bounds
        .iter()
        .map(|(lo, hi)| (if lo.is_integer() { lo.numer() } else { lo.floor() + 1 }, hi.floor()))
        .collect();

    struct Walk<'a> {
        bounds: &'a [(Rational, Rational)],
        lattice: &'a [(i64, i64)],
        target: (i64, i64),
    }

    impl Walk<'_> {
        fn segment_fits(&self, a: (i64, i64), b: (i64, i64)) -> Result<bool> {
            for t in a.0 + 1..b.0 {
                let y = Rational::new(a.1 * (b.0 - a.0) + (t - a.0) * (b.1 - a.1), b.0 - a.0)?;
                let (lo, hi) = self.bounds[t as usize];
                if y < lo || y > hi {
                    return Ok(false);
                }
            }
            Ok(true)
        }

        fn run(&self, path: &mut Vec<(i64, i64)>, visit: &mut dyn FnMut(&[(i64, i64)]) -> Result<()>) -> Result<()> {
            let cur = *path.last().expect("path starts at origin");
            if cur == self.target {
                return visit(path);
            }
            let prev = if path.len() >= 2 { Some(path[path.len() - 2]) } else { None };
            for x in cur.0 + 1..=self.target.0 {
                let (lo, hi) = if x == self.target.0 { (self.target.1, self.target.1) } else { self.lattice[x as usize] };
                for y in lo..=hi {
                    if let Some(p) = prev {
                        if cmp_fractions(y - cur.1, x - cur.0, cur.1 - p.1, cur.0 - p.0).is_ge() {
                            continue;
                        }
                    }
                    if !self.segment_fits(cur, (x, y))? {
                        continue;
                    }
                    path.push((x, y));
                    self.run(path, visit)?;
                    path.pop();
                }
            }
            Ok(())
        }
    }

    let walk = Walk { bounds: &bounds, lattice: &lattice, target: (n, k) };
    let mut path = vec![(0, 0)];
    walk.run(&mut path, visit)
}

/// Whether some admissible sequence lies strictly between `mu` and `lambda`.
pub fn has_intermediate(mu: &AdmissibleSequence, lambda: &AdmissibleSequence) -> Result<bool> {
    check_context(mu, lambda)?;
    let (pm, pl) = (to_path(mu), to_path(lambda));
    let mut found = false;
    paths_between(&pm, &pl, &mut |v| {
        if v != pm.vertices() && v != pl.vertices() {
            found = true;
        }
        Ok(())
    })?;
    Ok(found)
}

/// All `lambda > mu` with nothing strictly in between.
///
/// Any `lambda > mu` has a vertex `v` strictly above `P(mu)`, and the upper
/// hull of `P(mu)` together with `v` lies between the two. Lowering `v` to
/// the first lattice point above `P(mu)` in its column keeps it above, so a
/// cover is one of the `n - 1` hulls through those points. Each candidate is
/// then certified by searching the region between the two paths.
pub fn minimal_covers(mu: &AdmissibleSequence) -> Result<Vec<AdmissibleSequence>> {
    let path = to_path(mu);
    let mut candidates: Vec<AdmissibleSequence> = Vec::new();
    for x in 1..mu.rank() {
        let lift = (x, ceil_strict(path.height_at(x))?);
        let mut points: Vec<(i64, i64)> = path.vertices().to_vec();
        let at = points.partition_point(|p| p.0 < x);
        if points[at].0 == x {
            points[at] = lift;
        } else {
            points.insert(at, lift);
        }
        let cand = sequence_from_vertices(upper_hull(&points))?;
        if !candidates.contains(&cand) {
            candidates.push(cand);
        }
    }
    let mut covers = Vec::new();
    for cand in candidates {
        if !has_intermediate(mu, &cand)? {
            covers.push(cand);
        }
    }
    covers.sort_by_key(|c| c.vertices());
    Ok(covers)
}

/// A dominance-compatible total order on a [`StratumSet`], grouped in levels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearExtension {
    pub rank: i64,
    pub degree: i64,
    pub genus: i64,
    pub bound: i64,
    pub order: Vec<AdmissibleSequence>,
    /// `levels[i]` is the level of `order[i]`.
    pub levels: Vec<usize>,
}

impl LinearExtension {
    pub fn level_map(&self) -> HashMap<&AdmissibleSequence, usize> {
        self.order.iter().zip(self.levels.iter().copied()).collect()
    }

    pub fn level_of(&self, mu: &AdmissibleSequence) -> Option<usize> {
        self.order.iter().position(|m| m == mu).map(|i| self.levels[i])
    }
}

/// Peels off minimal elements level by level; within a level members keep
/// the `(codimension, vertex list)` order of the set.
pub fn linear_extension(set: &StratumSet) -> Result<LinearExtension> {
    if set.members.is_empty() {
        return Err(Error::InvalidParameter("empty stratum set".into()));
    }
    let m = set.members.len();
    let mut below = vec![Vec::new(); m];
    for i in 0..m {
        for j in 0..m {
            if i != j && dominates(&set.members[i], &set.members[j])? {
                below[i].push(j);
            }
        }
    }
    let mut level_of = vec![usize::MAX; m];
    let mut order = Vec::with_capacity(m);
    let mut levels = Vec::with_capacity(m);
    let mut placed = 0;
    let mut level = 0;
    while placed < m {
        let current: Vec<usize> = (0..m)
            .filter(|&i| level_of[i] == usize::MAX && below[i].iter().all(|&j| level_of[j] < level))
            .collect();
        if current.is_empty() {
            unreachable!("dominance is acyclic on distinct sequences");
        }
        for &i in &current {
            level_of[i] = level;
            order.push(set.members[i].clone());
            levels.push(level);
        }
        placed += current.len();
        level += 1;
    }
    Ok(LinearExtension {
        rank: set.rank,
        degree: set.degree,
        genus: set.genus,
        bound: set.bound,
        order,
        levels,
    })
}

/// True iff every dominance relation among the members is respected by the order.
pub fn validate_extension(ext: &LinearExtension) -> bool {
    for (i, a) in ext.order.iter().enumerate() {
        for b in &ext.order[i + 1..] {
            // b comes after a, so b must not be strictly below a
            match dominates(a, b) {
                Ok(true) if a != b => return false,
                Ok(_) => {}
                Err(_) => return false,
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::make_sequence;

    fn seq(pairs: &[(i64, i64)]) -> AdmissibleSequence {
        make_sequence(pairs).unwrap()
    }

    #[test]
    fn dominance_examples() {
        let hi = seq(&[(1, 1), (5, 1)]);
        let lo = seq(&[(2, 1), (4, 1)]);
        assert!(dominates(&hi, &lo).unwrap());
        assert!(!dominates(&lo, &hi).unwrap());
        let mu = seq(&[(3, 2), (3, 0)]);
        assert!(dominates(&mu, &mu).unwrap());
        let flat = seq(&[(6, 2)]);
        assert!(!dominates(&flat, &hi).unwrap());
        assert!(dominates(&hi, &flat).unwrap());
        for (a, b) in [(&hi, &lo), (&lo, &hi), (&flat, &hi), (&hi, &flat), (&mu, &lo)] {
            assert_eq!(dominates(a, b).unwrap(), dominates_by_path(a, b).unwrap());
        }
        assert!(matches!(
            dominates(&seq(&[(2, 0)]), &seq(&[(2, 1)])),
            Err(Error::IncomparableContext { .. })
        ));
    }

    #[test]
    fn enumerate_examples() {
        let s = enumerate_strata(2, 0, 1, 3).unwrap();
        assert_eq!(s.members, vec![seq(&[(2, 0)]), seq(&[(1, 1), (1, -1)])]);
        let s = enumerate_strata(2, 0, 1, 1).unwrap();
        assert_eq!(s.members, vec![seq(&[(2, 0)])]);
        let s = enumerate_strata(6, 2, 2, 8).unwrap();
        let target = seq(&[(5, 2), (1, 0)]);
        assert!(s.contains(&target));
        assert_eq!(codimension(&target, 2).unwrap().c, 7);
        for m in &s.members[1..] {
            assert_eq!(codimension(m, 2).unwrap().c, 7, "{m}");
        }
        let s = enumerate_strata(1, 7, 2, 5).unwrap();
        assert_eq!(s.members, vec![seq(&[(1, 7)])]);
        assert_eq!(enumerate_strata(2, 0, 0, 3), Err(Error::UnsupportedGenus(0)));
        assert!(enumerate_strata(2, 0, 1, 0).is_err());
    }

    #[test]
    fn enumerate_is_sorted_and_bounded() {
        let s = enumerate_strata(4, 1, 2, 14).unwrap();
        let keys: Vec<_> = s
            .members
            .iter()
            .map(|m| (codimension(m, 2).unwrap().c, m.vertices()))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(keys.iter().all(|(c, _)| *c < 14));
        assert_eq!(s.members[0], seq(&[(4, 1)]));
    }

    #[test]
    fn cover_examples() {
        assert_eq!(minimal_covers(&seq(&[(2, 0)])).unwrap(), vec![seq(&[(1, 1), (1, -1)])]);
        let covers = minimal_covers(&seq(&[(3, 0)])).unwrap();
        assert_eq!(covers, vec![seq(&[(1, 1), (2, -1)]), seq(&[(2, 1), (1, -1)])]);
        assert!(!covers.contains(&seq(&[(1, 1), (1, 0), (1, -1)])));
        assert!(minimal_covers(&seq(&[(1, 3)])).unwrap().is_empty());
        let mu = seq(&[(2, 1), (4, 1)]);
        for lam in minimal_covers(&mu).unwrap() {
            assert!(dominates(&lam, &mu).unwrap() && lam != mu);
        }
    }

    #[test]
    fn intermediate_detection() {
        let bottom = seq(&[(3, 0)]);
        let top = seq(&[(1, 1), (1, 0), (1, -1)]);
        assert!(has_intermediate(&bottom, &top).unwrap());
        assert!(!has_intermediate(&bottom, &seq(&[(1, 1), (2, -1)])).unwrap());
        // the path through (2,-3) crosses x = 1 at -3/2, between -5/3 and -1
        let flat = seq(&[(3, -5)]);
        assert!(has_intermediate(&flat, &seq(&[(1, -1), (2, -4)])).unwrap());
        assert_eq!(minimal_covers(&flat).unwrap(), vec![seq(&[(2, -3), (1, -2)])]);
    }

    #[test]
    fn cover_bounds() {
        let b = cover_search_bounds(&seq(&[(1, 1), (5, 1)])).unwrap();
        assert_eq!(b.s1, Rational::from_integer(1));
        assert_eq!(b.sr, Rational::ZERO);
        assert_eq!(b.h2_bound, 8);
        let b = cover_search_bounds(&seq(&[(1, 2), (1, 0), (1, -3)])).unwrap();
        assert_eq!((b.s1, b.sr, b.h2_bound), (2.into(), (-3).into(), 15));
        assert_eq!(slope_threshold_point(&seq(&[(1, 1), (5, 1)])), Some((1, 1)));
        assert_eq!(slope_threshold_point(&seq(&[(2, 2), (1, 0), (1, -2)])), Some((3, 2)));
        assert_eq!(slope_threshold_point(&seq(&[(2, 2), (1, -1), (1, -2)])), Some((2, 2)));
        assert_eq!(slope_threshold_point(&seq(&[(6, 2)])), None);
    }

    #[test]
    fn extension_examples() {
        let ext = linear_extension(&enumerate_strata(2, 0, 1, 5).unwrap()).unwrap();
        assert_eq!(
            ext.order,
            vec![seq(&[(2, 0)]), seq(&[(1, 1), (1, -1)]), seq(&[(1, 2), (1, -2)])]
        );
        assert_eq!(ext.levels, vec![0, 1, 2]);
        assert!(validate_extension(&ext));

        let set = enumerate_strata(3, 0, 2, 12).unwrap();
        let ext = linear_extension(&set).unwrap();
        assert_eq!(ext.order[0], seq(&[(3, 0)]));
        for cut in 0..=ext.order.len() {
            let (prefix, rest) = ext.order.split_at(cut);
            for a in prefix {
                for b in rest {
                    assert!(!dominates(a, b).unwrap(), "prefix not a down-set");
                }
            }
        }
        assert!(validate_extension(&ext));

        let ext = linear_extension(&enumerate_strata(4, 1, 2, 14).unwrap()).unwrap();
        assert!(validate_extension(&ext));
        assert_eq!(ext.level_of(&seq(&[(4, 1)])), Some(0));
    }

    #[test]
    fn reversed_chain_fails_validation() {
        let mut ext = linear_extension(&enumerate_strata(2, 0, 1, 3).unwrap()).unwrap();
        ext.order.reverse();
        assert!(!validate_extension(&ext));
    }

    #[test]
    fn rank_one_is_degenerate() {
        let set = enumerate_strata(1, -3, 2, 10).unwrap();
        assert_eq!(set.members, vec![seq(&[(1, -3)])]);
        let ext = linear_extension(&set).unwrap();
        assert!(validate_extension(&ext));
        assert_eq!(ext.levels, vec![0]);
    }
}

//! Admissible sequences (Harder-Narasimhan types), their convex paths,
//! codimensions and Yang-Mills critical values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, ceil_strict, cmp_fractions, Rational};
use crate::error::{Error, Result};

/// One graded piece of a filtration type: a rank and a degree.
/// Serializes as `[rank, degree]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "(i64, i64)")]
pub struct Block {
    pub rank: i64,
    pub degree: i64,
}

impl Block {
    pub fn new(rank: i64, degree: i64) -> Self {
        Block { rank, degree }
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.degree, self.rank).expect("validated rank is positive")
    }
}

/// A validated admissible sequence `((n_1,k_1), ..., (n_r,k_r))` with
/// positive ranks and strictly decreasing slopes.
///
/// Serializes as a JSON array of `[rank, degree]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub struct AdmissibleSequence {
    blocks: Vec<Block>,
    rank: i64,
    degree: i64,
}

impl AdmissibleSequence {
    /// Validates `blocks` and computes the totals.
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut rank = 0i64;
        let mut degree = 0i64;
        for (i, b) in blocks.iter().enumerate() {
            if b.rank < 1 {
                return Err(Error::InvalidRank { block: i + 1, rank: b.rank });
            }
            if i > 0 {
                let prev = &blocks[i - 1];
                if cmp_fractions(prev.degree, prev.rank, b.degree, b.rank).is_le() {
                    return Err(Error::SlopeOrder { block: i + 1 });
                }
            }
            rank = arith::add(rank, b.rank)?;
            degree = arith::add(degree, b.degree)?;
        }
        Ok(AdmissibleSequence { blocks, rank, degree })
    }

    /// The semi-stable type `((n, k))`.
    pub fn semistable(rank: i64, degree: i64) -> Result<Self> {
        Self::new(vec![Block::new(rank, degree)])
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_semistable(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.blocks.iter().map(|b| (b.rank, b.degree)).collect()
    }

    /// Partial sums `(sum n_j, sum k_j)`, starting at the origin.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.blocks.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((x, y));
        for b in &self.blocks {
            x += b.rank;
            y += b.degree;
            out.push((x, y));
        }
        out
    }

    /// Merges blocks `1..r-1` into a single block, keeping the last one.
    /// Sequences of length at most 2 are returned unchanged.
    pub fn collapse_head(&self) -> AdmissibleSequence {
        if self.blocks.len() <= 2 {
            return self.clone();
        }
        let (head, last) = self.blocks.split_at(self.blocks.len() - 1);
        let merged = Block::new(
            head.iter().map(|b| b.rank).sum(),
            head.iter().map(|b| b.degree).sum(),
        );
        AdmissibleSequence::new(vec![merged, last[0]])
            .expect("merging leading blocks of a convex path keeps it convex")
    }
}

impl From<Block> for (i64, i64) {
    fn from(b: Block) -> Self {
        (b.rank, b.degree)
    }
}

impl TryFrom<Vec<(i64, i64)>> for AdmissibleSequence {
    type Error = Error;

    fn try_from(pairs: Vec<(i64, i64)>) -> Result<Self> {
        make_sequence(&pairs)
    }
}

impl From<AdmissibleSequence> for Vec<(i64, i64)> {
    fn from(seq: AdmissibleSequence) -> Self {
        seq.pairs()
    }
}

impl fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", b.rank, b.degree)?;
        }
        write!(f, ")")
    }
}

pub fn make_sequence(pairs: &[(i64, i64)]) -> Result<AdmissibleSequence> {
    AdmissibleSequence::new(pairs.iter().map(|&(n, k)| Block::new(n, k)).collect())
}

/// The slope vector: entry `j` is the slope of the block containing position `j`.
pub fn slope_vector(seq: &AdmissibleSequence) -> Vec<Rational> {
    seq.blocks
        .iter()
        .flat_map(|b| std::iter::repeat(b.slope()).take(b.rank as usize))
        .collect()
}

/// Vertex list of the convex path from `(0,0)` to `(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConvexPath {
    vertices: Vec<(i64, i64)>,
}

impl ConvexPath {
    /// Checks that the list starts at the origin, moves strictly right and
    /// turns strictly downward at every interior vertex.
    pub fn new(vertices: Vec<(i64, i64)>) -> Result<Self> {
        if vertices.len() < 2 || vertices[0] != (0, 0) {
            return Err(Error::Convexity { vertex: 0 });
        }
        for i in 1..vertices.len() {
            if vertices[i].0 <= vertices[i - 1].0 {
                return Err(Error::Convexity { vertex: i });
            }
            if i >= 2 {
                let (a, b, c) = (vertices[i - 2], vertices[i - 1], vertices[i]);
                let ord = cmp_fractions(b.1 - a.1, b.0 - a.0, c.1 - b.1, c.0 - b.0);
                if ord.is_le() {
                    return Err(Error::Convexity { vertex: i - 1 });
                }
            }
        }
        Ok(ConvexPath { vertices })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn end(&self) -> (i64, i64) {
        *self.vertices.last().expect("at least two vertices")
    }

    /// Height of the path at abscissa `x` (0 <= x <= n), exactly.
    pub fn height_at(&self, x: i64) -> Rational {
        let v = &self.vertices;
        let i = v.partition_point(|p| p.0 < x).clamp(1, v.len() - 1);
        let (a, b) = (v[i - 1], v[i]);
        // a.1 + (x - a.0) * (b.1 - a.1) / (b.0 - a.0)
        Rational::new(a.1 * (b.0 - a.0) + (x - a.0) * (b.1 - a.1), b.0 - a.0)
            .expect("strictly increasing abscissae")
    }
}

pub fn to_path(seq: &AdmissibleSequence) -> ConvexPath {
    ConvexPath { vertices: seq.vertices() }
}

pub fn from_path(path: &ConvexPath) -> Result<AdmissibleSequence> {
    let blocks = path
        .vertices
        .windows(2)
        .map(|w| Block::new(w[1].0 - w[0].0, w[1].1 - w[0].1))
        .collect();
    AdmissibleSequence::new(blocks)
}

/// Codimension data of a stratum at a fixed genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimensionReport {
    pub c1: i64,
    pub c2: i64,
    pub c: i64,
    #[serde(rename = "l")]
    pub critical_value: Rational,
}

/// The degree part `sum_{i>j} (n_i k_j - n_j k_i)`.
pub fn degree_codimension(seq: &AdmissibleSequence) -> Result<i64> {
    let b = &seq.blocks;
    let mut total = 0i64;
    for i in 1..b.len() {
        for j in 0..i {
            let term = arith::sub(arith::mul(b[i].rank, b[j].degree)?, arith::mul(b[j].rank, b[i].degree)?)?;
            total = arith::add(total, term)?;
        }
    }
    Ok(total)
}

/// `sum_{i>j} n_i n_j`, the coefficient of `(g - 1)` in the codimension.
pub fn rank_pair_sum(seq: &AdmissibleSequence) -> Result<i64> {
    let b = &seq.blocks;
    let mut total = 0i64;
    for i in 1..b.len() {
        for j in 0..i {
            total = arith::add(total, arith::mul(b[i].rank, b[j].rank)?)?;
        }
    }
    Ok(total)
}

pub fn codimension(seq: &AdmissibleSequence, genus: i64) -> Result<CodimensionReport> {
    if genus < 1 {
        return Err(Error::UnsupportedGenus(genus));
    }
    let c1 = degree_codimension(seq)?;
    let c2 = arith::mul(genus - 1, rank_pair_sum(seq)?)?;
    Ok(CodimensionReport {
        c1,
        c2,
        c: arith::add(c1, c2)?,
        critical_value: critical_value(seq)?,
    })
}

/// `l(mu) = sum k_i^2 / n_i`.
pub fn critical_value(seq: &AdmissibleSequence) -> Result<Rational> {
    seq.blocks.iter().try_fold(Rational::ZERO, |acc, b| {
        acc.checked_add(Rational::new(arith::mul(b.degree, b.degree)?, b.rank)?)
    })
}

/// `mu_m = ((m, ceil(km/n)), (n-m, k - ceil(km/n)))` with the strict ceiling.
pub fn canonical_length_two(n: i64, k: i64, m: i64) -> Result<AdmissibleSequence> {
    if n < 2 || m < 1 || m > n - 1 {
        return Err(Error::IndexOutOfRange { index: m, max: n - 1 });
    }
    let head = ceil_strict(Rational::new(arith::mul(k, m)?, n)?)?;
    make_sequence(&[(m, head), (n - m, arith::sub(k, head)?)])
}

//! Strict partitions and the index sets derived from them.
//!
//! A row of length `l` in rank `n` corresponds to a string of quiver vertices
//! whose *endpoint* is `n - l`. Rows of length one all have endpoint `n - 1`,
//! whichever of the two fork vertices carries them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::MAX_RANK;

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if (2..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidRank(n))
    }
}

/// Which of the two half-spin summands a basis state lives in.
///
/// `Plus` is the module of highest weight `Λ_n`, `Minus` that of `Λ_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(Error::parse(format!("invalid sign `{other}`"))),
        }
    }
}

/// A Young diagram with strictly decreasing row lengths.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition {
    rows: Vec<u32>,
}

impl StrictPartition {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        let strict = rows.windows(2).all(|w| w[0] > w[1]);
        if !strict || rows.last() == Some(&0) {
            return Err(Error::NotStrict(rows));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds the diagram whose row lengths are the members of `lengths`
    /// (any order, duplicates rejected).
    pub fn from_lengths(lengths: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut rows: Vec<u32> = lengths.into_iter().collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(rows)
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn boxes(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn largest_row(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn has_row(&self, len: u32) -> bool {
        self.rows.binary_search_by(|r| len.cmp(r)).is_ok()
    }

    /// Checks that every row fits rank `n`, i.e. has length at most `n - 1`.
    pub fn check_rank(&self, n: usize) -> Result<()> {
        check_rank(n)?;
        if self.largest_row() as usize > n - 1 {
            return Err(Error::DiagramTooWide {
                diagram: self.to_string(),
                max: n - 1,
                rank: n,
            });
        }
        Ok(())
    }

    /// The conjugate (transposed) partition; weakly decreasing.
    pub fn conjugate(&self) -> Vec<u32> {
        (1..=self.largest_row())
            .map(|i| self.rows.iter().filter(|&&r| r >= i).count() as u32)
            .collect()
    }

    /// Endpoints `n - l` of all rows, ascending.
    pub fn endpoints(&self, n: usize) -> Vec<usize> {
        self.rows.iter().map(|&l| n - l as usize).collect()
    }

    /// Number of rows with endpoint strictly below vertex `k`, which is the
    /// number of rows longer than `n - k`.
    pub fn endpoint_count_below(&self, n: usize, k: usize) -> usize {
        let threshold = n.saturating_sub(k) as u32;
        self.rows.iter().take_while(|&&l| l > threshold).count()
    }

    /// The Fock index attached to `(sign, self)`: the endpoint set, together
    /// with `n` exactly when the row count has the parity singled out by
    /// `sign` (odd for `Plus`, even for `Minus`).
    pub fn fock_index(&self, sign: Sign, n: usize) -> FockIndex {
        let mut idx = FockIndex::from_indices(self.endpoints(n))
            .expect("endpoints of a rank-checked diagram lie in 1..n");
        let odd = self.rows.len() % 2 == 1;
        if odd == (sign == Sign::Plus) {
            idx = idx.with(n);
        }
        idx
    }

    /// Inverse of [`StrictPartition::fock_index`].
    pub fn from_fock_index(index: FockIndex, n: usize) -> (Sign, StrictPartition) {
        let lengths = index
            .iter()
            .filter(|&i| i < n)
            .map(|i| (n - i) as u32);
        let diagram = StrictPartition::from_lengths(lengths).expect("distinct endpoints");
        let has_n = index.contains(n);
        let odd = diagram.num_rows() % 2 == 1;
        let sign = if has_n == odd { Sign::Plus } else { Sign::Minus };
        (sign, diagram)
    }

    /// Adds the row with endpoint `k` (length `n - k`), if absent.
    pub fn add_row_with_endpoint(&self, k: usize, n: usize) -> Option<StrictPartition> {
        if k == 0 || k >= n {
            return None;
        }
        let len = (n - k) as u32;
        match self.rows.binary_search_by(|r| len.cmp(r)) {
            Ok(_) => None,
            Err(pos) => {
                let mut rows = self.rows.clone();
                rows.insert(pos, len);
                Some(StrictPartition { rows })
            }
        }
    }

    /// Removes the row with endpoint `k`, if present.
    pub fn remove_row_with_endpoint(&self, k: usize, n: usize) -> Option<StrictPartition> {
        if k == 0 || k >= n {
            return None;
        }
        let len = (n - k) as u32;
        let pos = self.rows.binary_search_by(|r| len.cmp(r)).ok()?;
        let mut rows = self.rows.clone();
        rows.remove(pos);
        Some(StrictPartition { rows })
    }

    /// All strict partitions obtained from `self` by a single box edit:
    /// growing or shrinking one row by one box, or adding or deleting a
    /// row of length one. Strictness is preserved; no rank bound applied.
    pub fn single_box_neighbours(&self) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let rows = &self.rows;
        for i in 0..rows.len() {
            let mut grown = rows.clone();
            grown[i] += 1;
            if i == 0 || grown[i] < grown[i - 1] {
                out.push(StrictPartition { rows: grown });
            }
            let mut shrunk = rows.clone();
            shrunk[i] -= 1;
            if shrunk[i] == 0 {
                shrunk.pop();
                out.push(StrictPartition { rows: shrunk });
            } else if i + 1 == rows.len() || shrunk[i] > shrunk[i + 1] {
                out.push(StrictPartition { rows: shrunk });
            }
        }
        if !self.has_row(1) {
            let mut rows = rows.clone();
            rows.push(1);
            out.push(StrictPartition { rows });
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Basis order: total boxes, then row lists lexicographically.
impl Ord for StrictPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.boxes()
            .cmp(&other.boxes())
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for StrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;
    fn try_from(rows: Vec<u32>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Vec<u32> {
        p.rows
    }
}

/// Canonical form: comma-separated rows, `-` for the empty diagram.
impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("-");
        }
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(format!("invalid row length `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// Every strict partition with largest part at most `n - 1`, in basis order.
///
/// These are in bijection with subsets of `{1, .., n-1}`, so there are
/// `2^(n-1)` of them.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<StrictPartition>> {
    check_rank(n)?;
    let m = n - 1;
    let mut out: Vec<StrictPartition> = (0u64..1 << m)
        .map(|mask| {
            let rows: Vec<u32> = (1..=m as u32)
                .rev()
                .filter(|l| mask >> (l - 1) & 1 == 1)
                .collect();
            StrictPartition { rows }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every strict partition with at most `max_boxes` boxes and no bound on
/// the row lengths, in basis order.
pub fn enumerate_up_to_boxes(max_boxes: u32) -> Vec<StrictPartition> {
    fn extend(rows: &mut Vec<u32>, budget: u32, cap: u32, out: &mut Vec<StrictPartition>) {
        out.push(StrictPartition { rows: rows.clone() });
        for next in 1..=cap.min(budget) {
            rows.push(next);
            extend(rows, budget - next, next - 1, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_boxes, max_boxes, &mut out);
    out.sort();
    out
}

/// A subset of `{1, .., n}` stored as a bitmask (bit `i - 1` for index `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FockIndex(u64);

impl FockIndex {
    pub const EMPTY: FockIndex = FockIndex(0);

    pub fn from_bits(bits: u64) -> Self {
        FockIndex(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > MAX_RANK {
                return Err(Error::range("Fock index", i as i64, 1, MAX_RANK as i64));
            }
            let bit = 1u64 << (i - 1);
            if bits & bit != 0 {
                return Err(Error::parse(format!("repeated Fock index {i}")));
            }
            bits |= bit;
        }
        Ok(FockIndex(bits))
    }

    /// The full set `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        FockIndex(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        FockIndex(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        FockIndex(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of members strictly less than `i`.
    pub fn count_below(self, i: usize) -> usize {
        let mask = if i == 0 { 0 } else { (1u64 << (i - 1)) - 1 };
        (self.0 & mask).count_ones() as usize
    }

    /// Number of members strictly greater than `i`.
    pub fn count_above(self, i: usize) -> usize {
        if i >= 64 {
            return 0;
        }
        (self.0 >> i).count_ones() as usize
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=64).filter(move |&i| self.contains(i))
    }

    pub fn check_rank(self, n: usize) -> Result<()> {
        match self.max() {
            Some(m) if m > n => Err(Error::range("Fock index", m as i64, 1, n as i64)),
            _ => Ok(()),
        }
    }
}

/// Size first, then the sorted member lists lexicographically.
impl Ord for FockIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for FockIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (j, i) in self.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FockIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::parse(format!("expected `{{...}}`, got `{s}`")))?
            .trim();
        if inner.is_empty() {
            return Ok(FockIndex::EMPTY);
        }
        let indices = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("invalid Fock index `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(format!("Fock indices must increase: `{s}`")));
        }
        FockIndex::from_indices(indices)
    }
}

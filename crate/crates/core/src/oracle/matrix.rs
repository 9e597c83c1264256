use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sparse::{format_rational, Rational, SparseVec};

/// Sparse exact matrix, stored by columns (column `j` is the image of basis
/// vector `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: Vec<BTreeMap<usize, Rational>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![BTreeMap::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.cols[i].insert(i, Rational::one());
        }
        m
    }

    pub fn from_columns(rows: usize, cols: Vec<BTreeMap<usize, Rational>>) -> Result<Self> {
        for col in &cols {
            if let Some((&r, _)) = col.iter().next_back() {
                if r >= rows {
                    return Err(Error::range("row index", r as i64, 0, rows as i64 - 1));
                }
            }
        }
        let cols = cols
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Ok(Self { rows, cols })
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.cols[col].get(&row).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn column(&self, col: usize) -> &BTreeMap<usize, Rational> {
        &self.cols[col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols.len(), "index out of bounds");
        if value.is_zero() {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, value);
        }
    }

    /// Nonzero entries as `(row, col, value)`, sorted by row then column.
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        let mut out: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, x)| (r, c, x.clone())))
            .collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.num_cols() != other.num_cols() {
            return Err(Error::ShapeMismatch {
                expected: self.rows * self.num_cols(),
                found: other.rows * other.num_cols(),
            });
        }
        Ok(())
    }

    pub fn add_scaled(&self, other: &Self, scale: &Rational) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (c, col) in other.cols.iter().enumerate() {
            for (&r, x) in col {
                let entry = out.cols[c].entry(r).or_insert_with(Rational::zero);
                *entry += x * scale;
                if entry.is_zero() {
                    out.cols[c].remove(&r);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn scaled(&self, scale: &Rational) -> Self {
        if scale.is_zero() {
            return Self::zeros(self.rows, self.num_cols());
        }
        Self {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(&r, x)| (r, x * scale)).collect())
                .collect(),
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.num_cols() != other.rows {
            return Err(Error::ShapeMismatch {
                expected: self.num_cols(),
                found: other.rows,
            });
        }
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (&k, y) in col {
                    for (&r, x) in &self.cols[k] {
                        *acc.entry(r).or_insert_with(Rational::zero) += x * y;
                    }
                }
                acc.retain(|_, x| !x.is_zero());
                acc
            })
            .collect();
        Ok(Self { rows: self.rows, cols })
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.num_cols(), self.rows);
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, x) in col {
                out.cols[r].insert(c, x.clone());
            }
        }
        out
    }

    /// First column (in index order) where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..self.num_cols().min(other.num_cols())).find(|&c| self.cols[c] != other.cols[c])
    }

    /// Exact rank by sparse Gaussian elimination over the columns.
    pub fn rank(&self) -> usize {
        let mut echelon = Echelon::default();
        for col in &self.cols {
            let v: SparseVec<usize> = col.iter().map(|(&r, x)| (r, x.clone())).collect();
            echelon.insert(v);
        }
        echelon.rank()
    }

    /// Sparse triplet text: a header naming the basis, then `row col value`
    /// lines with exact rationals.
    pub fn to_triplet_text(&self, operator: &str, basis: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# halfspin sparse matrix");
        let _ = writeln!(out, "# operator: {operator}");
        let _ = writeln!(out, "# shape: {} {}", self.rows, self.num_cols());
        let _ = writeln!(out, "# nnz: {}", self.nnz());
        let _ = writeln!(out, "# basis: {}", basis.join(" "));
        for (r, c, x) in self.triplets() {
            let _ = writeln!(out, "{r} {c} {}", format_rational(&x));
        }
        out
    }
}

/// Incremental row-echelon form over exact rationals.
///
/// Each stored vector has leading (smallest) key with coefficient one and is
/// zero at every other pivot's leading key.
#[derive(Clone)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self {
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        loop {
            let hit = v
                .iter()
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, c)| (k.clone(), c.clone()));
            match hit {
                Some((k, c)) => v.add_scaled(&self.pivots[&k], &-c),
                None => return v,
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let r = self.reduce(&v);
        let Some((lead, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let r = r.scaled(&(Rational::one() / c));
        for other in self.pivots.values_mut() {
            let x = other.coeff(&lead);
            if !x.is_zero() {
                other.add_scaled(&r, &-x);
            }
        }
        self.pivots.insert(lead, r);
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.pivots.values()
    }
}

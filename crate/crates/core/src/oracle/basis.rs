use std::collections::BTreeMap;
use std::fmt::Display;

use crate::clifford::{FockVector, CliffordElement};
use crate::diagram::{enumerate_diagrams, enumerate_up_to_boxes, FockIndex, Sign};
use crate::error::{Error, Result};
use crate::quiver::RankContext;
use crate::spinrep::{BasisState, Operator, SpinVector};
use crate::sparse::SparseVec;

use super::matrix::ExactMatrix;

/// An explicitly ordered basis.
#[derive(Debug, Clone)]
pub struct IndexedBasis<K: Ord + Clone> {
    states: Vec<K>,
    position: BTreeMap<K, usize>,
}

impl<K: Ord + Clone + Display> IndexedBasis<K> {
    pub fn new(states: Vec<K>) -> Result<Self> {
        let mut position = BTreeMap::new();
        for (i, s) in states.iter().enumerate() {
            if position.insert(s.clone(), i).is_some() {
                return Err(Error::InvariantViolation(format!("basis state {s} repeated")));
            }
        }
        Ok(Self { states, position })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[K] {
        &self.states
    }

    pub fn state(&self, i: usize) -> &K {
        &self.states[i]
    }

    pub fn position(&self, s: &K) -> Option<usize> {
        self.position.get(s).copied()
    }

    pub fn labels(&self) -> Vec<String> {
        self.states.iter().map(ToString::to_string).collect()
    }

    /// Coordinates of `v`; fails if `v` leaves the basis.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Result<BTreeMap<usize, crate::sparse::Rational>> {
        v.iter()
            .map(|(k, c)| {
                self.position(k)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| Error::InvariantViolation(format!("{k} is outside the basis")))
            })
            .collect()
    }

    pub fn vector(&self, col: &BTreeMap<usize, crate::sparse::Rational>) -> SparseVec<K> {
        col.iter().map(|(&i, c)| (self.states[i].clone(), c.clone())).collect()
    }

    /// Matrix of a linear map given by its action on basis vectors.
    pub fn matrix_of<L: Ord + Clone + Display>(
        &self,
        target: &IndexedBasis<L>,
        mut f: impl FnMut(&K) -> Result<SparseVec<L>>,
    ) -> Result<ExactMatrix> {
        let cols = self
            .states
            .iter()
            .map(|s| target.coordinates(&f(s)?))
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_columns(target.len(), cols)
    }
}

/// The `2^n` spin states: the `Plus` block, then the `Minus` block, each in
/// diagram order.
pub fn spin_basis(ctx: &RankContext) -> IndexedBasis<BasisState> {
    let diagrams = enumerate_diagrams(ctx.rank()).expect("context rank is valid");
    let states = Sign::BOTH
        .iter()
        .flat_map(|&s| diagrams.iter().map(move |y| BasisState::new(s, y.clone())))
        .collect();
    IndexedBasis::new(states).expect("distinct states")
}

/// Spin states whose diagrams have at most `max_boxes` boxes.
pub fn truncated_spin_basis(max_boxes: u32, ctx: &RankContext) -> Result<IndexedBasis<BasisState>> {
    let diagrams = enumerate_up_to_boxes(max_boxes);
    for y in &diagrams {
        y.check_rank(ctx.rank())?;
    }
    let states = Sign::BOTH
        .iter()
        .flat_map(|&s| diagrams.iter().map(move |y| BasisState::new(s, y.clone())))
        .collect();
    IndexedBasis::new(states)
}

/// The `2^n` Fock states `b_I`, by size then lexicographically.
pub fn fock_basis(ctx: &RankContext) -> IndexedBasis<FockIndex> {
    let mut states: Vec<FockIndex> = (0..1u64 << ctx.rank()).map(FockIndex::from_bits).collect();
    states.sort();
    IndexedBasis::new(states).expect("distinct states")
}

pub fn operator_matrix(op: Operator, basis: &IndexedBasis<BasisState>, ctx: &RankContext) -> Result<ExactMatrix> {
    op.check_rank(ctx)?;
    basis.matrix_of(basis, |s| op.apply(&SpinVector::basis(s.clone()), ctx))
}

/// Looks an operator up by name (`E_3`, `a_1`, `kappa`, ...).
pub fn named_operator_matrix(name: &str, basis: &IndexedBasis<BasisState>, ctx: &RankContext) -> Result<ExactMatrix> {
    operator_matrix(name.parse()?, basis, ctx)
}

pub fn clifford_matrix(x: &CliffordElement, basis: &IndexedBasis<FockIndex>, ctx: &RankContext) -> Result<ExactMatrix> {
    basis.matrix_of(basis, |i| x.act(&FockVector::basis(*i), ctx))
}

/// Matrix of `Φ` from the spin basis to the Fock basis.
pub fn phi_matrix(
    spin: &IndexedBasis<BasisState>,
    fock: &IndexedBasis<FockIndex>,
    ctx: &RankContext,
) -> Result<ExactMatrix> {
    spin.matrix_of(fock, |s| crate::clifford::phi(&SpinVector::basis(s.clone()), ctx))
}

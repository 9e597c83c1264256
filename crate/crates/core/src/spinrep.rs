//! The geometric model of `L(w^{n-1}) ⊕ L(w^n)`.
//!
//! Each irreducible component `X_Y^±` is a point, so its indicator function is
//! a basis vector and a vector is a finite combination of `(sign, Y)` states.
//! The Chevalley operators move between components whose dimension vectors
//! differ by a unit vector; the Clifford operators add or remove a whole row
//! and switch summands.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{Sign, StrictPartition};
use crate::error::{Error, Result};
use crate::quiver::{dim_vector, weight_u, DimVector, RankContext};
use crate::sparse::{int, parse_sparse, rat, Rational, SparseVec};

/// The basis vector `1_{X_Y^±}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisState {
    pub sign: Sign,
    pub diagram: StrictPartition,
}

impl BasisState {
    pub fn new(sign: Sign, diagram: StrictPartition) -> Self {
        Self { sign, diagram }
    }

    pub fn highest(sign: Sign) -> Self {
        Self::new(sign, StrictPartition::empty())
    }

    pub fn check_rank(&self, ctx: &RankContext) -> Result<()> {
        self.diagram.check_rank(ctx.rank())
    }

    pub fn dim_vector(&self, ctx: &RankContext) -> DimVector {
        dim_vector(&self.diagram, self.sign, ctx)
    }

    /// `u = w^σ - C v_Y^σ`, the weight in the fundamental-weight basis.
    pub fn weight_u(&self, ctx: &RankContext) -> DimVector {
        weight_u(&self.dim_vector(ctx), &ctx.framing(self.sign), ctx).expect("shapes agree")
    }
}

/// Text form `(plus,3,1)` / `(minus,-)`.
impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sign, self.diagram)
    }
}

impl fmt::Debug for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BasisState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("expected `(sign,partition)`, got `{s}`")))?;
        let (sign, rest) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("expected `(sign,partition)`, got `{s}`")))?;
        Ok(Self::new(sign.parse()?, rest.parse()?))
    }
}

/// An element of `L(w^{n-1}) ⊕ L(w^n)`.
pub type SpinVector = SparseVec<BasisState>;

pub fn parse_spin_vector(text: &str) -> Result<SpinVector> {
    parse_sparse(text, '(', ')', |t| t.parse())
}

pub fn check_spin_vector(vec: &SpinVector, ctx: &RankContext) -> Result<()> {
    vec.keys().try_for_each(|s| s.check_rank(ctx))
}

/// A weight written in the `ε` basis of the Cartan subalgebra.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EpsWeight(#[serde(with = "rational_strings")] Vec<Rational>);

impl EpsWeight {
    pub fn zero(n: usize) -> Self {
        EpsWeight(vec![Rational::zero(); n])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        EpsWeight(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    /// Coefficient of `ε_i`, 1-based.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    fn add_eps(&mut self, i: usize, c: &Rational) {
        self.0[i - 1] += c;
    }

    pub fn add_scaled(&mut self, other: &EpsWeight, c: &Rational) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b * c;
        }
    }
}

impl fmt::Display for EpsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for EpsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) mod rational_strings {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|q| q.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

/// `Λ_i` in `ε` coordinates.
pub fn fundamental_weight(i: usize, ctx: &RankContext) -> EpsWeight {
    let n = ctx.rank();
    let mut w = EpsWeight::zero(n);
    if i <= n - 2 {
        for j in 1..=i {
            w.add_eps(j, &int(1));
        }
    } else {
        let half = rat(1, 2);
        for j in 1..n {
            w.add_eps(j, &half);
        }
        let last = if i == n { half } else { -half };
        w.add_eps(n, &last);
    }
    w
}

/// `α_i` in `ε` coordinates.
pub fn simple_root(i: usize, ctx: &RankContext) -> EpsWeight {
    let n = ctx.rank();
    let mut w = EpsWeight::zero(n);
    if i < n {
        w.add_eps(i, &int(1));
        w.add_eps(i + 1, &int(-1));
    } else {
        w.add_eps(n - 1, &int(1));
        w.add_eps(n, &int(1));
    }
    w
}

/// Weight of a basis state: `Σ u_i Λ_i` with `u = w - C v`.
pub fn weight_eps(state: &BasisState, ctx: &RankContext) -> EpsWeight {
    let u = state.weight_u(ctx);
    let mut w = EpsWeight::zero(ctx.rank());
    for i in 1..=ctx.rank() {
        w.add_scaled(&fundamental_weight(i, ctx), &int(u.get(i)));
    }
    w
}

/// Weight by counting boxes of the conjugate partition `μ`:
/// `Λ_σ - ⌈μ_1/2⌉ α_n - ⌊μ_1/2⌋ α_{n-1} - Σ_{i>=2} μ_i α_{n-i}` for `Plus`,
/// with the ceiling and floor exchanged for `Minus`.
pub fn weight_alpha_route(state: &BasisState, ctx: &RankContext) -> EpsWeight {
    let n = ctx.rank();
    let mu = state.diagram.conjugate();
    let mu1 = mu.first().copied().unwrap_or(0) as i64;
    let (ceil, floor) = ((mu1 + 1) / 2, mu1 / 2);
    let (at_n, at_n1) = match state.sign {
        Sign::Plus => (ceil, floor),
        Sign::Minus => (floor, ceil),
    };
    let top = match state.sign {
        Sign::Plus => n,
        Sign::Minus => n - 1,
    };
    let mut w = fundamental_weight(top, ctx);
    w.add_scaled(&simple_root(n, ctx), &int(-at_n));
    w.add_scaled(&simple_root(n - 1, ctx), &int(-at_n1));
    for (i, &m) in mu.iter().enumerate().skip(1) {
        w.add_scaled(&simple_root(n - (i + 1), ctx), &-int(m as i64));
    }
    w
}

/// Closed form `½ Σ_{i<n} ε_i - Σ_rows ε_{n-λ_i} ± ½ ε_n`, where the sign of
/// `ε_n` is `+` for `Plus` with an even row count (and for `Minus` with an
/// odd one).
pub fn weight_closed_form(state: &BasisState, ctx: &RankContext) -> EpsWeight {
    closed_form(state, ctx, int(1))
}

/// The same closed form with coefficient `½` on the row sum. Kept only to
/// document that it disagrees with the other weight routes.
pub fn weight_closed_form_half_rows(state: &BasisState, ctx: &RankContext) -> EpsWeight {
    closed_form(state, ctx, rat(1, 2))
}

fn closed_form(state: &BasisState, ctx: &RankContext, row_coeff: Rational) -> EpsWeight {
    let n = ctx.rank();
    let half = rat(1, 2);
    let mut w = EpsWeight::zero(n);
    for i in 1..n {
        w.add_eps(i, &half);
    }
    for e in state.diagram.endpoints(n) {
        w.add_eps(e, &-row_coeff.clone());
    }
    let even = state.diagram.num_rows().is_multiple_of(2);
    let last = if even == (state.sign == Sign::Plus) { half } else { -half };
    w.add_eps(n, &last);
    w
}

/// A named operator on the spin module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Operator {
    Identity,
    E(usize),
    F(usize),
    H(usize),
    /// Geometric annihilator `a_k`.
    A(usize),
    /// Geometric creator `b_k`.
    B(usize),
    Kappa,
}

impl Operator {
    pub fn index(&self) -> Option<usize> {
        match *self {
            Operator::E(k) | Operator::F(k) | Operator::H(k) | Operator::A(k) | Operator::B(k) => Some(k),
            Operator::Identity | Operator::Kappa => None,
        }
    }

    pub fn check_rank(&self, ctx: &RankContext) -> Result<()> {
        match self.index() {
            Some(k) => ctx.check_vertex(k),
            None => Ok(()),
        }
    }

    pub fn apply(&self, vec: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
        match *self {
            Operator::Identity => Ok(vec.clone()),
            Operator::E(k) => apply_e(k, vec, ctx),
            Operator::F(k) => apply_f(k, vec, ctx),
            Operator::H(k) => apply_h(k, vec, ctx),
            Operator::A(k) => geometric_a(k, vec, ctx),
            Operator::B(k) => geometric_b(k, vec, ctx),
            Operator::Kappa => Ok(kappa(vec)),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Identity => f.write_str("id"),
            Operator::E(k) => write!(f, "E_{k}"),
            Operator::F(k) => write!(f, "F_{k}"),
            Operator::H(k) => write!(f, "H_{k}"),
            Operator::A(k) => write!(f, "a_{k}"),
            Operator::B(k) => write!(f, "b_{k}"),
            Operator::Kappa => f.write_str("kappa"),
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "id" | "1" => return Ok(Operator::Identity),
            "kappa" => return Ok(Operator::Kappa),
            _ => {}
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(|| Error::UnknownOperator(s.to_string()))?;
        let rest = chars.as_str();
        let digits = rest.strip_prefix('_').unwrap_or(rest);
        let k: usize = digits
            .parse()
            .map_err(|_| Error::UnknownOperator(s.to_string()))?;
        Ok(match head {
            'E' => Operator::E(k),
            'F' => Operator::F(k),
            'H' => Operator::H(k),
            'a' => Operator::A(k),
            'b' => Operator::B(k),
            _ => return Err(Error::UnknownOperator(s.to_string())),
        })
    }
}

/// Parses a word such as `"F_3 F_4"` or `"b_2*a_1"`.
pub fn parse_word(text: &str) -> Result<Vec<Operator>> {
    let word: Vec<Operator> = text
        .split(|c: char| c.is_whitespace() || c == '*')
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if word.is_empty() {
        return Err(Error::parse("empty operator word"));
    }
    Ok(word)
}

/// Applies `word` as a composite: the rightmost operator acts first.
pub fn apply_word(word: &[Operator], vec: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
    word.iter().rev().try_fold(vec.clone(), |v, op| op.apply(&v, ctx))
}

pub fn highest_weight_vector(sign: Sign) -> SpinVector {
    SpinVector::basis(BasisState::highest(sign))
}

/// The unique state whose dimension vector is `v_Y^σ + delta·e^k`, if any.
///
/// Candidates come from single-box edits of `Y`; more than one survivor
/// would contradict the component dictionary and is reported as an
/// invariant violation.
fn shift_state(state: &BasisState, k: usize, delta: i64, ctx: &RankContext) -> Result<Option<BasisState>> {
    let n = ctx.rank();
    let mut target = state.dim_vector(ctx);
    let mut entries = target.entries().to_vec();
    entries[k - 1] += delta;
    if entries[k - 1] < 0 {
        return Ok(None);
    }
    target = DimVector::from_entries(entries);
    let mut found: Option<BasisState> = None;
    for cand in state.diagram.single_box_neighbours() {
        if cand.largest_row() as usize > n - 1 {
            continue;
        }
        if dim_vector(&cand, state.sign, ctx) == target {
            if let Some(prev) = &found {
                return Err(Error::InvariantViolation(format!(
                    "two components {prev} and ({},{cand}) share dimension vector {target}",
                    state.sign
                )));
            }
            found = Some(BasisState::new(state.sign, cand));
        }
    }
    Ok(found)
}

fn check_inputs(k: usize, vec: &SpinVector, ctx: &RankContext) -> Result<()> {
    ctx.check_vertex(k)?;
    check_spin_vector(vec, ctx)
}

pub fn apply_f(k: usize, vec: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
    check_inputs(k, vec, ctx)?;
    vec.map_linear(|s| Ok(shift_state(s, k, 1, ctx)?.map(SpinVector::basis).unwrap_or_default()))
}

pub fn apply_e(k: usize, vec: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
    check_inputs(k, vec, ctx)?;
    vec.map_linear(|s| Ok(shift_state(s, k, -1, ctx)?.map(SpinVector::basis).unwrap_or_default()))
}

/// `H_k` scales each state by `u_k`.
pub fn apply_h(k: usize, vec: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
    check_inputs(k, vec, ctx)?;
    vec.map_linear(|s| Ok::<_, Error>(SpinVector::term(s.clone(), int(s.weight_u(ctx).get(k)))))
}

/// Exchanges the two summands, keeping the diagram.
pub fn kappa(vec: &SpinVector) -> SpinVector {
    vec.iter()
        .map(|(s, c)| (BasisState::new(s.sign.flip(), s.diagram.clone()), c.clone()))
        .collect()
}

fn parity_sign(count: usize) -> Rational {
    if count.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn framing_n(sign: Sign) -> usize {
    match sign {
        Sign::Plus => 1,
        Sign::Minus => 0,
    }
}

/// Image of one state under `a_k` (`create = false`) or `b_k` (`create = true`).
fn clifford_on_state(k: usize, create: bool, s: &BasisState, ctx: &RankContext) -> SpinVector {
    let n = ctx.rank();
    if k == n {
        let rows = s.diagram.num_rows();
        let even = (framing_n(s.sign) + rows).is_multiple_of(2);
        // a_n acts on the even case, b_n on the odd one.
        if even != create {
            let image = BasisState::new(s.sign.flip(), s.diagram.clone());
            return SpinVector::term(image, parity_sign(rows));
        }
        return SpinVector::zero();
    }
    let edited = if create {
        s.diagram.add_row_with_endpoint(k, n)
    } else {
        s.diagram.remove_row_with_endpoint(k, n)
    };
    match edited {
        Some(y) => SpinVector::term(
            BasisState::new(s.sign.flip(), y),
            parity_sign(s.diagram.endpoint_count_below(n, k)),
        ),
        None => SpinVector::zero(),
    }
}

/// `a_k`: removes the row with endpoint `k` (for `k < n`) with sign
/// `(-1)^{l_k(Y)}` and switches summands.
pub fn geometric_a(k: usize, vec: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
    check_inputs(k, vec, ctx)?;
    vec.map_linear(|s| Ok::<_, Error>(clifford_on_state(k, false, s, ctx)))
}

/// `b_k`: adds the row with endpoint `k` (for `k < n`) with sign
/// `(-1)^{l_k(Y)}` and switches summands.
pub fn geometric_b(k: usize, vec: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
    check_inputs(k, vec, ctx)?;
    vec.map_linear(|s| Ok::<_, Error>(clifford_on_state(k, true, s, ctx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_diagrams;
    use std::collections::BTreeSet;

    fn ctx(n: usize) -> RankContext {
        RankContext::new(n).unwrap()
    }

    fn st(s: &str) -> BasisState {
        s.parse().unwrap()
    }

    fn v(s: &str) -> SpinVector {
        parse_spin_vector(s).unwrap()
    }

    fn eps(s: &str) -> EpsWeight {
        let inner = s.trim_matches(|c| c == '(' || c == ')');
        EpsWeight(inner.split(',').map(|t| t.trim().parse().unwrap()).collect())
    }

    fn all_states(n: usize) -> Vec<BasisState> {
        let ds = enumerate_diagrams(n).unwrap();
        Sign::BOTH
            .iter()
            .flat_map(|&s| ds.iter().map(move |y| BasisState::new(s, y.clone())))
            .collect()
    }

    #[test]
    fn chevalley_examples() {
        let c = ctx(4);
        let hw = highest_weight_vector(Sign::Plus);
        assert_eq!(apply_f(4, &hw, &c).unwrap(), v("(plus,1)"));
        assert!(apply_f(3, &hw, &c).unwrap().is_zero());
        assert_eq!(apply_e(2, &v("(plus,2)"), &c).unwrap(), v("(plus,1)"));
        for k in 1..=4 {
            for sign in Sign::BOTH {
                assert!(apply_e(k, &highest_weight_vector(sign), &c).unwrap().is_zero());
            }
        }
        assert_eq!(apply_f(3, &highest_weight_vector(Sign::Minus), &c).unwrap(), v("(minus,1)"));
        assert!(apply_f(5, &hw, &c).is_err());
        assert!(apply_f(0, &hw, &c).is_err());
    }

    #[test]
    fn cartan_examples() {
        let c = ctx(4);
        assert_eq!(apply_h(4, &v("(plus,-)"), &c).unwrap(), v("(plus,-)"));
        assert_eq!(apply_h(1, &v("(plus,3,1)"), &c).unwrap(), v("-(plus,3,1)"));
    }

    #[test]
    fn weight_examples() {
        let c = ctx(4);
        assert_eq!(weight_eps(&st("(plus,-)"), &c), eps("(1/2,1/2,1/2,1/2)"));
        assert_eq!(weight_eps(&st("(minus,-)"), &c), eps("(1/2,1/2,1/2,-1/2)"));
        assert_eq!(weight_eps(&st("(plus,3,1)"), &c), eps("(-1/2,1/2,-1/2,1/2)"));
        assert_eq!(weight_eps(&st("(plus,2)"), &c), eps("(1/2,-1/2,1/2,-1/2)"));
        assert_eq!(weight_closed_form_half_rows(&st("(plus,2)"), &c), eps("(1/2,0,1/2,-1/2)"));
    }

    #[test]
    fn weight_routes_agree() {
        for n in 2..=8 {
            let c = ctx(n);
            for s in all_states(n) {
                let w = weight_eps(&s, &c);
                assert_eq!(w, weight_alpha_route(&s, &c), "{s}");
                assert_eq!(w, weight_closed_form(&s, &c), "{s}");
                let half = rat(1, 2);
                assert!(w.coeffs().iter().all(|x| x == &half || x == &-half.clone()));
            }
        }
    }

    #[test]
    fn weights_are_multiplicity_free() {
        for n in 2..=8 {
            let c = ctx(n);
            let states = all_states(n);
            let weights: BTreeSet<String> = states.iter().map(|s| weight_eps(s, &c).to_string()).collect();
            assert_eq!(weights.len(), states.len());
        }
    }

    #[test]
    fn kappa_flips_last_coordinate() {
        assert_eq!(kappa(&v("(plus,3,1)")), v("(minus,3,1)"));
        for n in 2..=6 {
            let c = ctx(n);
            for s in all_states(n) {
                let x = SpinVector::basis(s.clone());
                assert_eq!(kappa(&kappa(&x)), x);
                let flipped = BasisState::new(s.sign.flip(), s.diagram.clone());
                let (a, b) = (weight_eps(&s, &c), weight_eps(&flipped, &c));
                for i in 1..n {
                    assert_eq!(a.get(i), b.get(i));
                }
                assert_eq!(a.get(n), &-b.get(n).clone());
            }
        }
    }

    #[test]
    fn clifford_examples() {
        let c = ctx(4);
        assert_eq!(geometric_b(3, &v("(plus,-)"), &c).unwrap(), v("(minus,1)"));
        assert_eq!(geometric_a(1, &v("(plus,3,1)"), &c).unwrap(), v("(minus,1)"));
        assert_eq!(geometric_a(3, &v("(plus,3,1)"), &c).unwrap(), v("-(minus,3)"));
        assert!(geometric_a(4, &v("(plus,-)"), &c).unwrap().is_zero());
        assert_eq!(geometric_b(4, &v("(plus,-)"), &c).unwrap(), v("(minus,-)"));
    }

    #[test]
    fn f_moves_weight_by_a_simple_root() {
        for n in 2..=6 {
            let c = ctx(n);
            for s in all_states(n) {
                for k in 1..=n {
                    let img = apply_f(k, &SpinVector::basis(s.clone()), &c).unwrap();
                    for (t, coeff) in img.iter() {
                        assert!(coeff.is_one());
                        let mut expected = weight_eps(&s, &c);
                        expected.add_scaled(&simple_root(k, &c), &int(-1));
                        assert_eq!(weight_eps(t, &c), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn a_and_b_shift_weight_by_eps() {
        for n in 2..=6 {
            let c = ctx(n);
            for s in all_states(n) {
                for k in 1..=n {
                    let mut unit = EpsWeight::zero(n);
                    unit.add_eps(k, &int(1));
                    for (create, shift) in [(false, int(1)), (true, int(-1))] {
                        let img = clifford_on_state(k, create, &s, &c);
                        for (t, _) in img.iter() {
                            assert_eq!(t.sign, s.sign.flip());
                            let mut expected = weight_eps(&s, &c);
                            expected.add_scaled(&unit, &shift);
                            assert_eq!(weight_eps(t, &c), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn operator_words() {
        let c = ctx(4);
        let word = parse_word("F_3 F_4").unwrap();
        assert_eq!(word, vec![Operator::F(3), Operator::F(4)]);
        assert!(apply_word(&word, &v("(plus,-)"), &c).unwrap().is_zero());
        assert_eq!(apply_word(&parse_word("F_2 F_4").unwrap(), &v("(plus,-)"), &c).unwrap(), v("(plus,2)"));
        assert!(apply_word(&parse_word("E_1").unwrap(), &v("(plus,-)"), &c).unwrap().is_zero());
        let x = v("2 * (plus,3,1) - 1/2 * (minus,2)");
        assert_eq!(apply_word(&parse_word("kappa kappa").unwrap(), &x, &c).unwrap(), x);
        assert!(parse_word("G_1").is_err());
        assert!(parse_word("").is_err());
        assert!(apply_word(&parse_word("F_1").unwrap(), &v("(plus,4)"), &c).is_err());
    }

    #[test]
    fn vector_text_round_trip() {
        let x = v("(plus,-) - 3/2 * (minus,3,2,1) + 2 * (plus,2)");
        assert_eq!(x.to_string(), "(plus,-) + 2 * (plus,2) - 3/2 * (minus,3,2,1)");
        assert_eq!(parse_spin_vector(&x.to_string()).unwrap(), x);
        assert_eq!(parse_spin_vector("0").unwrap(), SpinVector::zero());
        assert!(parse_spin_vector("(plus,2,2)").is_err());
    }
}

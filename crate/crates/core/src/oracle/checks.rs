use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::One;

use crate::clifford::{
    annihilate, create, embed_generator, fock_weight, phi, CliffordElement, FockVector, LieGenerator, Monomial,
};
use crate::diagram::{FockIndex, Sign};
use crate::error::{Error, Result};
use crate::quiver::RankContext;
use crate::sparse::{int, Rational, SparseVec};
use crate::spinrep::{
    apply_word, fundamental_weight, highest_weight_vector, simple_root, weight_alpha_route, weight_closed_form,
    weight_closed_form_half_rows, weight_eps, BasisState, EpsWeight, Operator, SpinVector,
};

use super::basis::{clifford_matrix, fock_basis, operator_matrix, phi_matrix, spin_basis, truncated_spin_basis, IndexedBasis};
use super::matrix::{Echelon, ExactMatrix};
use super::report::{Entry, Report, Status, Witness};

/// Largest rank at which the faithfulness suite builds its `4^n × 4^n`
/// system.
pub const FAITHFULNESS_MAX_RANK: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Chevalley,
    Serre,
    Clifford,
    Intertwiner,
    Factorization,
    Module,
    Weights,
    Faithfulness,
    Stability,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Chevalley,
        Suite::Serre,
        Suite::Clifford,
        Suite::Intertwiner,
        Suite::Factorization,
        Suite::Module,
        Suite::Weights,
        Suite::Faithfulness,
        Suite::Stability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chevalley => "chevalley",
            Suite::Serre => "serre",
            Suite::Clifford => "clifford",
            Suite::Intertwiner => "intertwiner",
            Suite::Factorization => "factorization",
            Suite::Module => "module",
            Suite::Weights => "weights",
            Suite::Faithfulness => "faithfulness",
            Suite::Stability => "stability",
        }
    }

    /// Whether the suite runs on a box-capped basis (unbounded mode).
    pub fn supports_truncation(self) -> bool {
        !matches!(self, Suite::Module | Suite::Faithfulness)
    }

    /// Whether the suite runs at rank `n` in bounded mode.
    pub fn supports_rank(self, n: usize) -> bool {
        self != Suite::Faithfulness || n <= FAITHFULNESS_MAX_RANK
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// A formal linear combination of operator words.
#[derive(Debug, Clone, Default)]
pub struct Expr(Vec<(Rational, Vec<Operator>)>);

impl Expr {
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn word(ops: &[Operator]) -> Self {
        Self(vec![(Rational::one(), ops.to_vec())])
    }

    pub fn op(op: Operator) -> Self {
        Self::word(&[op])
    }

    pub fn plus(mut self, c: i64, ops: &[Operator]) -> Self {
        if c != 0 {
            self.0.push((int(c), ops.to_vec()));
        }
        self
    }

    /// `[x, y]` for single operators.
    pub fn commutator(x: Operator, y: Operator) -> Self {
        Self::word(&[x, y]).plus(-1, &[y, x])
    }

    pub fn anticommutator(x: Operator, y: Operator) -> Self {
        Self::word(&[x, y]).plus(1, &[y, x])
    }

    pub fn scaled_op(c: i64, op: Operator) -> Self {
        Self::zero().plus(c, &[op])
    }

    fn apply(&self, v: &SpinVector, ctx: &RankContext) -> Result<SpinVector> {
        let mut out = SpinVector::zero();
        for (c, w) in &self.0 {
            out.add_scaled(&apply_word(w, v, ctx)?, c);
        }
        Ok(out)
    }

    fn operators(&self) -> impl Iterator<Item = Operator> + '_ {
        self.0.iter().flat_map(|(_, w)| w.iter().copied())
    }
}

pub struct Identity {
    pub label: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Identity {
    fn new(label: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

/// How identities between spin operators are evaluated.
enum Backend {
    /// Full basis: operators become exact matrices and words become products.
    Matrix {
        basis: IndexedBasis<BasisState>,
        cache: HashMap<Operator, ExactMatrix>,
    },
    /// Box-capped basis: each word is applied to each domain state, and
    /// intermediate states may leave the cap.
    Vector { domain: Vec<BasisState> },
}

impl Backend {
    fn matrix(ctx: &RankContext) -> Self {
        Backend::Matrix {
            basis: spin_basis(ctx),
            cache: HashMap::new(),
        }
    }

    fn truncated(max_boxes: u32, ctx: &RankContext) -> Result<Self> {
        Ok(Backend::Vector {
            domain: truncated_spin_basis(max_boxes, ctx)?.states().to_vec(),
        })
    }

    fn domain(&self) -> Vec<BasisState> {
        match self {
            Backend::Matrix { basis, .. } => basis.states().to_vec(),
            Backend::Vector { domain } => domain.clone(),
        }
    }

    fn eval_matrix(&mut self, expr: &Expr, ctx: &RankContext) -> Result<ExactMatrix> {
        let Backend::Matrix { basis, cache } = self else {
            unreachable!("matrix evaluation on a vector backend")
        };
        for op in expr.operators() {
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(op) {
                e.insert(operator_matrix(op, basis, ctx)?);
            }
        }
        let dim = basis.len();
        let mut total = ExactMatrix::zeros(dim, dim);
        for (c, w) in &expr.0 {
            let mut m = ExactMatrix::identity(dim);
            for op in w {
                m = m.mul(&cache[op])?;
            }
            total = total.add_scaled(&m, c)?;
        }
        Ok(total)
    }

    fn check(&mut self, id: &Identity, ctx: &RankContext) -> Result<Entry> {
        let witness = match self {
            Backend::Matrix { .. } => {
                let l = self.eval_matrix(&id.lhs, ctx)?;
                let r = self.eval_matrix(&id.rhs, ctx)?;
                let Backend::Matrix { basis, .. } = self else { unreachable!() };
                l.first_difference(&r).map(|c| Witness {
                    state: basis.state(c).to_string(),
                    lhs: basis.vector(l.column(c)).to_string(),
                    rhs: basis.vector(r.column(c)).to_string(),
                })
            }
            Backend::Vector { domain } => {
                let mut found = None;
                for s in domain.iter() {
                    let v = SpinVector::basis(s.clone());
                    let l = id.lhs.apply(&v, ctx)?;
                    let r = id.rhs.apply(&v, ctx)?;
                    if l != r {
                        found = Some(Witness {
                            state: s.to_string(),
                            lhs: l.to_string(),
                            rhs: r.to_string(),
                        });
                        break;
                    }
                }
                found
            }
        };
        Ok(Entry::from_witness(&id.label, witness))
    }

    fn check_all(&mut self, ids: &[Identity], ctx: &RankContext) -> Result<Vec<Entry>> {
        ids.iter().map(|id| self.check(id, ctx)).collect()
    }
}

pub fn chevalley_identities(ctx: &RankContext) -> Vec<Identity> {
    use Operator::{E, F, H};
    let n = ctx.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let delta = if i == j { Expr::op(H(i)) } else { Expr::zero() };
            out.push(Identity::new(
                format!("[E_{i},F_{j}] = {}", if i == j { format!("H_{i}") } else { "0".into() }),
                Expr::commutator(E(i), F(j)),
                delta,
            ));
            let c = ctx.cartan(i, j);
            out.push(Identity::new(
                format!("[H_{i},E_{j}] = {c} E_{j}"),
                Expr::commutator(H(i), E(j)),
                Expr::scaled_op(c, E(j)),
            ));
            out.push(Identity::new(
                format!("[H_{i},F_{j}] = {} F_{j}", -c),
                Expr::commutator(H(i), F(j)),
                Expr::scaled_op(-c, F(j)),
            ));
            if i < j {
                out.push(Identity::new(
                    format!("[H_{i},H_{j}] = 0"),
                    Expr::commutator(H(i), H(j)),
                    Expr::zero(),
                ));
            }
        }
    }
    out
}

pub fn serre_identities(ctx: &RankContext) -> Vec<Identity> {
    let n = ctx.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            for (name, x, y) in [("E", Operator::E(i), Operator::E(j)), ("F", Operator::F(i), Operator::F(j))] {
                if ctx.adjacent(i, j) {
                    out.push(Identity::new(
                        format!("ad({name}_{i})^2 {name}_{j} = 0"),
                        Expr::word(&[x, x, y]).plus(-2, &[x, y, x]).plus(1, &[y, x, x]),
                        Expr::zero(),
                    ));
                } else if i < j {
                    out.push(Identity::new(
                        format!("[{name}_{i},{name}_{j}] = 0"),
                        Expr::commutator(x, y),
                        Expr::zero(),
                    ));
                }
            }
        }
    }
    out
}

pub fn clifford_identities(ctx: &RankContext) -> Vec<Identity> {
    use Operator::{A, B};
    let n = ctx.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            out.push(Identity::new(
                format!("{{a_{i},a_{j}}} = 0"),
                Expr::anticommutator(A(i), A(j)),
                Expr::zero(),
            ));
            out.push(Identity::new(
                format!("{{b_{i},b_{j}}} = 0"),
                Expr::anticommutator(B(i), B(j)),
                Expr::zero(),
            ));
        }
        for j in 1..=n {
            let rhs = if i == j { Expr::op(Operator::Identity) } else { Expr::zero() };
            out.push(Identity::new(
                format!("{{a_{i},b_{j}}} = {}", u8::from(i == j)),
                Expr::anticommutator(A(i), B(j)),
                rhs,
            ));
        }
    }
    out
}

pub fn factorization_identities(ctx: &RankContext) -> Vec<Identity> {
    use Operator::{A, B, E, F};
    let n = ctx.rank();
    let mut out = Vec::new();
    for k in 1..n {
        out.push(Identity::new(
            format!("E_{k} = b_{} a_{k}", k + 1),
            Expr::op(E(k)),
            Expr::word(&[B(k + 1), A(k)]),
        ));
        out.push(Identity::new(
            format!("F_{k} = b_{k} a_{}", k + 1),
            Expr::op(F(k)),
            Expr::word(&[B(k), A(k + 1)]),
        ));
    }
    out.push(Identity::new(
        format!("E_{n} = a_{n} a_{}", n - 1),
        Expr::op(E(n)),
        Expr::word(&[A(n), A(n - 1)]),
    ));
    out.push(Identity::new(
        format!("F_{n} = b_{} b_{n}", n - 1),
        Expr::op(F(n)),
        Expr::word(&[B(n - 1), B(n)]),
    ));
    out
}

/// Fock-side partner of a spin operator under `Φ`.
fn fock_partner(op: Operator, ctx: &RankContext) -> Result<CliffordElement> {
    Ok(match op {
        Operator::A(k) => CliffordElement::a(k),
        Operator::B(k) => CliffordElement::b(k),
        Operator::E(k) => embed_generator(LieGenerator::E(k), ctx)?,
        Operator::F(k) => embed_generator(LieGenerator::F(k), ctx)?,
        Operator::H(k) => embed_generator(LieGenerator::H(k), ctx)?,
        Operator::Identity => CliffordElement::one(),
        Operator::Kappa => return Err(Error::UnknownOperator("kappa has no Clifford partner".into())),
    })
}

fn intertwiner_ops(ctx: &RankContext) -> Vec<(Operator, String)> {
    let n = ctx.rank();
    let mut out = Vec::new();
    for k in 1..=n {
        out.push((Operator::A(k), format!("Φ a_{k} = (annihilate {k}) Φ")));
        out.push((Operator::B(k), format!("Φ b_{k} = (create {k}) Φ")));
    }
    for k in 1..=n {
        for (op, g) in [(Operator::E(k), "E"), (Operator::F(k), "F"), (Operator::H(k), "H")] {
            out.push((op, format!("Φ {g}_{k} = ι({g}_{k}) Φ")));
        }
    }
    out
}

/// Checks `Φ ∘ op = partner ∘ Φ` for each operator.
fn intertwiner_entries(backend: &mut Backend, ctx: &RankContext) -> Result<Vec<Entry>> {
    let ops = intertwiner_ops(ctx);
    let mut out = Vec::new();
    match backend {
        Backend::Matrix { basis, .. } => {
            let fock = fock_basis(ctx);
            let p = phi_matrix(basis, &fock, ctx)?;
            for (op, label) in ops {
                let lhs = p.mul(&operator_matrix(op, basis, ctx)?)?;
                let rhs = clifford_matrix(&fock_partner(op, ctx)?, &fock, ctx)?.mul(&p)?;
                let witness = lhs.first_difference(&rhs).map(|c| Witness {
                    state: basis.state(c).to_string(),
                    lhs: fock.vector(lhs.column(c)).to_string(),
                    rhs: fock.vector(rhs.column(c)).to_string(),
                });
                out.push(Entry::from_witness(label, witness));
            }
        }
        Backend::Vector { domain } => {
            for (op, label) in ops {
                let partner = fock_partner(op, ctx)?;
                let mut witness = None;
                for s in domain.iter() {
                    let v = SpinVector::basis(s.clone());
                    let lhs = phi(&op.apply(&v, ctx)?, ctx)?;
                    let rhs = partner.act(&phi(&v, ctx)?, ctx)?;
                    if lhs != rhs {
                        witness = Some(Witness {
                            state: s.to_string(),
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                        break;
                    }
                }
                out.push(Entry::from_witness(label, witness));
            }
        }
    }
    Ok(out)
}

/// Fock-side relations: anticommutators of `create`/`annihilate` and the
/// agreement of the Clifford action with them.
fn fock_clifford_entries(ctx: &RankContext) -> Result<Vec<Entry>> {
    let n = ctx.rank();
    let fock = fock_basis(ctx);
    let dim = fock.len();
    let mut cre = Vec::new();
    let mut ann = Vec::new();
    let mut out = Vec::new();
    for k in 1..=n {
        let c = fock.matrix_of(&fock, |i| create(k, &FockVector::basis(*i), ctx))?;
        let a = fock.matrix_of(&fock, |i| annihilate(k, &FockVector::basis(*i), ctx))?;
        for (name, m, x) in [("b", &c, CliffordElement::b(k)), ("a", &a, CliffordElement::a(k))] {
            let acted = clifford_matrix(&x, &fock, ctx)?;
            out.push(Entry::from_witness(
                format!("fock: {name}_{k} acts as the {} operator", if name == "b" { "creation" } else { "annihilation" }),
                matrix_witness(&acted, m, &fock),
            ));
        }
        cre.push(c);
        ann.push(a);
    }
    let id = ExactMatrix::identity(dim);
    let zero = ExactMatrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            let ab = ann[i].mul(&cre[j])?.add(&cre[j].mul(&ann[i])?)?;
            let expected = if i == j { &id } else { &zero };
            out.push(Entry::from_witness(
                format!("fock: {{a_{},b_{}}} = {}", i + 1, j + 1, u8::from(i == j)),
                matrix_witness(&ab, expected, &fock),
            ));
            if i <= j {
                let aa = ann[i].mul(&ann[j])?.add(&ann[j].mul(&ann[i])?)?;
                let bb = cre[i].mul(&cre[j])?.add(&cre[j].mul(&cre[i])?)?;
                out.push(Entry::from_witness(
                    format!("fock: {{a_{},a_{}}} = 0", i + 1, j + 1),
                    matrix_witness(&aa, &zero, &fock),
                ));
                out.push(Entry::from_witness(
                    format!("fock: {{b_{},b_{}}} = 0", i + 1, j + 1),
                    matrix_witness(&bb, &zero, &fock),
                ));
            }
        }
    }
    Ok(out)
}

fn matrix_witness<K: Ord + Clone + fmt::Display>(
    lhs: &ExactMatrix,
    rhs: &ExactMatrix,
    basis: &IndexedBasis<K>,
) -> Option<Witness> {
    lhs.first_difference(rhs).map(|c| Witness {
        state: basis.state(c).to_string(),
        lhs: basis.vector(lhs.column(c)).to_string(),
        rhs: basis.vector(rhs.column(c)).to_string(),
    })
}

/// Clifford-side factorization: the embedded generators equal the stated
/// products of generators, both as algebra elements and as Fock operators.
fn fock_factorization_entries(ctx: &RankContext) -> Result<Vec<Entry>> {
    let n = ctx.rank();
    let fock = fock_basis(ctx);
    let a = CliffordElement::a;
    let b = CliffordElement::b;
    let mut cases = Vec::new();
    for k in 1..n {
        cases.push((LieGenerator::E(k), format!("b_{} a_{k}", k + 1), b(k + 1), a(k)));
        cases.push((LieGenerator::F(k), format!("b_{k} a_{}", k + 1), b(k), a(k + 1)));
    }
    cases.push((LieGenerator::E(n), format!("a_{n} a_{}", n - 1), a(n), a(n - 1)));
    cases.push((LieGenerator::F(n), format!("b_{} b_{n}", n - 1), b(n - 1), b(n)));
    let mut out = Vec::new();
    for (g, label, x, y) in cases {
        let embedded = clifford_matrix(&embed_generator(g, ctx)?, &fock, ctx)?;
        let product = clifford_matrix(&x, &fock, ctx)?.mul(&clifford_matrix(&y, &fock, ctx)?)?;
        let name = match g {
            LieGenerator::E(k) => format!("E_{k}"),
            LieGenerator::F(k) => format!("F_{k}"),
            LieGenerator::H(k) => format!("H_{k}"),
        };
        out.push(Entry::from_witness(
            format!("fock: ι({name}) = {label}"),
            matrix_witness(&embedded, &product, &fock),
        ));
    }
    Ok(out)
}

fn weight_witness(s: &BasisState, lhs: &EpsWeight, rhs: &EpsWeight) -> Witness {
    Witness {
        state: s.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn dot(x: &EpsWeight, y: &EpsWeight) -> Rational {
    x.coeffs().iter().zip(y.coeffs()).map(|(a, b)| a * b).sum()
}

fn weight_entries(domain: &[BasisState], ctx: &RankContext) -> Result<Vec<Entry>> {
    type Route = fn(&BasisState, &RankContext) -> EpsWeight;
    let routes: [(&str, Route); 3] = [
        ("simple-root expansion", weight_alpha_route),
        ("closed form", weight_closed_form),
        ("Fock weight of Φ", |s, ctx| fock_weight(s.diagram.fock_index(s.sign, ctx.rank()), ctx)),
    ];
    let mut out = Vec::new();
    for (name, route) in routes {
        let witness = domain.iter().find_map(|s| {
            let (u, r) = (weight_eps(s, ctx), route(s, ctx));
            (u != r).then(|| weight_witness(s, &r, &u))
        });
        out.push(Entry::from_witness(format!("{name} = Σ u_i Λ_i"), witness));
    }

    let printed = domain.iter().find_map(|s| {
        let (u, r) = (weight_eps(s, ctx), weight_closed_form_half_rows(s, ctx));
        (u != r).then(|| weight_witness(s, &r, &u))
    });
    let label = "closed form with ½ on the row sum = Σ u_i Λ_i";
    out.push(match printed {
        Some(w) => Entry {
            identity: label.into(),
            status: Status::ExpectedFailure,
            witness: Some(w),
            note: Some("the row sum enters with coefficient 1; the ½ variant is kept as a regression".into()),
        },
        None => Entry::pass(label),
    });

    // H_k acts on each state by the pairing of its weight with α_k.
    let mut witness = None;
    'outer: for s in domain {
        let w = weight_eps(s, ctx);
        for k in 1..=ctx.rank() {
            let v = SpinVector::basis(s.clone());
            let hv = Operator::H(k).apply(&v, ctx)?;
            let expected = v.scaled(&dot(&w, &simple_root(k, ctx)));
            if hv != expected {
                witness = Some(Witness {
                    state: s.to_string(),
                    lhs: hv.to_string(),
                    rhs: expected.to_string(),
                });
                break 'outer;
            }
        }
    }
    out.push(Entry::from_witness("H_k = ⟨wt, α_k⟩ on every state", witness));
    Ok(out)
}

fn module_entries(ctx: &RankContext) -> Result<Vec<Entry>> {
    let n = ctx.rank();
    let half_dim = 1usize << (n - 1);
    let mut out = Vec::new();

    for sign in Sign::BOTH {
        let hw = highest_weight_vector(sign);
        let lambda = fundamental_weight(if sign == Sign::Plus { n } else { n - 1 }, ctx);

        let mut killed = None;
        for k in 1..=n {
            let e = Operator::E(k).apply(&hw, ctx)?;
            if !e.is_zero() {
                killed = Some(Witness {
                    state: hw.to_string(),
                    lhs: format!("E_{k} v = {e}"),
                    rhs: "0".into(),
                });
                break;
            }
        }
        out.push(Entry::from_witness(format!("E_k kills the {sign} highest weight vector"), killed));

        let state = BasisState::highest(sign);
        let wt = weight_eps(&state, ctx);
        out.push(Entry::from_witness(
            format!("{sign} highest weight vector has weight Λ_{}", if sign == Sign::Plus { n } else { n - 1 }),
            (wt != lambda).then(|| weight_witness(&state, &wt, &lambda)),
        ));

        // F-span of the highest weight vector.
        let mut echelon: Echelon<BasisState> = Echelon::default();
        let mut queue = vec![hw.clone()];
        echelon.insert(hw);
        while let Some(v) = queue.pop() {
            for k in 1..=n {
                let fv = Operator::F(k).apply(&v, ctx)?;
                if echelon.insert(fv.clone()) {
                    queue.push(fv);
                }
            }
        }
        let outside = echelon
            .vectors()
            .flat_map(|v| v.keys())
            .find(|s| s.sign != sign)
            .cloned();
        let witness = match (echelon.rank() == half_dim, outside) {
            (true, None) => None,
            (_, Some(s)) => Some(Witness {
                state: s.to_string(),
                lhs: format!("reached from the {sign} highest weight vector"),
                rhs: format!("only {sign} states"),
            }),
            (false, None) => Some(Witness {
                state: BasisState::highest(sign).to_string(),
                lhs: format!("span of dimension {}", echelon.rank()),
                rhs: format!("dimension {half_dim}"),
            }),
        };
        out.push(Entry::from_witness(
            format!("F-words on the {sign} highest weight vector span the {sign} block (dim {half_dim})"),
            witness,
        ));

        let mut seen: BTreeMap<Vec<Rational>, BasisState> = BTreeMap::new();
        let mut repeat = None;
        for y in crate::diagram::enumerate_diagrams(n)? {
            let s = BasisState::new(sign, y);
            let w = weight_eps(&s, ctx);
            if let Some(prev) = seen.insert(w.coeffs().to_vec(), s.clone()) {
                repeat = Some(Witness {
                    state: s.to_string(),
                    lhs: format!("weight {w}"),
                    rhs: format!("also the weight of {prev}"),
                });
                break;
            }
        }
        out.push(Entry::from_witness(format!("{sign} block weights have multiplicity one"), repeat));
    }

    for sign in Sign::BOTH {
        let parity = if sign == Sign::Plus { "even" } else { "odd" };
        let witness = crate::diagram::enumerate_diagrams(n)?.into_iter().find_map(|y| {
            let idx = y.fock_index(sign, n);
            ((idx.len() % 2 == 0) != (sign == Sign::Plus)).then(|| Witness {
                state: BasisState::new(sign, y.clone()).to_string(),
                lhs: format!("Φ ↦ b_{idx}"),
                rhs: format!("{parity} degree"),
            })
        });
        out.push(Entry::from_witness(format!("Φ maps the {sign} block onto the {parity} part"), witness));
    }

    // Highest weight of the even part, found on the Fock side directly.
    let fock = fock_basis(ctx);
    let raising: Vec<ExactMatrix> = (1..=n)
        .map(|k| clifford_matrix(&embed_generator(LieGenerator::E(k), ctx)?, &fock, ctx))
        .collect::<Result<_>>()?;
    let even_hw: Vec<FockIndex> = fock
        .states()
        .iter()
        .enumerate()
        .filter(|(c, i)| i.len() % 2 == 0 && raising.iter().all(|m| m.column(*c).is_empty()))
        .map(|(_, i)| *i)
        .collect();
    let lambda_n = fundamental_weight(n, ctx);
    out.push(Entry::from_witness(
        "the even part has a single highest weight line, of weight Λ_n",
        match even_hw.as_slice() {
            [i] if fock_weight(*i, ctx) == lambda_n => None,
            other => Some(Witness {
                state: "even part".into(),
                lhs: format!("highest weight vectors {other:?}"),
                rhs: format!("one vector of weight {lambda_n}"),
            }),
        },
    ));

    // The rule that ties the even part to Λ_{n-1} for odd n does not hold;
    // this entry records that it still fails exactly at odd n.
    let claimed = if n.is_multiple_of(2) { n } else { n - 1 };
    let claimed_weight = fundamental_weight(claimed, ctx);
    let label = format!("even part ≅ L(Λ_{claimed}) (rank-parity rule)");
    out.push(match even_hw.as_slice() {
        [i] if fock_weight(*i, ctx) == claimed_weight => Entry::pass(label),
        [i] if n % 2 == 1 => Entry {
            identity: label,
            status: Status::ExpectedFailure,
            witness: Some(Witness {
                state: format!("b_{i}"),
                lhs: format!("weight {}", fock_weight(*i, ctx)),
                rhs: format!("Λ_{claimed} = {claimed_weight}"),
            }),
            note: Some("the even part is L(Λ_n) at every rank".into()),
        },
        _ => Entry::fail(
            label,
            Witness {
                state: "even part".into(),
                lhs: format!("highest weight vectors {even_hw:?}"),
                rhs: format!("Λ_{claimed} = {claimed_weight}"),
            },
        ),
    });
    Ok(out)
}

fn faithfulness_entries(ctx: &RankContext) -> Result<Vec<Entry>> {
    let n = ctx.rank();
    let fock = fock_basis(ctx);
    let dim = fock.len();
    let subsets: Vec<FockIndex> = (0..1u64 << n).map(FockIndex::from_bits).collect();
    let mut echelon: Echelon<usize> = Echelon::default();
    for s in &subsets {
        for t in &subsets {
            let m = Monomial {
                creators: *s,
                annihilators: *t,
            };
            let mut flat = SparseVec::zero();
            for (col, i) in fock.states().iter().enumerate() {
                if let Some((j, c)) = m.act_basis(*i) {
                    let row = fock.position(&j).expect("Fock basis is complete");
                    flat.add_term(row * dim + col, c);
                }
            }
            echelon.insert(flat);
        }
    }
    let expected = dim * dim;
    Ok(vec![Entry::from_witness(
        format!("the 4^{n} normal-ordered monomials act independently on the Fock space"),
        (echelon.rank() != expected).then(|| Witness {
            state: "all monomials".into(),
            lhs: format!("rank {}", echelon.rank()),
            rhs: format!("rank {expected}"),
        }),
    )])
}

/// Operators at vertex `k` in rank `n` against vertex `k + 1` in rank
/// `n + 1` (same distance from the fork) on the same states.
fn stability_entries(domain: &[BasisState], ctx: &RankContext) -> Result<Vec<Entry>> {
    let n = ctx.rank();
    let bigger = RankContext::new(n + 1)?;
    let mut out = Vec::new();
    for k in 1..=n {
        let pairs = [
            (Operator::E(k), Operator::E(k + 1)),
            (Operator::F(k), Operator::F(k + 1)),
            (Operator::H(k), Operator::H(k + 1)),
            (Operator::A(k), Operator::A(k + 1)),
            (Operator::B(k), Operator::B(k + 1)),
        ];
        for (small, large) in pairs {
            let mut witness = None;
            for s in domain {
                let v = SpinVector::basis(s.clone());
                let l = small.apply(&v, ctx)?;
                let r = large.apply(&v, &bigger)?;
                if l != r {
                    witness = Some(Witness {
                        state: s.to_string(),
                        lhs: format!("{small} in rank {n}: {l}"),
                        rhs: format!("{large} in rank {}: {r}", n + 1),
                    });
                    break;
                }
            }
            out.push(Entry::from_witness(format!("{small} (rank {n}) = {large} (rank {})", n + 1), witness));
        }
    }
    Ok(out)
}

fn run_with(suite: Suite, backend: &mut Backend, ctx: &RankContext) -> Result<Vec<Entry>> {
    Ok(match suite {
        Suite::Chevalley => backend.check_all(&chevalley_identities(ctx), ctx)?,
        Suite::Serre => backend.check_all(&serre_identities(ctx), ctx)?,
        Suite::Clifford => {
            let mut e = backend.check_all(&clifford_identities(ctx), ctx)?;
            if matches!(backend, Backend::Matrix { .. }) {
                e.extend(fock_clifford_entries(ctx)?);
            }
            e
        }
        Suite::Intertwiner => intertwiner_entries(backend, ctx)?,
        Suite::Factorization => {
            let mut e = backend.check_all(&factorization_identities(ctx), ctx)?;
            if matches!(backend, Backend::Matrix { .. }) {
                e.extend(fock_factorization_entries(ctx)?);
            }
            e
        }
        Suite::Module => module_entries(ctx)?,
        Suite::Weights => weight_entries(&backend.domain(), ctx)?,
        Suite::Faithfulness => {
            if ctx.rank() > FAITHFULNESS_MAX_RANK {
                return Err(Error::range(
                    "faithfulness rank",
                    ctx.rank() as i64,
                    2,
                    FAITHFULNESS_MAX_RANK as i64,
                ));
            }
            faithfulness_entries(ctx)?
        }
        Suite::Stability => stability_entries(&backend.domain(), ctx)?,
    })
}

/// Runs a suite on the full `2^n`-dimensional spin module of rank `n`.
pub fn run_suite(suite: Suite, n: usize) -> Result<Report> {
    let start = Instant::now();
    let ctx = RankContext::new(n)?;
    let mut backend = Backend::matrix(&ctx);
    let entries = run_with(suite, &mut backend, &ctx)?;
    Ok(Report {
        check: suite.name().into(),
        rank: n,
        max_boxes: None,
        entries,
        duration_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs a suite on states with at most `max_boxes` boxes, realised in rank
/// `n` (unbounded mode).
pub fn run_truncated(suite: Suite, max_boxes: u32, n: usize) -> Result<Report> {
    if !suite.supports_truncation() {
        return Err(Error::UnknownSuite(format!("{suite} (not available in unbounded mode)")));
    }
    let start = Instant::now();
    let ctx = RankContext::new(n)?;
    let mut backend = Backend::truncated(max_boxes, &ctx)?;
    let entries = run_with(suite, &mut backend, &ctx)?;
    Ok(Report {
        check: suite.name().into(),
        rank: n,
        max_boxes: Some(max_boxes),
        entries,
        duration_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Smallest rank that holds every diagram with at most `max_boxes` boxes
/// and the rows added by one creation operator.
pub fn embedding_rank(max_boxes: u32) -> usize {
    (max_boxes as usize + 1).max(2)
}

pub fn check_chevalley(n: usize) -> Result<Report> {
    run_suite(Suite::Chevalley, n)
}

pub fn check_serre(n: usize) -> Result<Report> {
    run_suite(Suite::Serre, n)
}

pub fn check_clifford(n: usize) -> Result<Report> {
    run_suite(Suite::Clifford, n)
}

pub fn check_intertwiner(n: usize) -> Result<Report> {
    run_suite(Suite::Intertwiner, n)
}

pub fn check_factorization(n: usize) -> Result<Report> {
    run_suite(Suite::Factorization, n)
}

pub fn check_module_structure(n: usize) -> Result<Report> {
    run_suite(Suite::Module, n)
}

pub fn check_weight_consistency(n: usize) -> Result<Report> {
    run_suite(Suite::Weights, n)
}

pub fn check_faithfulness(n: usize) -> Result<Report> {
    run_suite(Suite::Faithfulness, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_clean(r: &Report) {
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{} n={}: {bad:#?}", r.check, r.rank);
    }

    #[test]
    fn suites_pass_at_small_rank() {
        for n in 2..=4 {
            for suite in Suite::ALL {
                assert_clean(&run_suite(suite, n).unwrap());
            }
        }
    }

    #[test]
    fn truncated_suites_pass() {
        for suite in Suite::ALL.into_iter().filter(|s| s.supports_truncation()) {
            assert_clean(&run_truncated(suite, 3, 5).unwrap());
        }
        assert!(run_truncated(Suite::Module, 3, 5).is_err());
        assert!(run_truncated(Suite::Chevalley, 5, 5).is_err());
    }

    #[test]
    fn parity_rule_entry_tracks_rank_parity() {
        for n in 2..=5 {
            let r = check_module_structure(n).unwrap();
            let e = r.entries.last().unwrap();
            let expected = if n % 2 == 0 { Status::Pass } else { Status::ExpectedFailure };
            assert_eq!(e.status, expected, "n={n}");
        }
    }

    #[test]
    fn printed_closed_form_is_flagged() {
        let r = check_weight_consistency(4).unwrap();
        assert_eq!(r.count(Status::ExpectedFailure), 1);
        assert!(r.passed());
    }

    #[test]
    fn broken_identity_yields_witness() {
        let ctx = RankContext::new(3).unwrap();
        let id = Identity::new("E_1 = F_1", Expr::op(Operator::E(1)), Expr::op(Operator::F(1)));
        let e = Backend::matrix(&ctx).check(&id, &ctx).unwrap();
        assert_eq!(e.status, Status::Fail);
        let w = e.witness.unwrap();
        assert_ne!(w.lhs, w.rhs);
        let e = Backend::truncated(2, &ctx).unwrap().check(&id, &ctx).unwrap();
        assert_eq!(e.status, Status::Fail);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn faithfulness_rank_is_capped() {
        assert!(check_faithfulness(FAITHFULNESS_MAX_RANK + 1).is_err());
    }
}

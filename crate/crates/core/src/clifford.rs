//! The exterior algebra `⋀W'` on the Fock basis `b_I` and the Clifford algebra
//! acting on it.
//!
//! Generators are the creators `b_i` (wedge with `b_i`) and the annihilators
//! `a_i` (contraction with the dual vector), subject to
//! `a_i b_j + b_j a_i = δ_ij` and `a_i a_j + a_j a_i = b_i b_j + b_j b_i = 0`.
//! Elements are stored in normal order: all creators left of all
//! annihilators, each block ascending.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::diagram::{FockIndex, StrictPartition};
use crate::error::{Error, Result};
use crate::quiver::RankContext;
use crate::spinrep::{BasisState, EpsWeight, SpinVector};
use crate::sparse::{parse_rational, parse_sparse, rat, Rational, SparseVec};

/// An element of `⋀W'`.
pub type FockVector = SparseVec<FockIndex>;

pub fn parse_fock_vector(text: &str) -> Result<FockVector> {
    parse_sparse(text, '{', '}', |t| t.parse())
}

pub fn check_fock_vector(v: &FockVector, ctx: &RankContext) -> Result<()> {
    v.keys().try_for_each(|i| i.check_rank(ctx.rank()))
}

fn sign_of(count: usize) -> Rational {
    if count.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `L_{b_k}` on a basis vector: `b_k ∧ b_I`.
pub fn create_basis(k: usize, index: FockIndex) -> Option<(FockIndex, Rational)> {
    (!index.contains(k)).then(|| (index.with(k), sign_of(index.count_below(k))))
}

/// `D_{b_k^*}` on a basis vector.
pub fn annihilate_basis(k: usize, index: FockIndex) -> Option<(FockIndex, Rational)> {
    index
        .contains(k)
        .then(|| (index.without(k), sign_of(index.count_below(k))))
}

fn lift(
    k: usize,
    v: &FockVector,
    ctx: &RankContext,
    f: fn(usize, FockIndex) -> Option<(FockIndex, Rational)>,
) -> Result<FockVector> {
    ctx.check_vertex(k)?;
    check_fock_vector(v, ctx)?;
    let mut out = FockVector::zero();
    for (i, c) in v.iter() {
        if let Some((j, s)) = f(k, *i) {
            out.add_term(j, s * c);
        }
    }
    Ok(out)
}

pub fn create(k: usize, v: &FockVector, ctx: &RankContext) -> Result<FockVector> {
    lift(k, v, ctx, create_basis)
}

pub fn annihilate(k: usize, v: &FockVector, ctx: &RankContext) -> Result<FockVector> {
    lift(k, v, ctx, annihilate_basis)
}

/// A normal-ordered monomial `b_S a_T`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub creators: FockIndex,
    pub annihilators: FockIndex,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        creators: FockIndex::EMPTY,
        annihilators: FockIndex::EMPTY,
    };

    pub fn degree(&self) -> usize {
        self.creators.len() + self.annihilators.len()
    }

    /// Applies the monomial to a Fock basis vector: annihilators first, the
    /// rightmost one acting first, then creators likewise.
    pub fn act_basis(&self, index: FockIndex) -> Option<(FockIndex, Rational)> {
        let mut cur = index;
        let mut coeff = Rational::one();
        let ann: Vec<usize> = self.annihilators.iter().collect();
        for &t in ann.iter().rev() {
            let (next, s) = annihilate_basis(t, cur)?;
            cur = next;
            coeff *= s;
        }
        let cre: Vec<usize> = self.creators.iter().collect();
        for &s in cre.iter().rev() {
            let (next, sg) = create_basis(s, cur)?;
            cur = next;
            coeff *= sg;
        }
        Some((cur, coeff))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        let words: Vec<String> = self
            .creators
            .iter()
            .map(|i| format!("b{i}"))
            .chain(self.annihilators.iter().map(|i| format!("a{i}")))
            .collect();
        f.write_str(&words.join(" "))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A generator of the Clifford algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    A(usize),
    B(usize),
}

/// An element of `C ≅ End(⋀W')` in the normal-ordered monomial basis.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl CliffordElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Rational) -> Self {
        let mut x = Self::zero();
        x.add_term(Monomial::ONE, c);
        x
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn generator(g: Generator) -> Self {
        let m = match g {
            Generator::A(i) => Monomial {
                creators: FockIndex::EMPTY,
                annihilators: FockIndex::EMPTY.with(i),
            },
            Generator::B(i) => Monomial {
                creators: FockIndex::EMPTY.with(i),
                annihilators: FockIndex::EMPTY,
            },
        };
        Self::monomial(m, Rational::one())
    }

    pub fn a(i: usize) -> Self {
        Self::generator(Generator::A(i))
    }

    pub fn b(i: usize) -> Self {
        Self::generator(Generator::B(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &CliffordElement, c: &Rational) {
        for (m, x) in &other.terms {
            self.add_term(*m, x * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Largest generator index occurring in the element.
    pub fn max_index(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.creators.max().max(m.annihilators.max()))
            .max()
            .unwrap_or(0)
    }

    pub fn check_rank(&self, ctx: &RankContext) -> Result<()> {
        let m = self.max_index();
        if m > ctx.rank() {
            return Err(Error::RankMismatch(m, ctx.rank()));
        }
        Ok(())
    }

    /// True when every monomial has even degree.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.degree() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.degree() % 2 == 1)
    }

    /// Right-multiplies by one generator and re-normal-orders.
    fn mul_generator(&self, g: Generator) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in &self.terms {
            match g {
                Generator::A(j) => {
                    // b_S a_T a_j: slide a_j left past the larger annihilators.
                    if !m.annihilators.contains(j) {
                        let s = sign_of(m.annihilators.count_above(j));
                        out.add_term(
                            Monomial {
                                creators: m.creators,
                                annihilators: m.annihilators.with(j),
                            },
                            s * c,
                        );
                    }
                }
                Generator::B(j) => {
                    // b_S a_T b_j: moving b_j through a_j leaves the contraction
                    // term; the full pass costs (-1)^{|T|}.
                    if m.annihilators.contains(j) {
                        let s = sign_of(m.annihilators.count_above(j));
                        out.add_term(
                            Monomial {
                                creators: m.creators,
                                annihilators: m.annihilators.without(j),
                            },
                            s * c,
                        );
                    }
                    if !m.creators.contains(j) {
                        let s = sign_of(m.annihilators.len() + m.creators.count_above(j));
                        out.add_term(
                            Monomial {
                                creators: m.creators.with(j),
                                annihilators: m.annihilators,
                            },
                            s * c,
                        );
                    }
                }
            }
        }
        out
    }

    /// Normal-ordered product `self · other`, computed by rewriting with the
    /// anticommutation relations.
    pub fn mul(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in &other.terms {
            let mut partial = self.scaled(c);
            for i in m.creators.iter() {
                partial = partial.mul_generator(Generator::B(i));
            }
            for i in m.annihilators.iter() {
                partial = partial.mul_generator(Generator::A(i));
            }
            out.add_scaled(&partial, &Rational::one());
        }
        out
    }

    pub fn add(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, other: &CliffordElement) -> CliffordElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// `{x, y} = xy + yx`.
    pub fn anticommutator(&self, other: &CliffordElement) -> CliffordElement {
        self.mul(other).add(&other.mul(self))
    }

    /// Applies the element to a Fock vector through `C ≅ End(⋀W')`.
    pub fn act(&self, v: &FockVector, ctx: &RankContext) -> Result<FockVector> {
        self.check_rank(ctx)?;
        check_fock_vector(v, ctx)?;
        let mut out = FockVector::zero();
        for (m, c) in &self.terms {
            for (i, x) in v.iter() {
                if let Some((j, s)) = m.act_basis(*i) {
                    out.add_term(j, s * c * x);
                }
            }
        }
        Ok(out)
    }
}

/// Writes e.g. `b2 a2 + b1 b2 a1 a2 - 1/2`.
impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Scalars first, then by degree.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.degree(), **m));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses sums and products of generators.
///
/// Grammar: `expr := ['-'] term (('+' | '-') term)*`,
/// `term := factor (['*'] factor)*`,
/// `factor := 'a'N | 'b'N | rational | '(' expr ')'`.
/// Juxtaposition multiplies, so the `Display` form parses back.
pub fn parse_clifford(text: &str) -> Result<CliffordElement> {
    let tokens = tokenize(text)?;
    let mut p = ExprParser { tokens, pos: 0 };
    let x = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::parse(format!("unexpected `{:?}` in `{text}`", p.tokens[p.pos])));
    }
    Ok(x)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Rational),
    Gen(Generator),
    Plus,
    Minus,
    Star,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            'a' | 'b' => {
                let mut j = i + 1;
                if j < chars.len() && chars[j] == '_' {
                    j += 1;
                }
                let start = j;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let k: usize = chars[start..j]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::parse(format!("generator `{c}` needs an index in `{text}`")))?;
                if k == 0 {
                    return Err(Error::parse("generator indices start at 1"));
                }
                out.push(Token::Gen(if c == 'a' { Generator::A(k) } else { Generator::B(k) }));
                i = j;
            }
            d if d.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_digit() || chars[j] == '/') {
                    j += 1;
                }
                let lit: String = chars[i..j].iter().collect();
                out.push(Token::Num(parse_rational(&lit)?));
                i = j;
            }
            other => return Err(Error::parse(format!("unexpected character `{other}` in `{text}`"))),
        }
    }
    Ok(out)
}

struct ExprParser {
    tokens: Vec<Token>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<CliffordElement> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            negate = true;
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.scaled(&-Rational::one());
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CliffordElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Num(_)) | Some(Token::Gen(_)) | Some(Token::Open) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<CliffordElement> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::parse("unexpected end of expression"))?;
        self.pos += 1;
        match tok {
            Token::Num(q) => Ok(CliffordElement::scalar(q)),
            Token::Gen(g) => Ok(CliffordElement::generator(g)),
            Token::Open => {
                let x = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::parse("missing `)`"));
                }
                self.pos += 1;
                Ok(x)
            }
            other => Err(Error::parse(format!("unexpected `{other:?}`"))),
        }
    }
}

/// A Chevalley generator of `so(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieGenerator {
    E(usize),
    F(usize),
    H(usize),
}

/// The image of a Chevalley generator in `C^even`:
/// `E_k ↦ b_{k+1} a_k`, `F_k ↦ b_k a_{k+1}` for `k < n`,
/// `E_n ↦ a_n a_{n-1}`, `F_n ↦ b_{n-1} b_n`, and `H_k ↦ [E_k, F_k]`.
pub fn embed_generator(g: LieGenerator, ctx: &RankContext) -> Result<CliffordElement> {
    let n = ctx.rank();
    let (LieGenerator::E(k) | LieGenerator::F(k) | LieGenerator::H(k)) = g;
    ctx.check_vertex(k)?;
    let a = CliffordElement::a;
    let b = CliffordElement::b;
    Ok(match g {
        LieGenerator::E(k) if k < n => b(k + 1).mul(&a(k)),
        LieGenerator::F(k) if k < n => b(k).mul(&a(k + 1)),
        LieGenerator::E(_) => a(n).mul(&a(n - 1)),
        LieGenerator::F(_) => b(n - 1).mul(&b(n)),
        LieGenerator::H(k) => {
            let e = embed_generator(LieGenerator::E(k), ctx)?;
            let f = embed_generator(LieGenerator::F(k), ctx)?;
            e.commutator(&f)
        }
    })
}

/// Weight of `b_I`: `½ (Σ_{i∉I} ε_i - Σ_{j∈I} ε_j)`.
pub fn fock_weight(index: FockIndex, ctx: &RankContext) -> EpsWeight {
    let half = rat(1, 2);
    EpsWeight::from_coeffs(
        (1..=ctx.rank())
            .map(|i| if index.contains(i) { -half.clone() } else { half.clone() })
            .collect(),
    )
}

/// `Φ`: sends `1_{X_Y^±}` to `b_{I_Y^±}`.
pub fn phi(vec: &SpinVector, ctx: &RankContext) -> Result<FockVector> {
    crate::spinrep::check_spin_vector(vec, ctx)?;
    Ok(vec
        .iter()
        .map(|(s, c)| (s.diagram.fock_index(s.sign, ctx.rank()), c.clone()))
        .collect())
}

pub fn phi_inverse(v: &FockVector, ctx: &RankContext) -> Result<SpinVector> {
    check_fock_vector(v, ctx)?;
    Ok(v
        .iter()
        .map(|(i, c)| {
            let (sign, y) = StrictPartition::from_fock_index(*i, ctx.rank());
            (BasisState::new(sign, y), c.clone())
        })
        .collect())
}

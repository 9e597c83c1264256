//! Exact rational scalars and finitely supported vectors over an ordered basis.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar used everywhere in the crate.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Canonical text form of a rational: `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::parse(format!("invalid rational `{s}`")))
}

/// A finite linear combination of basis keys with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &Rational) -> Self {
        if scale.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * scale))
                .collect(),
        }
    }

    /// Extends a basis map linearly: `f` gives the image of each basis key.
    pub fn map_linear<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> std::result::Result<SparseVec<L>, E>,
    ) -> std::result::Result<SparseVec<L>, E> {
        let mut out = SparseVec::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for SparseVec<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + Clone> Add for &SparseVec<K> {
    type Output = SparseVec<K>;
    fn add(self, rhs: Self) -> SparseVec<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<K: Ord + Clone> Sub for &SparseVec<K> {
    type Output = SparseVec<K>;
    fn sub(self, rhs: Self) -> SparseVec<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<K: Ord + Clone> AddAssign<&SparseVec<K>> for SparseVec<K> {
    fn add_assign(&mut self, rhs: &SparseVec<K>) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl<K: Ord + Clone> Neg for SparseVec<K> {
    type Output = SparseVec<K>;
    fn neg(self) -> SparseVec<K> {
        self.scaled(&-Rational::one())
    }
}

/// Writes `c1 * k1 + c2 * k2 - ...`; unit coefficients are omitted and the
/// zero vector prints as `0`.
impl<K: Ord + fmt::Display> fmt::Display for SparseVec<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag} * ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Display> fmt::Debug for SparseVec<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the format written by `Display`, given a parser for a single key.
///
/// Keys are delimited tokens (they open with `(` or `{`), so splitting on
/// top-level `+`/`-` is unambiguous.
pub fn parse_sparse<K: Ord + Clone>(
    text: &str,
    open: char,
    close: char,
    parse_key: impl Fn(&str) -> Result<K>,
) -> Result<SparseVec<K>> {
    let s = text.trim();
    if s == "0" {
        return Ok(SparseVec::zero());
    }
    if s.is_empty() {
        return Err(Error::parse("empty vector"));
    }
    let mut out = SparseVec::zero();
    let mut rest = s;
    let mut first = true;
    while !rest.is_empty() {
        rest = rest.trim_start();
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(Error::parse(format!("leading `+` in `{s}`")));
            }
            rest = r.trim_start();
        } else if !first {
            return Err(Error::parse(format!("expected `+` or `-` in `{s}`")));
        }
        first = false;

        let key_start = rest
            .find(open)
            .ok_or_else(|| Error::parse(format!("expected `{open}` in `{s}`")))?;
        let prefix = rest[..key_start].trim();
        let coeff = if prefix.is_empty() {
            Rational::one()
        } else {
            let c = prefix
                .strip_suffix('*')
                .ok_or_else(|| Error::parse(format!("expected `*` after coefficient in `{s}`")))?;
            parse_rational(c)?
        };
        let key_end = rest[key_start..]
            .find(close)
            .map(|i| key_start + i)
            .ok_or_else(|| Error::parse(format!("unterminated `{open}` in `{s}`")))?;
        let key = parse_key(&rest[key_start..=key_end])?;
        out.add_term(key, if negative { -coeff } else { coeff });
        rest = &rest[key_end + 1..];
    }
    Ok(out)
}

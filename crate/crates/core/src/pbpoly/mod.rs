//! Exact multilinear polynomials over binary variables.
//!
//! Every variable takes values in `{0, 1}`, so `x * x = x` and a monomial is
//! just a set of variables. Coefficients are `i64` with checked arithmetic:
//! overflow is an error, never a silent wrap.

mod binom;
pub mod format;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

pub use binom::binom;

/// Whether a variable belongs to the source problem or was introduced by a
/// gadget. Original variables sort before auxiliary ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    Original,
    Auxiliary,
}

/// A binary variable: `x<index>` (original) or `w<index>` (auxiliary).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    kind: VarKind,
    index: u32,
}

impl VarId {
    pub const fn original(index: u32) -> Self {
        VarId {
            kind: VarKind::Original,
            index,
        }
    }

    pub const fn auxiliary(index: u32) -> Self {
        VarId {
            kind: VarKind::Auxiliary,
            index,
        }
    }

    pub fn kind(self) -> VarKind {
        self.kind
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_auxiliary(self) -> bool {
        self.kind == VarKind::Auxiliary
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::Original => write!(f, "x{}", self.index),
            VarKind::Auxiliary => write!(f, "w{}", self.index),
        }
    }
}

impl FromStr for VarId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (ctor, digits): (fn(u32) -> VarId, &str) = if let Some(rest) = s.strip_prefix('x') {
            (VarId::original, rest)
        } else if let Some(rest) = s.strip_prefix('w') {
            (VarId::auxiliary, rest)
        } else {
            return Err(format!(
                "unknown variable `{s}` (expected x<idx> or w<idx>)"
            ));
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed variable index in `{s}`"));
        }
        digits
            .parse::<u32>()
            .map(ctor)
            .map_err(|e| format!("variable index in `{s}`: {e}"))
    }
}

/// A product of distinct variables, kept sorted. The empty monomial is the
/// constant `1`.
///
/// Monomials order by degree first and then lexicographically by variables,
/// which is the canonical term order used for output and for gadget
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<VarId>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from any variables; repeats collapse since `x² = x`.
    pub fn new(vars: impl IntoIterator<Item = VarId>) -> Self {
        let mut v: Vec<VarId> = vars.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Monomial(v)
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![v])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[VarId] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VarId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Multilinear product: the union of both variable sets.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        out.extend(self.0.iter().merge(other.0.iter()).dedup().copied());
        Monomial(out)
    }

    /// Value under `a`, or the first variable `a` does not cover.
    pub fn evaluate(&self, a: &Assignment) -> Result<bool> {
        let mut all = true;
        for &v in &self.0 {
            all &= a.get(v).ok_or(Error::MissingVariable(v))?;
        }
        Ok(all)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        write!(f, "{}", self.0.iter().format("*"))
    }
}

impl FromIterator<VarId> for Monomial {
    fn from_iter<I: IntoIterator<Item = VarId>>(iter: I) -> Self {
        Monomial::new(iter)
    }
}

/// A 0/1 value for each of a set of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<VarId, bool>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: VarId, value: bool) {
        self.0.insert(v, value);
    }

    pub fn get(&self, v: VarId) -> Option<bool> {
        self.0.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, bool)> + '_ {
        self.0.iter().map(|(&v, &b)| (v, b))
    }

    /// Every variable of `vars` set to `value`.
    pub fn uniform<'a>(vars: impl IntoIterator<Item = &'a VarId>, value: bool) -> Self {
        Assignment(vars.into_iter().map(|&v| (v, value)).collect())
    }

    /// Bit `i` of `mask` assigned to `vars[i]`.
    pub fn from_mask(vars: &[VarId], mask: u64) -> Self {
        Assignment(
            vars.iter()
                .enumerate()
                .map(|(i, &v)| (v, (mask >> i) & 1 == 1))
                .collect(),
        )
    }

    /// Assigns the variables of `other` on top of this one.
    pub fn extended(&self, other: &Assignment) -> Assignment {
        let mut out = self.clone();
        out.0.extend(other.0.iter().map(|(&v, &b)| (v, b)));
        out
    }
}

impl FromIterator<(VarId, bool)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (VarId, bool)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.0
                .iter()
                .format_with(" ", |(v, b), g| g(&format_args!("{v}={}", u8::from(*b))))
        )
    }
}

/// Number of ones among `vars` under `a`.
pub fn arith_sum<'a>(a: &Assignment, vars: impl IntoIterator<Item = &'a VarId>) -> Result<usize> {
    let mut count = 0;
    for &v in vars {
        if a.get(v).ok_or(Error::MissingVariable(v))? {
            count += 1;
        }
    }
    Ok(count)
}

/// Sparse multilinear polynomial with exact integer coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c)
            .expect("constant into empty polynomial");
        p
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c).expect("single term into empty polynomial");
        p
    }

    /// Sums the given terms; like monomials merge.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, i64)>) -> Result<Self> {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(c).ok_or(Error::Overflow)?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: i64, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        out.add_scaled_in_place(c, other)?;
        Ok(out)
    }

    pub fn add_scaled_in_place(&mut self, c: i64, other: &Polynomial) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        for (m, &k) in &other.terms {
            let term = k.checked_mul(c).ok_or(Error::Overflow)?;
            self.add_term(m.clone(), term)?;
        }
        Ok(())
    }

    pub fn scaled(&self, c: i64) -> Result<Polynomial> {
        Polynomial::zero().add_scaled(c, self)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.mul(b), ca.checked_mul(cb).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Highest term degree; `0` for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Number of stored (nonzero) terms, the constant included.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Terms in canonical (degree, lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn terms_of_degree(&self, d: usize) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms().filter(move |(m, _)| m.degree() == d)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().iter().copied())
            .collect()
    }

    pub fn original_vars(&self) -> BTreeSet<VarId> {
        self.variables()
            .into_iter()
            .filter(|v| !v.is_auxiliary())
            .collect()
    }

    pub fn aux_vars(&self) -> BTreeSet<VarId> {
        self.variables()
            .into_iter()
            .filter(|v| v.is_auxiliary())
            .collect()
    }

    pub fn evaluate(&self, a: &Assignment) -> Result<i64> {
        let mut acc: i64 = 0;
        for (m, &c) in &self.terms {
            if m.evaluate(a)? {
                acc = acc.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        Ok(acc)
    }

    /// Renames variables through `f`; terms that collide are merged.
    pub fn map_vars(&self, mut f: impl FnMut(VarId) -> VarId) -> Result<Polynomial> {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, &c)| (m.vars().iter().map(|&v| f(v)).collect(), c)),
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                f.write_str(" ")?;
            }
            let mag = c.unsigned_abs();
            match (m.is_constant(), mag) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, 1) => write!(f, "{sign}{m}")?,
                (false, _) => write!(f, "{sign}{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

/// `P_S^(m)`: the sum of every degree-`m` product of distinct variables of
/// `S`, each with coefficient one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricBlock {
    vars: Vec<VarId>,
    degree: usize,
}

impl SymmetricBlock {
    /// Requires `2 < degree <= |vars|` after deduplication.
    pub fn new(vars: impl IntoIterator<Item = VarId>, degree: usize) -> Result<Self> {
        let mut vars: Vec<VarId> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        if degree <= 2 || degree > vars.len() {
            return Err(Error::InvalidDegree(format!(
                "symmetric block needs 2 < m <= n, got m = {degree}, n = {}",
                vars.len()
            )));
        }
        Ok(SymmetricBlock { vars, degree })
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    /// `n`, the number of variables.
    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// `m`, the degree of every monomial in the block.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.vars
            .iter()
            .copied()
            .combinations(self.degree)
            .map(Monomial)
    }

    pub fn expand(&self) -> Polynomial {
        Polynomial {
            terms: self.monomials().map(|m| (m, 1)).collect(),
        }
    }
}

//! Exhaustive checks for reductions.
//!
//! Everything here enumerates assignments outright, so it is exact and only
//! usable on small instances; the size limits are hard errors. Auxiliary
//! variables are split into independent components (auxiliaries linked by a
//! shared term); the minimum over a disjoint union is the sum of the
//! per-component minima, so the cost is `sum 2^{d_i}` instead of
//! `2^{sum d_i}`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pbpoly::{binom, Assignment, Polynomial, VarId};
use crate::reduction::ReductionOutcome;

/// Most original variables [`check_equivalence`] will enumerate.
pub const MAX_ORIGINAL_VARS: usize = 16;
/// Most auxiliaries enumerated jointly (per independent component).
pub const MAX_AUX_VARS: usize = 24;
/// Most variables [`brute_force_min`] will enumerate.
pub const MAX_BRUTE_FORCE_VARS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Assignment,
    pub expected: i64,
    pub obtained: i64,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {}: source = {}, min over aux = {}",
            self.assignment, self.expected, self.obtained
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub counterexample: Option<Counterexample>,
    pub assignments_checked: u64,
}

/// Terms of a polynomial with original-variable masks.
struct Compiled {
    base: Vec<(i64, u64)>,
    components: Vec<Component>,
}

struct Component {
    size: usize,
    /// `(coefficient, original mask, auxiliary mask within the component)`
    terms: Vec<(i64, u64, u32)>,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

impl Compiled {
    fn new(q: &Polynomial, orig: &[VarId]) -> Result<Compiled> {
        let orig_index: HashMap<VarId, usize> =
            orig.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let aux: Vec<VarId> = q.aux_vars().into_iter().collect();
        let aux_index: HashMap<VarId, usize> =
            aux.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let mut parent: Vec<usize> = (0..aux.len()).collect();
        for (m, _) in q.terms() {
            let mut ws = m.vars().iter().filter_map(|v| aux_index.get(v).copied());
            if let Some(first) = ws.next() {
                for w in ws {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, w));
                    parent[a] = b;
                }
            }
        }
        let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for w in 0..aux.len() {
            let root = find(&mut parent, w);
            let c = *comp_of_root.entry(root).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            members[c].push(w);
        }
        let largest = members.iter().map(Vec::len).max().unwrap_or(0);
        if largest > MAX_AUX_VARS {
            return Err(Error::TooManyAux {
                found: largest,
                limit: MAX_AUX_VARS,
            });
        }
        // position of each auxiliary inside its component
        let mut slot = vec![(0usize, 0usize); aux.len()];
        for (c, ms) in members.iter().enumerate() {
            for (pos, &w) in ms.iter().enumerate() {
                slot[w] = (c, pos);
            }
        }

        let mut base = Vec::new();
        let mut components: Vec<Component> = members
            .iter()
            .map(|ms| Component {
                size: ms.len(),
                terms: Vec::new(),
            })
            .collect();
        for (m, c) in q.terms() {
            let mut xmask = 0u64;
            let mut wmask = 0u32;
            let mut comp = None;
            for v in m.vars() {
                if let Some(&i) = orig_index.get(v) {
                    xmask |= 1 << i;
                } else if let Some(&i) = aux_index.get(v) {
                    let (ci, pos) = slot[i];
                    comp = Some(ci);
                    wmask |= 1 << pos;
                } else {
                    return Err(Error::MissingVariable(*v));
                }
            }
            match comp {
                None => base.push((c, xmask)),
                Some(ci) => components[ci].terms.push((c, xmask, wmask)),
            }
        }
        Ok(Compiled { base, components })
    }

    fn min_at(&self, x: u64) -> Result<i64> {
        let mut total: i64 = 0;
        for &(c, m) in &self.base {
            if m & x == m {
                total = total.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        let mut active: Vec<(i64, u32)> = Vec::new();
        for comp in &self.components {
            active.clear();
            active.extend(
                comp.terms
                    .iter()
                    .filter(|&&(_, xm, _)| xm & x == xm)
                    .map(|&(c, _, wm)| (c, wm)),
            );
            let mut best = i64::MAX;
            for w in 0..1u32 << comp.size {
                let mut v: i64 = 0;
                for &(c, wm) in &active {
                    if wm & w == wm {
                        v = v.checked_add(c).ok_or(Error::Overflow)?;
                    }
                }
                best = best.min(v);
            }
            total = total.checked_add(best).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
}

fn compile_plain(p: &Polynomial, orig: &[VarId]) -> Result<Vec<(i64, u64)>> {
    let index: HashMap<VarId, usize> = orig.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    p.terms()
        .map(|(m, c)| {
            let mut mask = 0u64;
            for v in m.vars() {
                mask |= 1 << index.get(v).ok_or(Error::MissingVariable(*v))?;
            }
            Ok((c, mask))
        })
        .collect()
}

fn eval_plain(terms: &[(i64, u64)], x: u64) -> Result<i64> {
    terms.iter().try_fold(0i64, |acc, &(c, m)| {
        if m & x == m {
            acc.checked_add(c).ok_or(Error::Overflow)
        } else {
            Ok(acc)
        }
    })
}

/// `min_w q(x, w)` over every completion of the auxiliaries of `q`.
pub fn min_over_aux(q: &Polynomial, x: &Assignment) -> Result<i64> {
    let orig: Vec<VarId> = q.original_vars().into_iter().collect();
    if orig.len() > 64 {
        return Err(Error::TooLarge {
            found: orig.len(),
            limit: 64,
        });
    }
    let mut mask = 0u64;
    for (i, &v) in orig.iter().enumerate() {
        if x.get(v).ok_or(Error::MissingVariable(v))? {
            mask |= 1 << i;
        }
    }
    Compiled::new(q, &orig)?.min_at(mask)
}

/// Checks `p(x) = min_w q(x, w)` for every assignment `x` of the original
/// variables. The reported counterexample is the first failing assignment
/// in enumeration order (bit `i` of the counter is the `i`-th smallest
/// original variable).
pub fn check_equivalence(p: &Polynomial, outcome: &ReductionOutcome) -> Result<EquivalenceReport> {
    let q = &outcome.quadratic;
    let orig: Vec<VarId> = p
        .original_vars()
        .union(&q.original_vars())
        .copied()
        .collect();
    if orig.len() > MAX_ORIGINAL_VARS {
        return Err(Error::TooLarge {
            found: orig.len(),
            limit: MAX_ORIGINAL_VARS,
        });
    }
    if let Some(&w) = p.aux_vars().iter().next() {
        return Err(Error::InvalidConfig(format!(
            "source polynomial contains auxiliary variable {w}"
        )));
    }
    let source = compile_plain(p, &orig)?;
    let reduced = Compiled::new(q, &orig)?;
    let total = 1u64 << orig.len();

    let failure = (0..total)
        .into_par_iter()
        .map(|x| -> Result<Option<(u64, i64, i64)>> {
            let expected = eval_plain(&source, x)?;
            let obtained = reduced.min_at(x)?;
            Ok((expected != obtained).then_some((x, expected, obtained)))
        })
        .find_first(|r| !matches!(r, Ok(None)));

    match failure {
        None => Ok(EquivalenceReport {
            equivalent: true,
            counterexample: None,
            assignments_checked: total,
        }),
        Some(Err(e)) => Err(e),
        Some(Ok(Some((x, expected, obtained)))) => Ok(EquivalenceReport {
            equivalent: false,
            counterexample: Some(Counterexample {
                assignment: Assignment::from_mask(&orig, x),
                expected,
                obtained,
            }),
            assignments_checked: x + 1,
        }),
        Some(Ok(None)) => unreachable!("find_first only yields failures"),
    }
}

/// Exact minimum of `p` over all assignments of all its variables.
pub fn brute_force_min(p: &Polynomial) -> Result<i64> {
    let vars: Vec<VarId> = p.variables().into_iter().collect();
    if vars.len() > MAX_BRUTE_FORCE_VARS {
        return Err(Error::TooLarge {
            found: vars.len(),
            limit: MAX_BRUTE_FORCE_VARS,
        });
    }
    let terms = compile_plain(p, &vars)?;
    (0..1u64 << vars.len())
        .into_par_iter()
        .map(|x| eval_plain(&terms, x))
        .try_reduce(|| i64::MAX, |a, b| Ok(a.min(b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProgressionKind {
    /// `A_l = C(l, m) - C(n-2, m-2) C(l, 2)`: the positive symmetric
    /// polynomial after removing its quadratic shell.
    A,
    /// `B_l = -C(l, m)`: the negated symmetric polynomial.
    B,
}

/// Value of the (shell-adjusted) symmetric polynomial at each ones-count
/// `l = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressionTable {
    pub kind: ProgressionKind,
    pub n: usize,
    pub m: usize,
    pub values: Vec<i64>,
}

pub fn progression_table(kind: ProgressionKind, n: usize, m: usize) -> Result<ProgressionTable> {
    if !(n > m && m > 2) {
        return Err(Error::InvalidDegree(format!(
            "progression table needs n > m > 2, got n = {n}, m = {m}"
        )));
    }
    let (n_, m_) = (n as i64, m as i64);
    let shell = binom(n_ - 2, m_ - 2)?;
    let values = (0..=n_)
        .map(|l| -> Result<i64> {
            let p = binom(l, m_)?;
            Ok(match kind {
                ProgressionKind::A => p - shell * binom(l, 2)?,
                ProgressionKind::B => -p,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ProgressionTable { kind, n, m, values })
}

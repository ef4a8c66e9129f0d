//! Quadratization gadgets and the two reduction drivers.
//!
//! A reduction of `p(x)` is a quadratic `q(x, w)` with
//! `p(x) = min_w q(x, w)` for every `x`. All gadgets here have the same
//! shape: a quadratic shell over the original variables plus a list of
//! [`Progression`]s `w * (a + b * sum(x))`, each owning one fresh auxiliary.
//! Gadgets are assembled symbolically in a [`GadgetSet`] and only receive
//! concrete auxiliary ids when materialized.

mod coeffs;
mod gadgets;
mod max_symm;
mod symm_red;

use crate::error::{Error, Result};
use crate::pbpoly::{Monomial, Polynomial, VarId};

pub use coeffs::{GadgetKind, ReductionCoefficients};
pub use gadgets::{
    mono_red, monomial_gadget, negative_monomial, positive_monomial, reduce_negative_monomial,
    reduce_positive_monomial, reduce_symmetric, symmetric_gadget, Sign,
};
pub use max_symm::max_symm;
pub use symm_red::{symm_red, symm_red_with, SymmRedOptions, SymmRedReport, SymmStep};

/// Issues auxiliary ids `w<start>, w<start+1>, ...`; never reuses one.
#[derive(Clone, Debug)]
pub struct AuxAllocator {
    next_index: u32,
}

impl Default for AuxAllocator {
    fn default() -> Self {
        AuxAllocator { next_index: 1 }
    }
}

impl AuxAllocator {
    /// Starts at `w1`.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn starting_at(index: u32) -> Self {
        AuxAllocator { next_index: index }
    }

    pub fn fresh(&mut self) -> VarId {
        let v = VarId::auxiliary(self.next_index);
        self.next_index = self
            .next_index
            .checked_add(1)
            .expect("auxiliary index space exhausted");
        v
    }

    pub fn next_index(&self) -> u32 {
        self.next_index
    }
}

/// The term `w * (constant + slope * sum(vars))` for one auxiliary `w`.
///
/// Minimizing over `w` gives `min(0, constant + slope * l)` with `l` the
/// number of ones among `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Progression {
    pub vars: Vec<VarId>,
    pub constant: i64,
    pub slope: i64,
}

impl Progression {
    fn scaled(&self, c: i64) -> Result<Progression> {
        Ok(Progression {
            vars: self.vars.clone(),
            constant: self.constant.checked_mul(c).ok_or(Error::Overflow)?,
            slope: self.slope.checked_mul(c).ok_or(Error::Overflow)?,
        })
    }

    /// Same variables and a positive multiple of the same linear form.
    fn is_parallel(&self, other: &Progression) -> bool {
        self.vars == other.vars
            && (self.slope < 0) == (other.slope < 0)
            && (self.constant < 0) == (other.constant < 0)
            && i128::from(self.constant) * i128::from(other.slope)
                == i128::from(other.constant) * i128::from(self.slope)
    }

    /// `min(0, constant + slope * l)`.
    pub fn min_at(&self, l: i64) -> i64 {
        (self.constant + self.slope * l).min(0)
    }
}

/// A reduction before auxiliary ids are assigned.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GadgetSet {
    /// Aux-free part (degree <= 2).
    pub shell: Polynomial,
    pub progressions: Vec<Progression>,
}

impl GadgetSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `c * other`, `c > 0`. Minimization commutes with positive
    /// scaling, so the scaled gadget reduces `c` times the source.
    pub fn absorb_scaled(&mut self, c: i64, other: &GadgetSet) -> Result<()> {
        debug_assert!(c > 0, "gadgets scale by positive factors only");
        self.shell.add_scaled_in_place(c, &other.shell)?;
        for p in &other.progressions {
            self.progressions.push(p.scaled(c)?);
        }
        Ok(())
    }

    pub fn aux_count(&self) -> usize {
        self.progressions.len()
    }

    /// Merges progressions over identical variable sets whose linear forms
    /// are positive multiples of one another. `c1 min(0, f) + c2 min(0, f)`
    /// is `min(0, (c1 + c2) f)`, so each merge saves one auxiliary without
    /// changing the minimum. The first occurrence keeps its position.
    pub fn consolidate(&mut self) -> Result<()> {
        let mut merged: Vec<Progression> = Vec::with_capacity(self.progressions.len());
        let mut by_vars: std::collections::HashMap<Vec<VarId>, Vec<usize>> =
            std::collections::HashMap::new();
        for p in self.progressions.drain(..) {
            let slots = by_vars.entry(p.vars.clone()).or_default();
            if let Some(&i) = slots.iter().find(|&&i| merged[i].is_parallel(&p)) {
                let target = &mut merged[i];
                target.constant = target
                    .constant
                    .checked_add(p.constant)
                    .ok_or(Error::Overflow)?;
                target.slope = target.slope.checked_add(p.slope).ok_or(Error::Overflow)?;
            } else {
                slots.push(merged.len());
                merged.push(p);
            }
        }
        self.progressions = merged;
        Ok(())
    }

    /// Assigns one fresh auxiliary per progression, in order.
    pub fn materialize(&self, alloc: &mut AuxAllocator) -> Result<ReductionOutcome> {
        let mut quadratic = self.shell.clone();
        let mut aux_vars = Vec::with_capacity(self.progressions.len());
        for p in &self.progressions {
            let w = alloc.fresh();
            aux_vars.push(w);
            quadratic.add_term(Monomial::var(w), p.constant)?;
            for &x in &p.vars {
                quadratic.add_term(Monomial::new([x, w]), p.slope)?;
            }
        }
        Ok(ReductionOutcome {
            quadratic,
            aux_vars,
        })
    }
}

/// A reduced polynomial and the auxiliaries it introduced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub quadratic: Polynomial,
    pub aux_vars: Vec<VarId>,
}

impl ReductionOutcome {
    pub fn aux_count(&self) -> usize {
        self.aux_vars.len()
    }

    /// Original variables of the reduced polynomial plus its auxiliaries.
    pub fn total_vars(&self) -> usize {
        self.quadratic.original_vars().len() + self.aux_vars.len()
    }

    /// Renames auxiliaries to `w1, w2, ...` in allocation order.
    pub fn renumbered(&self) -> Result<ReductionOutcome> {
        let map: std::collections::HashMap<VarId, VarId> = self
            .aux_vars
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, VarId::auxiliary(i as u32 + 1)))
            .collect();
        let quadratic = self
            .quadratic
            .map_vars(|v| map.get(&v).copied().unwrap_or(v))?;
        let aux_vars = (1..=self.aux_vars.len() as u32)
            .map(VarId::auxiliary)
            .collect();
        Ok(ReductionOutcome {
            quadratic,
            aux_vars,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prog(vars: &[u32], constant: i64, slope: i64) -> Progression {
        Progression {
            vars: vars.iter().map(|&i| VarId::original(i)).collect(),
            constant,
            slope,
        }
    }

    #[test]
    fn allocator_is_monotone() {
        let mut a = AuxAllocator::new();
        assert_eq!(a.fresh(), VarId::auxiliary(1));
        assert_eq!(a.fresh(), VarId::auxiliary(2));
        let mut b = AuxAllocator::starting_at(10);
        assert_eq!(b.fresh(), VarId::auxiliary(10));
        assert_eq!(b.next_index(), 11);
    }

    #[test]
    fn consolidate_merges_parallel_forms_only() {
        let mut g = GadgetSet::new();
        g.progressions = vec![
            prog(&[1, 2, 3], 3, -2),
            prog(&[1, 2, 3], 7, -2),
            prog(&[1, 2, 3], 36, -24),
            prog(&[1, 2, 4], 3, -2),
        ];
        g.consolidate().unwrap();
        assert_eq!(
            g.progressions,
            vec![
                prog(&[1, 2, 3], 39, -26),
                prog(&[1, 2, 3], 7, -2),
                prog(&[1, 2, 4], 3, -2),
            ]
        );
    }

    #[test]
    fn materialize_and_renumber() {
        let mut g = GadgetSet::new();
        g.progressions = vec![prog(&[1, 2], 1, -1)];
        let mut alloc = AuxAllocator::starting_at(7);
        let out = g.materialize(&mut alloc).unwrap();
        assert_eq!(out.aux_vars, vec![VarId::auxiliary(7)]);
        assert_eq!(out.quadratic.len(), 3);
        let r = out.renumbered().unwrap();
        assert_eq!(r.aux_vars, vec![VarId::auxiliary(1)]);
        assert_eq!(r.quadratic.coeff(&Monomial::var(VarId::auxiliary(1))), 1);
        assert_eq!(r.total_vars(), 3);
    }
}

//! Symmetric reduction: peel maximal symmetric blocks off the polynomial
//! degree by degree, reduce each block with one symmetric gadget, and hand
//! whatever is left to the monomial-wise reduction.

use std::collections::HashMap;

use super::gadgets::{mono_red_gadgets, symmetric_gadget, Sign};
use super::{max_symm, AuxAllocator, GadgetSet, ReductionOutcome};
use crate::error::{Error, Result};
use crate::pbpoly::{Polynomial, SymmetricBlock};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmRedOptions {
    /// Merge parallel progressions over the same variables before
    /// allocating auxiliaries (see [`GadgetSet::consolidate`]).
    pub consolidate: bool,
}

impl Default for SymmRedOptions {
    fn default() -> Self {
        SymmRedOptions { consolidate: true }
    }
}

/// One block extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmStep {
    pub block: SymmetricBlock,
    /// The coefficient `a` subtracted as `a * P_S^(m)`.
    pub coefficient: i64,
    /// Nonzero degree-`m` terms of the working polynomial before and after.
    pub degree_terms_before: usize,
    pub degree_terms_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmRedReport {
    pub outcome: ReductionOutcome,
    pub steps: Vec<SymmStep>,
    /// What was left for the monomial-wise reduction.
    pub remainder: Polynomial,
}

/// Most frequent coefficient of `p` on the block's monomials. Ties prefer a
/// negative value, then the smaller magnitude.
fn mode_coefficient(p: &Polynomial, block: &SymmetricBlock) -> i64 {
    let mut counts: HashMap<i64, usize> = HashMap::new();
    for mono in block.monomials() {
        *counts.entry(p.coeff(&mono)).or_default() += 1;
    }
    counts
        .into_iter()
        .min_by_key(|&(c, n)| (std::cmp::Reverse(n), c >= 0, c.unsigned_abs()))
        .map(|(c, _)| c)
        .expect("a block has at least one monomial")
}

/// Symmetric reduction with default options.
pub fn symm_red(p: &Polynomial, alloc: &mut AuxAllocator) -> Result<ReductionOutcome> {
    Ok(symm_red_with(p, alloc, SymmRedOptions::default())?.outcome)
}

pub fn symm_red_with(
    p: &Polynomial,
    alloc: &mut AuxAllocator,
    opts: SymmRedOptions,
) -> Result<SymmRedReport> {
    let mut work = p.clone();
    let mut gadgets = GadgetSet::new();
    let mut steps = Vec::new();

    for m in 3..=p.degree() {
        while let Some(block) = max_symm(&work, m) {
            if block.len() == m {
                break;
            }
            let a = mode_coefficient(&work, &block);
            debug_assert_ne!(a, 0, "the block lies in the polynomial");
            let before = work.terms_of_degree(m).count();
            work.add_scaled_in_place(a.checked_neg().ok_or(Error::Overflow)?, &block.expand())?;
            let after = work.terms_of_degree(m).count();
            let unit = symmetric_gadget(&block, Sign::of(a))?;
            gadgets.absorb_scaled(a.checked_abs().ok_or(Error::Overflow)?, &unit)?;
            log::trace!("degree {m}: block of {} vars, coefficient {a}", block.len());
            steps.push(SymmStep {
                block,
                coefficient: a,
                degree_terms_before: before,
                degree_terms_after: after,
            });
        }
    }

    gadgets.absorb_scaled(1, &mono_red_gadgets(&work)?)?;
    if opts.consolidate {
        gadgets.consolidate()?;
    }
    Ok(SymmRedReport {
        outcome: gadgets.materialize(alloc)?,
        steps,
        remainder: work,
    })
}

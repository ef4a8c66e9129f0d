use itertools::Itertools;

use super::{AuxAllocator, GadgetSet, Progression, ReductionCoefficients, ReductionOutcome};
use crate::error::{Error, Result};
use crate::pbpoly::{Monomial, Polynomial, SymmetricBlock, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(c: i64) -> Sign {
        if c < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

/// `sum_{i<j} x_i x_j` over `vars`, times `weight`.
fn pair_shell(vars: &[VarId], weight: i64) -> Result<Polynomial> {
    Polynomial::from_terms(
        vars.iter()
            .tuple_combinations()
            .map(|(&a, &b)| (Monomial::new([a, b]), weight)),
    )
}

fn require_high_degree(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidDegree(format!(
            "monomial gadgets apply to degree >= 3, got {k}"
        )));
    }
    Ok(())
}

/// Gadget for `sign * P_S^(m)`. Needs `n > m`; a block with `n = m` is a
/// single monomial and belongs to the monomial gadgets.
pub fn symmetric_gadget(block: &SymmetricBlock, sign: Sign) -> Result<GadgetSet> {
    let (n, m) = (block.len(), block.degree());
    let coeffs = match sign {
        Sign::Positive => ReductionCoefficients::positive(n, m)?,
        Sign::Negative => ReductionCoefficients::negative(n, m)?,
    };
    let shell = if coeffs.shell != 0 {
        pair_shell(block.vars(), coeffs.shell)?
    } else {
        Polynomial::zero()
    };
    let progressions = coeffs
        .constants
        .iter()
        .zip(&coeffs.slopes)
        .map(|(&constant, &slope)| Progression {
            vars: block.vars().to_vec(),
            constant,
            slope,
        })
        .collect();
    Ok(GadgetSet {
        shell,
        progressions,
    })
}

pub fn reduce_symmetric(
    block: &SymmetricBlock,
    sign: Sign,
    alloc: &mut AuxAllocator,
) -> Result<ReductionOutcome> {
    symmetric_gadget(block, sign)?.materialize(alloc)
}

/// `-x_1...x_k = min_w w((k-1) - sum x)`.
pub fn negative_monomial(mono: &Monomial) -> Result<GadgetSet> {
    let k = mono.degree();
    require_high_degree(k)?;
    Ok(GadgetSet {
        shell: Polynomial::zero(),
        progressions: vec![Progression {
            vars: mono.vars().to_vec(),
            constant: k as i64 - 1,
            slope: -1,
        }],
    })
}

/// `x_1...x_k = sum_{i<j} x_i x_j + min_w sum_i w_i (alpha_i - beta_i sum x)`
/// with `floor((k-1)/2)` auxiliaries. Every auxiliary uses
/// `(4i - 1) - 2 sum x` except, for odd `k`, the last one, which uses
/// `(k - 2) - sum x`.
pub fn positive_monomial(mono: &Monomial) -> Result<GadgetSet> {
    let k = mono.degree();
    require_high_degree(k)?;
    let count = (k - 1) / 2;
    let progressions = (1..=count)
        .map(|i| {
            let (constant, slope) = if k % 2 == 1 && i == count {
                (2 * count as i64 - 1, -1)
            } else {
                (4 * i as i64 - 1, -2)
            };
            Progression {
                vars: mono.vars().to_vec(),
                constant,
                slope,
            }
        })
        .collect();
    Ok(GadgetSet {
        shell: pair_shell(mono.vars(), 1)?,
        progressions,
    })
}

/// Gadget for `coeff * mono`: `|coeff|` times the gadget for its sign.
pub fn monomial_gadget(mono: &Monomial, coeff: i64) -> Result<GadgetSet> {
    let unit = match Sign::of(coeff) {
        Sign::Positive => positive_monomial(mono)?,
        Sign::Negative => negative_monomial(mono)?,
    };
    let mut out = GadgetSet::new();
    out.absorb_scaled(coeff.checked_abs().ok_or(Error::Overflow)?, &unit)?;
    Ok(out)
}

pub fn reduce_negative_monomial(
    mono: &Monomial,
    alloc: &mut AuxAllocator,
) -> Result<ReductionOutcome> {
    negative_monomial(mono)?.materialize(alloc)
}

pub fn reduce_positive_monomial(
    mono: &Monomial,
    alloc: &mut AuxAllocator,
) -> Result<ReductionOutcome> {
    positive_monomial(mono)?.materialize(alloc)
}

/// Term-by-term gadgets for `p`: terms of degree <= 2 go to the shell
/// unchanged, every higher term gets its own monomial gadget. Terms are
/// visited in canonical order.
pub(crate) fn mono_red_gadgets(p: &Polynomial) -> Result<GadgetSet> {
    let mut out = GadgetSet::new();
    for (mono, c) in p.terms() {
        if mono.degree() <= 2 {
            out.shell.add_term(mono.clone(), c)?;
        } else {
            out.absorb_scaled(1, &monomial_gadget(mono, c)?)?;
        }
    }
    Ok(out)
}

/// Monomial-wise reduction of `p`.
pub fn mono_red(p: &Polynomial, alloc: &mut AuxAllocator) -> Result<ReductionOutcome> {
    mono_red_gadgets(p)?.materialize(alloc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbpoly::Assignment;

    fn xs(n: u32) -> Vec<VarId> {
        (1..=n).map(VarId::original).collect()
    }

    /// Exhaustive check of `p(x) = min_w q(x, w)`, independent of the oracle
    /// module.
    fn holds(p: &Polynomial, out: &ReductionOutcome) -> bool {
        let orig: Vec<VarId> = p
            .original_vars()
            .union(&out.quadratic.original_vars())
            .copied()
            .collect();
        let aux = &out.aux_vars;
        (0..1u64 << orig.len()).all(|xm| {
            let x = Assignment::from_mask(&orig, xm);
            let best = (0..1u64 << aux.len())
                .map(|wm| {
                    out.quadratic
                        .evaluate(&x.extended(&Assignment::from_mask(aux, wm)))
                        .unwrap()
                })
                .min()
                .unwrap();
            best == p.evaluate(&x).unwrap()
        })
    }

    #[test]
    fn p53_positive_matches_worked_example() {
        let vars = xs(5);
        let block = SymmetricBlock::new(vars.clone(), 3).unwrap();
        let out = reduce_symmetric(&block, Sign::Positive, &mut AuxAllocator::new()).unwrap();
        let (w1, w2) = (VarId::auxiliary(1), VarId::auxiliary(2));
        let mut expected = pair_shell(&vars, 3).unwrap();
        expected.add_term(Monomial::var(w1), 7).unwrap();
        expected.add_term(Monomial::var(w2), 3).unwrap();
        for &x in &vars {
            expected.add_term(Monomial::new([x, w1]), -5).unwrap();
            expected.add_term(Monomial::new([x, w2]), -1).unwrap();
        }
        assert_eq!(out.quadratic, expected);
        assert_eq!(out.aux_vars, vec![w1, w2]);
        assert!(holds(&block.expand(), &out));
    }

    #[test]
    fn p53_negative_uses_formula_constants() {
        let block = SymmetricBlock::new(xs(5), 3).unwrap();
        let g = symmetric_gadget(&block, Sign::Negative).unwrap();
        let pairs: Vec<_> = g
            .progressions
            .iter()
            .map(|p| (p.constant, p.slope))
            .collect();
        assert_eq!(pairs, vec![(8, -3), (32, -7)]);
        assert!(g.shell.is_zero());
        let out = g.materialize(&mut AuxAllocator::new()).unwrap();
        assert!(holds(&block.expand().scaled(-1).unwrap(), &out));
    }

    #[test]
    fn p43_positive() {
        let block = SymmetricBlock::new(xs(4), 3).unwrap();
        let out = reduce_symmetric(&block, Sign::Positive, &mut AuxAllocator::new()).unwrap();
        assert_eq!(out.aux_count(), 1);
        assert_eq!(
            out.quadratic
                .coeff(&Monomial::new([VarId::original(1), VarId::original(2)])),
            2
        );
        assert!(holds(&block.expand(), &out));
    }

    #[test]
    fn full_degree_block_is_rejected() {
        let block = SymmetricBlock::new(xs(4), 4).unwrap();
        assert!(matches!(
            reduce_symmetric(&block, Sign::Positive, &mut AuxAllocator::new()),
            Err(Error::InvalidDegree(_))
        ));
    }

    #[test]
    fn negative_monomial_gadgets() {
        for k in 3..=6u32 {
            let mono: Monomial = xs(k).into_iter().collect();
            let out = reduce_negative_monomial(&mono, &mut AuxAllocator::new()).unwrap();
            assert_eq!(out.aux_count(), 1);
            let w = out.aux_vars[0];
            assert_eq!(out.quadratic.coeff(&Monomial::var(w)), k as i64 - 1);
            assert!(holds(&Polynomial::monomial(mono, -1), &out));
        }
    }

    #[test]
    fn positive_monomial_gadgets() {
        let cases: [(u32, &[(i64, i64)]); 4] = [
            (3, &[(1, -1)]),
            (4, &[(3, -2)]),
            (5, &[(3, -2), (3, -1)]),
            (7, &[(3, -2), (7, -2), (5, -1)]),
        ];
        for (k, expected) in cases {
            let mono: Monomial = xs(k).into_iter().collect();
            let g = positive_monomial(&mono).unwrap();
            let got: Vec<_> = g
                .progressions
                .iter()
                .map(|p| (p.constant, p.slope))
                .collect();
            assert_eq!(got, expected, "k = {k}");
            let out = g.materialize(&mut AuxAllocator::new()).unwrap();
            assert!(holds(&Polynomial::monomial(mono, 1), &out), "k = {k}");
        }
    }

    #[test]
    fn monomial_gadgets_need_degree_three() {
        let mono: Monomial = xs(2).into_iter().collect();
        assert!(positive_monomial(&mono).is_err());
        assert!(negative_monomial(&mono).is_err());
    }

    #[test]
    fn mono_red_scales_negative_terms() {
        let mono: Monomial = xs(3).into_iter().collect();
        let p = Polynomial::monomial(mono, -2);
        let out = mono_red(&p, &mut AuxAllocator::new()).unwrap();
        assert_eq!(out.aux_count(), 1);
        let w = out.aux_vars[0];
        assert_eq!(out.quadratic.coeff(&Monomial::var(w)), 4);
        assert_eq!(
            out.quadratic.coeff(&Monomial::new([VarId::original(1), w])),
            -2
        );
        assert!(holds(&p, &out));
    }

    #[test]
    fn mono_red_passes_quadratics_through() {
        let p = crate::pbpoly::format::parse_polynomial("3 x1 x2\n-1 x3\n5\n").unwrap();
        let out = mono_red(&p, &mut AuxAllocator::new()).unwrap();
        assert_eq!(out.quadratic, p);
        assert_eq!(out.aux_count(), 0);
    }
}

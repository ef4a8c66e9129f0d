use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use quadratize::reduction::SymmRedOptions;
use quadratize::{
    check_equivalence, mono_red, parse_polynomial, symm_red_with, utility_polynomial,
    write_polynomial, AuxAllocator, ColoringEncoding, Graph, Monomial, Polynomial, VarId,
};

fn polynomial(max_var: u32, max_degree: usize) -> impl Strategy<Value = Polynomial> {
    vec((btree_set(1..=max_var, 0..=max_degree), -6i64..=6), 0..14).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (vars, c) in terms {
            p.add_term(Monomial::new(vars.into_iter().map(VarId::original)), c)
                .unwrap();
        }
        p
    })
}

fn graph() -> impl Strategy<Value = Graph> {
    (3usize..=5).prop_flat_map(|v| {
        vec(any::<bool>(), v * (v - 1) / 2).prop_map(move |mask| {
            let mut g = Graph::new(v);
            let pairs = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b)));
            for ((a, b), on) in pairs.zip(mask) {
                if on {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn both_reductions_are_exact(p in polynomial(7, 5), consolidate in any::<bool>()) {
        let symm = symm_red_with(&p, &mut AuxAllocator::new(), SymmRedOptions { consolidate })
            .unwrap()
            .outcome;
        let mono = mono_red(&p, &mut AuxAllocator::new()).unwrap();
        for out in [&symm, &mono] {
            prop_assert!(out.quadratic.degree() <= 2);
            let report = check_equivalence(&p, out).unwrap();
            prop_assert!(report.equivalent, "{:?}", report.counterexample);
        }
    }

    #[test]
    fn renumbering_is_dense_and_preserves_equivalence(p in polynomial(6, 5)) {
        let out = mono_red(&p, &mut AuxAllocator::starting_at(40)).unwrap();
        let dense = out.renumbered().unwrap();
        let expected: Vec<VarId> = (1..=out.aux_count() as u32).map(VarId::auxiliary).collect();
        prop_assert_eq!(&dense.aux_vars, &expected);
        prop_assert!(check_equivalence(&p, &dense).unwrap().equivalent);
    }

    #[test]
    fn reduced_output_survives_text_round_trip(p in polynomial(6, 4)) {
        let out = symm_red_with(&p, &mut AuxAllocator::new(), SymmRedOptions::default())
            .unwrap()
            .outcome;
        let text = write_polynomial(&out.quadratic);
        prop_assert_eq!(parse_polynomial(&text).unwrap(), out.quadratic);
    }

    #[test]
    fn symmetric_never_uses_more_variables_on_graphs(g in graph()) {
        let bits = quadratize::coloring::default_bits(g.vertex_count()).unwrap();
        let q = utility_polynomial(&g, &ColoringEncoding::new(bits).unwrap()).unwrap();
        let symm = symm_red_with(&q, &mut AuxAllocator::new(), SymmRedOptions::default())
            .unwrap()
            .outcome;
        let mono = mono_red(&q, &mut AuxAllocator::new()).unwrap();
        prop_assert!(symm.aux_count() <= mono.aux_count());
    }
}

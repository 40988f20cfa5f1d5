use proptest::prelude::*;

use weyl_diagrams::grassmann::{
    is_le_diagram, one_line, pipe_dream_permutation, quantum_matrices_word, render_wiring, trace_wiring,
};
use weyl_diagrams::verify::enumerate_positive;
use weyl_diagrams::words::{braid_neighbors, is_reduced, reduced_word};
use weyl_diagrams::{CartanType, Diagram, Family, GridDiagram, GridShape, ReducedExpression, RootSystem, Word};

fn types() -> impl Strategy<Value = CartanType> {
    prop::sample::select(vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
    ])
    .prop_map(|(f, r)| CartanType::new(f, r).unwrap())
}

/// Keeps each candidate letter only if the word stays reduced.
fn reduce_greedily(system: &RootSystem, raw: &[usize], max_len: usize) -> Word {
    let mut letters = Vec::new();
    for &a in raw {
        if letters.len() == max_len {
            break;
        }
        let letter = a % system.rank() + 1;
        letters.push(letter);
        if !is_reduced(system, &Word::new(letters.clone())).unwrap() {
            letters.pop();
        }
    }
    Word::new(letters)
}

/// A Cartan type, a reduced word of length at most 9, and a diagram mask.
fn word_case() -> impl Strategy<Value = (CartanType, Word, u64)> {
    (types(), prop::collection::vec(0usize..8, 0..30), any::<u64>()).prop_map(|(ct, raw, mask)| {
        let system = RootSystem::new(ct);
        let word = reduce_greedily(&system, &raw, 9);
        let mask = mask & ((1u64 << word.len()) - 1);
        (ct, word, mask)
    })
}

fn grid_case() -> impl Strategy<Value = GridDiagram> {
    (1usize..=4, 1usize..=4, any::<u16>()).prop_map(|(p, m, bits)| {
        let shape = GridShape::new(p, m).unwrap();
        let boxes = shape
            .boxes()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, b)| b)
            .collect::<Vec<_>>();
        GridDiagram::new(shape, boxes).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn word_and_diagram_text_round_trip(letters in prop::collection::vec(1usize..20, 0..12), mask in any::<u32>()) {
        let word = Word::new(letters);
        prop_assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
        let diagram = Diagram::from_mask(mask as u64);
        prop_assert_eq!(diagram.to_string().parse::<Diagram>().unwrap(), diagram.clone());
        prop_assert_eq!(Diagram::from_mask(diagram.mask()), diagram);
    }

    #[test]
    fn reflections_are_involutions_on_roots(ct in types(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let system = RootSystem::new(ct);
        let roots = system.positive_roots();
        let beta = a.get(roots);
        let x = b.get(roots);
        let y = system.reflect(beta, x).unwrap();
        prop_assert!(system.is_root(&y));
        prop_assert_eq!(&system.reflect(beta, &y).unwrap(), x);
        prop_assert_eq!(system.reflect(beta, beta).unwrap(), -beta);
    }

    #[test]
    fn inverse_and_length((ct, word, _) in word_case()) {
        let system = RootSystem::new(ct);
        let w = system.element_of_word(&word).unwrap();
        prop_assert_eq!(w.length(), word.len());
        let inv = system.invert(&w);
        prop_assert!(system.compose(&w, &inv).is_identity());
        prop_assert_eq!(inv.length(), w.length());
        prop_assert_eq!(system.element_of_word(&word.reversed()).unwrap(), inv);
        let canonical = reduced_word(&system, &w);
        prop_assert_eq!(system.element_of_word(&canonical).unwrap(), w);
        prop_assert_eq!(canonical.len(), word.len());
    }

    #[test]
    fn root_sequence_is_distinct_positive((ct, word, _) in word_case()) {
        let system = RootSystem::new(ct);
        let expr = ReducedExpression::new(&system, word).unwrap();
        let betas = expr.betas().betas();
        prop_assert!(betas.iter().all(|b| b.is_positive() && system.is_root(b)));
        let distinct: std::collections::BTreeSet<_> = betas.iter().collect();
        prop_assert_eq!(distinct.len(), betas.len());
    }

    #[test]
    fn dual_positivity_tests_agree((ct, word, mask) in word_case()) {
        let system = RootSystem::new(ct);
        let expr = ReducedExpression::new(&system, word).unwrap();
        let d = Diagram::from_mask(mask);
        prop_assert_eq!(expr.is_positive_by_trace(&d).unwrap(), expr.is_positive_by_lengths(&d).unwrap());
    }

    #[test]
    fn zeta_prime_inverts_zeta((ct, word, mask) in word_case()) {
        let system = RootSystem::new(ct);
        let expr = ReducedExpression::new(&system, word).unwrap();
        let d = Diagram::from_mask(mask);
        let z = expr.zeta(&d).unwrap();
        let zp = expr.zeta_prime(&d).unwrap();
        prop_assert!(system.compose(&z, &zp).is_identity());
        let trace = expr.subexpression(&d).unwrap();
        prop_assert_eq!(trace.last(), &zp);
        prop_assert_eq!(expr.diagram_from_trace(&trace), Some(d));
    }

    #[test]
    fn positive_diagrams_round_trip((ct, word, mask) in word_case()) {
        let system = RootSystem::new(ct);
        let expr = ReducedExpression::new(&system, word).unwrap();
        let d = Diagram::from_mask(mask);
        let z = expr.zeta(&d).unwrap();
        if expr.is_positive(&d).unwrap() {
            prop_assert_eq!(z.length(), d.len());
            prop_assert_eq!(expr.diagram_for(&z), Some(d.clone()));
            prop_assert!(expr.suffix_products_reduced(&d).unwrap());
        }
        // Every subword product lies below w, so diagram_for always finds one.
        let back = expr.diagram_for(&z).expect("subword products are below w");
        prop_assert!(expr.is_positive(&back).unwrap());
        prop_assert_eq!(expr.zeta(&back).unwrap(), z);
    }

    #[test]
    fn prefix_truncation((ct, word, mask) in word_case(), cut in any::<prop::sample::Index>()) {
        let system = RootSystem::new(ct);
        let expr = ReducedExpression::new(&system, word.clone()).unwrap();
        let p = cut.index(word.len() + 1);
        let d = Diagram::from_mask(mask & ((1u64 << p) - 1));
        prop_assert_eq!(expr.prefix(p).is_positive(&d).unwrap(), expr.is_positive(&d).unwrap());
    }

    #[test]
    fn violated_obstruction_means_not_positive((ct, word, mask) in word_case()) {
        let system = RootSystem::new(ct);
        let expr = ReducedExpression::new(&system, word).unwrap();
        let d = Diagram::from_mask(mask);
        let positive = expr.is_positive(&d).unwrap();
        for &m in d.positions() {
            for j in 1..m {
                let obs = expr.positivity_obstruction(&d, j, m).unwrap();
                prop_assert!(!(obs.violated && positive));
                if let Some(trace) = obs.trace {
                    prop_assert!(trace.telescopes(expr.betas()));
                    prop_assert!(trace.matches_truncations(&expr));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn braid_moves_preserve_positive_images((ct, word, _) in word_case()) {
        let system = RootSystem::new(ct);
        let expr = ReducedExpression::new(&system, word.clone()).unwrap();
        let images = |e: &ReducedExpression<'_>| -> std::collections::BTreeSet<_> {
            enumerate_positive(e).unwrap().iter().map(|d| e.zeta(d).unwrap()).collect()
        };
        let base = images(&expr);
        for other in braid_neighbors(&system, &word) {
            let e = ReducedExpression::new(&system, other).unwrap();
            prop_assert_eq!(images(&e), base.clone());
        }
    }

    #[test]
    fn le_matches_positivity(grid in grid_case()) {
        let shape = grid.shape();
        let system = shape.root_system();
        let expr = ReducedExpression::new(&system, quantum_matrices_word(shape)).unwrap();
        prop_assert_eq!(is_le_diagram(&grid), expr.is_positive(&grid.to_diagram()).unwrap());
        prop_assert_eq!(GridDiagram::from_diagram(shape, &grid.to_diagram()).unwrap(), grid.clone());
        prop_assert_eq!(GridDiagram::parse(shape, &grid.to_string()).unwrap(), grid.clone());
    }

    #[test]
    fn wiring_traces_to_pipe_dream(grid in grid_case()) {
        let drawing = render_wiring(&grid);
        prop_assert_eq!(trace_wiring(&drawing).unwrap(), pipe_dream_permutation(&grid));
    }

    #[test]
    fn one_line_is_multiplicative((ct, a, _) in word_case(), raw in prop::collection::vec(0usize..8, 0..10)) {
        prop_assume!(ct.family() == Family::A);
        let system = RootSystem::new(ct);
        let u = system.element_of_word(&a).unwrap();
        let v = system.element_of_word(&reduce_greedily(&system, &raw, 6)).unwrap();
        let (pu, pv) = (one_line(&system, &u), one_line(&system, &v));
        let composed: Vec<usize> = pv.iter().map(|&x| pu[x - 1]).collect();
        prop_assert_eq!(one_line(&system, &system.compose(&u, &v)), composed);
    }
}

use super::*;
use crate::blocks::block_subgraphs;
use crate::canon::canonical_form;
use crate::ear::{find_bipartite_ear_decomposition, find_odd_ear_decomposition, validate};
use crate::fixtures;
use crate::graph6::parse_graph6;
use crate::matching::is_matching_covered;
use crate::nice_cycle::minimality_via_nice_cycles;

fn canon(g: &Graph) -> String {
    canonical_form(g).unwrap()
}

fn graphs(codes: &BTreeSet<String>) -> Vec<Graph> {
    codes.iter().map(|c| parse_graph6(c).unwrap()).collect()
}

#[test]
fn generator_examples() {
    assert_eq!(canon(&gen_p3star(6).unwrap()), canon(&Graph::cycle(6)));
    let g = gen_p3star(8).unwrap();
    assert_eq!((g.n(), g.edge_count(), g.degree(0), g.degree(1)), (8, 9, 3, 3));
    assert!((2..8).all(|v| g.degree(v) == 2));
    assert!(is_minimal_matching_covered(&gen_p3star(10).unwrap()).verdict);
    assert!(matches!(gen_p3star(7), Err(ExtremalError::Order { n: 7, .. })));
    assert!(gen_p3star(4).is_err());

    assert_eq!(canon(&gen_friendship(3).unwrap()), canon(&Graph::cycle(3)));
    let g = gen_friendship(5).unwrap();
    assert_eq!((g.edge_count(), g.degree(0)), (6, 4));
    assert!(is_minimal_factor_critical(&gen_friendship(7).unwrap()).verdict);
    assert!(gen_friendship(6).is_err());
    assert!(gen_friendship(1).is_err());
    assert!(gen_cycle(2).is_err());
}

#[test]
fn bipartite_enumeration_examples() {
    let set = |gs: &[Graph]| gs.iter().map(canon).collect::<BTreeSet<_>>();
    assert_eq!(enumerate_minimal_mc_bipartite(2).unwrap(), set(&[Graph::complete(2)]));
    assert_eq!(enumerate_minimal_mc_bipartite(4).unwrap(), set(&[Graph::cycle(4)]));
    let eight = enumerate_minimal_mc_bipartite(8).unwrap();
    assert!(eight.contains(&canon(&fixtures::p3star(8))));
    assert!(eight.contains(&canon(&Graph::cycle(8))));
    assert!(enumerate_minimal_mc_bipartite(5).is_err());
    assert!(enumerate_minimal_mc_bipartite(14).is_err());
}

#[test]
fn factor_critical_enumeration_examples() {
    let three = enumerate_minimal_factor_critical(3).unwrap();
    assert_eq!(three, BTreeSet::from([canon(&Graph::cycle(3))]));
    let five = enumerate_minimal_factor_critical(5).unwrap();
    assert!(five.contains(&canon(&Graph::cycle(5))));
    assert!(five.contains(&canon(&fixtures::bowtie())));
    let seven = enumerate_minimal_factor_critical(7).unwrap();
    let triangle_on_c5 = glue(&Graph::cycle(5), 0, &Graph::cycle(3), 0);
    for g in [Graph::cycle(7), fixtures::friendship(7), triangle_on_c5] {
        assert!(seven.contains(&canon(&g)));
    }
    assert!(enumerate_minimal_factor_critical(4).is_err());
    assert!(enumerate_minimal_factor_critical(13).is_err());
}

#[test]
fn small_oracles_agree() {
    for n in [2, 4, 6] {
        assert_eq!(enumerate_minimal_mc_bipartite(n).unwrap(), brute_minimal_mc_bipartite(n).unwrap(), "n={n}");
    }
    for n in [3, 5] {
        assert_eq!(
            enumerate_minimal_factor_critical(n).unwrap(),
            brute_minimal_factor_critical(n).unwrap(),
            "n={n}"
        );
    }
    assert_eq!(brute_minimal_mc_bipartite(4).unwrap(), BTreeSet::from([canon(&Graph::cycle(4))]));
    assert!(brute_minimal_mc_bipartite(10).is_err());
    assert!(brute_minimal_factor_critical(9).is_err());
}

#[test]
fn enumerated_bipartite_graphs_are_structured() {
    for n in (2..=8).step_by(2) {
        for g in graphs(&enumerate_minimal_mc_bipartite(n).unwrap()) {
            assert!(g.is_bipartite());
            assert!(is_minimal_matching_covered(&g).verdict);
            if n > 4 {
                assert!(!g.has_four_cycle(), "{g:?}");
            }
            if n > 2 {
                assert!(matches!(g.min_degree(), Some(2 | 3)));
            }
            let d = find_bipartite_ear_decomposition(&g).unwrap();
            assert!(validate(&g, &d).verdict);
            assert!(d.ears.iter().all(|e| !e.is_trivial()));
            for i in 0..=d.ears.len() {
                let (prefix, _) = d.prefix(i);
                assert!(is_minimal_matching_covered(&prefix).verdict, "prefix {i} of {g:?}");
            }
        }
    }
}

#[test]
fn enumerated_factor_critical_graphs_are_structured() {
    for n in (3..=7).step_by(2) {
        for g in graphs(&enumerate_minimal_factor_critical(n).unwrap()) {
            for (block, _) in block_subgraphs(&g) {
                assert!(is_minimal_factor_critical(&block).verdict, "{block:?} in {g:?}");
                let d = find_odd_ear_decomposition(&block).unwrap().unwrap();
                assert!(validate(&block, &d).verdict);
                assert!(d.ears.iter().all(|e| !e.is_trivial()));
            }
        }
    }
}

#[test]
fn growth_corpus_is_matching_covered_and_nice_cycles_decide_minimality() {
    use rand::SeedableRng;
    let mut corpus = bipartite_growth_corpus(8).unwrap();
    // K2, C4, C6, C8 and P*3(8).
    assert_eq!(corpus.len(), 5);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    corpus.extend((0..100).map(|_| fixtures::random_bipartite_ear_graph(&mut rng, 10)));
    for g in corpus {
        assert!(g.is_bipartite() && is_matching_covered(&g).verdict);
        let via_cycles = minimality_via_nice_cycles(&g).unwrap().verdict;
        assert_eq!(via_cycles, is_minimal_matching_covered(&g).verdict, "{g:?}");
    }
}

#[test]
fn theorem_reports() {
    let opts = SpectralOptions::<f64>::default();
    let r = verify_theorem_1(4, &opts).unwrap();
    assert_eq!((r.count, r.max_rho), (1, 2.0));
    assert!(r.bound_met && r.extremal_match);

    let r = verify_theorem_1(8, &opts).unwrap();
    assert!((r.max_rho - (1.0 + 13f64.sqrt()) / 2.0).abs() <= 1e-9);
    assert_eq!(r.argmax, vec![canon(&fixtures::p3star(8))]);
    assert!(r.bound_met && r.extremal_match);

    let r = verify_theorem_2(3, &opts).unwrap();
    assert!((r.max_rho - 2.0).abs() <= 1e-9 && r.extremal_match);
    let r = verify_theorem_2(5, &opts).unwrap();
    assert!((r.max_rho - (1.0 + 17f64.sqrt()) / 2.0).abs() <= 1e-9);
    assert_eq!(r.argmax, vec![canon(&fixtures::bowtie())]);
    let r = verify_theorem_2(7, &opts).unwrap();
    assert!((r.max_rho - 3.0).abs() <= 1e-9 && r.bound_met && r.extremal_match);
}

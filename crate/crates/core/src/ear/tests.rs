use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::fixtures;
use crate::matching::{is_factor_critical, is_matching_covered, is_minimal_matching_covered};

fn c6_decomposition() -> EarDecomposition {
    EarDecomposition::new(EarKind::Bipartite, Graph::complete(2), vec![0, 1], vec![Ear::new(vec![0, 5, 4, 3, 2, 1])])
}

fn with_ears(d: &EarDecomposition, extra: &[&[usize]]) -> EarDecomposition {
    let mut ears = d.ears.clone();
    ears.extend(extra.iter().map(|p| Ear::new(p.to_vec())));
    EarDecomposition::new(d.kind, d.base.clone(), d.base_vertices.clone(), ears)
}

fn ear_lengths(d: &EarDecomposition) -> Vec<usize> {
    d.ears.iter().map(Ear::len).collect()
}

#[test]
fn validate_examples() {
    let c6 = Graph::cycle(6);
    assert!(validate(&c6, &c6_decomposition()).verdict);

    let even = EarDecomposition::new(EarKind::Bipartite, Graph::complete(2), vec![0, 1], vec![Ear::new(vec![0, 5, 4, 3, 1])]);
    let cert = validate(&c6, &even);
    assert_eq!((cert.verdict, cert.note, cert.witness), (false, Reason::EvenEar, Witness::Ear { index: 0 }));

    let bowtie = fixtures::bowtie();
    let odd = EarDecomposition::new(EarKind::Odd, Graph::cycle(3), vec![0, 1, 2], vec![Ear::new(vec![0, 3, 4])]);
    let cert = validate(&bowtie, &odd);
    assert_eq!((cert.verdict, cert.note), (false, Reason::EvenEar));
}

#[test]
fn validate_rejections() {
    let c6 = Graph::cycle(6);
    let base = c6_decomposition();
    let cases: Vec<(EarDecomposition, Reason)> = vec![
        (EarDecomposition::new(EarKind::Bipartite, Graph::cycle(3), vec![0, 1, 2], vec![]), Reason::InvalidBase),
        (EarDecomposition::new(EarKind::Bipartite, Graph::complete(2), vec![0, 1], vec![]), Reason::NotSpanning),
        (with_ears(&base, &[&[0, 3]]), Reason::EarEdgeMissing),
        (with_ears(&base, &[&[0, 1]]), Reason::EarEdgeRepeated),
        (with_ears(&base, &[&[0, 2]]), Reason::EarEndsSamePart),
        (with_ears(&base, &[&[0, 9, 3]]), Reason::EvenEar),
    ];
    for (d, reason) in cases {
        let cert = validate(&c6, &d);
        assert!(!cert.verdict);
        assert_eq!(cert.note, reason, "{d:?}");
    }
    let shuffled = EarDecomposition::new(
        EarKind::Bipartite,
        Graph::complete(2),
        vec![0, 1],
        vec![Ear::new(vec![0, 5, 4, 7, 2, 1])],
    );
    let g = Graph::from_edges(8, [(0, 1), (0, 5), (4, 5), (4, 7), (2, 7), (1, 2), (3, 6)]).unwrap();
    assert!(!validate(&g, &shuffled).verdict);
}

#[test]
fn bipartite_search_examples() {
    let d = find_bipartite_ear_decomposition(&Graph::cycle(4)).unwrap();
    assert_eq!(d.base.edge_count(), 1);
    assert_eq!(ear_lengths(&d), vec![3]);

    // P*3(8) is C4-free, so after the initial C6 the remaining path of
    // length 3 is attached as a single ear.
    let g = fixtures::p3star(8);
    let d = find_bipartite_ear_decomposition(&g).unwrap();
    assert_eq!(ear_lengths(&d), vec![5, 3]);
    assert!(validate(&g, &d).verdict);
    let (a, b) = d.ears[1].ends();
    assert_eq!(edge(a, b), (0, 1));

    assert!(find_bipartite_ear_decomposition(&Graph::cycle(5)).is_none());
    let k2 = find_bipartite_ear_decomposition(&Graph::complete(2)).unwrap();
    assert!(k2.ears.is_empty());
    assert!(validate(&Graph::complete(2), &k2).verdict);
    assert!(find_bipartite_ear_decomposition(&Graph::path(4)).is_none());
}

#[test]
fn odd_search_examples() {
    let d = find_odd_ear_decomposition(&Graph::cycle(5)).unwrap().unwrap();
    assert_eq!((d.base.n(), d.ears.len()), (5, 0));
    assert_eq!(find_odd_ear_decomposition(&Graph::complete(4)), Ok(None));

    let g = Graph::cycle(5).with_new_vertices(2).with_edges(&[(0, 5), (5, 6), (1, 6)]).unwrap();
    assert!(is_factor_critical(&g).verdict);
    let d = find_odd_ear_decomposition(&g).unwrap().unwrap();
    assert_eq!(d.base.n(), 5);
    assert_eq!(ear_lengths(&d), vec![3]);
    assert!(validate(&g, &d).verdict);

    assert_eq!(find_odd_ear_decomposition(&fixtures::bowtie()), Err(OddEarError::CutVertex(0)));
    assert_eq!(find_odd_ear_decomposition(&Graph::complete(2)), Err(OddEarError::TooSmall(2)));
    let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert_eq!(find_odd_ear_decomposition(&two_triangles), Err(OddEarError::Disconnected));
}

#[test]
fn grade_examples() {
    let c6 = c6_decomposition();
    let one = with_ears(&c6, &[&[0, 6, 7, 3]]);
    assert_eq!(ear_grades(&one).unwrap(), Grades { per_unit: vec![0, 1], max: 1 });
    assert_eq!(one.grades, vec![0, 1]);

    let two = with_ears(&c6, &[&[0, 6, 7, 3], &[6, 8, 9, 4]]);
    assert_eq!(ear_grades(&two).unwrap(), Grades { per_unit: vec![0, 1, 2], max: 2 });

    let d = find_bipartite_ear_decomposition(&fixtures::p3star(10)).unwrap();
    assert_eq!(ear_grades(&d).unwrap(), Grades { per_unit: vec![0, 1, 1], max: 1 });

    let broken = with_ears(&c6, &[&[0, 6, 3]]);
    assert!(matches!(ear_grades(&broken), Err(EarError::InvalidDecomposition { index: Some(1), .. })));
}

#[test]
fn family_examples() {
    let d = find_bipartite_ear_decomposition(&fixtures::p3star(10)).unwrap();
    let families = parallel_families(&d, 0).unwrap();
    assert_eq!(families, vec![ParallelFamily { ends: (0, 1), members: vec![1, 2] }]);

    let two = with_ears(&c6_decomposition(), &[&[0, 6, 7, 3], &[6, 8, 9, 4]]);
    let families = parallel_families(&two, 0).unwrap();
    assert_eq!(families.len(), 2);
    assert!(families.iter().all(|f| f.members.len() == 1));
    assert!(parallel_families(&two, 2).unwrap().is_empty());
    assert_eq!(parallel_families(&two, 3), Err(EarError::InvalidIndex { index: 3, units: 3 }));
}

#[test]
fn compatibility_examples() {
    // Host ear of length 7 on a C4 start: positions 0..=7 along 0,4,5,6,7,8,9,1.
    let c4 = EarDecomposition::new(EarKind::Bipartite, Graph::complete(2), vec![0, 1], vec![Ear::new(vec![0, 3, 2, 1])]);
    let d = with_ears(&c4, &[&[0, 4, 5, 6, 7, 8, 9, 1]]);
    let fam = |a, b| ParallelFamily { ends: edge(a, b), members: vec![] };
    assert_eq!(compatible(&d, 1, &fam(4, 6), &fam(7, 9)), Ok(true));
    assert_eq!(compatible(&d, 1, &fam(4, 7), &fam(6, 9)), Ok(false));
    assert_eq!(compatible(&d, 1, &fam(4, 6), &fam(8, 2)), Ok(true));
    assert_eq!(compatible(&d, 1, &fam(4, 8), &fam(5, 6)), Ok(false));
    assert_eq!(compatible(&d, 1, &fam(4, 6), &fam(6, 8)), Ok(false));
    assert_eq!(compatible(&d, 1, &fam(2, 3), &fam(6, 8)), Err(EarError::FamilyNotAttached((2, 3))));
    assert!(matches!(compatible(&d, 5, &fam(4, 6), &fam(7, 9)), Err(EarError::InvalidIndex { .. })));
}

#[test]
fn add_ear_examples() {
    let c6 = Graph::cycle(6);
    let d = find_bipartite_ear_decomposition(&c6).unwrap();
    let (theta, d2) = add_ear(&c6, &d, Ear::new(vec![0, 6, 7, 3])).unwrap();
    assert_eq!((theta.n(), theta.edge_count()), (8, 9));
    assert!(is_minimal_matching_covered(&theta).verdict);
    assert!(validate(&theta, &d2).verdict);

    let c4 = Graph::cycle(4);
    let d = find_bipartite_ear_decomposition(&c4).unwrap();
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 2])), Err(EarError::TrivialEar));
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 4, 5, 2])), Err(EarError::EndsSamePart(0, 2)));
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 4, 5, 1])), Err(EarError::EndsAdjacent(0, 1)));
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 4, 1])), Err(EarError::EvenEar(2)));
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 4, 6, 1])), Err(EarError::InternalVertexCollision(6)));
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 2, 5, 1])), Err(EarError::InternalVertexCollision(2)));
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 4, 5, 0])), Err(EarError::EndsCoincide(0)));
    assert_eq!(add_ear(&c4, &d, Ear::new(vec![0, 4, 5, 9])), Err(EarError::EndOutsideGraph(9)));

    let c5 = Graph::cycle(5);
    let d = find_odd_ear_decomposition(&c5).unwrap().unwrap();
    let (g, d2) = add_ear(&c5, &d, Ear::new(vec![0, 5, 6, 1])).unwrap();
    assert!(is_factor_critical(&g).verdict);
    assert!(validate(&g, &d2).verdict);
    assert_eq!(add_ear(&c5, &d, Ear::new(vec![0, 1])), Err(EarError::EndsAdjacent(0, 1)));
    let (chorded, _) = add_ear(&c5, &d, Ear::new(vec![0, 2])).unwrap();
    assert_eq!(chorded.edge_count(), 6);
}

#[test]
fn searches_are_sound_on_grown_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let g = fixtures::random_bipartite_ear_graph(&mut rng, 12);
        let d = find_bipartite_ear_decomposition(&g).expect("ear-grown graphs are matching covered");
        assert!(validate(&g, &d).verdict);
        assert_eq!(d.assemble().as_ref(), Some(&g));

        let h = fixtures::random_odd_ear_graph(&mut rng, 11);
        let d = find_odd_ear_decomposition(&h).unwrap().expect("odd-ear graphs are factor-critical");
        assert!(validate(&h, &d).verdict);
    }
}

proptest::proptest! {
    #[test]
    fn bipartite_search_decides_class(g in fixtures::arb_connected_graph(9)) {
        let expected = g.is_bipartite() && is_matching_covered(&g).verdict;
        let found = find_bipartite_ear_decomposition(&g);
        proptest::prop_assert_eq!(found.is_some(), expected);
        if let Some(d) = found {
            proptest::prop_assert!(validate(&g, &d).verdict);
        }
    }
}

/// Random ear additions that meet the ear-addition hypotheses: both ends on the
/// most recent host ear, nonadjacent, in different parts, and either
/// parallel to or compatible with every ear already attached to that host.
#[test]
fn ear_addition_preserves_minimality() {
    const MAX_N: usize = 16;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut applications = 0;
    while applications < 200 {
        let mut g = Graph::cycle(2 * rng.gen_range(2..=4));
        let mut d = find_bipartite_ear_decomposition(&g).unwrap();
        'rounds: for _ in 0..3 {
            let host = d.unit_count() - 1;
            let mut attached: Vec<ParallelFamily> = Vec::new();
            for _ in 0..rng.gen_range(1..=3) {
                let seq = d.unit_vertices(host).to_vec();
                let parts = g.bipartition().unwrap();
                let mut pairs = Vec::new();
                for i in 0..seq.len() {
                    for j in i + 1..seq.len() {
                        let (a, b) = (seq[i], seq[j]);
                        if parts.same_part(a, b) || g.has_edge(a, b) {
                            continue;
                        }
                        let fam = ParallelFamily { ends: edge(a, b), members: vec![] };
                        let ok = attached.iter().all(|f| {
                            f.ends == fam.ends || compatible(&d, host, &fam, f).unwrap()
                        });
                        if ok {
                            pairs.push((a, b));
                        }
                    }
                }
                if pairs.is_empty() || g.n() + 2 > MAX_N {
                    break 'rounds;
                }
                let (a, b) = pairs[rng.gen_range(0..pairs.len())];
                let k = if g.n() + 4 <= MAX_N && rng.gen_bool(0.3) { 5 } else { 3 };
                let mut path = vec![a];
                path.extend(g.n()..g.n() + k - 1);
                path.push(b);
                let (g2, d2) = add_ear(&g, &d, Ear::new(path)).unwrap();
                let cert = is_minimal_matching_covered(&g2);
                assert!(cert.verdict, "{:?} on {:?}", cert, g2);
                applications += 1;
                attached.push(ParallelFamily { ends: edge(a, b), members: vec![] });
                g = g2;
                d = d2;
            }
        }
    }
}

use proptest::prelude::*;

use wordnerve::construct::{word_any_graph, word_bipartite};
use wordnerve::exec::Exec;
use wordnerve::geometry::hull::{breen_intersect, hulls_intersect};
use wordnerve::geometry::hyperplane::{region_index, Hyperplane};
use wordnerve::geometry::moment::moment_point;
use wordnerve::geometry::planar::convex_position_subset_2d;
use wordnerve::geometry::predicates::orientation;
use wordnerve::geometry::rational::{Rational, RationalPoint};
use wordnerve::io::{format_word, graph_to_json, parse_graph, parse_word};
use wordnerve::oracle;
use wordnerve::search::{find_general_word_with, SearchBudget};
use wordnerve::selftest;
use wordnerve::{Error, Graph, Word};

fn word_strategy(max_alphabet: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..max_alphabet, 1..=max_len)
        .prop_map(|xs| Word::new(xs.into_iter().map(|x| ((b'a' + x) as char).to_string())).unwrap())
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let mut k = 0;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((labels[i].clone(), labels[j].clone()));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(&edges, &labels).unwrap()
        })
}

/// Strictly increasing rationals built from positive gaps.
fn params_strategy(min: usize, max: usize) -> impl Strategy<Value = Vec<Rational>> {
    (-10i64..10, prop::collection::vec((1i64..25, 1i64..7), min..=max)).prop_map(|(start, gaps)| {
        let mut t = Rational::from_integer(start.into());
        gaps.into_iter()
            .map(|(p, q)| {
                t += Rational::new(p.into(), q.into());
                t.clone()
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alternation_matches_dp_oracle(w in word_strategy(4, 20)) {
        let letters: Vec<&str> = w.alphabet().into_iter().collect();
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                prop_assert_eq!(w.max_alternation(letters[i], letters[j]).unwrap(), oracle::alternation_dp(&w, letters[i], letters[j]));
            }
        }
        for d in 1..4 {
            prop_assert_eq!(w.induced_graph_general(d), oracle::induced_graph_oracle(&w, d));
        }
    }

    #[test]
    fn alternation_never_drops_under_extension(w in word_strategy(4, 12), tail in word_strategy(4, 8)) {
        let longer = w.concat(&tail);
        let letters: Vec<&str> = w.alphabet().into_iter().collect();
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                prop_assert!(longer.max_alternation(letters[i], letters[j]).unwrap() >= w.max_alternation(letters[i], letters[j]).unwrap());
            }
        }
    }

    #[test]
    fn higher_d_drops_edges(w in word_strategy(5, 18), d in 1usize..5) {
        let hi = w.induced_graph_general(d + 1);
        let lo = w.induced_graph_general(d);
        for (a, b) in hi.edges() {
            prop_assert!(lo.has_edge(a, b));
        }
    }

    #[test]
    fn rotation_keeps_the_d2_graph(w in word_strategy(5, 16), s in -20i64..20) {
        prop_assert_eq!(w.rotate(s).induced_graph_general(2), w.induced_graph_general(2));
    }

    #[test]
    fn word_any_graph_round_trip(g in graph_strategy(7)) {
        let (w, d) = word_any_graph(&g);
        prop_assert_eq!(w.induced_graph_general(d), g);
    }

    #[test]
    fn word_bipartite_round_trip(g in graph_strategy(7)) {
        match word_bipartite(&g) {
            Ok(bw) => {
                prop_assert!(oracle::is_bipartite_brute(&g));
                prop_assert_eq!(bw.word.induced_graph_general(bw.d), g);
            }
            Err(e) => {
                prop_assert!(matches!(e, Error::NotBipartite));
                prop_assert!(!oracle::is_bipartite_brute(&g));
            }
        }
    }

    #[test]
    fn io_round_trips(w in word_strategy(6, 20), g in graph_strategy(6)) {
        prop_assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
        prop_assert_eq!(parse_graph(&graph_to_json(&g).unwrap()).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn breen_matches_exact_hulls(params in params_strategy(2, 9), mask in any::<u32>(), d in 1usize..5) {
        let r = params.len();
        let mask = mask % ((1 << r) - 1);
        prop_assume!(mask != 0);
        let (a, b): (Vec<_>, Vec<_>) = params.iter().enumerate().partition(|(i, _)| mask & (1 << i) != 0);
        let a: Vec<Rational> = a.into_iter().map(|(_, t)| t.clone()).collect();
        let b: Vec<Rational> = b.into_iter().map(|(_, t)| t.clone()).collect();
        let pa: Vec<RationalPoint> = a.iter().map(|t| moment_point(t, d)).collect();
        let pb: Vec<RationalPoint> = b.iter().map(|t| moment_point(t, d)).collect();
        prop_assert_eq!(breen_intersect(&a, &b, d).unwrap(), hulls_intersect(&[pa.clone(), pb.clone()]).unwrap());
        // feasibility does not depend on the order of the points
        let mut ra = pa.clone();
        ra.reverse();
        prop_assert_eq!(hulls_intersect(&[pb, ra]).unwrap(), hulls_intersect(&[pa, moment_points(&b, d)]).unwrap());
    }

    #[test]
    fn moment_points_are_positively_oriented(params in params_strategy(2, 6)) {
        let d = params.len() - 1;
        let pts: Vec<RationalPoint> = params.iter().map(|t| moment_point(t, d)).collect();
        prop_assert_eq!(orientation(&pts).unwrap(), 1);
    }

    #[test]
    fn side_follows_region_parity(params in params_strategy(1, 4), probes in prop::collection::vec((-60i64..60, 1i64..5), 1..12)) {
        let d = params.len();
        let h = Hyperplane::through_moment_points(&params, d).unwrap();
        let mut by_parity = [None, None];
        for (p, q) in probes {
            let t = Rational::new(p.into(), q.into());
            let Some(region) = region_index(&params, &t) else { continue };
            let side = h.side(&moment_point(&t, d));
            prop_assert_ne!(side, 0);
            match by_parity[region % 2] {
                None => by_parity[region % 2] = Some(side),
                Some(s) => prop_assert_eq!(s, side),
            }
        }
        if let [Some(even), Some(odd)] = by_parity {
            prop_assert_eq!(even, -odd);
        }
    }

    #[test]
    fn convex_subsets_are_convex(coords in prop::collection::vec((-50i64..50, -50i64..50), 20)) {
        let pts: Vec<RationalPoint> = coords.iter().map(|&(x, y)| RationalPoint::from_ints(&[x, y])).collect();
        match convex_position_subset_2d(&pts, 6) {
            Ok(Some(sub)) => {
                prop_assert_eq!(sub.len(), 6);
                prop_assert!(oracle::is_ccw_convex_polygon(&sub));
                prop_assert!(sub.iter().all(|p| pts.contains(p)));
            }
            Ok(None) => {}
            Err(e) => prop_assert!(matches!(e, Error::Degenerate(_))),
        }
    }
}

fn moment_points(ts: &[Rational], d: usize) -> Vec<RationalPoint> {
    ts.iter().map(|t| moment_point(t, d)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn search_is_sound_and_run_independent(g in graph_strategy(4), d in 1usize..3) {
        let budget = SearchBudget::new(3, 3 * g.vertex_count(), 2_000_000).unwrap();
        let seq = find_general_word_with(&g, d, budget, Exec::Sequential).unwrap();
        let par = find_general_word_with(&g, d, budget, Exec::Parallel(3)).unwrap();
        prop_assert_eq!(&seq, &par);
        if let Some(w) = seq.outcome.witness() {
            prop_assert_eq!(oracle::induced_graph_oracle(w, d), g);
        }
    }

    #[test]
    fn search_finds_what_the_construction_builds(g in graph_strategy(4)) {
        // word_any_graph gives a witness at its d, so a budget that fits it must succeed
        let (w, d) = word_any_graph(&g);
        let copies = w.occurrences().values().copied().max().unwrap();
        let budget = SearchBudget::new(copies, w.len(), 50_000_000).unwrap();
        prop_assert!(find_general_word_with(&g, d, budget, Exec::Sequential).unwrap().is_found());
    }
}

#[test]
fn every_short_word_graph_is_found() {
    let report = selftest::search_completeness(6, &[1, 2, 3]);
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn bipartite_encodings_are_found_by_search() {
    for n in 2..=5 {
        for g in oracle::all_labeled_graphs(n) {
            let Ok(bw) = word_bipartite(&g) else { continue };
            let copies = bw.word.occurrences().values().copied().max().unwrap();
            let budget = SearchBudget::new(copies, bw.word.len(), 50_000_000).unwrap();
            let v = find_general_word_with(&g, bw.d, budget, Exec::Sequential).unwrap();
            assert!(v.is_found(), "{g} at d={}", bw.d);
        }
    }
}

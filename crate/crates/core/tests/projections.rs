use hypercert::combin::binomial;
use hypercert::hypergraph::{generate_complete, split_histogram};
use hypercert::project::{induced_pair_coloring, sset_graph, underlying_graph};
use hypercert::{Coloring, Hypergraph, Multigraph, Rational, SplitType};
use proptest::prelude::*;

fn uniform_hypergraph(max_n: usize, r: usize) -> impl Strategy<Value = Hypergraph> {
    (r..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::sample::subsequence((0..n as u32).collect::<Vec<_>>(), r), 0..25)
            .prop_map(move |edges| Hypergraph::uniform(n, r, edges).unwrap())
    })
}

/// A hypergraph together with a 2-coloring under which no edge is
/// monochromatic: edges are kept only if they meet both colors.
fn weakly_colored(r: usize) -> impl Strategy<Value = (Hypergraph, Coloring)> {
    (r + 1..=11).prop_flat_map(move |n| {
        (
            prop::collection::vec(0u32..2, n),
            prop::collection::vec(prop::sample::subsequence((0..n as u32).collect::<Vec<_>>(), r), 1..30),
        )
            .prop_map(move |(colors, edges)| {
                let edges: Vec<_> = edges
                    .into_iter()
                    .filter(|e| e.iter().any(|&v| colors[v as usize] != colors[e[0] as usize]))
                    .collect();
                (
                    Hypergraph::uniform(n, r, edges).unwrap(),
                    Coloring::new(colors, 2).unwrap(),
                )
            })
    })
}

fn mono_fraction(g: &Multigraph, c: &Coloring) -> Rational {
    let (mut mono, mut total) = (0i64, 0i64);
    for (u, v, m) in g.edges() {
        total += m as i64;
        if c.color(u) == c.color(v) {
            mono += m as i64;
        }
    }
    Rational::new(mono, total)
}

fn assert_symmetric_loop_free(g: &Multigraph) {
    let n = g.vertex_count();
    for i in 0..n {
        assert_eq!(g.get(i, i), 0);
        for j in 0..n {
            assert_eq!(g.get(i, j), g.get(j, i));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_matches_edge_count(h in uniform_hypergraph(12, 3)) {
        let n = h.vertex_count() as i64;
        prop_assert_eq!(h.average_degree() * n, Rational::from_integer(3 * h.edge_count() as i64));
        prop_assert_eq!(h.degrees().iter().sum::<u64>(), 3 * h.edge_count() as u64);
    }

    #[test]
    fn histogram_matches_per_edge_recount(h in uniform_hypergraph(10, 5), bits in any::<u64>()) {
        let c = Coloring::from_bits(bits, h.vertex_count());
        let stats = split_histogram(&h, &c).unwrap();
        prop_assert_eq!(stats.histogram.values().sum::<u64>(), h.edge_count() as u64);
        prop_assert_eq!(stats.mono_hyperedges, stats.histogram.get(&SplitType::new(5, 0)).copied().unwrap_or(0));
        let mut by_type = std::collections::BTreeMap::new();
        for e in h.edges() {
            let ones = e.iter().filter(|&&v| (bits >> v) & 1 == 1).count();
            *by_type.entry((ones.max(5 - ones), ones.min(5 - ones))).or_insert(0u64) += 1;
        }
        for (t, count) in &stats.histogram {
            prop_assert_eq!(by_type[&(t.major, t.minor)], *count);
        }
    }

    #[test]
    fn projections_count_multiplicities(h in uniform_hypergraph(9, 4)) {
        let under = underlying_graph(&h);
        assert_symmetric_loop_free(&under);
        prop_assert_eq!(under.total_multiplicity(), 6 * h.edge_count() as u64);
        if h.edge_count() > 0 {
            prop_assert_eq!(under.average_degree(), h.average_degree() * 3);
        }
        let pair = sset_graph(&h, 2, 5000).unwrap();
        assert_symmetric_loop_free(&pair);
        prop_assert_eq!(pair.total_multiplicity(), 3 * h.edge_count() as u64);
        let n = h.vertex_count() as i64;
        prop_assert_eq!(pair.average_degree(), h.average_degree() * 3 / (n - 1));
    }

    #[test]
    fn five_uniform_pair_graph_degree(h in uniform_hypergraph(9, 5)) {
        let pair = sset_graph(&h, 2, 5000).unwrap();
        prop_assert_eq!(pair.total_multiplicity(), 15 * h.edge_count() as u64);
        let n = h.vertex_count() as i64;
        prop_assert_eq!(pair.average_degree(), h.average_degree() * 12 / (n - 1));
        prop_assert_eq!(underlying_graph(&h).average_degree(), h.average_degree() * 4);
    }

    #[test]
    fn four_uniform_mono_fractions((h, c) in weakly_colored(4)) {
        prop_assume!(h.edge_count() > 0);
        let p = split_histogram(&h, &c).unwrap().p.unwrap();
        let under = underlying_graph(&h);
        prop_assert_eq!(mono_fraction(&under, &c), Rational::new(1, 3) + p / 6);
        let pair = sset_graph(&h, 2, 5000).unwrap();
        let pc = induced_pair_coloring(&c, h.vertex_count()).unwrap();
        prop_assert_eq!(mono_fraction(&pair, &pc), Rational::from_integer(1) - p);
    }

    #[test]
    fn five_uniform_mono_fractions((h, c) in weakly_colored(5)) {
        prop_assume!(h.edge_count() > 0);
        let p = split_histogram(&h, &c).unwrap().p.unwrap();
        let under = underlying_graph(&h);
        prop_assert_eq!(mono_fraction(&under, &c), Rational::new(3, 5) - p / 5);
        let pair = sset_graph(&h, 2, 5000).unwrap();
        let pc = induced_pair_coloring(&c, h.vertex_count()).unwrap();
        prop_assert_eq!(mono_fraction(&pair, &pc), Rational::new(1, 5) + p * 2 / 5);
    }

    #[test]
    fn three_uniform_mono_fraction((h, c) in weakly_colored(3)) {
        prop_assume!(h.edge_count() > 0);
        prop_assert_eq!(mono_fraction(&underlying_graph(&h), &c), Rational::new(1, 3));
    }

    #[test]
    fn pair_coloring_counts_bichromatic_pairs(n in 2usize..15, bits in any::<u64>()) {
        let c = Coloring::from_bits(bits, n);
        let sizes = c.class_sizes();
        let pc = induced_pair_coloring(&c, n).unwrap();
        prop_assert_eq!(pc.len() as u64, binomial(n as u64, 2));
        prop_assert_eq!(pc.colors().iter().filter(|&&x| x == 1).count(), sizes[0] * sizes[1]);
    }
}

#[test]
fn complete_hypergraph_degrees() {
    for n in 3..=9 {
        for r in 2..=n.min(5) {
            let h = generate_complete(n, r).unwrap();
            let want = binomial(n as u64 - 1, r as u64 - 1);
            assert!(h.degrees().iter().all(|&d| d == want), "n={n} r={r}");
        }
    }
}

#[test]
fn kneser_pair_graph_degrees() {
    for n in 5..=10 {
        let g = sset_graph(&generate_complete(n, 4).unwrap(), 2, 5000).unwrap();
        let want = binomial(n as u64 - 2, 2);
        assert!(g.degrees().iter().all(|&d| d == want), "n={n}");
    }
}

#[test]
fn petersen_by_enumeration() {
    // every disjoint pair of 2-subsets of {0..4} spans exactly one 4-set
    let g = sset_graph(&generate_complete(5, 4).unwrap(), 2, 100).unwrap();
    for i in 0..10 {
        let a = g.vertex_label(i).unwrap();
        for j in 0..10 {
            let b = g.vertex_label(j).unwrap();
            let disjoint = a.iter().all(|x| !b.contains(x));
            assert_eq!(g.get(i, j), u32::from(disjoint));
        }
    }
    assert!(g.degrees().iter().all(|&d| d == 3));
}

mod common;

use common::{all_graphs, connected_graphs};
use graphstring_core::{
    edit_neighbors_1ged, ged_exact, generate, is_isomorphic, Error, Family, Graph, GraphSpec, Prng,
};
use petgraph::graph::{DiGraph, UnGraph};
use proptest::prelude::*;

/// Minimum edit cost over every partial injective node map, each node of
/// `g` either mapped or deleted.
fn brute_ged(g: &Graph, h: &Graph) -> usize {
    fn go(
        g: &Graph,
        h: &Graph,
        i: usize,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        best: &mut usize,
    ) {
        if i == g.node_count() {
            let deleted = image.iter().filter(|x| x.is_none()).count();
            let inserted = used.iter().filter(|&&u| !u).count();
            let mut kept = 0;
            for (u, v) in g.edges() {
                if let (Some(a), Some(b)) = (image[u], image[v]) {
                    if h.has_edge(a, b) {
                        kept += 1;
                    }
                }
            }
            let cost = deleted + inserted + (g.edge_count() - kept) + (h.edge_count() - kept);
            *best = (*best).min(cost);
            return;
        }
        image.push(None);
        go(g, h, i + 1, image, used, best);
        image.pop();
        for x in 0..h.node_count() {
            if !used[x] {
                used[x] = true;
                image.push(Some(x));
                go(g, h, i + 1, image, used, best);
                image.pop();
                used[x] = false;
            }
        }
    }
    let mut best = usize::MAX;
    go(
        g,
        h,
        0,
        &mut Vec::new(),
        &mut vec![false; h.node_count()],
        &mut best,
    );
    best
}

fn to_petgraph_un(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::with_capacity(g.node_count(), g.edge_count());
    let ids: Vec<_> = (0..g.node_count()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(ids[u], ids[v], ());
    }
    p
}

fn to_petgraph_di(g: &Graph) -> DiGraph<(), ()> {
    let mut p = DiGraph::with_capacity(g.node_count(), g.edge_count());
    let ids: Vec<_> = (0..g.node_count()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(ids[u], ids[v], ());
    }
    p
}

fn random_graph(rng: &mut Prng, n: usize, p: f64, directed: bool) -> Graph {
    let mut g = Graph::with_nodes(n, directed);
    for u in 0..n {
        for v in 0..n {
            if (directed || u < v) && u != v && rng.unit_f64() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn ged_matches_brute_force_on_small_graphs() {
    let mut rng = Prng::new(42);
    let pool: Vec<Graph> = (0..=4).flat_map(all_graphs).collect();
    for _ in 0..400 {
        let g = &pool[rng.index(pool.len())];
        let h = &pool[rng.index(pool.len())];
        assert_eq!(
            ged_exact(g, h, 8).unwrap(),
            brute_ged(g, h),
            "{:?} vs {:?}",
            g.edges(),
            h.edges()
        );
    }
    for _ in 0..60 {
        let g = random_graph(&mut rng, 5, 0.5, false);
        let nh = 3 + rng.index(3);
        let h = random_graph(&mut rng, nh, 0.5, false);
        assert_eq!(ged_exact(&g, &h, 8).unwrap(), brute_ged(&g, &h));
    }
}

#[test]
fn ged_is_zero_exactly_on_isomorphic_pairs() {
    let graphs = connected_graphs(4);
    for g in &graphs {
        for h in &graphs {
            let zero = ged_exact(g, h, 8).unwrap() == 0;
            assert_eq!(zero, is_isomorphic(g, h, 10).unwrap());
        }
    }
}

#[test]
fn ged_metric_axioms() {
    let mut rng = Prng::new(7);
    for _ in 0..200 {
        let na = 2 + rng.index(5);
        let a = random_graph(&mut rng, na, 0.4, false);
        let nb = 2 + rng.index(5);
        let b = random_graph(&mut rng, nb, 0.4, false);
        let nc = 2 + rng.index(5);
        let c = random_graph(&mut rng, nc, 0.4, false);
        let ab = ged_exact(&a, &b, 8).unwrap();
        assert_eq!(ab, ged_exact(&b, &a, 8).unwrap());
        assert!(ab <= ged_exact(&a, &c, 8).unwrap() + ged_exact(&c, &b, 8).unwrap());
        assert_eq!(ged_exact(&a, &a, 8).unwrap(), 0);
    }
}

#[test]
fn single_edge_edits_are_at_distance_one() {
    for fam in [
        Family::House,
        Family::Cycle,
        Family::Wheel,
        Family::Complete,
    ] {
        let g = generate(&GraphSpec::new(fam, 6)).unwrap();
        for e in edit_neighbors_1ged(&g) {
            assert_eq!(
                ged_exact(&g, &e.graph, 8).unwrap(),
                1,
                "{fam} {:?}",
                (e.u, e.v)
            );
        }
    }
}

#[test]
fn size_caps_are_enforced() {
    let big = generate(&GraphSpec::new(Family::Path, 9)).unwrap();
    let small = generate(&GraphSpec::new(Family::Path, 3)).unwrap();
    assert_eq!(
        ged_exact(&big, &small, 8),
        Err(Error::SizeCapExceeded { size: 9, cap: 8 })
    );
    assert!(ged_exact(&big, &small, 9).is_ok());
    let p = generate(&GraphSpec::new(Family::Petersen, 0)).unwrap();
    assert!(is_isomorphic(&p, &p, 9).is_err());
    assert!(is_isomorphic(&p, &p, 10).unwrap());
}

#[test]
fn isomorphism_agrees_with_vf2_on_every_four_node_pair() {
    let graphs = all_graphs(4);
    for g in &graphs {
        for h in &graphs {
            let expected = petgraph::algo::is_isomorphic(&to_petgraph_un(g), &to_petgraph_un(h));
            assert_eq!(is_isomorphic(g, h, 10).unwrap(), expected);
        }
    }
}

#[test]
fn isomorphism_agrees_with_vf2_on_random_pairs() {
    let mut rng = Prng::new(11);
    for i in 0..600 {
        let directed = i % 3 == 0;
        let n = 2 + rng.index(9);
        let g = random_graph(&mut rng, n, 0.35, directed);
        // Alternate between a relabelled copy and a fresh sample.
        let h = if i % 2 == 0 {
            g.permuted(&rng.permutation(n)).unwrap()
        } else {
            random_graph(&mut rng, n, 0.35, directed)
        };
        let expected = if directed {
            petgraph::algo::is_isomorphic(&to_petgraph_di(&g), &to_petgraph_di(&h))
        } else {
            petgraph::algo::is_isomorphic(&to_petgraph_un(&g), &to_petgraph_un(&h))
        };
        assert_eq!(
            is_isomorphic(&g, &h, 20).unwrap(),
            expected,
            "{:?} {:?}",
            g.edges(),
            h.edges()
        );
    }
}

proptest! {
    #[test]
    fn relabelled_copies_are_isomorphic(seed in any::<u64>(), n in 1usize..12) {
        let mut rng = Prng::new(seed);
        let g = random_graph(&mut rng, n, 0.4, seed % 2 == 0);
        let h = g.permuted(&rng.permutation(n)).unwrap();
        prop_assert!(is_isomorphic(&g, &h, 20).unwrap());
    }
}

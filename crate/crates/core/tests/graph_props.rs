// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

mod common;

use graphlab::io::{parse_edge_list, read_graph, to_edge_list_string, write_graph, GraphFormat};
use graphlab::random_gen::{generate_er, ErParams};
use graphlab::WeightedGraph;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = WeightedGraph> {
    (1usize..30)
        .prop_flat_map(|n| {
            let edge = (1..=n, 1..=n, 0.05f64..20.0);
            (Just(n), prop::collection::vec(edge, 0..80))
        })
        .prop_map(|(n, edges)| {
            let edges: Vec<_> = edges.into_iter().filter(|&(x, y, _)| x != y).collect();
            WeightedGraph::from_edges(n, edges, false).unwrap()
        })
}

proptest! {
    #[test]
    fn node_weights_sum_to_twice_total_conductance(g in arb_graph()) {
        let mu = g.node_weights();
        let want = 2.0 * g.total_conductance();
        prop_assert!((mu.total() - want).abs() <= 1e-9 * want.max(1.0));
    }

    #[test]
    fn components_partition_the_node_set(g in arb_graph()) {
        let blocks = g.components();
        let mut seen = vec![false; g.n() + 1];
        for block in &blocks {
            prop_assert!(!block.is_empty());
            for &v in block {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
        }
        prop_assert!(seen[1..].iter().all(|&s| s));
        prop_assert_eq!(g.is_connected(), blocks.len() == 1);
        // No edge crosses two blocks.
        let mut owner = vec![0; g.n() + 1];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                owner[v] = b;
            }
        }
        for e in g.edges() {
            prop_assert_eq!(owner[e.x], owner[e.y]);
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let text = to_edge_list_string(&g);
        let back = parse_edge_list(&text, false).unwrap();
        prop_assert_eq!(back, g);
    }
}

#[test]
fn self_loops_round_trip_with_directive() {
    let g = WeightedGraph::from_edges(3, [(1, 1, 1.0), (1, 2, 0.5), (3, 3, 2.0)], true).unwrap();
    let back = parse_edge_list(&to_edge_list_string(&g), false).unwrap();
    assert_eq!(back, g);
    assert_eq!(back.degree(1).unwrap(), 2.5);
}

#[test]
fn large_er_graph_round_trips_through_a_file() {
    let g = generate_er(&ErParams {
        n: 1000,
        p: 0.01,
        seed: 42,
    })
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("er.txt");
    write_graph(&g, &path, GraphFormat::EdgeList).unwrap();
    let back = read_graph(&path, GraphFormat::EdgeList).unwrap();
    assert_eq!(back, g);
}

#[test]
fn fixture_graphs_are_connected_and_simple() {
    for g in common::acceptance_graphs(false) {
        assert!(g.is_connected());
        assert!(!g.has_self_loops());
        assert!((3..=50).contains(&g.n()));
    }
}

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use proptest::prelude::*;
use twok2::feedback::check_c3c5_free;
use twok2::generators::{gen_chain_graph, gen_split_graph};
use twok2::graph::parse_graph;
use twok2::independent_sets::{enumerate_mis, is_proper_coloring, min_vertex_cover, three_color};
use twok2::oracles::{oracle_minimal_separators, oracle_mis, oracle_three_color};
use twok2::recognition::{find_2k2_pair, test_2k2_structural};
use twok2::separators::enumerate_mvs;
use twok2::{Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn split_strategy() -> impl Strategy<Value = Graph> {
    (3usize..=11, 0.2f64..0.8, 0.1f64..0.9, any::<u64>())
        .prop_map(|(n, f, p, seed)| gen_split_graph(n, f, p, seed).unwrap())
        .prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn structural_verdict_matches_pairwise(g in graph_strategy(9)) {
        prop_assume!(g.is_connected());
        let verdict = test_2k2_structural(&g).unwrap();
        prop_assert_eq!(verdict.is_2k2_free, find_2k2_pair(&g).is_none());
    }

    #[test]
    fn edge_list_round_trips(g in graph_strategy(12)) {
        let text = g.to_edge_list();
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.to_edge_list(), text);
        prop_assert_eq!(back.signature(), g.signature());
    }

    #[test]
    fn split_graphs_match_oracles(g in split_strategy()) {
        let mis = enumerate_mis(&g).unwrap().sets;
        let mut oracle = oracle_mis(&g).unwrap();
        let mut ours = mis.clone();
        ours.sort();
        oracle.sort();
        prop_assert_eq!(ours, oracle);
        prop_assert!(mis.len() <= g.n() * g.n());

        if !g.is_complete() {
            let mut seps: Vec<VertexSet> = enumerate_mvs(&g).unwrap().into_iter().map(|r| r.vertices).collect();
            let mut truth = oracle_minimal_separators(&g).unwrap();
            seps.sort();
            truth.sort();
            prop_assert_eq!(seps, truth);
        }

        let cover = min_vertex_cover(&g).unwrap();
        prop_assert_eq!(cover.len() + mis[0].len(), g.n());

        let colour = three_color(&g).unwrap();
        prop_assert_eq!(colour.coloring.is_some(), oracle_three_color(&g).unwrap().is_some());
        if let Some(c) = &colour.coloring {
            prop_assert!(is_proper_coloring(&g, c));
        }
    }

    #[test]
    fn chain_graphs_pass_membership(left in 1usize..8, right in 1usize..8, t in 1usize..8, seed in any::<u64>()) {
        let g = gen_chain_graph(left, right, t.min(right), seed).unwrap();
        prop_assert!(check_c3c5_free(&g).is_ok());
        prop_assert!(find_2k2_pair(&g).is_none());
    }
}

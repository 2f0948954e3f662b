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

//! Test populations: exhaustive small graphs and seeded random families.
//!
//! All random generators draw from `ChaCha8Rng::seed_from_u64(seed)`, so a
//! `(parameters, seed)` pair names the same graph on every platform.

use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognition::{find_2k2_local, has_induced_c4, has_induced_c5, has_triangle};

/// Named small graphs.
pub mod families {
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap()
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::from_edges(n, []).unwrap()
    }
}

pub const EXHAUSTIVE_MAX_N: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub two_k2_free: bool,
    pub c3_free: bool,
    pub c4_free: bool,
    pub c5_free: bool,
}

impl GraphFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.two_k2_free || find_2k2_local(g).is_none())
            && (!self.c3_free || !has_triangle(g))
            && (!self.c4_free || !has_induced_c4(g))
            && (!self.c5_free || !has_induced_c5(g))
    }
}

/// Number of vertex pairs, i.e. the bit width of a graph mask on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labelled graph whose edge set is bit `k` of `mask` for the `k`-th pair
/// `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Streams every connected labelled graph on `n` vertices that passes the filter.
pub struct ConnectedGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
    filter: GraphFilter,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = graph_from_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if g.is_connected() && self.filter.accepts(&g) {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_connected_graphs(n: usize, filter: GraphFilter) -> Result<ConnectedGraphs> {
    if !(1..=EXHAUSTIVE_MAX_N).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration needs 1 <= n <= {EXHAUSTIVE_MAX_N}, got {n}"
        )));
    }
    Ok(ConnectedGraphs {
        n,
        next_mask: 0,
        end: 1u64 << pair_count(n),
        filter,
    })
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must lie in [0, 1], got {p}")))
    }
}

/// Redraws per row; bounded so a vanishing probability cannot spin forever.
const ROW_REDRAWS: usize = 100_000;

/// Split graph: clique on `0..k`, independent set on `k..n`, each cross pair
/// present with probability `p_cross`. Independent vertices that drew no clique
/// neighbour are redrawn until the graph is connected.
pub fn gen_split_graph(n: usize, clique_fraction: f64, p_cross: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("split graph needs n >= 2, got {n}")));
    }
    if !(clique_fraction > 0.0 && clique_fraction < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "clique fraction must lie in (0, 1), got {clique_fraction}"
        )));
    }
    check_probability("p_cross", p_cross)?;
    if p_cross == 0.0 {
        return Err(Error::InvalidParameter(
            "p_cross = 0 leaves the independent side isolated".into(),
        ));
    }
    let k = ((n as f64 * clique_fraction).round() as usize).clamp(1, n - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(Vertex, Vertex)> =
        (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    for v in k..n {
        let mut row = Vec::new();
        for _ in 0..ROW_REDRAWS {
            row = (0..k).filter(|_| rng.gen_bool(p_cross)).collect();
            if !row.is_empty() {
                break;
            }
        }
        if row.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "p_cross = {p_cross} too small to connect vertex {v}"
            )));
        }
        edges.extend(row.into_iter().map(|u| (u, v)));
    }
    Graph::from_edges(n, edges)
}

pub fn gen_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// First connected 2K2-free draw of `G(n, p)` within `max_tries`.
pub fn gen_2k2_free_rejection(n: usize, p: f64, seed: u64, max_tries: usize) -> Result<Option<Graph>> {
    check_probability("p", p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let g = gen_gnp(n, p, &mut rng);
        if g.is_connected() && find_2k2_local(&g).is_none() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// First connected 2K2-free draw of a random bipartite graph with sides
/// `left` and `right`, cross pairs present with probability `p`. Such graphs
/// are exactly the connected (2K2, C3, C5)-free graphs.
pub fn gen_bipartite_2k2_free_rejection(
    left: usize,
    right: usize,
    p: f64,
    seed: u64,
    max_tries: usize,
) -> Result<Option<Graph>> {
    check_probability("p", p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = left + right;
    for _ in 0..max_tries {
        let mut edges = Vec::new();
        for u in 0..left {
            for v in left..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() && find_2k2_local(&g).is_none() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Connected bipartite chain graph (nested neighbourhoods on each side) with
/// randomly permuted labels.
///
/// Left vertex `i` is joined to the first `t_i` right vertices, with one
/// threshold equal to `right` and the rest uniform in `1..=max_threshold`.
pub fn gen_chain_graph(left: usize, right: usize, max_threshold: usize, seed: u64) -> Result<Graph> {
    if left == 0 || right == 0 {
        return Err(Error::InvalidParameter("chain graph needs two nonempty sides".into()));
    }
    if !(1..=right).contains(&max_threshold) {
        return Err(Error::InvalidParameter(format!(
            "max threshold must lie in 1..={right}, got {max_threshold}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = left + right;
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 0..left {
        let t = if i == 0 {
            right
        } else {
            rng.gen_range(1..=max_threshold)
        };
        edges.extend((0..t).map(|j| (labels[i], labels[left + j])));
    }
    Graph::from_edges(n, edges)
}

/// Largest order accepted by [`enumerate_2k2_free_unlabeled`].
pub const UNLABELED_MAX_N: usize = 10;

type Representative = (Vec<u16>, UnGraph<(), ()>);

/// One representative of every isomorphism class of 2K2-free graphs (connected
/// or not) of each order `1..=max_n`, indexed by order minus one.
///
/// Built by adding one vertex at a time: deleting a vertex keeps a graph
/// 2K2-free, so every class of order `k + 1` extends a class of order `k`.
pub fn enumerate_2k2_free_unlabeled(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if !(1..=UNLABELED_MAX_N).contains(&max_n) {
        return Err(Error::InvalidParameter(format!(
            "unlabeled enumeration needs 1 <= n <= {UNLABELED_MAX_N}, got {max_n}"
        )));
    }
    let mut levels: Vec<Vec<Vec<u16>>> = vec![vec![vec![0]]];
    for k in 1..max_n {
        let mut classes: std::collections::HashMap<Invariant, Vec<Representative>> = std::collections::HashMap::new();
        let mut next = Vec::new();
        for rows in &levels[k - 1] {
            for nbrs in 0u16..1 << k {
                if creates_2k2(rows, nbrs) {
                    continue;
                }
                let mut grown = rows.clone();
                for (u, row) in grown.iter_mut().enumerate() {
                    if nbrs >> u & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                grown.push(nbrs);
                let bucket = classes.entry(invariant(&grown)).or_default();
                let pg = to_petgraph(&grown);
                if bucket.iter().any(|(_, other)| is_isomorphic(other, &pg)) {
                    continue;
                }
                bucket.push((grown.clone(), pg));
                next.push(grown);
            }
        }
        levels.push(next);
    }
    Ok(levels
        .into_iter()
        .map(|level| level.iter().map(|rows| graph_from_rows(rows)).collect())
        .collect())
}

type Invariant = (usize, Vec<(u32, Vec<u32>)>);

fn invariant(rows: &[u16]) -> Invariant {
    let degree = |v: usize| rows[v].count_ones();
    let mut profile: Vec<(u32, Vec<u32>)> = (0..rows.len())
        .map(|v| {
            let mut nd: Vec<u32> = (0..rows.len()).filter(|&u| rows[v] >> u & 1 == 1).map(degree).collect();
            nd.sort_unstable();
            (degree(v), nd)
        })
        .collect();
    profile.sort_unstable();
    let edges = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    (edges, profile)
}

fn to_petgraph(rows: &[u16]) -> UnGraph<(), ()> {
    let mut edges = Vec::new();
    for (u, &row) in rows.iter().enumerate() {
        for v in u + 1..rows.len() {
            if row >> v & 1 == 1 {
                edges.push((u as u32, v as u32));
            }
        }
    }
    let mut g = UnGraph::<(), ()>::from_edges(edges);
    while g.node_count() < rows.len() {
        g.add_node(());
    }
    g
}

fn graph_from_rows(rows: &[u16]) -> Graph {
    let n = rows.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| rows[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::from_edges(n, edges).unwrap()
}

/// Whether a new vertex adjacent to `nbrs` forms a 2K2 with an existing edge.
fn creates_2k2(rows: &[u16], nbrs: u16) -> bool {
    (0..rows.len()).filter(|&a| nbrs >> a & 1 == 1).any(|a| {
        let blocked = nbrs | rows[a] | 1 << a;
        (0..rows.len())
            .filter(|&c| blocked >> c & 1 == 0)
            .any(|c| rows[c] & !blocked != 0)
    })
}

/// Largest order accepted by [`enumerate_connected_chain_graphs`].
pub const CHAIN_MAX_N: usize = 10;

/// Every connected labelled (2K2, C3, C5)-free graph on `n` vertices, that is,
/// every connected bipartite graph whose neighbourhoods on each side are
/// nested.
///
/// The side containing vertex 0 is `L`. Such a graph corresponds to an ordered
/// partition `R1, ..., Rk` of the other side together with a surjection from
/// `L` onto `1..=k`, vertex `x` of `L` being joined to `R1 ∪ ... ∪ R(f(x))`.
pub fn enumerate_connected_chain_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_connected_chain_graph(n, &mut |g| out.push(g))?;
    Ok(out)
}

/// Streaming form of [`enumerate_connected_chain_graphs`].
pub fn for_each_connected_chain_graph(n: usize, f: &mut dyn FnMut(Graph)) -> Result<()> {
    if !(1..=CHAIN_MAX_N).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "chain enumeration needs 1 <= n <= {CHAIN_MAX_N}, got {n}"
        )));
    }
    if n == 1 {
        f(Graph::from_edges(1, []).unwrap());
        return Ok(());
    }
    // bit v of `left_mask` set means v is in L; vertex 0 always is
    for rest in 0u32..1 << (n - 1) {
        let left_mask = rest << 1 | 1;
        let left: Vec<Vertex> = (0..n).filter(|&v| left_mask >> v & 1 == 1).collect();
        let right: Vec<Vertex> = (0..n).filter(|&v| left_mask >> v & 1 == 0).collect();
        if right.is_empty() {
            continue;
        }
        for k in 1..=left.len().min(right.len()) {
            for_each_surjection(right.len(), k, &mut |blocks| {
                for_each_surjection(left.len(), k, &mut |levels| {
                    let mut edges = Vec::new();
                    for (i, &x) in left.iter().enumerate() {
                        for (j, &y) in right.iter().enumerate() {
                            if blocks[j] <= levels[i] {
                                edges.push((x, y));
                            }
                        }
                    }
                    f(Graph::from_edges(n, edges).unwrap());
                });
            });
        }
    }
    Ok(())
}

/// Calls `f` with every map from `0..len` onto `0..k`.
fn for_each_surjection(len: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    let mut assignment = vec![0; len];
    loop {
        let mut hit = vec![false; k];
        assignment.iter().for_each(|&b| hit[b] = true);
        if hit.iter().all(|&h| h) {
            f(&assignment);
        }
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            assignment[i] += 1;
            if assignment[i] < k {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

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

//! Brute-force reference answers for small graphs.
//!
//! Nothing here calls the separator-based algorithms; the only shared code is
//! the graph type itself. Vertex subsets are `u32` masks, so every oracle is
//! capped well below 32 vertices.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{canonicalize_family, Graph, Vertex, VertexSet};

pub const MINIMAL_SEPARATORS_MAX_N: usize = 18;
pub const MIS_MAX_N: usize = 20;
pub const MIN_FVS_MAX_N: usize = 16;
pub const CONNECTED_SEPARATOR_MAX_N: usize = 18;
pub const THREE_COLOR_MAX_N: usize = 12;

fn cap(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn mask_of(vs: &[Vertex]) -> u32 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn set_of(mask: u32) -> VertexSet {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

/// Number of connected components of the subgraph induced by `alive`.
fn component_count(adj: &[u32], alive: u32) -> usize {
    let mut left = alive;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut frontier = left & left.wrapping_neg();
        left &= !frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & left;
            left &= !fresh;
            frontier |= fresh;
        }
    }
    count
}

fn edge_count(adj: &[u32], alive: u32) -> usize {
    (0..adj.len())
        .filter(|v| alive >> v & 1 == 1)
        .map(|v| (adj[v] & alive).count_ones() as usize)
        .sum::<usize>()
        / 2
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Every inclusion-minimal `S` whose removal disconnects `G`, in
/// (cardinality, lexicographic) order.
pub fn oracle_minimal_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    cap(g, MINIMAL_SEPARATORS_MAX_N)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let all = full_mask(n);
    let mut found: Vec<u32> = Vec::new();
    for k in 1..n.saturating_sub(1) {
        for combo in (0..n).combinations(k) {
            let s = mask_of(&combo);
            // any separating proper subset contains a smaller minimal one
            if found.iter().any(|&f| s | f == s) {
                continue;
            }
            if component_count(&adj, all & !s) >= 2 {
                found.push(s);
            }
        }
    }
    let mut out: Vec<VertexSet> = found.into_iter().map(set_of).collect();
    canonicalize_family(&mut out);
    Ok(out)
}

/// Every maximal independent set, by scanning all subsets.
pub fn oracle_mis(g: &Graph) -> Result<Vec<VertexSet>> {
    cap(g, MIS_MAX_N)?;
    let n = g.n();
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    for s in 0..=full_mask(n) {
        let independent = (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0);
        if !independent {
            continue;
        }
        let maximal = (0..n).all(|v| s >> v & 1 == 1 || adj[v] & s != 0);
        if maximal {
            out.push(set_of(s));
        }
    }
    canonicalize_family(&mut out);
    Ok(out)
}

/// Lexicographically least minimum-cardinality set whose removal leaves a forest.
pub fn oracle_min_fvs(g: &Graph) -> Result<VertexSet> {
    cap(g, MIN_FVS_MAX_N)?;
    let n = g.n();
    let adj = adjacency_masks(g);
    let all = full_mask(n);
    for k in 0..=n {
        for combo in (0..n).combinations(k) {
            let rest = all & !mask_of(&combo);
            let vertices = rest.count_ones() as usize;
            if edge_count(&adj, rest) + component_count(&adj, rest) == vertices {
                return Ok(VertexSet::from(combo));
            }
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

/// Least (cardinality, lexicographic) connected `S` with `G \ S` disconnected.
pub fn oracle_min_connected_separator(g: &Graph) -> Result<Option<VertexSet>> {
    cap(g, CONNECTED_SEPARATOR_MAX_N)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let all = full_mask(n);
    for k in 1..n.saturating_sub(1) {
        for combo in (0..n).combinations(k) {
            let s = mask_of(&combo);
            if component_count(&adj, s) == 1 && component_count(&adj, all & !s) >= 2 {
                return Ok(Some(VertexSet::from(combo)));
            }
        }
    }
    Ok(None)
}

/// First proper colouring with colours `0..3` in lexicographic order of the
/// assignment vector, or `None`.
pub fn oracle_three_color(g: &Graph) -> Result<Option<Vec<u8>>> {
    cap(g, THREE_COLOR_MAX_N)?;
    fn extend(g: &Graph, colors: &mut Vec<u8>) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        for c in 0..3u8 {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors.push(c);
                if extend(g, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    let mut colors = Vec::with_capacity(g.n());
    Ok(extend(g, &mut colors).then_some(colors))
}

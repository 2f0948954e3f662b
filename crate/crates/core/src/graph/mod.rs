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

//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every graph keeps both sorted adjacency lists and one adjacency bitset per
//! vertex; the bitsets make subset, universality and component queries
//! word-parallel.

mod io;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use io::{parse_dimacs, parse_graph, ParseError, ParseErrorKind};

pub type Vertex = usize;

/// A canonical vertex set: strictly increasing ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VertexSet(vertices)
    }

    pub fn from_bitset(set: &BitSet) -> Self {
        VertexSet(set.iter().collect())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn to_bitset(&self, capacity: usize) -> BitSet {
        BitSet::from_indices(capacity, self.iter())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        VertexSet(self.iter().filter(|&x| x != v).collect())
    }

    /// Order used for every list of sets: by cardinality, then lexicographically.
    pub fn canonical_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Sort a list of sets into canonical order and drop duplicates.
pub fn canonicalize_family(family: &mut Vec<VertexSet>) {
    family.sort_by(|a, b| a.canonical_cmp(b));
    family.dedup();
}

/// Connected components left after deleting `removed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSplit {
    pub removed: VertexSet,
    /// Ordered by smallest member.
    pub components: Vec<VertexSet>,
    pub trivial_count: usize,
    pub nontrivial_indices: Vec<usize>,
}

impl ComponentSplit {
    fn new(removed: VertexSet, components: Vec<VertexSet>) -> Self {
        let trivial_count = components.iter().filter(|c| c.len() == 1).count();
        let nontrivial_indices = components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .map(|(i, _)| i)
            .collect();
        ComponentSplit {
            removed,
            components,
            trivial_count,
            nontrivial_indices,
        }
    }

    pub fn trivial_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.components
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c.as_slice()[0])
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.nontrivial_indices.iter().map(|&i| &self.components[i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetClass {
    pub independent: bool,
    pub clique: bool,
    pub connected: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphPredicates {
    pub connected: bool,
    pub bipartite: bool,
    pub acyclic: bool,
}

/// Induced subgraph together with the host ids of its vertices.
///
/// Local vertex `i` is host vertex `labels[i]`; labels are increasing, so
/// lowest-id tie-breaking agrees between host and subgraph.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub labels: Vec<Vertex>,
}

impl Subgraph {
    pub fn lift(&self, local: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(local.iter().map(|v| self.labels[v]).collect())
    }

    pub fn lift_vertex(&self, v: Vertex) -> Vertex {
        self.labels[v]
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<Vertex>>,
    rows: Vec<BitSet>,
    min_degree: usize,
    max_degree: usize,
}

impl Graph {
    /// Build a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut rows = vec![BitSet::new(n); n];
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !rows[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[v].insert(u);
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let min_degree = adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            n,
            m,
            adj,
            rows,
            min_degree,
            max_degree,
        })
    }

    /// Build from adjacency bit-rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<BitSet>) -> Graph {
        let n = rows.len();
        let adj: Vec<Vec<Vertex>> = rows.iter().map(|r| r.iter().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!((0..n).all(|u| !rows[u].contains(u)
            && adj[u].iter().all(|&v| rows[v].contains(u))));
        let min_degree = adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Graph {
            n,
            m,
            adj,
            rows,
            min_degree,
            max_degree,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighborhood(&self, v: Vertex) -> VertexSet {
        VertexSet::from_sorted(self.adj[v].clone())
    }

    /// Adjacency bit-row of `v`.
    pub fn row(&self, v: Vertex) -> &BitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.m == self.n * (self.n - 1) / 2
    }

    /// Lowest-id vertex of minimum degree.
    pub fn min_degree_vertex(&self) -> Option<Vertex> {
        self.vertices().find(|&v| self.degree(v) == self.min_degree)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Components of the subgraph induced by `alive`, each sorted, ordered by
    /// smallest member.
    pub fn components_within(&self, alive: &BitSet) -> Vec<Vec<Vertex>> {
        let mut remaining = alive.clone();
        let mut components = Vec::new();
        let mut stack = Vec::new();
        while let Some(start) = remaining.first() {
            remaining.remove(start);
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                let mut fresh = self.rows[x].clone();
                fresh.intersect_with(&remaining);
                for y in fresh.iter() {
                    remaining.remove(y);
                    stack.push(y);
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn components_after_removal(&self, s: &VertexSet) -> Result<ComponentSplit> {
        self.check_set(s)?;
        if s.len() >= self.n {
            return Err(Error::EmptyRemainder);
        }
        let mut alive = BitSet::full(self.n);
        for v in s.iter() {
            alive.remove(v);
        }
        let components = self
            .components_within(&alive)
            .into_iter()
            .map(VertexSet::from_sorted)
            .collect();
        Ok(ComponentSplit::new(s.clone(), components))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_within(&BitSet::full(self.n)).len() == 1
    }

    /// Vacuously true for an empty `s`.
    pub fn is_universal_vertex(&self, s: &VertexSet, v: Vertex) -> Result<bool> {
        self.check_set(s)?;
        self.check_vertex(v)?;
        if s.contains(v) {
            return Err(Error::VertexInSet(v));
        }
        Ok(s.iter().all(|x| self.has_edge(x, v)))
    }

    /// True iff every member of `s` is adjacent to `u` or to `v`.
    pub fn is_universal_edge(&self, s: &VertexSet, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_set(s)?;
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        for x in [u, v] {
            if s.contains(x) {
                return Err(Error::VertexInSet(x));
            }
        }
        Ok(s.iter().all(|x| self.has_edge(x, u) || self.has_edge(x, v)))
    }

    pub fn classify_subset(&self, s: &VertexSet) -> Result<SubsetClass> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mask = s.to_bitset(self.n);
        let inner_degree: Vec<usize> = s
            .iter()
            .map(|v| self.rows[v].intersection_count(&mask))
            .collect();
        Ok(SubsetClass {
            independent: inner_degree.iter().all(|&d| d == 0),
            clique: inner_degree.iter().all(|&d| d + 1 == s.len()),
            connected: self.components_within(&mask).len() == 1,
        })
    }

    /// Two-colouring by BFS from each uncoloured vertex in id order; `None` if
    /// an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn component_count(&self) -> usize {
        self.components_within(&BitSet::full(self.n)).len()
    }

    pub fn is_acyclic(&self) -> bool {
        self.m + self.component_count() == self.n
    }

    pub fn predicates(&self) -> GraphPredicates {
        let c = self.component_count();
        GraphPredicates {
            connected: c <= 1,
            bipartite: self.two_coloring().is_some(),
            acyclic: self.m + c == self.n,
        }
    }

    pub fn induced_subgraph(&self, vertices: &VertexSet) -> Subgraph {
        let labels: Vec<Vertex> = vertices.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let k = labels.len();
        let rows = labels
            .iter()
            .map(|&v| {
                BitSet::from_indices(
                    k,
                    self.adj[v].iter().filter_map(|&w| {
                        let i = index[w];
                        (i != usize::MAX).then_some(i)
                    }),
                )
            })
            .collect();
        Subgraph {
            graph: Graph::from_rows(rows),
            labels,
        }
    }

    pub fn complement(&self) -> Graph {
        let rows = self
            .vertices()
            .map(|v| {
                let mut r = BitSet::full(self.n);
                r.difference_with(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Canonical edge-list document: header `n m`, then `u v` with `u < v`
    /// in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// SHA-256 of the canonical edge list, hex encoded.
    pub fn signature(&self) -> String {
        hex::encode(Sha256::digest(self.to_edge_list().as_bytes()))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

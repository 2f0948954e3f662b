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

//! Deciding 2K2-freeness, with certificates.
//!
//! Three independent routes are provided:
//!
//! * [`find_2k2_pair`]: the exhaustive edge-pair scan (lexicographically least witness).
//! * [`find_2k2_local`]: for every vertex `a`, every edge of `G - N[a]` must see all of
//!   `N(a)`. Exact, word-parallel, and the route used for precondition checks.
//! * [`test_2k2_structural`]: the separator-based recursion. At each level it removes the
//!   neighbourhood `S` of a minimum-degree vertex, checks the component conditions
//!   (i)-(v) and recurses on `S` together with the non-trivial component.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::{has_separating_proper_subset, is_minimal_separator};

/// Two edges `{a,b}` and `{c,d}` on four distinct vertices with no edge between them.
///
/// Normalised so that `a < b`, `c < d` and `a < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwoK2Witness {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
}

impl TwoK2Witness {
    pub fn new(e: (Vertex, Vertex), f: (Vertex, Vertex)) -> Self {
        let e = (e.0.min(e.1), e.0.max(e.1));
        let f = (f.0.min(f.1), f.0.max(f.1));
        let (e, f) = if e.0 < f.0 { (e, f) } else { (f, e) };
        TwoK2Witness {
            a: e.0,
            b: e.1,
            c: f.0,
            d: f.1,
        }
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::from([self.a, self.b, self.c, self.d])
    }

    /// Both pairs are edges and the four cross pairs are non-edges.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let all = [self.a, self.b, self.c, self.d];
        all.iter().all(|&v| v < g.n())
            && self.vertices().len() == 4
            && g.has_edge(self.a, self.b)
            && g.has_edge(self.c, self.d)
            && [self.a, self.b]
                .iter()
                .all(|&x| !g.has_edge(x, self.c) && !g.has_edge(x, self.d))
    }
}

impl fmt::Display for TwoK2Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edges {{{}, {}}} and {{{}, {}}}", self.a, self.b, self.c, self.d)
    }
}

/// Exhaustive scan over all pairs of edges. Returns the witness whose sorted
/// vertex tuple is lexicographically least.
pub fn find_2k2_pair(g: &Graph) -> Option<TwoK2Witness> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut best: Option<(VertexSet, TwoK2Witness)> = None;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d) {
                continue;
            }
            let w = TwoK2Witness::new((a, b), (c, d));
            let key = w.vertices();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, w));
            }
        }
    }
    best.map(|(_, w)| w)
}

/// Local test: `G` contains a 2K2 iff for some vertex `a` some edge `{c,d}` of
/// `G - N[a]` misses a common vertex `b` of `N(a)`.
pub fn find_2k2_local(g: &Graph) -> Option<TwoK2Witness> {
    let n = g.n();
    for a in g.vertices() {
        let na = g.row(a);
        let mut outside = BitSet::full(n);
        outside.difference_with(na);
        outside.remove(a);
        // vertices outside N[a] that miss part of N(a)
        let mut partial = BitSet::new(n);
        for c in outside.iter() {
            if !na.is_subset(g.row(c)) {
                partial.insert(c);
            }
        }
        for c in partial.iter() {
            let mut partners = g.row(c).clone();
            partners.intersect_with(&partial);
            for d in partners.iter().filter(|&d| d > c) {
                if let Some(b) = na.first_outside_both(g.row(c), g.row(d)) {
                    return Some(TwoK2Witness::new((a, b), (c, d)));
                }
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &Graph) -> bool {
    find_2k2_local(g).is_none()
}

pub(crate) fn require_2k2_free(g: &Graph) -> Result<()> {
    match find_2k2_local(g) {
        Some(w) => Err(Error::NotTwoK2Free(w)),
        None => Ok(()),
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Which structural condition a trace entry refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// At most one non-trivial component of `G \ S`.
    I,
    /// Every trivial component of `G \ S` is universal to `S`.
    Ii,
    /// Every edge of the non-trivial component is universal to `S`.
    Iii,
    /// At most one non-trivial component inside `S`.
    Iv,
    /// Edges of `S` see every component vertex attached to the rest of `S`.
    V,
    /// Small or complete part decided directly.
    Base,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub depth: usize,
    /// Vertices of the part being tested at this depth.
    pub part_size: usize,
    pub separator: VertexSet,
    pub condition: Condition,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub is_2k2_free: bool,
    pub witness: Option<TwoK2Witness>,
    pub trace: Vec<TraceEntry>,
}

fn first_edge_in(g: &Graph, comp: &BitSet) -> (Vertex, Vertex) {
    comp.iter()
        .find_map(|x| {
            let mut r = g.row(x).clone();
            r.intersect_with(comp);
            r.first().map(|y| (x, y))
        })
        .expect("non-trivial component has an edge")
}

/// Exhaustive 2K2 search inside `alive`; used on parts of at most four vertices.
fn small_part_witness(g: &Graph, alive: &BitSet) -> Option<TwoK2Witness> {
    let vs: Vec<Vertex> = alive.iter().collect();
    let mut edges = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            let w = TwoK2Witness::new((a, b), (c, d));
            if w.is_valid(g) {
                return Some(w);
            }
        }
    }
    None
}

struct StructuralTester<'g> {
    g: &'g Graph,
    trace: Vec<TraceEntry>,
}

impl StructuralTester<'_> {
    fn record(&mut self, depth: usize, part: &BitSet, s: &BitSet, condition: Condition, holds: bool) {
        self.trace.push(TraceEntry {
            depth,
            part_size: part.count(),
            separator: VertexSet::from_bitset(s),
            condition,
            holds,
        });
    }

    /// Tests the connected part induced by `part`; returns a witness if one is found.
    fn run(&mut self, mut part: BitSet) -> Result<Option<TwoK2Witness>> {
        let g = self.g;
        let n = g.n();
        let mut depth = 0;
        loop {
            let size = part.count();
            let empty = BitSet::new(n);
            if size <= 4 {
                let w = small_part_witness(g, &part);
                self.record(depth, &part, &empty, Condition::Base, w.is_none());
                return Ok(w);
            }
            let degree = |v: Vertex| g.row(v).intersection_count(&part);
            let members: Vec<Vertex> = part.iter().collect();
            let min_deg = members.iter().map(|&v| degree(v)).min().unwrap_or(0);
            if min_deg + 1 == size {
                self.record(depth, &part, &empty, Condition::Base, true);
                return Ok(None);
            }
            let u = members
                .iter()
                .copied()
                .find(|&v| degree(v) == min_deg)
                .expect("part is nonempty");
            let mut s = g.row(u).clone();
            s.intersect_with(&part);
            let mut rest = part.clone();
            rest.difference_with(&s);
            let components: Vec<BitSet> = g
                .components_within(&rest)
                .into_iter()
                .map(|c| BitSet::from_indices(n, c))
                .collect();
            let nontrivial: Vec<&BitSet> = components.iter().filter(|c| c.count() > 1).collect();

            // (i)
            let holds = nontrivial.len() <= 1;
            self.record(depth, &part, &s, Condition::I, holds);
            if !holds {
                let e = first_edge_in(g, nontrivial[0]);
                let f = first_edge_in(g, nontrivial[1]);
                return Ok(Some(TwoK2Witness::new(e, f)));
            }

            // (ii): a trivial component w has N(w) ⊆ S and |N(w)| ≥ |S|, so this
            // can only fail if the bookkeeping above is wrong.
            let holds = components
                .iter()
                .filter(|c| c.count() == 1)
                .all(|c| s.is_subset(g.row(c.first().unwrap())));
            self.record(depth, &part, &s, Condition::Ii, holds);
            if !holds {
                return Err(Error::Finding {
                    message: "trivial component not universal to a minimum-degree neighbourhood"
                        .into(),
                    graph: g.to_edge_list(),
                });
            }

            let big = nontrivial.first().map(|c| (*c).clone());

            // (iii): an edge {x,y} missing p ∈ S forms a 2K2 with {p,u}.
            if let Some(g1) = &big {
                let mut partial = BitSet::new(n);
                for x in g1.iter() {
                    if !s.is_subset(g.row(x)) {
                        partial.insert(x);
                    }
                }
                let mut bad = None;
                'scan: for x in partial.iter() {
                    let mut partners = g.row(x).clone();
                    partners.intersect_with(&partial);
                    for y in partners.iter().filter(|&y| y > x) {
                        if let Some(p) = s.first_outside_both(g.row(x), g.row(y)) {
                            bad = Some(TwoK2Witness::new((x, y), (p, u)));
                            break 'scan;
                        }
                    }
                }
                self.record(depth, &part, &s, Condition::Iii, bad.is_none());
                if bad.is_some() {
                    return Ok(bad);
                }
            }

            // (iv)
            let s_components: Vec<BitSet> = g
                .components_within(&s)
                .into_iter()
                .filter(|c| c.len() > 1)
                .map(|c| BitSet::from_indices(n, c))
                .collect();
            let holds = s_components.len() <= 1;
            self.record(depth, &part, &s, Condition::Iv, holds);
            if !holds {
                let e = first_edge_in(g, &s_components[0]);
                let f = first_edge_in(g, &s_components[1]);
                return Ok(Some(TwoK2Witness::new(e, f)));
            }

            // (v): for an edge {a,b} of S and x in the component adjacent to some
            // y ∈ S \ (N(a) ∪ N(b)), x must see a or b.
            if let (Some(g1), Some(_)) = (&big, s_components.first()) {
                let bad = self.condition_v(g1, &s);
                self.record(depth, &part, &s, Condition::V, bad.is_none());
                if bad.is_some() {
                    return Ok(bad);
                }
            }

            match (big, s_components.into_iter().next()) {
                (Some(g1), _) => {
                    let mut next = g1;
                    next.union_with(&s);
                    part = next;
                }
                (None, Some(s_nt)) => part = s_nt,
                (None, None) => return Ok(None),
            }
            depth += 1;
        }
    }

    fn condition_v(&self, g1: &BitSet, s: &BitSet) -> Option<TwoK2Witness> {
        let g = self.g;
        for x in g1.iter() {
            let mut seen = s.clone();
            seen.intersect_with(g.row(x));
            let mut missed = s.clone();
            missed.difference_with(g.row(x));
            if seen.is_empty() || missed.count() < 2 {
                continue;
            }
            for y in seen.iter() {
                let mut r = missed.clone();
                r.difference_with(g.row(y));
                for a in r.iter() {
                    let mut inner = g.row(a).clone();
                    inner.intersect_with(&r);
                    if let Some(b) = inner.first() {
                        return Some(TwoK2Witness::new((a, b), (x, y)));
                    }
                }
            }
        }
        None
    }
}

/// Separator-based recognition of a connected graph.
pub fn test_2k2_structural(g: &Graph) -> Result<RecognitionResult> {
    require_connected(g)?;
    let mut tester = StructuralTester {
        g,
        trace: Vec::new(),
    };
    let witness = tester.run(BitSet::full(g.n()))?;
    if let Some(w) = &witness {
        debug_assert!(w.is_valid(g), "invalid witness {w} for {g:?}");
    }
    Ok(RecognitionResult {
        is_2k2_free: witness.is_none(),
        witness,
        trace: tester.trace,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ForbiddenKind {
    /// Induced path on five vertices.
    H1,
    /// Triangle `v0 v1 v2` with pendant path `v2 v3 v4`.
    H2,
    /// Triangles `v0 v1 v2` and `v2 v3 v4` sharing `v2`.
    H3,
}

impl ForbiddenKind {
    /// Edge pattern over positions `0..5`.
    pub fn pattern(self) -> &'static [(usize, usize)] {
        match self {
            ForbiddenKind::H1 => &[(0, 1), (1, 2), (2, 3), (3, 4)],
            ForbiddenKind::H2 => &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)],
            ForbiddenKind::H3 => &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: [Vertex; 5],
}

impl ForbiddenWitness {
    fn canonical(kind: ForbiddenKind, mut v: [Vertex; 5]) -> Self {
        match kind {
            ForbiddenKind::H1 => {
                if v[0] > v[4] {
                    v.reverse();
                }
            }
            ForbiddenKind::H2 => {
                if v[0] > v[1] {
                    v.swap(0, 1);
                }
            }
            ForbiddenKind::H3 => {
                if v[0] > v[1] {
                    v.swap(0, 1);
                }
                if v[3] > v[4] {
                    v.swap(3, 4);
                }
                if (v[3], v[4]) < (v[0], v[1]) {
                    v.swap(0, 3);
                    v.swap(1, 4);
                }
            }
        }
        ForbiddenWitness { kind, vertices: v }
    }

    /// The five vertices induce exactly the declared edge pattern.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let v = &self.vertices;
        if v.iter().any(|&x| x >= g.n()) || VertexSet::from(*v).len() != 5 {
            return false;
        }
        let pattern = self.kind.pattern();
        (0..5).all(|i| {
            (i + 1..5).all(|j| g.has_edge(v[i], v[j]) == pattern.contains(&(i, j)))
        })
    }
}

/// BFS from both endpoints of `e` until an endpoint of `f` is reached.
/// Returns the vertex path starting at an endpoint of `e`.
fn shortest_edge_path(g: &Graph, e: (Vertex, Vertex), f: (Vertex, Vertex)) -> Vec<Vertex> {
    let mut pred = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for s in [e.0.min(e.1), e.0.max(e.1)] {
        seen[s] = true;
        queue.push_back(s);
    }
    while let Some(x) = queue.pop_front() {
        if x == f.0 || x == f.1 {
            let mut path = vec![x];
            let mut cur = x;
            while pred[cur] != usize::MAX {
                cur = pred[cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                pred[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("graph is connected")
}

/// An induced H1, H2 or H3 in a connected graph, or `None` iff the graph is 2K2-free.
///
/// Starting from a 2K2 `{a',a}, {b,b'}`, take a shortest path between the two
/// edges. Length at least four gives an induced path; length three lets the
/// first path edge replace `{a',a}`; length two leaves a middle vertex `w`
/// whose adjacency to `a'` and `b'` selects the shape.
pub fn find_forbidden_subgraph(g: &Graph) -> Result<Option<ForbiddenWitness>> {
    require_connected(g)?;
    let Some(w) = find_2k2_local(g) else {
        return Ok(None);
    };
    let mut e = (w.a, w.b);
    let f = (w.c, w.d);
    let witness = loop {
        let path = shortest_edge_path(g, e, f);
        let a = path[0];
        let a2 = if e.0 == a { e.1 } else { e.0 };
        let b = *path.last().unwrap();
        let b2 = if f.0 == b { f.1 } else { f.0 };
        match path.len() {
            3 => {
                let mid = path[1];
                let (left, right) = (g.has_edge(mid, a2), g.has_edge(mid, b2));
                let (kind, order) = match (left, right) {
                    (true, true) => (ForbiddenKind::H3, [a2, a, mid, b, b2]),
                    (true, false) => (ForbiddenKind::H2, [a2, a, mid, b, b2]),
                    (false, true) => (ForbiddenKind::H2, [b2, b, mid, a, a2]),
                    (false, false) => (ForbiddenKind::H1, [a2, a, mid, b, b2]),
                };
                break ForbiddenWitness::canonical(kind, order);
            }
            4 => e = (a, path[1]),
            len if len >= 5 => {
                let order = [path[0], path[1], path[2], path[3], path[4]];
                break ForbiddenWitness::canonical(ForbiddenKind::H1, order);
            }
            _ => unreachable!("edges of a 2K2 are at distance at least two"),
        }
    };
    if !witness.is_valid(g) {
        return Err(Error::Finding {
            message: format!("forbidden-subgraph construction produced invalid {witness:?}"),
            graph: g.to_edge_list(),
        });
    }
    Ok(Some(witness))
}

/// Sets with at most this many vertices also get the literal proper-subset
/// minimality check; larger ones rely on the full-component criterion alone.
pub const DIRECT_MINIMALITY_LIMIT: usize = 12;

/// `N(u)` for the lowest-id minimum-degree vertex `u`, verified to be a minimal separator.
pub fn min_degree_separator(g: &Graph) -> Result<VertexSet> {
    require_connected(g)?;
    if g.is_complete() {
        return Err(Error::Complete);
    }
    require_2k2_free(g)?;
    min_degree_separator_unchecked(g)
}

/// As [`min_degree_separator`] but assumes connectivity and 2K2-freeness; the
/// minimality postcondition is still verified.
pub(crate) fn min_degree_separator_unchecked(g: &Graph) -> Result<VertexSet> {
    if g.is_complete() {
        return Err(Error::Complete);
    }
    let u = g.min_degree_vertex().expect("graph is nonempty");
    let s = g.neighborhood(u);
    let minimal = is_minimal_separator(g, &s)
        && (s.len() > DIRECT_MINIMALITY_LIMIT || !has_separating_proper_subset(g, &s));
    if !minimal {
        return Err(Error::Finding {
            message: format!("neighbourhood {s} of minimum-degree vertex {u} is not a minimal separator"),
            graph: g.to_edge_list(),
        });
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SmallCycles {
    pub has_induced_c3: bool,
    pub has_induced_c4: bool,
    pub has_induced_c5: bool,
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| g.row(u).intersects(g.row(v)))
}

/// Some non-adjacent pair `a, c` whose common neighbourhood is not a clique.
pub fn has_induced_c4(g: &Graph) -> bool {
    for a in g.vertices() {
        for c in a + 1..g.n() {
            if g.has_edge(a, c) {
                continue;
            }
            let mut common = g.row(a).clone();
            common.intersect_with(g.row(c));
            for b in common.iter() {
                let mut others = common.clone();
                others.difference_with(g.row(b));
                others.remove(b);
                if !others.is_empty() {
                    return true;
                }
            }
        }
    }
    false
}

/// Induced `a-b-c-d-e-a`: for a vertex `a` and two non-adjacent neighbours `b, e`,
/// look for an edge between `N(b) \ (N[a] ∪ N(e))` and `N(e) \ (N[a] ∪ N(b))`.
pub fn has_induced_c5(g: &Graph) -> bool {
    for a in g.vertices() {
        let na = g.neighbors(a);
        for (i, &b) in na.iter().enumerate() {
            for &e in &na[i + 1..] {
                if g.has_edge(b, e) {
                    continue;
                }
                let mut xs = g.row(b).clone();
                xs.difference_with(g.row(a));
                xs.difference_with(g.row(e));
                xs.remove(a);
                let mut ys = g.row(e).clone();
                ys.difference_with(g.row(a));
                ys.difference_with(g.row(b));
                ys.remove(a);
                if xs.iter().any(|x| g.row(x).intersects(&ys)) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn detect_small_cycles(g: &Graph) -> SmallCycles {
    SmallCycles {
        has_induced_c3: has_triangle(g),
        has_induced_c4: has_induced_c4(g),
        has_induced_c5: has_induced_c5(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::*;
    use crate::graph::parse_graph;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn triangle_with_tail() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap()
    }

    fn small_split() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn pair_scan_examples() {
        let w = find_2k2_pair(&path(5)).unwrap();
        assert_eq!(w.vertices(), VertexSet::from([0, 1, 3, 4]));
        assert_eq!((w.a, w.b, w.c, w.d), (0, 1, 3, 4));
        assert_eq!(find_2k2_pair(&cycle(4)), None);
        assert_eq!(find_2k2_pair(&cycle(6)).unwrap().vertices(), VertexSet::from([0, 1, 3, 4]));
    }

    #[test]
    fn local_test_agrees_on_examples() {
        for g in [path(5), cycle(6), cycle(4), cycle(5), complete(5), small_split(), bowtie()] {
            let local = find_2k2_local(&g);
            assert_eq!(local.is_some(), find_2k2_pair(&g).is_some(), "{g:?}");
            if let Some(w) = local {
                assert!(w.is_valid(&g));
            }
        }
    }

    #[test]
    fn structural_examples() {
        let r = test_2k2_structural(&small_split()).unwrap();
        assert!(r.is_2k2_free && r.witness.is_none() && !r.trace.is_empty());
        assert!(test_2k2_structural(&cycle(5)).unwrap().is_2k2_free);
        let r = test_2k2_structural(&path(5)).unwrap();
        assert_eq!(r.witness.unwrap().vertices(), VertexSet::from([0, 1, 3, 4]));
        assert!(matches!(
            test_2k2_structural(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn structural_recursion_finds_deep_witness() {
        // K4 on {0,1,2,3} plus 4 joined to {1,2,3}, then the tail 4-5-6-7.
        let g = parse_graph(
            "8 12\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n1 4\n2 4\n3 4\n4 5\n5 6\n6 7\n",
        )
        .unwrap();
        let r = test_2k2_structural(&g).unwrap();
        assert!(!r.is_2k2_free);
        assert!(r.witness.unwrap().is_valid(&g));
        assert!(find_2k2_pair(&g).is_some());
    }

    #[test]
    fn forbidden_examples() {
        let w = find_forbidden_subgraph(&path(5)).unwrap().unwrap();
        assert_eq!((w.kind, w.vertices), (ForbiddenKind::H1, [0, 1, 2, 3, 4]));
        let w = find_forbidden_subgraph(&bowtie()).unwrap().unwrap();
        assert_eq!((w.kind, w.vertices), (ForbiddenKind::H3, [0, 1, 2, 3, 4]));
        let w = find_forbidden_subgraph(&triangle_with_tail()).unwrap().unwrap();
        assert_eq!((w.kind, w.vertices), (ForbiddenKind::H2, [0, 1, 2, 3, 4]));
        assert_eq!(find_forbidden_subgraph(&cycle(5)).unwrap(), None);
        let w = find_forbidden_subgraph(&path(9)).unwrap().unwrap();
        assert_eq!(w.kind, ForbiddenKind::H1);
        assert!(w.is_valid(&path(9)));
    }

    #[test]
    fn min_degree_separator_examples() {
        assert_eq!(min_degree_separator(&path(4)).unwrap(), VertexSet::from([1]));
        assert_eq!(min_degree_separator(&cycle(4)).unwrap(), VertexSet::from([1, 3]));
        assert!(matches!(min_degree_separator(&complete(4)), Err(Error::Complete)));
        assert!(matches!(
            min_degree_separator(&path(5)),
            Err(Error::NotTwoK2Free(_))
        ));
    }

    #[test]
    fn small_cycle_examples() {
        let c = detect_small_cycles(&cycle(5));
        assert_eq!((c.has_induced_c3, c.has_induced_c4, c.has_induced_c5), (false, false, true));
        let c = detect_small_cycles(&complete(4));
        assert_eq!((c.has_induced_c3, c.has_induced_c4, c.has_induced_c5), (true, false, false));
        let c = detect_small_cycles(&complete_bipartite(2, 3));
        assert_eq!((c.has_induced_c3, c.has_induced_c4, c.has_induced_c5), (false, true, false));
    }
}

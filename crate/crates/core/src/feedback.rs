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

//! Minimum feedback vertex sets for (2K2, C3, C4)-free and (2K2, C3, C5)-free
//! graphs, read off the minimum-degree separator.

use std::fmt;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{
    find_2k2_local, has_induced_c4, has_induced_c5, has_triangle, min_degree_separator_unchecked,
    require_2k2_free, require_connected, TwoK2Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubclassTag {
    #[serde(rename = "2K2-C3-C4-free")]
    C3C4Free,
    #[serde(rename = "2K2-C3-C5-free")]
    C3C5Free,
    #[serde(rename = "2K2-free-only")]
    TwoK2FreeOnly,
    #[serde(rename = "not-2K2-free")]
    NotTwoK2Free,
}

impl fmt::Display for SubclassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubclassTag::C3C4Free => "2K2-C3-C4-free",
            SubclassTag::C3C5Free => "2K2-C3-C5-free",
            SubclassTag::TwoK2FreeOnly => "2K2-free-only",
            SubclassTag::NotTwoK2Free => "not-2K2-free",
        })
    }
}

/// Acyclic graphs are free of all three cycles and take the C3C4 tag.
pub fn classify_subclass(g: &Graph) -> Result<SubclassTag> {
    require_connected(g)?;
    if find_2k2_local(g).is_some() {
        return Ok(SubclassTag::NotTwoK2Free);
    }
    let c3 = has_triangle(g);
    Ok(if !c3 && !has_induced_c4(g) {
        SubclassTag::C3C4Free
    } else if !c3 && !has_induced_c5(g) {
        SubclassTag::C3C5Free
    } else {
        SubclassTag::TwoK2FreeOnly
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    Acyclic,
    C5Graph,
    /// `G \ S` has only trivial components.
    OnlyTrivial,
    /// The non-trivial component is a forest.
    AcyclicComponent,
    /// The non-trivial component has a cycle.
    CyclicComponent,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FvsIngredients {
    /// The minimum-degree separator.
    pub s: VertexSet,
    /// Vertices of the trivial components of `G \ S`.
    pub t: VertexSet,
    /// Vertices of the non-trivial component adjacent to all of `S`.
    pub u: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FvsResult {
    pub cardinality: usize,
    pub vertices: VertexSet,
    pub case_tag: CaseTag,
    pub ingredients: Option<FvsIngredients>,
}

fn acyclic_result() -> FvsResult {
    FvsResult {
        cardinality: 0,
        vertices: VertexSet::new(),
        case_tag: CaseTag::Acyclic,
        ingredients: None,
    }
}

fn remainder_is_acyclic(g: &Graph, removed: &VertexSet) -> bool {
    let keep = VertexSet::from_sorted(g.vertices().filter(|&v| !removed.contains(v)).collect());
    g.induced_subgraph(&keep).graph.is_acyclic()
}

fn is_c5(g: &Graph) -> bool {
    g.n() == 5 && g.m() == 5 && g.vertices().all(|v| g.degree(v) == 2) && g.is_connected()
}

/// `G` is connected (2K2, C3, C4)-free: acyclic, or exactly `C5`.
pub fn fvs_c3c4(g: &Graph) -> Result<FvsResult> {
    require_connected(g)?;
    require_2k2_free(g)?;
    if has_triangle(g) || has_induced_c4(g) {
        return Err(Error::WrongSubclass(classify_subclass(g)?));
    }
    if g.is_acyclic() {
        return Ok(acyclic_result());
    }
    if !is_c5(g) {
        return Err(Error::Finding {
            message: "cyclic (2K2, C3, C4)-free graph is not C5".into(),
            graph: g.to_edge_list(),
        });
    }
    Ok(FvsResult {
        cardinality: 1,
        vertices: VertexSet::singleton(0),
        case_tag: CaseTag::C5Graph,
        ingredients: None,
    })
}

/// Linear-time membership test for connected (2K2, C3, C5)-free graphs, which
/// are the connected bipartite graphs whose neighbourhoods on one side form a
/// chain under inclusion.
pub fn check_c3c5_free(g: &Graph) -> Result<()> {
    require_connected(g)?;
    let Some(colors) = g.two_coloring() else {
        return Err(Error::WrongSubclass(classify_subclass(g)?));
    };
    let mut side: Vec<Vertex> = g.vertices().filter(|&v| colors[v] == 0).collect();
    side.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for pair in side.windows(2) {
        let (big, small) = (pair[0], pair[1]);
        if !g.row(small).is_subset(g.row(big)) {
            let x = g.neighbors(small).iter().copied().find(|&x| !g.has_edge(big, x)).unwrap();
            let y = g.neighbors(big).iter().copied().find(|&y| !g.has_edge(small, y)).unwrap();
            return Err(Error::NotTwoK2Free(TwoK2Witness::new((small, x), (big, y))));
        }
    }
    Ok(())
}

fn lowest_removed(set: &VertexSet) -> VertexSet {
    match set.first() {
        Some(v) => set.without(v),
        None => VertexSet::new(),
    }
}

struct SeparatorView {
    s: VertexSet,
    t: VertexSet,
    g1: Option<VertexSet>,
    u: VertexSet,
}

fn separator_view(g: &Graph) -> Result<SeparatorView> {
    let s = min_degree_separator_unchecked(g)?;
    let split = g.components_after_removal(&s)?;
    let t: VertexSet = split.trivial_vertices().collect();
    let mut big = split.nontrivial();
    let g1 = big.next().cloned();
    if big.next().is_some() {
        return Err(Error::Finding {
            message: format!("removing {s} leaves two non-trivial components"),
            graph: g.to_edge_list(),
        });
    }
    let s_mask = s.to_bitset(g.n());
    let u = g1
        .iter()
        .flat_map(|c| c.iter())
        .filter(|&x| s_mask.is_subset(g.row(x)))
        .collect();
    Ok(SeparatorView { s, t, g1, u })
}

/// Minimum feedback vertex set of a connected (2K2, C3, C5)-free graph from
/// the minimum-degree separator `S`, its trivial part `T` and the vertices `U`
/// of the non-trivial component that see all of `S`.
pub fn fvs_c3c5(g: &Graph) -> Result<FvsResult> {
    check_c3c5_free(g)?;
    if g.is_acyclic() {
        return Ok(acyclic_result());
    }
    let SeparatorView { s, t, g1, u } = separator_view(g)?;
    let (case_tag, options) = match &g1 {
        None => (CaseTag::OnlyTrivial, [lowest_removed(&s), lowest_removed(&t)]),
        Some(component) => {
            if u.is_empty() {
                return Err(Error::Finding {
                    message: format!("no vertex of the component {component} is universal to {s}"),
                    graph: g.to_edge_list(),
                });
            }
            let with_t = u.union(&lowest_removed(&t));
            if g.induced_subgraph(component).graph.is_acyclic() {
                (CaseTag::AcyclicComponent, [s.clone(), with_t])
            } else {
                (
                    CaseTag::CyclicComponent,
                    [with_t, lowest_removed(&u).union(&lowest_removed(&s))],
                )
            }
        }
    };
    let [first, second] = options;
    let vertices = if second.len() < first.len() { second } else { first };
    if !remainder_is_acyclic(g, &vertices) {
        return Err(Error::Finding {
            message: format!("removing {vertices} leaves a cycle"),
            graph: g.to_edge_list(),
        });
    }
    Ok(FvsResult {
        cardinality: vertices.len(),
        vertices,
        case_tag,
        ingredients: Some(FvsIngredients { s, t, u }),
    })
}

/// Dispatches on the subclass.
pub fn fvs(g: &Graph) -> Result<FvsResult> {
    match classify_subclass(g)? {
        SubclassTag::C3C4Free => fvs_c3c4(g),
        SubclassTag::C3C5Free => fvs_c3c5(g),
        other => Err(Error::WrongSubclass(other)),
    }
}

fn independent(g: &Graph, set: &BitSet) -> bool {
    set.iter().all(|v| !g.row(v).intersects(set))
}

fn structure_input(g: &Graph) -> Result<Option<(SeparatorView, BitSet)>> {
    if g.is_complete() {
        return Ok(None);
    }
    let view = separator_view(g)?;
    let s_mask = view.s.to_bitset(g.n());
    Ok(Some((view, s_mask)))
}

fn edges_within<'a>(g: &'a Graph, set: &'a VertexSet) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
    set.iter()
        .flat_map(move |u| g.neighbors(u).iter().copied().filter(move |&v| u < v && set.contains(v)).map(move |v| (u, v)))
}

fn check_common(g: &Graph, view: &SeparatorView, s_mask: &BitSet, out: &mut Vec<String>) {
    if !independent(g, s_mask) {
        out.push(format!("separator {} is not independent", view.s));
    }
    if let Some(g1) = &view.g1 {
        let g1_mask = g1.to_bitset(g.n());
        for x in view.s.iter() {
            let mut inside = g.row(x).clone();
            inside.intersect_with(&g1_mask);
            if !independent(g, &inside) {
                out.push(format!("neighbourhood of {x} in the component {g1} has an edge"));
            }
        }
    }
}

/// Structural properties of the minimum-degree separator `S` of a connected
/// (2K2, C3, C5)-free graph: `S` independent, each `N(x) ∩ G1` independent,
/// and every edge of `G1` joins a vertex universal to `S` to one with no
/// neighbour in `S`. Returns one line per violation.
pub fn c3c5_structure_violations(g: &Graph) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let Some((view, s_mask)) = structure_input(g)? else {
        return Ok(out);
    };
    check_common(g, &view, &s_mask, &mut out);
    if let Some(g1) = &view.g1 {
        for (a, b) in edges_within(g, g1) {
            let seen = |v: Vertex| g.row(v).intersection_count(&s_mask);
            let (sa, sb) = (seen(a), seen(b));
            let split = (sa == view.s.len() && sb == 0) || (sb == view.s.len() && sa == 0);
            if !split {
                out.push(format!("edge {{{a}, {b}}} of the component is not a universal/isolated pair"));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct C3C4Violations {
    /// Violations of the properties proved for every separator.
    pub lines: Vec<String>,
    /// Vertices of `G1` without exactly one neighbour in `S`, counted only when `|S| > 1`.
    pub single_neighbour: Vec<String>,
    /// The same count without the `|S| > 1` restriction.
    pub single_neighbour_unrestricted: Vec<String>,
}

/// Structural properties of the minimum-degree separator `S` of a connected
/// (2K2, C3, C4)-free graph: `S` independent, exactly one trivial component
/// when `|S| > 1`, the neighbourhoods in `S` of the two ends of every edge of
/// `G1` partition `S`, and each `G1` vertex has exactly one neighbour in `S`.
pub fn c3c4_structure_violations(g: &Graph) -> Result<C3C4Violations> {
    let mut out = C3C4Violations::default();
    let Some((view, s_mask)) = structure_input(g)? else {
        return Ok(out);
    };
    check_common(g, &view, &s_mask, &mut out.lines);
    if view.s.len() > 1 && view.t.len() != 1 {
        out.lines.push(format!("|S| = {} but {} trivial components", view.s.len(), view.t.len()));
    }
    if let Some(g1) = &view.g1 {
        for (a, b) in edges_within(g, g1) {
            let mut na = g.row(a).clone();
            na.intersect_with(&s_mask);
            let mut nb = g.row(b).clone();
            nb.intersect_with(&s_mask);
            let disjoint = !na.intersects(&nb);
            na.union_with(&nb);
            if !disjoint || na.count() != view.s.len() {
                out.lines.push(format!("edge {{{a}, {b}}} does not split the separator"));
            }
        }
        for x in g1.iter() {
            if g.row(x).intersection_count(&s_mask) != 1 {
                let line = format!("vertex {x} of the component has {} separator neighbours", g.row(x).intersection_count(&s_mask));
                if view.s.len() > 1 {
                    out.single_neighbour.push(line.clone());
                }
                out.single_neighbour_unrestricted.push(line);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::{complete, complete_bipartite, cycle, path, star};
    use crate::oracles::oracle_min_fvs;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_subclass(&cycle(5)).unwrap(), SubclassTag::C3C4Free);
        assert_eq!(classify_subclass(&complete_bipartite(2, 3)).unwrap(), SubclassTag::C3C5Free);
        assert_eq!(classify_subclass(&cycle(6)).unwrap(), SubclassTag::NotTwoK2Free);
        assert_eq!(classify_subclass(&complete(4)).unwrap(), SubclassTag::TwoK2FreeOnly);
        assert_eq!(classify_subclass(&path(4)).unwrap(), SubclassTag::C3C4Free);
        assert!(classify_subclass(&Graph::from_edges(2, []).unwrap()).is_err());
    }

    #[test]
    fn c3c4_examples() {
        let p4 = fvs_c3c4(&path(4)).unwrap();
        assert_eq!((p4.cardinality, p4.case_tag), (0, CaseTag::Acyclic));
        let c5 = fvs_c3c4(&cycle(5)).unwrap();
        assert_eq!(c5.vertices, VertexSet::from([0]));
        assert_eq!(c5.case_tag, CaseTag::C5Graph);
        assert_eq!(fvs_c3c4(&star(5)).unwrap().cardinality, 0);
        assert!(matches!(fvs_c3c4(&cycle(4)), Err(Error::WrongSubclass(SubclassTag::C3C5Free))));
    }

    #[test]
    fn c3c5_examples() {
        let c4 = fvs_c3c5(&cycle(4)).unwrap();
        let ing = c4.ingredients.clone().unwrap();
        assert_eq!(ing.s, VertexSet::from([1, 3]));
        assert_eq!(ing.t, VertexSet::from([0, 2]));
        assert_eq!(c4.case_tag, CaseTag::OnlyTrivial);
        assert_eq!(c4.vertices, VertexSet::from([3]));
        let k23 = fvs_c3c5(&complete_bipartite(2, 3)).unwrap();
        assert_eq!(k23.cardinality, 1);
        assert_eq!(k23.ingredients.unwrap().s, VertexSet::from([0, 1]));
        assert_eq!(fvs_c3c5(&complete_bipartite(3, 3)).unwrap().cardinality, 2);
        for g in [cycle(4), complete_bipartite(2, 3), complete_bipartite(3, 3)] {
            assert_eq!(fvs_c3c5(&g).unwrap().cardinality, oracle_min_fvs(&g).unwrap().len());
        }
        assert_eq!(fvs_c3c5(&path(4)).unwrap().case_tag, CaseTag::Acyclic);
        assert!(matches!(fvs_c3c5(&cycle(5)), Err(Error::WrongSubclass(_))));
        assert!(matches!(fvs_c3c5(&cycle(6)), Err(Error::NotTwoK2Free(_))));
    }

    #[test]
    fn chain_check_witness_is_valid() {
        // 2K2 {0,3},{1,4} plus a path 3-2-4 keeps it bipartite and connected
        let g = Graph::from_edges(5, [(0, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        match check_c3c5_free(&g) {
            Err(Error::NotTwoK2Free(w)) => assert!(w.is_valid(&g)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn structure_on_small_members() {
        assert!(c3c5_structure_violations(&complete_bipartite(3, 4)).unwrap().is_empty());
        let c5 = c3c4_structure_violations(&cycle(5)).unwrap();
        assert!(c5.lines.is_empty() && c5.single_neighbour.is_empty());
        // in P4 the far end of the component has no neighbour in S = {1}
        let p4 = c3c4_structure_violations(&path(4)).unwrap();
        assert!(p4.lines.is_empty() && p4.single_neighbour.is_empty());
        assert_eq!(p4.single_neighbour_unrestricted.len(), 1);
    }
}

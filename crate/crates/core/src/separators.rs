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

//! Minimal vertex separators of 2K2-free graphs and the constrained minimum
//! separators (connected, stable, clique) derived from them.
//!
//! Every minimal separator of a connected 2K2-free graph is the neighbourhood
//! of a vertex that ends up as a trivial component, so the candidates are the
//! `n` neighbourhoods: `N(v)` is kept iff every trivial component of
//! `G \ N(v)` is adjacent to all of `N(v)`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::oracles;
use crate::recognition::{require_2k2_free, require_connected};

/// Graphs up to this order also get the literal proper-subset minimality check.
pub const LITERAL_CHECK_MAX_N: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorRecord {
    pub vertices: VertexSet,
    pub component_count: usize,
    pub connected: bool,
    pub stable: bool,
    pub clique: bool,
    /// Vertices whose open neighbourhood equals `vertices`.
    pub source_vertices: Vec<Vertex>,
}

/// `G \ S` is nonempty and disconnected.
pub fn is_separator(g: &Graph, s: &VertexSet) -> bool {
    if s.len() >= g.n() {
        return false;
    }
    let mut alive = BitSet::full(g.n());
    for v in s.iter() {
        alive.remove(v);
    }
    g.components_within(&alive).len() >= 2
}

/// Full-component criterion: `S` is a minimal separator iff at least two
/// components of `G \ S` have `S` as their whole neighbourhood.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    if s.len() >= g.n() {
        return false;
    }
    let n = g.n();
    let s_mask = s.to_bitset(n);
    let mut alive = BitSet::full(n);
    alive.difference_with(&s_mask);
    let components = g.components_within(&alive);
    if components.len() < 2 {
        return false;
    }
    let full = components
        .iter()
        .filter(|comp| {
            let mut reach = BitSet::new(n);
            for &x in comp.iter() {
                reach.union_with(g.row(x));
            }
            s_mask.is_subset(&reach)
        })
        .count();
    full >= 2
}

/// Literal definition: some proper subset of `S` (possibly empty) already separates `G`.
/// Exponential in `|S|`.
pub fn has_separating_proper_subset(g: &Graph, s: &VertexSet) -> bool {
    let members = s.as_slice();
    let k = members.len();
    assert!(k < usize::BITS as usize - 1, "subset scan over {k} vertices");
    (0..(1usize << k) - 1).any(|mask| {
        let sub: VertexSet = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        is_separator(g, &sub)
    })
}

/// Neighbourhood candidates inside the part induced by `alive`.
///
/// Returns `(separator, component count, generating vertices)` for every
/// accepted neighbourhood, in canonical order. Assumes the part is connected
/// and 2K2-free.
pub(crate) fn mvs_within(g: &Graph, alive: &BitSet) -> Vec<(VertexSet, usize, Vec<Vertex>)> {
    let members: Vec<Vertex> = alive.iter().collect();
    let size = members.len();
    let accept = |&v: &Vertex| -> Option<(VertexSet, usize, Vertex)> {
        let mut s = g.row(v).clone();
        s.intersect_with(alive);
        if s.count() + 1 == size {
            return None;
        }
        let mut rest = alive.clone();
        rest.difference_with(&s);
        let components = g.components_within(&rest);
        let universal = components
            .iter()
            .filter(|c| c.len() == 1)
            .all(|c| s.is_subset(g.row(c[0])));
        universal.then(|| (VertexSet::from_bitset(&s), components.len(), v))
    };
    let accepted: Vec<(VertexSet, usize, Vertex)> = if size >= 256 {
        members.par_iter().filter_map(accept).collect()
    } else {
        members.iter().filter_map(accept).collect()
    };
    let mut merged: HashMap<VertexSet, (usize, Vec<Vertex>)> = HashMap::new();
    for (s, count, v) in accepted {
        merged.entry(s).or_insert((count, Vec::new())).1.push(v);
    }
    let mut out: Vec<_> = merged
        .into_iter()
        .map(|(s, (count, mut sources))| {
            sources.sort_unstable();
            (s, count, sources)
        })
        .collect();
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

fn record(g: &Graph, vertices: VertexSet, component_count: usize, sources: Vec<Vertex>) -> SeparatorRecord {
    let class = g.classify_subset(&vertices).expect("separator is nonempty");
    SeparatorRecord {
        vertices,
        component_count,
        connected: class.connected,
        stable: class.independent,
        clique: class.clique,
        source_vertices: sources,
    }
}

fn check_input(g: &Graph) -> Result<()> {
    require_connected(g)?;
    if g.is_complete() {
        return Err(Error::Complete);
    }
    require_2k2_free(g)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MvsOptions {
    /// Treat every `N(v)` of a complete graph as a minimal separator, the
    /// convention some texts adopt for `K_n`. Such records report one
    /// component. Off by default: a complete graph has no separator.
    pub complete_graph_convention: bool,
}

/// All minimal vertex separators of a connected, non-complete, 2K2-free graph,
/// sorted by (cardinality, lexicographic).
pub fn enumerate_mvs(g: &Graph) -> Result<Vec<SeparatorRecord>> {
    enumerate_mvs_with(g, MvsOptions::default())
}

pub fn enumerate_mvs_with(g: &Graph, options: MvsOptions) -> Result<Vec<SeparatorRecord>> {
    if options.complete_graph_convention && g.is_complete() && g.n() >= 2 {
        return Ok(g
            .vertices()
            .map(|v| record(g, g.neighborhood(v), 1, vec![v]))
            .collect());
    }
    check_input(g)?;
    let found = mvs_within(g, &BitSet::full(g.n()));
    let mut records = Vec::with_capacity(found.len());
    for (s, count, sources) in found {
        let minimal = is_minimal_separator(g, &s)
            && (g.n() > LITERAL_CHECK_MAX_N || !has_separating_proper_subset(g, &s));
        if !minimal {
            return Err(Error::Finding {
                message: format!("accepted neighbourhood {s} is not a minimal separator"),
                graph: g.to_edge_list(),
            });
        }
        records.push(record(g, s, count, sources));
    }
    Ok(records)
}

/// Classification of an arbitrary separator.
pub fn classify_separator(g: &Graph, s: &VertexSet) -> Result<SeparatorRecord> {
    let split = g.components_after_removal(s)?;
    if split.components.len() < 2 {
        return Err(Error::NotASeparator);
    }
    let sources = g.vertices().filter(|&v| g.neighbors(v) == s.as_slice()).collect();
    Ok(record(g, s.clone(), split.components.len(), sources))
}

pub fn min_stable_separator(g: &Graph) -> Result<Option<SeparatorRecord>> {
    Ok(enumerate_mvs(g)?.into_iter().find(|r| r.stable))
}

pub fn min_clique_separator(g: &Graph) -> Result<Option<SeparatorRecord>> {
    Ok(enumerate_mvs(g)?.into_iter().find(|r| r.clique))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparatorMode {
    Paper,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// First connected separator among those leaving exactly two components.
    ConnectedMvsTwoComponents,
    /// First connected separator among those leaving more than two components.
    ConnectedMvsManyComponents,
    /// Smallest many-component separator plus one of its trivial components.
    AugmentedMvs,
    /// Some minimal separator plus one vertex that connects it.
    MvsPlusConnector,
    /// Brute-force search beat every structured candidate.
    ExhaustiveSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectedSeparatorAnswer {
    pub exists: bool,
    pub vertices: VertexSet,
    pub cardinality: usize,
    pub provenance: Option<Provenance>,
    /// Exhaustive mode only: the brute-force search found something smaller
    /// than every structured candidate.
    pub fallback_used: bool,
}

impl ConnectedSeparatorAnswer {
    fn found(vertices: VertexSet, provenance: Provenance) -> Self {
        ConnectedSeparatorAnswer {
            exists: true,
            cardinality: vertices.len(),
            vertices,
            provenance: Some(provenance),
            fallback_used: false,
        }
    }

    fn none() -> Self {
        ConnectedSeparatorAnswer {
            exists: false,
            vertices: VertexSet::new(),
            cardinality: 0,
            provenance: None,
            fallback_used: false,
        }
    }
}

fn is_connected_separator(g: &Graph, s: &VertexSet) -> bool {
    !s.is_empty()
        && is_separator(g, s)
        && g.classify_subset(s).map(|c| c.connected).unwrap_or(false)
}

/// Minimum connected vertex separator.
///
/// `Paper` splits the minimal separators into those leaving two components
/// (`two`) and those leaving more (`many`), takes the first connected member
/// of each, and compares them against `many[0]` plus one of its trivial
/// components. `Exhaustive` also tries every minimal separator plus one
/// connecting vertex and, for graphs of at most eighteen vertices, confirms
/// the result by brute force.
pub fn min_connected_separator(g: &Graph, mode: SeparatorMode) -> Result<ConnectedSeparatorAnswer> {
    let records = enumerate_mvs(g)?;
    let answer = match mode {
        SeparatorMode::Paper => paper_connected(g, &records)?,
        SeparatorMode::Exhaustive => exhaustive_connected(g, &records)?,
    };
    if answer.exists && !is_connected_separator(g, &answer.vertices) {
        return Err(Error::Finding {
            message: format!("{:?} is not a connected separator", answer.vertices),
            graph: g.to_edge_list(),
        });
    }
    Ok(answer)
}

fn paper_connected(g: &Graph, records: &[SeparatorRecord]) -> Result<ConnectedSeparatorAnswer> {
    // records are already in (cardinality, lexicographic) order
    let (two, many): (Vec<&SeparatorRecord>, Vec<&SeparatorRecord>) =
        records.iter().partition(|r| r.component_count == 2);
    let first_two = two.iter().find(|r| r.connected);
    let first_many = many.iter().find(|r| r.connected);

    let augmented = match many.first() {
        Some(b1) => {
            let split = g.components_after_removal(&b1.vertices)?;
            let u = split
                .trivial_vertices()
                .next()
                .expect("a minimal separator of a 2K2-free graph leaves a trivial component");
            let set = b1.vertices.union(&VertexSet::singleton(u));
            if !is_connected_separator(g, &set) {
                return Err(Error::Finding {
                    message: format!("augmented separator {set} is not a connected separator"),
                    graph: g.to_edge_list(),
                });
            }
            Some(set)
        }
        None => None,
    };
    let bound = augmented.as_ref().map(VertexSet::len);
    let beats_bound = |size: usize| bound.is_none_or(|b| size < b);

    use Provenance::*;
    let pick = |r: &SeparatorRecord, p| ConnectedSeparatorAnswer::found(r.vertices.clone(), p);
    let fallback = || match &augmented {
        Some(set) => ConnectedSeparatorAnswer::found(set.clone(), AugmentedMvs),
        None => ConnectedSeparatorAnswer::none(),
    };
    Ok(match (first_two, first_many) {
        (None, Some(b)) if beats_bound(b.vertices.len()) => pick(b, ConnectedMvsManyComponents),
        (Some(a), None) if beats_bound(a.vertices.len()) => pick(a, ConnectedMvsTwoComponents),
        (Some(a), Some(b)) => {
            let (ca, cb) = (a.vertices.len(), b.vertices.len());
            if ca < cb && beats_bound(ca) {
                pick(a, ConnectedMvsTwoComponents)
            } else if beats_bound(cb) {
                pick(b, ConnectedMvsManyComponents)
            } else {
                fallback()
            }
        }
        _ => fallback(),
    })
}

fn exhaustive_connected(g: &Graph, records: &[SeparatorRecord]) -> Result<ConnectedSeparatorAnswer> {
    let mut best: Option<(VertexSet, Provenance)> = None;
    let mut offer = |set: VertexSet, p: Provenance| {
        if best.as_ref().is_none_or(|(b, _)| set.canonical_cmp(b).is_lt()) {
            best = Some((set, p));
        }
    };
    for r in records {
        if r.connected {
            let p = if r.component_count == 2 {
                Provenance::ConnectedMvsTwoComponents
            } else {
                Provenance::ConnectedMvsManyComponents
            };
            offer(r.vertices.clone(), p);
        }
        for w in g.vertices().filter(|&w| !r.vertices.contains(w)) {
            let set = r.vertices.union(&VertexSet::singleton(w));
            if is_connected_separator(g, &set) {
                offer(set, Provenance::MvsPlusConnector);
            }
        }
    }
    let mut answer = match best {
        Some((set, p)) => ConnectedSeparatorAnswer::found(set, p),
        None => ConnectedSeparatorAnswer::none(),
    };
    if g.n() <= LITERAL_CHECK_MAX_N {
        if let Some(exact) = oracles::oracle_min_connected_separator(g)? {
            if !answer.exists || exact.len() < answer.cardinality {
                answer = ConnectedSeparatorAnswer::found(exact, Provenance::ExhaustiveSearch);
                answer.fallback_used = true;
            }
        }
    }
    Ok(answer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::*;

    fn sets(records: &[SeparatorRecord]) -> Vec<VertexSet> {
        records.iter().map(|r| r.vertices.clone()).collect()
    }

    fn diamond() -> Graph {
        // K4 minus the edge {2,3}
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let r = enumerate_mvs(&path(4)).unwrap();
        assert_eq!(sets(&r), vec![VertexSet::from([1]), VertexSet::from([2])]);
        assert!(r.iter().all(|r| r.component_count == 2));

        let r = enumerate_mvs(&cycle(4)).unwrap();
        assert_eq!(sets(&r), vec![VertexSet::from([0, 2]), VertexSet::from([1, 3])]);
        assert_eq!(r[0].source_vertices, vec![1, 3]);

        let r = enumerate_mvs(&cycle(5)).unwrap();
        assert_eq!(r.len(), 5);
        assert!(r.iter().all(|r| r.vertices.len() == 2 && r.stable));
    }

    #[test]
    fn enumerate_errors() {
        assert!(matches!(enumerate_mvs(&complete(4)), Err(Error::Complete)));
        assert!(matches!(enumerate_mvs(&path(5)), Err(Error::NotTwoK2Free(_))));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(enumerate_mvs(&two_edges), Err(Error::Disconnected)));
    }

    #[test]
    fn complete_graph_convention_flag() {
        let options = MvsOptions {
            complete_graph_convention: true,
        };
        let r = enumerate_mvs_with(&complete(3), options).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|r| r.component_count == 1 && r.clique));
    }

    #[test]
    fn classify_examples() {
        let r = classify_separator(&cycle(4), &VertexSet::from([1, 3])).unwrap();
        assert_eq!((r.component_count, r.connected, r.stable, r.clique), (2, false, true, false));
        let r = classify_separator(&star(3), &VertexSet::from([0])).unwrap();
        assert_eq!((r.component_count, r.connected, r.stable, r.clique), (3, true, true, true));
        let r = classify_separator(&path(5), &VertexSet::from([2])).unwrap();
        assert_eq!((r.component_count, r.connected, r.stable, r.clique), (2, true, true, true));
        assert!(matches!(
            classify_separator(&path(5), &VertexSet::from([0])),
            Err(Error::NotASeparator)
        ));
    }

    #[test]
    fn stable_and_clique_examples() {
        let s = min_stable_separator(&cycle(5)).unwrap().unwrap();
        assert!(s.stable && s.vertices.len() == 2);
        assert_eq!(min_stable_separator(&path(4)).unwrap().unwrap().vertices, VertexSet::from([1]));
        assert_eq!(min_stable_separator(&diamond()).unwrap(), None);

        assert_eq!(min_clique_separator(&path(4)).unwrap().unwrap().vertices, VertexSet::from([1]));
        assert_eq!(
            min_clique_separator(&diamond()).unwrap().unwrap().vertices,
            VertexSet::from([0, 1])
        );
        assert_eq!(min_clique_separator(&cycle(4)).unwrap(), None);
    }

    #[test]
    fn connected_examples() {
        for mode in [SeparatorMode::Paper, SeparatorMode::Exhaustive] {
            let a = min_connected_separator(&path(4), mode).unwrap();
            assert_eq!(a.vertices, VertexSet::from([1]));
            assert_eq!(a.provenance, Some(Provenance::ConnectedMvsTwoComponents));

            assert!(!min_connected_separator(&cycle(4), mode).unwrap().exists);

            let a = min_connected_separator(&star(4), mode).unwrap();
            assert_eq!((a.vertices.clone(), a.cardinality), (VertexSet::from([0]), 1));
            assert_eq!(a.provenance, Some(Provenance::ConnectedMvsManyComponents));
        }
    }

    #[test]
    fn literal_and_full_component_minimality_agree_on_small_sets() {
        let g = cycle(6);
        for mask in 1u32..(1 << 6) - 1 {
            let s: VertexSet = (0..6).filter(|v| mask >> v & 1 == 1).collect();
            let literal = is_separator(&g, &s) && !has_separating_proper_subset(&g, &s);
            assert_eq!(is_minimal_separator(&g, &s), literal, "{s}");
        }
    }
}

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

//! Maximal independent sets of connected 2K2-free graphs, with the vertex
//! covers and 3-colourings they determine.
//!
//! [`MisGenerator::Incremental`] adds the vertices one at a time. A maximal
//! independent set of the first `i` vertices either is one of the first
//! `i - 1` vertices, or is `(I \ N(v)) + v` for such a set `I`. Every prefix is
//! 2K2-free and so has O(n^2) maximal independent sets, which keeps the whole
//! pass polynomial.
//!
//! [`MisGenerator::AllSeparators`] splits the part at every minimal separator
//! `S`, whose trivial components `T` see all of `S`, and follows only the
//! non-trivial component, or `S` when there is none. It misses sets that meet
//! every minimal separator while some separator leaves a non-trivial
//! component, and is kept for comparison.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::rc::Rc;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{require_2k2_free, require_connected};
use crate::separators::mvs_within;

/// Parts this small are solved by a subset scan.
pub const SMALL_PART: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MISCollection {
    /// Sorted by cardinality descending, then lexicographically.
    pub sets: Vec<VertexSet>,
    pub graph_signature: String,
}

impl MISCollection {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

type Family = Rc<Vec<BitSet>>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MisGenerator {
    #[default]
    Incremental,
    AllSeparators,
}

struct Enumerator<'g> {
    g: &'g Graph,
    memo: HashMap<BitSet, Family>,
}

impl<'g> Enumerator<'g> {
    fn extend_within(&self, set: &mut BitSet, alive: &BitSet) {
        let mut blocked = BitSet::new(self.g.n());
        for v in set.iter() {
            blocked.union_with(self.g.row(v));
        }
        for v in alive.iter() {
            if !set.contains(v) && !blocked.contains(v) {
                set.insert(v);
                blocked.union_with(self.g.row(v));
            }
        }
    }

    fn scan_small(&self, alive: &BitSet) -> Vec<BitSet> {
        let members: Vec<Vertex> = alive.iter().collect();
        let k = members.len();
        let mut out = Vec::new();
        for mask in 0u32..1 << k {
            let picked = |i: usize| mask >> i & 1 == 1;
            let independent = (0..k).all(|i| {
                !picked(i) || (i + 1..k).all(|j| !picked(j) || !self.g.has_edge(members[i], members[j]))
            });
            if !independent {
                continue;
            }
            let maximal = (0..k).all(|i| {
                picked(i) || (0..k).any(|j| picked(j) && self.g.has_edge(members[i], members[j]))
            });
            if maximal {
                out.push(BitSet::from_indices(
                    self.g.n(),
                    (0..k).filter(|&i| picked(i)).map(|i| members[i]),
                ));
            }
        }
        out
    }

    fn is_clique(&self, alive: &BitSet) -> bool {
        let size = alive.count();
        alive.iter().all(|v| self.g.row(v).intersection_count(alive) + 1 == size)
    }

    /// Maximal independent sets of the part induced by `alive`.
    fn solve(&mut self, alive: &BitSet) -> Result<Family> {
        if let Some(found) = self.memo.get(alive) {
            return Ok(found.clone());
        }
        let result = Rc::new(self.solve_uncached(alive)?);
        self.memo.insert(alive.clone(), result.clone());
        Ok(result)
    }

    fn solve_uncached(&mut self, alive: &BitSet) -> Result<Vec<BitSet>> {
        let n = self.g.n();
        if alive.count() <= SMALL_PART {
            return Ok(self.scan_small(alive));
        }
        let components = self.g.components_within(alive);
        if components.len() > 1 {
            let mut product = vec![BitSet::new(n)];
            for comp in components {
                let family = self.solve(&BitSet::from_indices(n, comp))?;
                product = product
                    .iter()
                    .flat_map(|base| {
                        family.iter().map(move |part| {
                            let mut joined = base.clone();
                            joined.union_with(part);
                            joined
                        })
                    })
                    .collect();
            }
            return Ok(product);
        }
        if self.is_clique(alive) {
            return Ok(alive.iter().map(|v| BitSet::from_indices(n, [v])).collect());
        }
        self.walk_separators(alive)
    }

    fn walk_separators(&mut self, alive: &BitSet) -> Result<Vec<BitSet>> {
        let n = self.g.n();
        let separators = mvs_within(self.g, alive);
        if separators.is_empty() {
            return Err(Error::Finding {
                message: format!("connected non-complete part of {} vertices has no minimal separator", alive.count()),
                graph: self.g.to_edge_list(),
            });
        }
        let mut found: BTreeSet<Vec<Vertex>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut emit = |this: &Self, mut candidate: BitSet, out: &mut Vec<BitSet>| {
            this.extend_within(&mut candidate, alive);
            if found.insert(candidate.iter().collect()) {
                out.push(candidate);
            }
        };
        for (s, _, _) in separators {
            let s_mask = s.to_bitset(n);
            let mut rest = alive.clone();
            rest.difference_with(&s_mask);
            let mut trivial = BitSet::new(n);
            let mut big = None;
            for comp in self.g.components_within(&rest) {
                if comp.len() == 1 {
                    trivial.insert(comp[0]);
                } else {
                    big = Some(BitSet::from_indices(n, comp));
                }
            }
            match big {
                Some(g1) => {
                    for inner in self.solve(&g1)?.iter() {
                        let mut candidate = trivial.clone();
                        candidate.union_with(inner);
                        emit(self, candidate, &mut out);
                    }
                }
                None => {
                    emit(self, trivial, &mut out);
                    for inner in self.solve(&s_mask)?.iter() {
                        emit(self, inner.clone(), &mut out);
                    }
                }
            }
        }
        Ok(out)
    }
}

fn incremental(g: &Graph) -> Vec<BitSet> {
    let n = g.n();
    let mut prefix = BitSet::new(n);
    let mut family = vec![BitSet::new(n)];
    for v in g.vertices() {
        prefix.insert(v);
        let row = g.row(v);
        let mut seen = HashSet::new();
        let mut next = Vec::with_capacity(family.len() * 2);
        for set in family {
            if !set.intersects(row) {
                let mut grown = set;
                grown.insert(v);
                if seen.insert(grown.clone()) {
                    next.push(grown);
                }
                continue;
            }
            let mut swapped = set.clone();
            swapped.difference_with(row);
            swapped.insert(v);
            let maximal = prefix
                .iter()
                .all(|u| swapped.contains(u) || g.row(u).intersects(&swapped));
            if maximal && seen.insert(swapped.clone()) {
                next.push(swapped);
            }
            if seen.insert(set.clone()) {
                next.push(set);
            }
        }
        family = next;
    }
    family
}

fn is_maximal_independent(g: &Graph, set: &VertexSet) -> bool {
    let mask = set.to_bitset(g.n());
    let independent = set.iter().all(|v| !g.row(v).intersects(&mask));
    independent && g.vertices().all(|v| mask.contains(v) || g.row(v).intersects(&mask))
}

fn sort_family(sets: &mut [VertexSet]) {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
}

/// Every maximal independent set of a connected 2K2-free graph.
pub fn enumerate_mis(g: &Graph) -> Result<MISCollection> {
    enumerate_mis_with(g, MisGenerator::default())
}

/// As [`enumerate_mis`] with a chosen generator. Output of either generator is
/// verified member by member, so an incomplete generator yields a shorter,
/// still valid collection.
pub fn enumerate_mis_with(g: &Graph, generator: MisGenerator) -> Result<MISCollection> {
    require_connected(g)?;
    require_2k2_free(g)?;
    let family = match generator {
        MisGenerator::Incremental => incremental(g),
        MisGenerator::AllSeparators => {
            let mut enumerator = Enumerator { g, memo: HashMap::new() };
            enumerator.solve(&BitSet::full(g.n()))?.to_vec()
        }
    };
    let mut sets: Vec<VertexSet> = family.iter().map(VertexSet::from_bitset).collect();
    sort_family(&mut sets);
    sets.dedup();
    if let Some(bad) = sets.iter().find(|s| !is_maximal_independent(g, s)) {
        return Err(Error::Finding {
            message: format!("enumerated set {bad} is not a maximal independent set"),
            graph: g.to_edge_list(),
        });
    }
    Ok(MISCollection {
        sets,
        graph_signature: g.signature(),
    })
}

/// Largest maximal independent set; the lexicographically least among ties.
pub fn max_independent_set(g: &Graph) -> Result<VertexSet> {
    Ok(enumerate_mis(g)?.sets.swap_remove(0))
}

fn complement_cover(g: &Graph, independent: &VertexSet) -> Result<VertexSet> {
    let cover: VertexSet = g.vertices().filter(|&v| !independent.contains(v)).collect();
    if g.edges().all(|(u, v)| cover.contains(u) || cover.contains(v)) {
        Ok(cover)
    } else {
        Err(Error::Finding {
            message: format!("complement of {independent} misses an edge"),
            graph: g.to_edge_list(),
        })
    }
}

/// Minimal vertex covers, one per maximal independent set and in the same order.
pub fn enumerate_minimal_vertex_covers(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_mis(g)?
        .sets
        .iter()
        .map(|s| complement_cover(g, s))
        .collect()
}

pub fn min_vertex_cover(g: &Graph) -> Result<VertexSet> {
    complement_cover(g, &max_independent_set(g)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChromaticVerdict {
    #[serde(rename = "1-colorable")]
    OneColorable,
    #[serde(rename = "2-colorable")]
    TwoColorable,
    #[serde(rename = "3-colorable")]
    ThreeColorable,
    #[serde(rename = "not-3-colorable")]
    NotThreeColorable,
}

impl std::fmt::Display for ChromaticVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ChromaticVerdict::OneColorable => "1-colorable",
            ChromaticVerdict::TwoColorable => "2-colorable",
            ChromaticVerdict::ThreeColorable => "3-colorable",
            ChromaticVerdict::NotThreeColorable => "not-3-colorable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorResult {
    pub chromatic_verdict: ChromaticVerdict,
    /// Colour of each vertex, indexed by vertex id.
    pub coloring: Option<Vec<u8>>,
    /// The maximal independent set used as colour class 2.
    pub certificate_mis: Option<VertexSet>,
}

pub fn is_proper_coloring(g: &Graph, coloring: &[u8]) -> bool {
    coloring.len() == g.n() && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

/// Decides 3-colourability: either some colouring has a maximal independent
/// set as a colour class with a bipartite remainder, or none exists.
pub fn three_color(g: &Graph) -> Result<ColorResult> {
    require_connected(g)?;
    require_2k2_free(g)?;
    if g.m() == 0 {
        return Ok(ColorResult {
            chromatic_verdict: ChromaticVerdict::OneColorable,
            coloring: Some(vec![0; g.n()]),
            certificate_mis: None,
        });
    }
    if let Some(coloring) = g.two_coloring() {
        return Ok(ColorResult {
            chromatic_verdict: ChromaticVerdict::TwoColorable,
            coloring: Some(coloring),
            certificate_mis: None,
        });
    }
    for mis in enumerate_mis(g)?.sets {
        let rest = VertexSet::from_sorted(g.vertices().filter(|&v| !mis.contains(v)).collect());
        let sub = g.induced_subgraph(&rest);
        let Some(partial) = sub.graph.two_coloring() else {
            continue;
        };
        let mut coloring = vec![2u8; g.n()];
        for (local, &c) in partial.iter().enumerate() {
            coloring[sub.lift_vertex(local)] = c;
        }
        if !is_proper_coloring(g, &coloring) {
            return Err(Error::Finding {
                message: format!("colouring built around {mis} is not proper"),
                graph: g.to_edge_list(),
            });
        }
        return Ok(ColorResult {
            chromatic_verdict: ChromaticVerdict::ThreeColorable,
            coloring: Some(coloring),
            certificate_mis: Some(mis),
        });
    }
    Ok(ColorResult {
        chromatic_verdict: ChromaticVerdict::NotThreeColorable,
        coloring: None,
        certificate_mis: None,
    })
}

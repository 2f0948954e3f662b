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

//! Algorithm-versus-oracle comparison sweeps.
//!
//! Each `check_*` function compares one algorithm with its brute-force
//! counterpart on a single graph and returns a description of every
//! disagreement. [`run_verification`] applies them to a population of small
//! graphs and gathers a findings report.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feedback::{c3c4_structure_violations, c3c5_structure_violations, fvs_c3c4, fvs_c3c5};
use crate::generators::{enumerate_connected_chain_graphs, enumerate_connected_graphs, gen_2k2_free_rejection, gen_split_graph, GraphFilter};
use crate::graph::{Graph, VertexSet};
use crate::independent_sets::{enumerate_mis, is_proper_coloring, three_color, ChromaticVerdict};
use crate::oracles::{oracle_min_connected_separator, oracle_min_fvs, oracle_minimal_separators, oracle_mis, oracle_three_color};
use crate::recognition::{find_2k2_pair, find_forbidden_subgraph, has_induced_c4, has_triangle, min_degree_separator, test_2k2_structural};
use crate::separators::{enumerate_mvs, min_connected_separator, SeparatorMode};

fn describe(e: Error) -> Vec<String> {
    vec![format!("error: {e}")]
}

/// Structural recognition against the pairwise scan.
pub fn check_recognition(g: &Graph) -> Vec<String> {
    let expected = find_2k2_pair(g).is_none();
    match test_2k2_structural(g) {
        Err(e) => describe(e),
        Ok(r) => {
            let mut out = Vec::new();
            if r.is_2k2_free != expected {
                out.push(format!("structural verdict {} but pairwise scan {}", r.is_2k2_free, expected));
            }
            if let Some(w) = r.witness {
                if !w.is_valid(g) {
                    out.push(format!("invalid witness {w}"));
                }
            }
            out
        }
    }
}

/// Forbidden-shape search against the pairwise scan.
pub fn check_forbidden(g: &Graph) -> Vec<String> {
    let expected = find_2k2_pair(g).is_some();
    match find_forbidden_subgraph(g) {
        Err(e) => describe(e),
        Ok(found) => {
            let mut out = Vec::new();
            if found.is_some() != expected {
                out.push(format!("forbidden shape present: {}, 2K2 present: {expected}", found.is_some()));
            }
            if let Some(w) = found {
                if !w.is_valid(g) {
                    out.push(format!("invalid forbidden witness {w:?}"));
                }
            }
            out
        }
    }
}

/// Minimal separator enumeration against the subset oracle. Expects a
/// connected, non-complete, 2K2-free graph.
pub fn check_separators(g: &Graph) -> Vec<String> {
    let found = match enumerate_mvs(g) {
        Ok(r) => r.into_iter().map(|r| r.vertices).collect::<Vec<_>>(),
        Err(e) => return describe(e),
    };
    let expected = match oracle_minimal_separators(g) {
        Ok(s) => s,
        Err(e) => return describe(e),
    };
    if found == expected {
        Vec::new()
    } else {
        vec![format!("enumerated {} but oracle {}", family(&found), family(&expected))]
    }
}

pub fn check_min_degree(g: &Graph) -> Vec<String> {
    match (min_degree_separator(g), oracle_minimal_separators(g)) {
        (Ok(s), Ok(all)) if all.contains(&s) => Vec::new(),
        (Ok(s), Ok(_)) => vec![format!("{s} is not among the oracle's minimal separators")],
        (Err(e), _) | (_, Err(e)) => describe(e),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConnectedCheck {
    pub mismatches: Vec<String>,
    /// Paper mode and exhaustive mode differ in existence or cardinality.
    pub modes_disagree: bool,
    /// Exhaustive mode needed the brute-force search.
    pub fallback_used: bool,
}

pub fn check_connected(g: &Graph) -> ConnectedCheck {
    let mut out = ConnectedCheck::default();
    let exhaustive = min_connected_separator(g, SeparatorMode::Exhaustive);
    let paper = min_connected_separator(g, SeparatorMode::Paper);
    let oracle = oracle_min_connected_separator(g);
    match (exhaustive, paper, oracle) {
        (Ok(ex), Ok(pa), Ok(or)) => {
            let want = or.as_ref().map(VertexSet::len);
            let got = ex.exists.then_some(ex.cardinality);
            if got != want {
                out.mismatches.push(format!("exhaustive mode {got:?} but oracle {want:?}"));
            }
            out.fallback_used = ex.fallback_used;
            out.modes_disagree = (pa.exists, pa.cardinality) != (ex.exists, ex.cardinality);
        }
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => out.mismatches = describe(e),
    }
    out
}

fn family(sets: &[VertexSet]) -> String {
    let parts: Vec<String> = sets.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Maximal independent set enumeration against the subset oracle; also flags
/// families larger than `n^2`.
pub fn check_mis(g: &Graph) -> Vec<String> {
    let found = match enumerate_mis(g) {
        Ok(c) => c.sets,
        Err(e) => return describe(e),
    };
    let expected = match oracle_mis(g) {
        Ok(s) => s,
        Err(e) => return describe(e),
    };
    let mut out = Vec::new();
    let a: BTreeSet<_> = found.iter().collect();
    let b: BTreeSet<_> = expected.iter().collect();
    if a != b || found.len() != expected.len() {
        out.push(format!("enumerated {} but oracle {}", family(&found), family(&expected)));
    }
    if found.len() > g.n() * g.n() {
        out.push(format!("{} maximal independent sets exceed n^2 = {}", found.len(), g.n() * g.n()));
    }
    out
}

/// 3-colouring verdict against the assignment oracle.
pub fn check_coloring(g: &Graph) -> Vec<String> {
    let result = match three_color(g) {
        Ok(r) => r,
        Err(e) => return describe(e),
    };
    let oracle = match oracle_three_color(g) {
        Ok(c) => c,
        Err(e) => return describe(e),
    };
    let mut out = Vec::new();
    let colorable = result.chromatic_verdict != ChromaticVerdict::NotThreeColorable;
    if colorable != oracle.is_some() {
        out.push(format!("verdict {} but oracle colourable: {}", result.chromatic_verdict, oracle.is_some()));
    }
    if let Some(c) = &result.coloring {
        if !is_proper_coloring(g, c) {
            out.push(format!("colouring {c:?} is not proper"));
        }
    }
    out
}

/// Feedback vertex set of a connected (2K2, C3, C5)-free graph against the
/// subset oracle, plus the separator structure checks.
pub fn check_fvs_c3c5(g: &Graph) -> Vec<String> {
    let mut out = match (fvs_c3c5(g), oracle_min_fvs(g)) {
        (Ok(r), Ok(best)) if r.cardinality == best.len() => Vec::new(),
        (Ok(r), Ok(best)) => vec![format!(
            "formula gives {} ({:?}, {}) but minimum is {} ({best})",
            r.cardinality, r.case_tag, r.vertices, best.len()
        )],
        (Err(e), _) | (_, Err(e)) => describe(e),
    };
    match c3c5_structure_violations(g) {
        Ok(v) => out.extend(v),
        Err(e) => out.extend(describe(e)),
    }
    out
}

/// Feedback vertex set and structure checks for a connected (2K2, C3, C4)-free graph.
pub fn check_fvs_c3c4(g: &Graph) -> Vec<String> {
    let mut out = match (fvs_c3c4(g), oracle_min_fvs(g)) {
        (Ok(r), Ok(best)) if r.cardinality == best.len() => Vec::new(),
        (Ok(r), Ok(best)) => vec![format!("result {} but minimum is {}", r.cardinality, best.len())],
        (Err(e), _) | (_, Err(e)) => describe(e),
    };
    match c3c4_structure_violations(g) {
        Ok(v) => {
            out.extend(v.lines);
            out.extend(v.single_neighbour);
        }
        Err(e) => out.extend(describe(e)),
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Recognition,
    Forbidden,
    Separators,
    MinDegree,
    Connected,
    Mis,
    Coloring,
    Fvs,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Recognition,
        Suite::Forbidden,
        Suite::Separators,
        Suite::MinDegree,
        Suite::Connected,
        Suite::Mis,
        Suite::Coloring,
        Suite::Fvs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recognition => "recognition",
            Suite::Forbidden => "forbidden",
            Suite::Separators => "separators",
            Suite::MinDegree => "min-degree",
            Suite::Connected => "connected",
            Suite::Mis => "mis",
            Suite::Coloring => "coloring",
            Suite::Fvs => "fvs",
        }
    }

    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|s| s.name() == name).map(|&s| vec![s])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub message: String,
    /// Canonical edge list of the counterexample.
    pub graph: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub graphs: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    /// Counts that are reported but do not count as disagreements.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FindingsReport {
    pub max_n: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub total_disagreements: usize,
}

/// Largest order `verify` accepts; the colouring oracle caps it.
pub const VERIFY_MAX_N: usize = 12;
const RANDOM_PER_ORDER: usize = 40;

/// Connected graphs: all of them up to seven vertices, then seeded random
/// 2K2-free ones (split graphs and dense `G(n, p)` draws) up to `max_n`.
fn population(max_n: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(7) {
        out.extend(enumerate_connected_graphs(n, GraphFilter::default())?);
    }
    for n in 8..=max_n {
        for i in 0..RANDOM_PER_ORDER as u64 {
            let s = seed.wrapping_add(n as u64 * 1_000 + i);
            out.push(gen_split_graph(n, 0.5, 0.4, s)?);
            if let Some(g) = gen_2k2_free_rejection(n, 0.75, s, 200)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

fn is_free(g: &Graph) -> bool {
    find_2k2_pair(g).is_none()
}

pub fn run_verification(suites: &[Suite], max_n: usize, seed: u64) -> Result<FindingsReport> {
    if !(1..=VERIFY_MAX_N).contains(&max_n) {
        return Err(Error::InvalidParameter(format!("max-n must lie in 1..={VERIFY_MAX_N}, got {max_n}")));
    }
    let graphs = population(max_n, seed)?;
    let chains: Vec<Graph> = (1..=max_n.min(9))
        .map(enumerate_connected_chain_graphs)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut reports = Vec::new();
    for &suite in suites {
        let mut notes = Vec::new();
        let selected: Vec<&Graph> = match suite {
            Suite::Recognition | Suite::Forbidden => graphs.iter().collect(),
            Suite::Separators | Suite::MinDegree | Suite::Connected => {
                graphs.iter().filter(|g| !g.is_complete() && is_free(g)).collect()
            }
            Suite::Mis | Suite::Coloring => graphs.iter().filter(|g| is_free(g)).collect(),
            Suite::Fvs => chains
                .iter()
                .chain(graphs.iter().filter(|g| g.n() <= 9 && is_free(g) && !has_triangle(g) && !has_induced_c4(g)))
                .collect(),
        };
        let results: Vec<Vec<String>> = selected
            .par_iter()
            .map(|g| match suite {
                Suite::Recognition => check_recognition(g),
                Suite::Forbidden => check_forbidden(g),
                Suite::Separators => check_separators(g),
                Suite::MinDegree => check_min_degree(g),
                Suite::Connected => {
                    let c = check_connected(g);
                    let mut lines = c.mismatches;
                    if c.modes_disagree {
                        lines.push("note:modes".into());
                    }
                    if c.fallback_used {
                        lines.push("note:fallback".into());
                    }
                    lines
                }
                Suite::Mis => check_mis(g),
                Suite::Coloring => check_coloring(g),
                Suite::Fvs => {
                    if has_induced_c4(g) {
                        check_fvs_c3c5(g)
                    } else {
                        check_fvs_c3c4(g)
                    }
                }
            })
            .collect();
        let mut disagreements = Vec::new();
        let (mut modes, mut fallback) = (0, 0);
        for (g, lines) in selected.iter().zip(results) {
            for message in lines {
                match message.as_str() {
                    "note:modes" => modes += 1,
                    "note:fallback" => fallback += 1,
                    _ => disagreements.push(Disagreement {
                        message,
                        graph: g.to_edge_list(),
                    }),
                }
            }
        }
        if suite == Suite::Connected {
            notes.push(format!("paper mode differs from exhaustive mode on {modes} graphs"));
            notes.push(format!("exhaustive mode fell back to brute force on {fallback} graphs"));
        }
        let bad: BTreeSet<&str> = disagreements.iter().map(|d| d.graph.as_str()).collect();
        reports.push(SuiteReport {
            suite,
            graphs: selected.len(),
            agreements: selected.len() - bad.len(),
            disagreements,
            notes,
        });
    }
    let total_disagreements = reports.iter().map(|r| r.disagreements.len()).sum();
    Ok(FindingsReport {
        max_n,
        seed,
        suites: reports,
        total_disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let report = run_verification(&Suite::ALL, 5, 0).unwrap();
        for suite in &report.suites {
            assert!(suite.disagreements.is_empty(), "{:?}: {:?}", suite.suite, suite.disagreements);
            assert!(suite.graphs > 0);
        }
        assert_eq!(report.total_disagreements, 0);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(vec![s]));
        }
        assert_eq!(Suite::parse("all").unwrap().len(), 8);
        assert!(Suite::parse("nope").is_none());
    }
}

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

use serde::Serialize;
use serde_json::json;
use twok2::feedback::{classify_subclass, fvs_c3c4, fvs_c3c5, FvsResult};
use twok2::generators::{
    enumerate_connected_graphs, gen_2k2_free_rejection, gen_chain_graph, gen_split_graph, GraphFilter,
};
use twok2::graph::VertexSet;
use twok2::independent_sets::{
    enumerate_mis, enumerate_minimal_vertex_covers, max_independent_set, min_vertex_cover, three_color,
    ChromaticVerdict,
};
use twok2::oracles;
use twok2::recognition::{find_forbidden_subgraph, test_2k2_structural, TwoK2Witness};
use twok2::separators::{
    enumerate_mvs_with, min_clique_separator, min_connected_separator, min_stable_separator, MvsOptions,
    SeparatorMode, SeparatorRecord,
};
use twok2::verify::{run_verification, Suite};
use twok2::{bench, Error, Graph, Result};

use crate::report::Report;
use crate::{Command, FamilyArg, Input, ModeArg, OracleArg, SubclassArg};

pub fn name(command: &Command) -> &'static str {
    match command {
        Command::Recognize(_) => "recognize",
        Command::Separators { .. } => "separators",
        Command::MinConnectedSeparator { .. } => "min-connected-separator",
        Command::MinStableSeparator(_) => "min-stable-separator",
        Command::MinCliqueSeparator(_) => "min-clique-separator",
        Command::Mis(_) => "mis",
        Command::MaxIs(_) => "max-is",
        Command::MinVc { .. } => "min-vc",
        Command::ThreeColor(_) => "three-color",
        Command::Fvs { .. } => "fvs",
        Command::Generate { .. } => "generate",
        Command::Oracle { .. } => "oracle",
        Command::Verify { .. } => "verify",
        Command::Bench { .. } => "bench",
    }
}

pub fn input_of(command: &Command) -> Option<&Input> {
    match command {
        Command::Recognize(i)
        | Command::MinStableSeparator(i)
        | Command::MinCliqueSeparator(i)
        | Command::Mis(i)
        | Command::MaxIs(i)
        | Command::ThreeColor(i) => Some(i),
        Command::Separators { input, .. }
        | Command::MinConnectedSeparator { input, .. }
        | Command::MinVc { input, .. }
        | Command::Fvs { input, .. }
        | Command::Oracle { input, .. } => Some(input),
        Command::Generate { .. } | Command::Verify { .. } | Command::Bench { .. } => None,
    }
}

pub fn run(command: &Command, g: Option<&Graph>, seed: u64) -> Report {
    let name = name(command);
    let outcome = match (command, g) {
        (Command::Generate { .. } | Command::Verify { .. } | Command::Bench { .. }, _) => {
            run_without_graph(command, seed)
        }
        (_, Some(g)) => run_on_graph(command, g),
        (_, None) => unreachable!("graph commands always read input"),
    };
    outcome.unwrap_or_else(|e| Report::failure(name, g, &e))
}

fn set_list(sets: &[VertexSet]) -> Vec<String> {
    sets.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct ComponentVerdict {
    vertices: VertexSet,
    is_2k2_free: bool,
}

/// A disconnected graph is 2K2-free iff at most one component has an edge and
/// that component is 2K2-free.
fn recognize(g: &Graph) -> Result<Report> {
    let report = Report::new("recognize", Some(g));
    if g.is_connected() {
        let result = test_2k2_structural(g)?;
        let forbidden = find_forbidden_subgraph(g)?;
        let mut report = report.negative_if(!result.is_2k2_free);
        report = match &result.witness {
            None => report.line("2K2-free"),
            Some(w) => report.line(format!("not 2K2-free: witness {w}")),
        };
        if let Some(f) = &forbidden {
            report = report.line(format!("forbidden shape {:?} on {:?}", f.kind, f.vertices));
        }
        for t in &result.trace {
            report = report.line(format!(
                "  depth {} part {} separator {} condition {} holds {}",
                t.depth,
                t.part_size,
                t.separator,
                serde_json::to_value(t.condition).unwrap().as_str().unwrap_or_default(),
                t.holds
            ));
        }
        return Ok(report.result(json!({
            "is_2k2_free": result.is_2k2_free,
            "witness": result.witness,
            "forbidden_subgraph": forbidden,
            "trace": result.trace,
            "components": Value::Null,
        })));
    }
    let mut components = Vec::new();
    let mut witness: Option<TwoK2Witness> = None;
    let mut with_edges: Vec<(usize, usize)> = Vec::new();
    for comp in g.components_within(&twok2::bitset::BitSet::full(g.n())) {
        let set = VertexSet::from_sorted(comp);
        let sub = g.induced_subgraph(&set);
        let local = test_2k2_structural(&sub.graph)?;
        if witness.is_none() {
            if let Some(w) = local.witness {
                witness = Some(TwoK2Witness::new(
                    (sub.lift_vertex(w.a), sub.lift_vertex(w.b)),
                    (sub.lift_vertex(w.c), sub.lift_vertex(w.d)),
                ));
            }
        }
        if let Some((u, v)) = sub.graph.edges().next() {
            with_edges.push((sub.lift_vertex(u), sub.lift_vertex(v)));
        }
        components.push(ComponentVerdict {
            vertices: set,
            is_2k2_free: local.is_2k2_free,
        });
    }
    if witness.is_none() && with_edges.len() >= 2 {
        witness = Some(TwoK2Witness::new(with_edges[0], with_edges[1]));
    }
    let free = witness.is_none();
    let mut report = report.negative_if(!free);
    report = match &witness {
        None => report.line(format!("2K2-free ({} components)", components.len())),
        Some(w) => report.line(format!("not 2K2-free: witness {w}")),
    };
    for c in &components {
        report = report.line(format!("  component {} 2K2-free {}", c.vertices, c.is_2k2_free));
    }
    Ok(report.result(json!({
        "is_2k2_free": free,
        "witness": witness,
        "forbidden_subgraph": Value::Null,
        "trace": Vec::<()>::new(),
        "components": components,
    })))
}

use serde_json::Value;

fn separator_line(r: &SeparatorRecord) -> String {
    format!(
        "{} components {} connected {} stable {} clique {} sources {:?}",
        r.vertices, r.component_count, r.connected, r.stable, r.clique, r.source_vertices
    )
}

fn optional_separator(command: &str, g: &Graph, found: Option<SeparatorRecord>) -> Report {
    let report = Report::new(command, Some(g)).negative_if(found.is_none());
    match &found {
        Some(r) => report.line(separator_line(r)),
        None => report.line("none"),
    }
    .result(json!({ "exists": found.is_some(), "separator": found }))
}

fn fvs_report(g: &Graph, r: FvsResult) -> Report {
    let mut report = Report::new("fvs", Some(g)).line(format!(
        "feedback vertex set {} (size {}, case {})",
        r.vertices,
        r.cardinality,
        serde_json::to_value(r.case_tag).unwrap().as_str().unwrap_or_default()
    ));
    if let Some(i) = &r.ingredients {
        report = report.line(format!("  S {} T {} U {}", i.s, i.t, i.u));
    }
    report.result(r)
}

fn run_on_graph(command: &Command, g: &Graph) -> Result<Report> {
    Ok(match command {
        Command::Recognize(_) => recognize(g)?,
        Command::Separators { complete_convention, .. } => {
            let records = enumerate_mvs_with(
                g,
                MvsOptions {
                    complete_graph_convention: *complete_convention,
                },
            )?;
            let mut report = Report::new("separators", Some(g)).line(format!("{} minimal separators", records.len()));
            for r in &records {
                report = report.line(separator_line(r));
            }
            report.result(json!({ "count": records.len(), "separators": records }))
        }
        Command::MinConnectedSeparator { mode, .. } => {
            let mode = match mode {
                ModeArg::Paper => SeparatorMode::Paper,
                ModeArg::Exhaustive => SeparatorMode::Exhaustive,
            };
            let answer = min_connected_separator(g, mode)?;
            let line = if answer.exists {
                format!("{} (size {}, {:?})", answer.vertices, answer.cardinality, answer.provenance.unwrap())
            } else {
                "none".to_string()
            };
            Report::new("min-connected-separator", Some(g))
                .negative_if(!answer.exists)
                .line(line)
                .result(json!({ "mode": mode, "answer": answer }))
        }
        Command::MinStableSeparator(_) => optional_separator("min-stable-separator", g, min_stable_separator(g)?),
        Command::MinCliqueSeparator(_) => optional_separator("min-clique-separator", g, min_clique_separator(g)?),
        Command::Mis(_) => {
            let c = enumerate_mis(g)?;
            let mut report = Report::new("mis", Some(g)).line(format!("{} maximal independent sets", c.len()));
            for s in &c.sets {
                report = report.line(s.to_string());
            }
            report.result(json!({ "count": c.len(), "sets": c.sets, "verified": true }))
        }
        Command::MaxIs(_) => {
            let s = max_independent_set(g)?;
            Report::new("max-is", Some(g))
                .line(format!("{s} (size {})", s.len()))
                .result(json!({ "set": s, "cardinality": s.len(), "verified": true }))
        }
        Command::MinVc { all, .. } => {
            let cover = min_vertex_cover(g)?;
            let mut report = Report::new("min-vc", Some(g)).line(format!("{cover} (size {})", cover.len()));
            let covers = if *all { Some(enumerate_minimal_vertex_covers(g)?) } else { None };
            if let Some(cs) = &covers {
                report = report.line(format!("{} minimal vertex covers", cs.len()));
                for c in cs {
                    report = report.line(format!("  {c}"));
                }
            }
            report.result(json!({
                "cover": cover,
                "cardinality": cover.len(),
                "minimal_covers": covers.as_deref().map(set_list),
                "verified": true,
            }))
        }
        Command::ThreeColor(_) => {
            let r = three_color(g)?;
            let mut report = Report::new("three-color", Some(g))
                .negative_if(r.chromatic_verdict == ChromaticVerdict::NotThreeColorable)
                .line(r.chromatic_verdict.to_string());
            if let Some(c) = &r.coloring {
                report = report.line(format!("coloring {c:?}"));
            }
            if let Some(i) = &r.certificate_mis {
                report = report.line(format!("colour class from {i}"));
            }
            report.result(r)
        }
        Command::Fvs { subclass, .. } => {
            let r = match subclass {
                Some(SubclassArg::C3c4) => fvs_c3c4(g)?,
                Some(SubclassArg::C3c5) => fvs_c3c5(g)?,
                None => twok2::feedback::fvs(g)?,
            };
            let tag = classify_subclass(g)?;
            let mut report = fvs_report(g, r);
            let mut value = report.result.take();
            value["subclass"] = serde_json::to_value(tag).unwrap();
            report.result = value;
            report
        }
        Command::Oracle { which, .. } => oracle(*which, g)?,
        Command::Generate { .. } | Command::Verify { .. } | Command::Bench { .. } => unreachable!(),
    })
}

fn oracle(which: OracleArg, g: &Graph) -> Result<Report> {
    let report = Report::new("oracle", Some(g));
    Ok(match which {
        OracleArg::MinimalSeparators => {
            let sets = oracles::oracle_minimal_separators(g)?;
            report
                .line(set_list(&sets).join(" "))
                .result(json!({ "oracle": "minimal-separators", "sets": sets }))
        }
        OracleArg::Mis => {
            let sets = oracles::oracle_mis(g)?;
            report
                .line(set_list(&sets).join(" "))
                .result(json!({ "oracle": "mis", "sets": sets }))
        }
        OracleArg::MinFvs => {
            let set = oracles::oracle_min_fvs(g)?;
            report
                .line(set.to_string())
                .result(json!({ "oracle": "min-fvs", "set": set, "cardinality": set.len() }))
        }
        OracleArg::MinConnectedSeparator => {
            let set = oracles::oracle_min_connected_separator(g)?;
            report
                .negative_if(set.is_none())
                .line(set.as_ref().map_or("none".to_string(), ToString::to_string))
                .result(json!({ "oracle": "min-connected-separator", "set": set }))
        }
        OracleArg::ThreeColor => {
            let coloring = oracles::oracle_three_color(g)?;
            report
                .negative_if(coloring.is_none())
                .line(coloring.as_ref().map_or("none".to_string(), |c| format!("{c:?}")))
                .result(json!({ "oracle": "three-color", "coloring": coloring }))
        }
    })
}

fn run_without_graph(command: &Command, seed: u64) -> Result<Report> {
    Ok(match command {
        Command::Generate {
            family,
            n,
            clique_fraction,
            p,
            max_tries,
            two_k2_free,
        } => {
            let graphs: Vec<Graph> = match family {
                FamilyArg::Split => vec![gen_split_graph(*n, *clique_fraction, *p, seed)?],
                FamilyArg::Rejection => gen_2k2_free_rejection(*n, *p, seed, *max_tries)?.into_iter().collect(),
                FamilyArg::Chain => {
                    if *n < 2 {
                        return Err(Error::InvalidParameter("chain graphs need n >= 2".into()));
                    }
                    let left = n / 2;
                    vec![gen_chain_graph(left, n - left, n - left, seed)?]
                }
                FamilyArg::Exhaustive => enumerate_connected_graphs(
                    *n,
                    GraphFilter {
                        two_k2_free: *two_k2_free,
                        ..GraphFilter::default()
                    },
                )?
                .collect(),
            };
            let single = graphs.len() == 1 && *family != FamilyArg::Exhaustive;
            let mut report = Report::new("generate", if single { graphs.first() } else { None })
                .negative_if(graphs.is_empty());
            for (i, g) in graphs.iter().enumerate() {
                if !single {
                    report = report.line(format!("# graph {i}"));
                }
                report = report.line(g.to_edge_list().trim_end().to_string());
            }
            let docs: Vec<_> = graphs
                .iter()
                .map(|g| json!({ "signature": g.signature(), "edge_list": g.to_edge_list() }))
                .collect();
            report.result(json!({ "count": graphs.len(), "graphs": docs }))
        }
        Command::Verify { suite, max_n } => {
            let suites = Suite::parse(suite)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {suite:?}")))?;
            let findings = run_verification(&suites, *max_n, seed)?;
            let mut report = Report::new("verify", None).negative_if(findings.total_disagreements > 0);
            for s in &findings.suites {
                report = report.line(format!(
                    "{:<12} graphs {:>8} agreements {:>8} disagreements {}",
                    s.suite.name(),
                    s.graphs,
                    s.agreements,
                    s.disagreements.len()
                ));
                for note in &s.notes {
                    report = report.line(format!("  {note}"));
                }
                for d in s.disagreements.iter().take(5) {
                    report = report.line(format!("  {}: {}", d.message, d.graph.replace('\n', " | ")));
                }
            }
            report.result(findings)
        }
        Command::Bench { target, sizes, runs } => {
            let target = bench::BenchTarget::parse(target)?;
            let rows = bench::bench(target, sizes, seed, *runs)?;
            let mut report = Report::new("bench", None).line(format!("{:>8} {:>10} {:>12} {:>8}", "n", "m", "median_s", "ratio"));
            for r in &rows {
                report = report.line(format!(
                    "{:>8} {:>10} {:>12.6} {:>8}",
                    r.n,
                    r.m,
                    r.median_seconds,
                    r.ratio.map_or("-".to_string(), |x| format!("{x:.2}"))
                ));
            }
            report.result(json!({ "target": target, "seed": seed, "rows": rows }))
        }
        _ => unreachable!("graph commands are handled in run_on_graph"),
    })
}

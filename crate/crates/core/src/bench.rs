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

//! Wall-clock timing tables for the main algorithms.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::feedback::fvs_c3c5;
use crate::generators::{gen_chain_graph, gen_split_graph};
use crate::graph::Graph;
use crate::independent_sets::enumerate_mis;
use crate::recognition::test_2k2_structural;
use crate::separators::{enumerate_mvs, min_connected_separator, SeparatorMode};

pub const MIN_RUNS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchTarget {
    EnumerateMvs,
    Test2k2Structural,
    MinConnectedSeparator,
    EnumerateMis,
    FvsC3c5,
}

impl BenchTarget {
    pub const ALL: [BenchTarget; 5] = [
        BenchTarget::EnumerateMvs,
        BenchTarget::Test2k2Structural,
        BenchTarget::MinConnectedSeparator,
        BenchTarget::EnumerateMis,
        BenchTarget::FvsC3c5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchTarget::EnumerateMvs => "enumerate_mvs",
            BenchTarget::Test2k2Structural => "test_2k2_structural",
            BenchTarget::MinConnectedSeparator => "min_connected_separator",
            BenchTarget::EnumerateMis => "enumerate_mis",
            BenchTarget::FvsC3c5 => "fvs_c3c5",
        }
    }

    pub fn parse(name: &str) -> Result<BenchTarget> {
        BenchTarget::ALL
            .into_iter()
            .find(|t| t.name() == name)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown bench target {name:?}")))
    }

    /// Split graphs with half the vertices in the clique, except for
    /// `fvs_c3c5`, which gets a chain graph split evenly between the sides.
    pub fn instance(self, n: usize, seed: u64) -> Result<Graph> {
        match self {
            BenchTarget::FvsC3c5 => {
                let left = n / 2;
                gen_chain_graph(left, n - left, ((n - left) / 8).max(1), seed)
            }
            _ => gen_split_graph(n, 0.5, 0.1, seed),
        }
    }

    fn run(self, g: &Graph) -> Result<()> {
        match self {
            BenchTarget::EnumerateMvs => enumerate_mvs(g).map(drop),
            BenchTarget::Test2k2Structural => test_2k2_structural(g).map(drop),
            BenchTarget::MinConnectedSeparator => min_connected_separator(g, SeparatorMode::Paper).map(drop),
            BenchTarget::EnumerateMis => enumerate_mis(g).map(drop),
            BenchTarget::FvsC3c5 => fvs_c3c5(g).map(drop),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub runs: usize,
    pub median_seconds: f64,
    /// Median over the previous row's median.
    pub ratio: Option<f64>,
}

pub fn median(samples: &mut [f64]) -> f64 {
    samples.sort_by(f64::total_cmp);
    let k = samples.len();
    if k % 2 == 1 {
        samples[k / 2]
    } else {
        (samples[k / 2 - 1] + samples[k / 2]) / 2.0
    }
}

pub fn bench(target: BenchTarget, sizes: &[usize], seed: u64, runs: usize) -> Result<Vec<BenchRow>> {
    let runs = runs.max(MIN_RUNS);
    let mut rows: Vec<BenchRow> = Vec::new();
    for &n in sizes {
        let g = target.instance(n, seed)?;
        let mut samples = Vec::with_capacity(runs);
        for _ in 0..runs {
            let start = Instant::now();
            target.run(&g)?;
            samples.push(start.elapsed().as_secs_f64());
        }
        let median_seconds = median(&mut samples);
        let ratio = rows.last().map(|prev| median_seconds / prev.median_seconds);
        rows.push(BenchRow {
            n,
            m: g.m(),
            runs,
            median_seconds,
            ratio,
        });
    }
    Ok(rows)
}

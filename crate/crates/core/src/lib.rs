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

//! Algorithms for 2K2-free graphs built on minimal vertex separators:
//! recognition with certificates, separator enumeration, constrained
//! separators, maximal independent sets, 3-colouring and feedback vertex sets
//! for two subclasses. Each algorithm has a brute-force counterpart in
//! [`oracles`] for cross-checking on small graphs.

pub mod bench;
pub mod bitset;
pub mod error;
pub mod feedback;
pub mod generators;
pub mod graph;
pub mod independent_sets;
pub mod oracles;
pub mod recognition;
pub mod separators;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};

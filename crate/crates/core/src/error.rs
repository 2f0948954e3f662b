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

use thiserror::Error;

use crate::feedback::SubclassTag;
use crate::graph::ParseError;
use crate::recognition::TwoK2Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("removing the set leaves no vertices")]
    EmptyRemainder,
    #[error("vertex {0} belongs to the set it is tested against")]
    VertexInSet(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete and has no vertex separator")]
    Complete,
    #[error("graph is not 2K2-free: {0}")]
    NotTwoK2Free(TwoK2Witness),
    #[error("vertex set does not separate the graph")]
    NotASeparator,
    #[error("graph has {n} vertices but this routine is capped at {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is {0}, which this routine does not accept")]
    WrongSubclass(SubclassTag),
    /// A proven structural claim failed on a concrete graph. `graph` holds the
    /// canonical edge list so the counterexample can be replayed.
    #[error("finding: {message}")]
    Finding { message: String, graph: String },
}

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

//! The report envelope shared by every command.

use serde::Serialize;
use serde_json::Value;
use twok2::{Error, Graph};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Exit 0.
    Computed,
    /// Exit 1: the property asked about does not hold.
    Negative,
    /// Exit 2.
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Computed => 0,
            Status::Negative => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: String,
    pub graph_signature: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub status: Status,
    pub result: Value,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str, graph: Option<&Graph>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION,
            command: command.to_string(),
            graph_signature: graph.map(Graph::signature),
            n: graph.map(Graph::n),
            m: graph.map(Graph::m),
            status: Status::Computed,
            result: Value::Null,
            text: Vec::new(),
        }
    }

    pub fn result(mut self, value: impl Serialize) -> Report {
        self.result = serde_json::to_value(value).expect("report values serialize");
        self
    }

    pub fn negative_if(mut self, negative: bool) -> Report {
        if negative {
            self.status = Status::Negative;
        }
        self
    }

    pub fn line(mut self, line: impl Into<String>) -> Report {
        self.text.push(line.into());
        self
    }

    pub fn failure(command: &str, graph: Option<&Graph>, error: &Error) -> Report {
        let mut report = Report::new(command, graph);
        report.status = Status::Error;
        let mut detail = serde_json::json!({
            "kind": error_kind(error),
            "message": error.to_string(),
        });
        match error {
            Error::NotTwoK2Free(w) => detail["witness"] = serde_json::to_value(w).unwrap(),
            Error::Finding { graph, .. } => detail["graph"] = Value::String(graph.clone()),
            Error::WrongSubclass(tag) => detail["subclass"] = serde_json::to_value(tag).unwrap(),
            _ => {}
        }
        report.result = serde_json::json!({ "error": detail });
        report.text.push(format!("error: {error}"));
        report
    }
}

pub fn error_kind(error: &Error) -> &'static str {
    match error {
        Error::Parse(_) => "parse",
        Error::VertexOutOfRange { .. } => "vertex-out-of-range",
        Error::SelfLoop(_) => "self-loop",
        Error::DuplicateEdge(..) => "duplicate-edge",
        Error::EmptyRemainder => "empty-remainder",
        Error::VertexInSet(_) => "vertex-in-set",
        Error::NotAnEdge(..) => "not-an-edge",
        Error::EmptySet => "empty-set",
        Error::Disconnected => "disconnected",
        Error::Complete => "complete",
        Error::NotTwoK2Free(_) => "not-2k2-free",
        Error::NotASeparator => "not-a-separator",
        Error::TooLarge { .. } => "too-large",
        Error::InvalidParameter(_) => "invalid-parameter",
        Error::WrongSubclass(_) => "wrong-subclass",
        Error::Finding { .. } => "finding",
    }
}

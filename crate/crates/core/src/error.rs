// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use thiserror::Error;

use crate::graph::NodeId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node id {node} out of range 1..={n}")]
    NodeOutOfRange { node: NodeId, n: usize },

    #[error("edge {{{x},{y}}} has invalid conductance {c} (must be finite and > 0)")]
    InvalidConductance { x: NodeId, y: NodeId, c: f64 },

    #[error("self-loop at node {node} but the graph does not allow self-loops")]
    SelfLoopNotAllowed { node: NodeId },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "graph is disconnected ({components} components); random walks need a connected graph"
    )]
    Disconnected { components: usize },

    #[error("graph contains self-loops; strip them before running walks or electrical solves")]
    SelfLoopsPresent,

    #[error("graph has {n} nodes, above the dense solver ceiling of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("linear system is singular")]
    Singular,

    #[error("node {node} has non-integer degree {degree}; histograms need unweighted or multiplicity-weighted graphs (use weight quantiles instead)")]
    NonIntegerDegree { node: NodeId, degree: f64 },

    #[error("empty tail: no degrees >= k_min = {k_min}")]
    EmptyTail { k_min: u64 },

    #[error("tail above k_min = {k_min} has {n_tail} sample(s); at least 2 are needed")]
    ShortTail { k_min: u64, n_tail: u64 },

    #[error("degenerate tail: every degree >= k_min equals k_min = {k_min}")]
    DegenerateTail { k_min: u64 },

    #[error("record {record}: invalid residue {residue:?} at position {position}")]
    InvalidResidue {
        record: String,
        position: usize,
        residue: char,
    },

    #[error("no sequences found in input")]
    EmptyInput,
}

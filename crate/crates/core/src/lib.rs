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

//! Random graph models and the analytic laws that go with them.
//!
//! The crate is organised around [`WeightedGraph`], an immutable edge multiset
//! over nodes `1..=n`. Around it sit
//!
//! * [`random_gen`]: seeded Erdős–Rényi and preferential attachment generators,
//! * [`subgraph`]: edge-Bernoulli, uniform node and Bernoulli node sampling,
//! * [`degree_stats`]: degree histograms, power-law fitting, the closed-form
//!   preferential attachment laws and chi-square goodness of fit,
//! * [`walks`]: hitting times, commute times, potentials, effective resistance
//!   and Monte Carlo walks on weighted graphs,
//! * [`protein`]: mutation networks over protein sequences.
//!
//! Every stochastic routine takes an explicit `u64` seed and is deterministic
//! given that seed (see [`rng`]).

pub mod degree_stats;
pub mod error;
pub mod graph;
pub mod io;
pub mod protein;
pub mod random_gen;
pub mod rng;
pub mod subgraph;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{Edge, NodeId, NodeWeight, WeightedGraph};

/// Version tag carried by every JSON document this crate family emits.
pub const JSON_SCHEMA: &str = "graphlab/v1";

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

use crate::error::{Error, Result};
use crate::graph::{NodeId, WeightedGraph};

/// Row-stochastic walk `p_xy = c_xy / mu_x` on a connected loop-free graph.
#[derive(Debug, Clone)]
pub struct TransitionModel {
    n: usize,
    neighbors: Vec<Vec<(NodeId, f64)>>,
    mu: Vec<f64>,
}

impl TransitionModel {
    pub fn new(g: &WeightedGraph) -> Result<Self> {
        if g.has_self_loops() {
            return Err(Error::SelfLoopsPresent);
        }
        if g.n() < 2 {
            return Err(Error::InvalidParameter(
                "random walks need at least two nodes".into(),
            ));
        }
        let components = g.components().len();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        let adjacency = g.adjacency();
        let neighbors: Vec<Vec<(NodeId, f64)>> = (0..=g.n())
            .map(|x| {
                if x == 0 {
                    Vec::new()
                } else {
                    adjacency.neighbors(x).to_vec()
                }
            })
            .collect();
        let mu = neighbors
            .iter()
            .map(|list| list.iter().map(|&(_, c)| c).sum())
            .collect();
        Ok(TransitionModel {
            n: g.n(),
            neighbors,
            mu,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self, x: NodeId) -> f64 {
        self.mu[x]
    }

    pub fn total_weight(&self) -> f64 {
        self.mu[1..].iter().sum()
    }

    /// Merged `(neighbour, conductance)` pairs of `x`.
    pub fn neighbors(&self, x: NodeId) -> &[(NodeId, f64)] {
        &self.neighbors[x]
    }

    pub fn conductance(&self, x: NodeId, y: NodeId) -> f64 {
        let list = &self.neighbors[x];
        list.binary_search_by_key(&y, |&(z, _)| z)
            .map(|i| list[i].1)
            .unwrap_or(0.0)
    }

    pub fn p(&self, x: NodeId, y: NodeId) -> f64 {
        self.conductance(x, y) / self.mu[x]
    }

    /// Non-zero entries `(y, p_xy)` of row `x`.
    pub fn row(&self, x: NodeId) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        let mu = self.mu[x];
        self.neighbors[x].iter().map(move |&(y, c)| (y, c / mu))
    }

    pub(crate) fn check_node(&self, x: NodeId) -> Result<()> {
        if x == 0 || x > self.n {
            Err(Error::NodeOutOfRange { node: x, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_dense(&self) -> Result<()> {
        if self.n > super::MAX_DENSE_NODES {
            Err(Error::TooLarge {
                n: self.n,
                max: super::MAX_DENSE_NODES,
            })
        } else {
            Ok(())
        }
    }
}

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

//! Subgraph construction by edge deletion and node deletion.
//!
//! Node samplers relabel the surviving nodes `1..=k` in increasing order of
//! their original id and report the original ids in `kept`. Conductances of
//! surviving edges are left untouched.

use rand::Rng;

use crate::degree_stats::binomial_pmf;
use crate::error::{Error, Result};
use crate::graph::{NodeId, WeightedGraph};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SamplerKind {
    EdgeBernoulli { q: f64 },
    NodeUniform { keep: usize },
    NodeBernoulli { q: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerSpec {
    pub kind: SamplerKind,
    pub seed: u64,
}

/// Output of a sampler. `kept[new_id - 1]` is the original id.
#[derive(Debug, Clone, PartialEq)]
pub struct Subgraph {
    pub graph: WeightedGraph,
    pub kept: Vec<NodeId>,
}

impl SamplerSpec {
    pub fn apply(&self, g: &WeightedGraph) -> Result<Subgraph> {
        match self.kind {
            SamplerKind::EdgeBernoulli { q } => Ok(Subgraph {
                graph: sample_edges(g, q, self.seed)?,
                kept: (1..=g.n()).collect(),
            }),
            SamplerKind::NodeUniform { keep } => sample_nodes_uniform(g, keep, self.seed),
            SamplerKind::NodeBernoulli { q } => sample_nodes_bernoulli(g, q, self.seed),
        }
    }
}

fn check_probability(q: f64) -> Result<()> {
    if (0.0..=1.0).contains(&q) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "probability {q} outside [0, 1]"
        )))
    }
}

/// Keep every edge record independently with probability `q`; all nodes stay.
pub fn sample_edges(g: &WeightedGraph, q: f64, seed: u64) -> Result<WeightedGraph> {
    check_probability(q)?;
    let mut rng = rng::from_seed(seed);
    let edges = g
        .edges()
        .iter()
        .filter(|_| rng.random_bool(q))
        .copied()
        .collect();
    Ok(WeightedGraph::from_trusted(
        g.n(),
        edges,
        g.allows_self_loops(),
    ))
}

/// Keep a uniformly random `keep`-subset of nodes (partial Fisher–Yates).
pub fn sample_nodes_uniform(g: &WeightedGraph, keep: usize, seed: u64) -> Result<Subgraph> {
    let n = g.n();
    if keep > n {
        return Err(Error::InvalidParameter(format!(
            "cannot keep {keep} nodes of a graph with {n}"
        )));
    }
    let mut rng = rng::from_seed(seed);
    let mut ids: Vec<NodeId> = (1..=n).collect();
    for i in 0..keep {
        let j = rng.random_range(i..n);
        ids.swap(i, j);
    }
    ids.truncate(keep);
    ids.sort_unstable();
    Ok(induced(g, ids))
}

/// Keep every node independently with probability `q`.
pub fn sample_nodes_bernoulli(g: &WeightedGraph, q: f64, seed: u64) -> Result<Subgraph> {
    check_probability(q)?;
    let mut rng = rng::from_seed(seed);
    let kept = (1..=g.n()).filter(|_| rng.random_bool(q)).collect();
    Ok(induced(g, kept))
}

/// Induced subgraph on the sorted id list `kept`.
pub fn induced(g: &WeightedGraph, kept: Vec<NodeId>) -> Subgraph {
    let mut new_id = vec![0usize; g.n() + 1];
    for (i, &old) in kept.iter().enumerate() {
        new_id[old] = i + 1;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| new_id[e.x] != 0 && new_id[e.y] != 0)
        .map(|e| {
            let (a, b) = (new_id[e.x], new_id[e.y]);
            crate::graph::Edge {
                x: a.min(b),
                y: a.max(b),
                c: e.c,
            }
        })
        .collect();
    Subgraph {
        graph: WeightedGraph::from_trusted(kept.len(), edges, g.allows_self_loops()),
        kept,
    }
}

/// `max_l |Bin(m-1, p)(l) - Bin(n-1, p m / n)(l)|`: how far the degree laws of
/// the two node samplers on `G(n, p)` drift apart when `keep = m` and
/// `q = m / n`.
pub fn node_sampler_law_deviation(n: usize, p: f64, m: usize) -> Result<f64> {
    if m < 1 || m > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let q = m as f64 / n as f64;
    let mut worst: f64 = 0.0;
    for l in 0..n as u64 {
        let a = if l < m as u64 {
            binomial_pmf(m as u64 - 1, p, l)?
        } else {
            0.0
        };
        let b = binomial_pmf(n as u64 - 1, p * q, l)?;
        worst = worst.max((a - b).abs());
    }
    Ok(worst)
}

/// [`node_sampler_law_deviation`] for every `m` in `1..=n`.
pub fn node_sampler_deviation_curve(n: usize, p: f64) -> Result<Vec<(usize, f64)>> {
    (1..=n)
        .map(|m| node_sampler_law_deviation(n, p, m).map(|d| (m, d)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_graph() -> WeightedGraph {
        WeightedGraph::from_edges(
            5,
            [
                (1, 2, 1.0),
                (2, 3, 2.0),
                (3, 4, 1.0),
                (4, 5, 0.5),
                (1, 5, 1.0),
                (2, 4, 3.0),
            ],
            false,
        )
        .unwrap()
    }

    #[test]
    fn edge_sampler_extremes() {
        let g = sample_graph();
        assert_eq!(sample_edges(&g, 1.0, 3).unwrap(), g);
        let none = sample_edges(&g, 0.0, 3).unwrap();
        assert_eq!(none.n(), 5);
        assert_eq!(none.edge_count(), 0);
        assert!(sample_edges(&g, -0.1, 3).is_err());
    }

    #[test]
    fn node_uniform_extremes() {
        let g = sample_graph();
        let all = sample_nodes_uniform(&g, 5, 11).unwrap();
        assert_eq!(all.graph, g);
        assert_eq!(all.kept, vec![1, 2, 3, 4, 5]);
        let none = sample_nodes_uniform(&g, 0, 11).unwrap();
        assert_eq!(none.graph.n(), 0);
        assert_eq!(none.graph.edge_count(), 0);
        assert!(sample_nodes_uniform(&g, 6, 11).is_err());
    }

    #[test]
    fn node_bernoulli_full_keep() {
        let g = sample_graph();
        let all = sample_nodes_bernoulli(&g, 1.0, 2).unwrap();
        assert_eq!(all.graph, g);
    }

    #[test]
    fn induced_keeps_weights_and_relabels() {
        let g = sample_graph();
        let sub = induced(&g, vec![2, 3, 4]);
        let recs: Vec<_> = sub.graph.edges().iter().map(|e| (e.x, e.y, e.c)).collect();
        assert_eq!(recs, vec![(1, 2, 2.0), (2, 3, 1.0), (1, 3, 3.0)]);
    }

    #[test]
    fn spec_dispatch() {
        let g = sample_graph();
        let spec = SamplerSpec {
            kind: SamplerKind::NodeUniform { keep: 3 },
            seed: 4,
        };
        let sub = spec.apply(&g).unwrap();
        assert_eq!(sub.kept.len(), 3);
        assert_eq!(sub, sample_nodes_uniform(&g, 3, 4).unwrap());
    }

    #[test]
    fn deviation_vanishes_when_keeping_everything() {
        assert!(node_sampler_law_deviation(50, 0.1, 50).unwrap() < 1e-15);
        assert!(node_sampler_law_deviation(50, 0.1, 0).is_err());
    }
}

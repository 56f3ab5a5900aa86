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

//! Weighted undirected graphs on the node set `1..=n`.
//!
//! A [`WeightedGraph`] is an immutable multiset of undirected edge records
//! `{x, y}` with conductance `c > 0`. Parallel records are allowed; they are the
//! way the generators keep edge multiplicity countable. Analyses that want the
//! weighted (merged) view go through [`WeightedGraph::adjacency`], where
//! parallel conductances are summed.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// 1-based node identifier.
pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub x: NodeId,
    pub y: NodeId,
    pub c: f64,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.x == self.y
    }

    /// Resistance `1/c`.
    pub fn resistance(&self) -> f64 {
        1.0 / self.c
    }
}

/// Generalized degrees `mu_x`, indexed by node id (slot 0 unused).
#[derive(Debug, Clone, PartialEq)]
pub struct NodeWeight {
    mu: Vec<f64>,
}

impl NodeWeight {
    pub fn get(&self, x: NodeId) -> f64 {
        self.mu[x]
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        self.mu.iter().copied().enumerate().skip(1)
    }

    pub fn total(&self) -> f64 {
        self.mu[1..].iter().sum()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.mu[1..]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    allows_self_loops: bool,
}

impl WeightedGraph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        WeightedGraph {
            n,
            edges: Vec::new(),
            allows_self_loops: false,
        }
    }

    /// Build a graph from `(x, y, c)` records, validating ids, conductances
    /// and the self-loop flag. Records are stored with `x <= y`.
    pub fn from_edges<I>(n: usize, edges: I, allows_self_loops: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId, f64)>,
    {
        let edges = edges
            .into_iter()
            .map(|(x, y, c)| {
                for node in [x, y] {
                    if node == 0 || node > n {
                        return Err(Error::NodeOutOfRange { node, n });
                    }
                }
                if !(c.is_finite() && c > 0.0) {
                    return Err(Error::InvalidConductance { x, y, c });
                }
                if x == y && !allows_self_loops {
                    return Err(Error::SelfLoopNotAllowed { node: x });
                }
                Ok(Edge {
                    x: x.min(y),
                    y: x.max(y),
                    c,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightedGraph {
            n,
            edges,
            allows_self_loops,
        })
    }

    /// Unit-conductance graph from node pairs.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::from_edges(n, pairs.into_iter().map(|(x, y)| (x, y, 1.0)), false)
    }

    // Internal constructor for records that are valid by construction.
    pub(crate) fn from_trusted(n: usize, edges: Vec<Edge>, allows_self_loops: bool) -> Self {
        debug_assert!(edges
            .iter()
            .all(|e| e.x >= 1 && e.x <= e.y && e.y <= n && e.c > 0.0));
        debug_assert!(allows_self_loops || edges.iter().all(|e| !e.is_loop()));
        WeightedGraph {
            n,
            edges,
            allows_self_loops,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn allows_self_loops(&self) -> bool {
        self.allows_self_loops
    }

    pub fn has_self_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// True when every record has unit conductance.
    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.c == 1.0)
    }

    pub fn check_node(&self, x: NodeId) -> Result<()> {
        if x == 0 || x > self.n {
            Err(Error::NodeOutOfRange { node: x, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Generalized degree `mu_x`; a self-loop contributes `2c`.
    pub fn degree(&self, x: NodeId) -> Result<f64> {
        self.check_node(x)?;
        Ok(self
            .edges
            .iter()
            .map(|e| match (e.x == x, e.y == x) {
                (true, true) => 2.0 * e.c,
                (true, false) | (false, true) => e.c,
                _ => 0.0,
            })
            .sum())
    }

    pub fn node_weights(&self) -> NodeWeight {
        let mut mu = vec![0.0; self.n + 1];
        for e in &self.edges {
            mu[e.x] += e.c;
            mu[e.y] += e.c;
        }
        NodeWeight { mu }
    }

    /// Integer degrees counting multiplicity (loops twice), ignoring weights.
    pub fn multiplicity_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n + 1];
        for e in &self.edges {
            deg[e.x] += 1;
            deg[e.y] += 1;
        }
        deg
    }

    /// Sum of conductances over edge records.
    pub fn total_conductance(&self) -> f64 {
        self.edges.iter().map(|e| e.c).sum()
    }

    /// Merged neighbour lists with summed parallel conductances. Loops appear
    /// as a neighbour of the node itself with conductance `c`.
    pub fn adjacency(&self) -> Adjacency {
        let mut lists: Vec<Vec<(NodeId, f64)>> = vec![Vec::new(); self.n + 1];
        for e in &self.edges {
            lists[e.x].push((e.y, e.c));
            if !e.is_loop() {
                lists[e.y].push((e.x, e.c));
            }
        }
        for list in &mut lists {
            list.sort_by_key(|&(y, _)| y);
            list.dedup_by(|next, kept| {
                if next.0 == kept.0 {
                    kept.1 += next.1;
                    true
                } else {
                    false
                }
            });
        }
        Adjacency { lists }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut block = Vec::new();
            while let Some(v) = queue.pop_front() {
                block.push(v);
                for &(w, _) in adj.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.components().len() == 1
    }

    /// Copy without loop records; the self-loop flag is cleared.
    pub fn strip_self_loops(&self) -> WeightedGraph {
        WeightedGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| !e.is_loop())
                .copied()
                .collect(),
            allows_self_loops: false,
        }
    }

    /// Mean of `mu_x` over all nodes.
    pub fn mean_degree(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        2.0 * self.total_conductance() / self.n as f64
    }
}

/// Merged adjacency: for each node, sorted `(neighbour, conductance)` pairs.
#[derive(Debug, Clone)]
pub struct Adjacency {
    lists: Vec<Vec<(NodeId, f64)>>,
}

impl Adjacency {
    pub fn neighbors(&self, x: NodeId) -> &[(NodeId, f64)] {
        &self.lists[x]
    }

    pub fn conductance(&self, x: NodeId, y: NodeId) -> f64 {
        let list = &self.lists[x];
        match list.binary_search_by_key(&y, |&(z, _)| z) {
            Ok(i) => list[i].1,
            Err(_) => 0.0,
        }
    }
}

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

//! Seeded Erdős–Rényi and preferential attachment generators.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, NodeId, WeightedGraph};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl ErParams {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameter("ER needs n >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParameter(format!(
                "edge probability {} outside [0, 1]",
                self.p
            )));
        }
        Ok(())
    }
}

/// G(n, p): every pair `{i, j}` is present independently with probability
/// `p`.
///
/// Pairs are visited in the order (1,2), (1,3), (2,3), (1,4), ... and the gap
/// to the next present pair is drawn from a geometric law, so the cost is
/// proportional to the number of edges rather than `n^2`.
pub fn generate_er(params: &ErParams) -> Result<WeightedGraph> {
    params.validate()?;
    let ErParams { n, p, seed } = *params;
    let mut edges = Vec::new();

    if p >= 1.0 {
        for j in 2..=n {
            for i in 1..j {
                edges.push(Edge { x: i, y: j, c: 1.0 });
            }
        }
    } else if p > 0.0 {
        let mut rng = rng::from_seed(seed);
        let log_q = (1.0 - p).ln();
        // 0-based: current pair is (w, v) with w < v.
        let mut v: usize = 1;
        let mut w: i64 = -1;
        while v < n {
            let r: f64 = rng.random();
            let skip = ((1.0 - r).ln() / log_q).floor();
            // Saturate huge skips so the arithmetic below cannot overflow.
            let skip = if skip.is_finite() && skip < 1e15 {
                skip as i64
            } else {
                i64::MAX / 4
            };
            w += 1 + skip;
            while w >= v as i64 && v < n {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push(Edge {
                    x: w as usize + 1,
                    y: v + 1,
                    c: 1.0,
                });
            }
        }
    }
    Ok(WeightedGraph::from_trusted(n, edges, false))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PaParams {
    pub n: usize,
    pub m: usize,
    pub delta: f64,
    pub seed: u64,
}

impl PaParams {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameter("PA needs n >= 1".into()));
        }
        validate_pa_model(self.m, self.delta)
    }
}

pub(crate) fn validate_pa_model(m: usize, delta: f64) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter("PA needs m >= 1".into()));
    }
    if !delta.is_finite() || delta <= -(m as f64) {
        return Err(Error::InvalidParameter(format!(
            "PA needs delta > -m, got delta = {delta} with m = {m}"
        )));
    }
    Ok(())
}

/// `D^t(node)` at time `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    pub t: usize,
    pub node: NodeId,
    pub degree: u64,
}

#[derive(Debug, Clone)]
pub struct PaTrace {
    /// Multigraph with one unit record per edge; node 1 carries `m` loops.
    pub graph: WeightedGraph,
    /// Final degrees `D^n(i)`, indexed by node id (slot 0 unused).
    pub degrees: Vec<u64>,
    /// For each tracked node `i`, one record per time `t = i..=n`.
    pub degree_history: Vec<DegreeRecord>,
}

pub fn generate_pa(params: &PaParams) -> Result<PaTrace> {
    generate_pa_tracked(params, &[])
}

/// Preferential attachment `PA_n^(m, delta)`.
///
/// Node 1 starts with `m` self-loops. When node `t + 1` arrives, its `m`
/// endpoints are drawn independently from nodes `1..=t` with probabilities
/// `(D^t(i) + delta) / ((2m + delta) t)`; degrees are updated only after all
/// `m` draws, so the number of edges to a fixed node is `Bin(m, p)`.
pub fn generate_pa_tracked(params: &PaParams, track: &[NodeId]) -> Result<PaTrace> {
    params.validate()?;
    let PaParams { n, m, delta, seed } = *params;
    for &node in track {
        if node == 0 || node > n {
            return Err(Error::NodeOutOfRange { node, n });
        }
    }

    let mut rng = rng::from_seed(seed);
    let mut degrees = vec![0u64; n + 1];
    let mut weights = Fenwick::new(n);
    let mut edges = Vec::with_capacity(m * n);
    let mut history = Vec::new();

    degrees[1] = 2 * m as u64;
    weights.add(1, 2.0 * m as f64 + delta);
    edges.extend((0..m).map(|_| Edge { x: 1, y: 1, c: 1.0 }));
    record(&mut history, track, &degrees, 1);

    let mut targets = Vec::with_capacity(m);
    for t in 1..n {
        let newcomer = t + 1;
        targets.clear();
        let total = weights.total(t);
        for _ in 0..m {
            let u = rng.random::<f64>() * total;
            targets.push(weights.find(u).min(t));
        }
        for &target in &targets {
            degrees[target] += 1;
            weights.add(target, 1.0);
            edges.push(Edge {
                x: target,
                y: newcomer,
                c: 1.0,
            });
        }
        degrees[newcomer] = m as u64;
        weights.add(newcomer, m as f64 + delta);
        record(&mut history, track, &degrees, newcomer);
    }

    Ok(PaTrace {
        graph: WeightedGraph::from_trusted(n, edges, true),
        degrees,
        degree_history: history,
    })
}

fn record(history: &mut Vec<DegreeRecord>, track: &[NodeId], degrees: &[u64], t: usize) {
    for &node in track {
        if node <= t {
            history.push(DegreeRecord {
                t,
                node,
                degree: degrees[node],
            });
        }
    }
}

/// Binary indexed tree over node weights, 1-based.
struct Fenwick {
    tree: Vec<f64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick {
            tree: vec![0.0; n + 1],
        }
    }

    fn add(&mut self, mut i: usize, w: f64) {
        while i < self.tree.len() {
            self.tree[i] += w;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum of weights `1..=i`.
    fn total(&self, mut i: usize) -> f64 {
        let mut s = 0.0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    }

    /// Smallest `i` whose prefix sum exceeds `u`.
    fn find(&self, mut u: f64) -> usize {
        let len = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = len.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= len && self.tree[next] <= u {
                pos = next;
                u -= self.tree[next];
            }
            step >>= 1;
        }
        pos + 1
    }
}

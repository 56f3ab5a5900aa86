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

use rand::distr::Distribution;
use rand_distr::weighted::WeightedAliasIndex;
use rayon::prelude::*;
use serde::Serialize;

use super::TransitionModel;
use crate::error::{Error, Result};
use crate::graph::{NodeId, WeightedGraph};
use crate::rng;

/// Walks per independent random stream. Each chunk draws from
/// `rng::stream(seed, chunk)`, so results do not depend on the thread count.
const CHUNK_WALKS: u64 = 1024;

/// Monte Carlo estimates from `walk_count` walks `source -> sink`.
///
/// Visits are counted at steps `0..tau_y`: the start counts once, the sink
/// never. Per-node vectors are indexed by `node - 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WalkStats {
    pub source: NodeId,
    pub sink: NodeId,
    pub walk_count: u64,
    pub seed: u64,
    pub hitting_mean: f64,
    pub hitting_sd: f64,
    pub hitting_stderr: f64,
    pub visit_mean: Vec<f64>,
    pub visit_stderr: Vec<f64>,
    /// `visit_mean / mu_z`, the estimate of the potential `V_{z, sink}`.
    pub visit_ratio: Vec<f64>,
    pub visit_ratio_stderr: Vec<f64>,
}

#[derive(Default)]
struct Tally {
    walks: u64,
    steps: u64,
    steps_sq: u128,
    visits: Vec<u64>,
    visits_sq: Vec<u128>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.walks += other.walks;
        self.steps += other.steps;
        self.steps_sq += other.steps_sq;
        for (a, b) in self.visits.iter_mut().zip(other.visits) {
            *a += b;
        }
        for (a, b) in self.visits_sq.iter_mut().zip(other.visits_sq) {
            *a += b;
        }
        self
    }
}

struct Walker {
    n: usize,
    targets: Vec<Vec<NodeId>>,
    tables: Vec<Option<WeightedAliasIndex<f64>>>,
}

impl Walker {
    fn new(model: &TransitionModel) -> Result<Self> {
        let n = model.n();
        let mut targets = vec![Vec::new(); n + 1];
        let mut tables = vec![None; n + 1];
        for x in 1..=n {
            let (ids, weights): (Vec<_>, Vec<_>) = model.neighbors(x).iter().copied().unzip();
            tables[x] =
                Some(WeightedAliasIndex::new(weights).map_err(|e| {
                    Error::InvalidParameter(format!("alias table at node {x}: {e}"))
                })?);
            targets[x] = ids;
        }
        Ok(Walker { n, targets, tables })
    }

    fn run_chunk(&self, x: NodeId, y: NodeId, walks: u64, seed: u64, chunk: u64) -> Tally {
        let mut rng = rng::stream(seed, chunk);
        let mut tally = Tally {
            visits: vec![0; self.n + 1],
            visits_sq: vec![0; self.n + 1],
            ..Tally::default()
        };
        let mut counts = vec![0u64; self.n + 1];
        let mut touched = Vec::new();
        for _ in 0..walks {
            let mut at = x;
            let mut steps = 0u64;
            while at != y {
                if counts[at] == 0 {
                    touched.push(at);
                }
                counts[at] += 1;
                let table = self.tables[at]
                    .as_ref()
                    .expect("alias table for every node");
                at = self.targets[at][table.sample(&mut rng)];
                steps += 1;
            }
            tally.walks += 1;
            tally.steps += steps;
            tally.steps_sq += u128::from(steps) * u128::from(steps);
            for z in touched.drain(..) {
                let c = counts[z];
                tally.visits[z] += c;
                tally.visits_sq[z] += u128::from(c) * u128::from(c);
                counts[z] = 0;
            }
        }
        tally
    }
}

fn mean_and_sd(sum: f64, sum_sq: f64, count: f64) -> (f64, f64) {
    let mean = sum / count;
    if count < 2.0 {
        return (mean, 0.0);
    }
    let var = ((sum_sq - sum * mean) / (count - 1.0)).max(0.0);
    (mean, var.sqrt())
}

/// Run `walk_count` independent walks from `x`, each stopped on first reaching
/// `y`, sampling neighbours from per-node alias tables.
pub fn simulate_walks(
    g: &WeightedGraph,
    x: NodeId,
    y: NodeId,
    walk_count: u64,
    seed: u64,
) -> Result<WalkStats> {
    let model = TransitionModel::new(g)?;
    model.check_node(x)?;
    model.check_node(y)?;
    if x == y {
        return Err(Error::InvalidParameter(
            "walk source and sink must differ".into(),
        ));
    }
    if walk_count == 0 {
        return Err(Error::InvalidParameter(
            "walk_count must be at least 1".into(),
        ));
    }
    let walker = Walker::new(&model)?;
    let chunks = walk_count.div_ceil(CHUNK_WALKS);
    let tallies: Vec<Tally> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let walks = CHUNK_WALKS.min(walk_count - c * CHUNK_WALKS);
            walker.run_chunk(x, y, walks, seed, c)
        })
        .collect();
    // Integer tallies: the merge is exact, so order cannot matter.
    let total = tallies
        .into_iter()
        .reduce(Tally::merge)
        .expect("at least one chunk");

    let count = total.walks as f64;
    let (hitting_mean, hitting_sd) = mean_and_sd(total.steps as f64, total.steps_sq as f64, count);
    let n = model.n();
    let mut visit_mean = Vec::with_capacity(n);
    let mut visit_stderr = Vec::with_capacity(n);
    let mut visit_ratio = Vec::with_capacity(n);
    let mut visit_ratio_stderr = Vec::with_capacity(n);
    for z in 1..=n {
        let (mean, sd) = mean_and_sd(total.visits[z] as f64, total.visits_sq[z] as f64, count);
        let se = sd / count.sqrt();
        visit_mean.push(mean);
        visit_stderr.push(se);
        visit_ratio.push(mean / model.mu(z));
        visit_ratio_stderr.push(se / model.mu(z));
    }
    Ok(WalkStats {
        source: x,
        sink: y,
        walk_count,
        seed,
        hitting_mean,
        hitting_sd,
        hitting_stderr: hitting_sd / count.sqrt(),
        visit_mean,
        visit_stderr,
        visit_ratio,
        visit_ratio_stderr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_node_walks_take_one_step() {
        let g = WeightedGraph::from_edges(2, [(1, 2, 2.5)], false).unwrap();
        let s = simulate_walks(&g, 1, 2, 100, 1).unwrap();
        assert_eq!(s.hitting_mean, 1.0);
        assert_eq!(s.hitting_sd, 0.0);
        assert_eq!(s.visit_mean, vec![1.0, 0.0]);
    }

    #[test]
    fn deterministic_across_calls() {
        let g = WeightedGraph::from_pairs(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let a = simulate_walks(&g, 1, 3, 3000, 42).unwrap();
        let b = simulate_walks(&g, 1, 3, 3000, 42).unwrap();
        assert_eq!(a, b);
        let c = simulate_walks(&g, 1, 3, 3000, 43).unwrap();
        assert_ne!(a.hitting_mean, c.hitting_mean);
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = WeightedGraph::from_pairs(2, [(1, 2)]).unwrap();
        assert!(simulate_walks(&g, 1, 1, 10, 0).is_err());
        assert!(simulate_walks(&g, 1, 2, 0, 0).is_err());
        assert!(simulate_walks(&g, 1, 3, 10, 0).is_err());
    }
}

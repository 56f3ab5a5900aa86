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

use serde::Serialize;

use super::TransitionModel;
use crate::error::Result;
use crate::graph::WeightedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TetaliReport {
    pub n: usize,
    /// `sum_{(x,y)} E^x(tau_y) c_xy / sum_{(w,u)} c_wu` over directed edges.
    pub lhs: f64,
    /// `n - 1`.
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
}

impl TetaliReport {
    pub fn within(&self, tol: f64) -> bool {
        self.abs_err <= tol * self.rhs.max(1.0)
    }
}

/// Evaluate the conductance-weighted average of hitting times across
/// directed edges, which equals `n - 1` on every connected graph. One hitting
/// solve per target node.
pub fn verify_tetali(g: &WeightedGraph) -> Result<TetaliReport> {
    let model = TransitionModel::new(g)?;
    let n = model.n();
    let mut weighted = 0.0;
    for y in 1..=n {
        let sol = model.hitting_times(y)?;
        for &(x, c) in model.neighbors(y) {
            weighted += sol.time(x) * c;
        }
    }
    let lhs = weighted / model.total_weight();
    let rhs = (n - 1) as f64;
    let abs_err = (lhs - rhs).abs();
    Ok(TetaliReport {
        n,
        lhs,
        rhs,
        abs_err,
        rel_err: abs_err / rhs,
    })
}

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

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::{solve_dense, TransitionModel};
use crate::error::{Error, Result};
use crate::graph::{NodeId, WeightedGraph};

/// Expected hitting times `T^y_x = E^x(tau_y)` of one target `y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HittingSolution {
    pub target: NodeId,
    /// `times[x - 1] = E^x(tau_y)`.
    pub times: Vec<f64>,
    /// `max_{x != y} |T_x - 1 - sum_z p_xz T_z|`.
    pub residual: f64,
}

impl HittingSolution {
    pub fn time(&self, x: NodeId) -> f64 {
        self.times[x - 1]
    }
}

pub fn hitting_times(g: &WeightedGraph, y: NodeId) -> Result<HittingSolution> {
    TransitionModel::new(g)?.hitting_times(y)
}

/// Expected commute time `E^x(tau_y) + E^y(tau_x)`.
pub fn commute_time(g: &WeightedGraph, x: NodeId, y: NodeId) -> Result<f64> {
    let model = TransitionModel::new(g)?;
    if x == y {
        return Err(Error::InvalidParameter("commute time needs x != y".into()));
    }
    Ok(model.hitting_times(y)?.time(x) + model.hitting_times(x)?.time(y))
}

impl TransitionModel {
    /// Solve `(P - I) T = -1` with `T_y = 0` on the `n - 1` free nodes.
    pub fn hitting_times(&self, y: NodeId) -> Result<HittingSolution> {
        self.check_node(y)?;
        self.check_dense()?;
        let n = self.n();
        // free node x (x != y) sits at row x - 1 or x - 2.
        let slot = |x: NodeId| if x < y { x - 1 } else { x - 2 };
        let mut a = DMatrix::<f64>::identity(n - 1, n - 1);
        for x in (1..=n).filter(|&x| x != y) {
            for (z, p) in self.row(x) {
                if z != y {
                    a[(slot(x), slot(z))] -= p;
                }
            }
        }
        let solved = solve_dense(a, DVector::from_element(n - 1, 1.0))?;

        let mut times = vec![0.0; n];
        for x in (1..=n).filter(|&x| x != y) {
            times[x - 1] = solved[slot(x)];
        }
        let residual = (1..=n)
            .filter(|&x| x != y)
            .map(|x| {
                let avg: f64 = self.row(x).map(|(z, p)| p * times[z - 1]).sum();
                (times[x - 1] - 1.0 - avg).abs()
            })
            .fold(0.0, f64::max);
        Ok(HittingSolution {
            target: y,
            times,
            residual,
        })
    }
}

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

/// Potentials and currents for a unit current injected at `source` and
/// extracted at `sink`, with the sink grounded.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PotentialSolution {
    pub source: NodeId,
    pub sink: NodeId,
    /// `potentials[z - 1] = V_{z, sink}`.
    pub potentials: Vec<f64>,
    /// Current `i_wz = (V_w - V_z) c_wz` on every directed edge `(w, z)`.
    pub currents: Vec<(NodeId, NodeId, f64)>,
    /// Effective resistance `R = V_source`.
    pub r_eff: f64,
    /// `max_{z != source, sink} |V_z - sum_w p_zw V_w|`.
    pub harmonic_residual: f64,
    /// Largest net current at an interior node.
    pub conservation_residual: f64,
}

impl PotentialSolution {
    pub fn potential(&self, z: NodeId) -> f64 {
        self.potentials[z - 1]
    }

    /// Net current leaving `z`.
    pub fn net_outflow(&self, z: NodeId) -> f64 {
        self.currents
            .iter()
            .filter(|&&(w, _, _)| w == z)
            .map(|&(_, _, i)| i)
            .sum()
    }
}

pub fn effective_resistance(g: &WeightedGraph, x: NodeId, y: NodeId) -> Result<PotentialSolution> {
    TransitionModel::new(g)?.potentials(x, y)
}

impl TransitionModel {
    /// Solve the conductance Laplacian `L V = e_x - e_y` with `V_y = 0` by
    /// deleting the sink row and column.
    pub fn potentials(&self, x: NodeId, y: NodeId) -> Result<PotentialSolution> {
        self.check_node(x)?;
        self.check_node(y)?;
        if x == y {
            return Err(Error::InvalidParameter(
                "source and sink must differ".into(),
            ));
        }
        self.check_dense()?;
        let n = self.n();
        let slot = |z: NodeId| if z < y { z - 1 } else { z - 2 };
        let mut lap = DMatrix::<f64>::zeros(n - 1, n - 1);
        for z in (1..=n).filter(|&z| z != y) {
            lap[(slot(z), slot(z))] = self.mu(z);
            for &(w, c) in self.neighbors(z) {
                if w != y {
                    lap[(slot(z), slot(w))] -= c;
                }
            }
        }
        let mut rhs = DVector::zeros(n - 1);
        rhs[slot(x)] = 1.0;
        let solved = solve_dense(lap, rhs)?;

        let mut potentials = vec![0.0; n];
        for z in (1..=n).filter(|&z| z != y) {
            potentials[z - 1] = solved[slot(z)];
        }
        let mut currents = Vec::new();
        let mut net = vec![0.0; n + 1];
        for w in 1..=n {
            for &(z, c) in self.neighbors(w) {
                let i = (potentials[w - 1] - potentials[z - 1]) * c;
                currents.push((w, z, i));
                net[w] += i;
            }
        }
        let interior = || (1..=n).filter(|&z| z != x && z != y);
        let harmonic_residual = interior()
            .map(|z| {
                let avg: f64 = self.row(z).map(|(w, p)| p * potentials[w - 1]).sum();
                (potentials[z - 1] - avg).abs()
            })
            .fold(0.0, f64::max);
        let conservation_residual = interior().map(|z| net[z].abs()).fold(0.0, f64::max);

        Ok(PotentialSolution {
            source: x,
            sink: y,
            r_eff: potentials[x - 1],
            potentials,
            currents,
            harmonic_residual,
            conservation_residual,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_ohm() {
        let g = WeightedGraph::from_edges(2, [(1, 2, 4.0)], false).unwrap();
        let sol = effective_resistance(&g, 1, 2).unwrap();
        assert!((sol.r_eff - 0.25).abs() < 1e-15);
        assert!((sol.net_outflow(1) - 1.0).abs() < 1e-14);
        assert!((sol.net_outflow(2) + 1.0).abs() < 1e-14);
    }

    #[test]
    fn triangle_series_parallel() {
        let g = WeightedGraph::from_pairs(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        for (x, y) in [(1, 2), (2, 3), (1, 3), (3, 1)] {
            let sol = effective_resistance(&g, x, y).unwrap();
            assert!((sol.r_eff - 2.0 / 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn path_series_rule() {
        for k in 1..8usize {
            let g = WeightedGraph::from_pairs(k + 1, (1..=k).map(|i| (i, i + 1))).unwrap();
            let sol = effective_resistance(&g, 1, k + 1).unwrap();
            assert!((sol.r_eff - k as f64).abs() < 1e-12);
            assert!(sol.harmonic_residual <= 1e-10);
            assert!(sol.conservation_residual <= 1e-10);
        }
    }

    #[test]
    fn same_node_rejected() {
        let g = WeightedGraph::from_pairs(2, [(1, 2)]).unwrap();
        assert!(effective_resistance(&g, 1, 1).is_err());
    }
}

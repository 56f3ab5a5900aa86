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

//! Random walks on weighted graphs and the electrical network view.
//!
//! A walk at `x` moves to `y` with probability `c_xy / mu_x`. Exact quantities
//! (hitting times, potentials, effective resistance) come from dense LU solves
//! of the grounded systems; [`simulate_walks`] estimates the same quantities by
//! Monte Carlo. The solvers refuse graphs above [`MAX_DENSE_NODES`] nodes.

mod electric;
mod hitting;
mod montecarlo;
mod tetali;
mod transition;

pub use electric::{effective_resistance, PotentialSolution};
pub use hitting::{commute_time, hitting_times, HittingSolution};
pub use montecarlo::{simulate_walks, WalkStats};
pub use tetali::{verify_tetali, TetaliReport};
pub use transition::TransitionModel;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Largest graph accepted by the dense solvers.
pub const MAX_DENSE_NODES: usize = 2000;

fn solve_dense(matrix: DMatrix<f64>, rhs: DVector<f64>) -> Result<DVector<f64>> {
    matrix.lu().solve(&rhs).ok_or(Error::Singular)
}

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

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// `ln C(n, k)`.
pub fn ln_binomial_coefficient(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)
}

/// `C(n, l) p^l (1-p)^(n-l)`, evaluated in log space.
pub fn binomial_pmf(n_trials: u64, p: f64, l: u64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )));
    }
    if l > n_trials {
        return Err(Error::InvalidParameter(format!(
            "outcome {l} exceeds number of trials {n_trials}"
        )));
    }
    if p == 0.0 {
        return Ok(if l == 0 { 1.0 } else { 0.0 });
    }
    if p == 1.0 {
        return Ok(if l == n_trials { 1.0 } else { 0.0 });
    }
    let ln = ln_binomial_coefficient(n_trials, l)
        + l as f64 * p.ln()
        + (n_trials - l) as f64 * (-p).ln_1p();
    Ok(ln.exp())
}

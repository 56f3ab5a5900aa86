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

//! Closed-form laws of the preferential attachment model `PA(m, delta)`.
//!
//! Gamma ratios are always formed as differences of `ln_gamma` values; terms
//! like `Gamma(1000.4) / Gamma(1000)` overflow when evaluated directly.

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::random_gen::validate_pa_model;

/// Limit degree law `p_k`: zero for `k < m`, otherwise
/// `(2 + delta/m) Gamma(k+delta) Gamma(m+2+delta+delta/m)
///  / (Gamma(m+delta) Gamma(k+3+delta+delta/m))`.
pub fn pa_limit_pmf(m: usize, delta: f64, k: u64) -> Result<f64> {
    validate_pa_model(m, delta)?;
    if k < m as u64 {
        return Ok(0.0);
    }
    let mf = m as f64;
    let kf = k as f64;
    let ratio = delta / mf;
    let ln = (2.0 + ratio).ln() + ln_gamma(kf + delta) + ln_gamma(mf + 2.0 + delta + ratio)
        - ln_gamma(mf + delta)
        - ln_gamma(kf + 3.0 + delta + ratio);
    Ok(ln.exp())
}

/// Tail exponent `tau = 3 + delta/m` of the limit law.
pub fn pa_tau(m: usize, delta: f64) -> Result<f64> {
    validate_pa_model(m, delta)?;
    Ok(3.0 + delta / m as f64)
}

/// Prefactor `c` in `p_k ~ c k^(-tau)`.
pub fn pa_c(m: usize, delta: f64) -> Result<f64> {
    validate_pa_model(m, delta)?;
    let mf = m as f64;
    let ratio = delta / mf;
    Ok((2.0 + ratio) * (ln_gamma(mf + 2.0 + delta + ratio) - ln_gamma(mf + delta)).exp())
}

pub fn pa_expected_degree(m: usize, delta: f64, i: usize, n: usize) -> Result<f64> {
    PaMoments::new(m, delta)?.expected_degree(i, n)
}

pub fn pa_degree_variance(m: usize, delta: f64, i: usize, n: usize) -> Result<f64> {
    PaMoments::new(m, delta)?.variance(i, n)
}

pub fn pa_degree_variance_recursive(m: usize, delta: f64, i: usize, n: usize) -> Result<f64> {
    PaMoments::new(m, delta)?.variance_by_recursion(i, n)
}

/// First and second moments of the degree `D^n(i)` of a fixed node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PaMoments {
    pub m: usize,
    pub delta: f64,
}

impl PaMoments {
    pub fn new(m: usize, delta: f64) -> Result<Self> {
        validate_pa_model(m, delta)?;
        Ok(PaMoments { m, delta })
    }

    fn scale(&self) -> f64 {
        2.0 * self.m as f64 + self.delta
    }

    /// `m / ((2m + delta) j)`, the expected share of one arrival; equals
    /// `sqrt(m c_j)`.
    pub fn growth(&self, j: usize) -> f64 {
        self.m as f64 / (self.scale() * j as f64)
    }

    /// `c_j = m / ((2m + delta)^2 j^2)`.
    pub fn c(&self, j: usize) -> f64 {
        let g = self.growth(j);
        g * g / self.m as f64
    }

    /// `d_j = (1 + m / ((2m + delta) j))^2`.
    pub fn d(&self, j: usize) -> f64 {
        let g = 1.0 + self.growth(j);
        g * g
    }

    /// `D^i(i) + delta`.
    fn initial_shifted(&self, i: usize) -> f64 {
        let m = self.m as f64;
        m + if i == 1 { m } else { 0.0 } + self.delta
    }

    fn check(&self, i: usize, n: usize) -> Result<()> {
        if i < 1 || i > n {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= i <= n, got i = {i}, n = {n}"
            )));
        }
        Ok(())
    }

    /// `E(D^n(i) + delta)` via the Gamma-ratio closed form.
    fn shifted_mean(&self, i: usize, n: usize) -> f64 {
        let kappa = self.m as f64 / self.scale();
        let (i, n) = (i as f64, n as f64);
        self.initial_shifted(i as usize)
            * (ln_gamma(n + kappa) + ln_gamma(i) - ln_gamma(i + kappa) - ln_gamma(n)).exp()
    }

    /// `E(D^n(i))`.
    pub fn expected_degree(&self, i: usize, n: usize) -> Result<f64> {
        self.check(i, n)?;
        if i == n {
            return Ok(self.initial_shifted(i) - self.delta);
        }
        Ok(self.shifted_mean(i, n) - self.delta)
    }

    /// `Var(D^n(i))` from the closed product/sum form
    ///
    /// `E_i [prod (d_j - c_j) - prod d_j] + sum_j D_j sqrt(m c_j) prod_{k>j} (d_k - c_k)`
    ///
    /// with `E_i = (m + 1{i=1} m + delta)^2` and `D_j = E(D^j(i) + delta)`.
    /// The bracket is expanded as a telescoping sum so no two large products
    /// are subtracted.
    pub fn variance(&self, i: usize, n: usize) -> Result<f64> {
        self.check(i, n)?;
        let steps = n - i;
        if steps == 0 {
            return Ok(0.0);
        }
        // suffix_dc[s] = prod_{k = i+s}^{n-1} (d_k - c_k), suffix_d likewise.
        let mut suffix_dc = vec![1.0; steps + 1];
        let mut suffix_d = vec![1.0; steps + 1];
        for s in (0..steps).rev() {
            let j = i + s;
            suffix_dc[s] = suffix_dc[s + 1] * (self.d(j) - self.c(j));
            suffix_d[s] = suffix_d[s + 1] * self.d(j);
        }
        // prod(a) - prod(b) = sum_s (a_s - b_s) prod_{t<s} a_t prod_{t>s} b_t
        let mut bracket = 0.0;
        let mut prefix_dc = 1.0;
        for s in 0..steps {
            let j = i + s;
            bracket += -self.c(j) * prefix_dc * suffix_d[s + 1];
            prefix_dc *= self.d(j) - self.c(j);
        }
        let e0 = self.initial_shifted(i).powi(2);
        let drift: f64 = (0..steps)
            .map(|s| {
                let j = i + s;
                let mean_j = if j == i {
                    self.initial_shifted(i)
                } else {
                    self.shifted_mean(i, j)
                };
                mean_j * self.growth(j) * suffix_dc[s + 1]
            })
            .sum();
        Ok(e0 * bracket + drift)
    }

    /// `Var(D^n(i))` by stepping the joint recursion
    ///
    /// `V_{j+1} = -c_j E_j + D_j sqrt(m c_j) + d_j V_j`,
    /// `E_{j+1} = (d_j - c_j) E_j + D_j sqrt(m c_j)`,
    /// `D_{j+1} = (1 + sqrt(m c_j)) D_j`
    ///
    /// from `V_i = 0`, `E_i = D_i^2`, `D_i = m + 1{i=1} m + delta`.
    pub fn variance_by_recursion(&self, i: usize, n: usize) -> Result<f64> {
        self.check(i, n)?;
        let mut mean = self.initial_shifted(i);
        let mut second = mean * mean;
        let mut var = 0.0;
        for j in i..n {
            let (c, d, g) = (self.c(j), self.d(j), self.growth(j));
            var = -c * second + mean * g + d * var;
            second = (d - c) * second + mean * g;
            mean *= 1.0 + g;
        }
        Ok(var)
    }
}

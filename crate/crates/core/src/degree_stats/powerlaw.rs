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

//! Discrete power-law tails `N_k ~ c k^(-tau)`.

use serde::Serialize;

use super::histogram::DegreeHistogram;
use crate::error::{Error, Result};

/// Smallest tail accepted by [`fit_power_law_auto`] when scanning `k_min`.
pub const DEFAULT_MIN_TAIL: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerLawFit {
    pub tau: f64,
    pub k_min: u64,
    pub n_tail: u64,
    /// `c` in `N_k / n ~ c k^(-tau)` for `k >= k_min`.
    pub normalization: f64,
    /// Kolmogorov–Smirnov distance between the tail and the fitted law.
    pub ks_distance: f64,
}

/// Discrete maximum-likelihood exponent with the usual half-integer
/// correction:
///
/// `tau = 1 + n_tail / sum_{k_i >= k_min} ln(k_i / (k_min - 1/2))`.
pub fn fit_power_law(h: &DegreeHistogram, k_min: u64) -> Result<PowerLawFit> {
    if k_min == 0 {
        return Err(Error::InvalidParameter("k_min must be at least 1".into()));
    }
    let n_tail = h.count_at_least(k_min);
    if n_tail == 0 {
        return Err(Error::EmptyTail { k_min });
    }
    if n_tail < 2 {
        return Err(Error::ShortTail { k_min, n_tail });
    }
    if h.count(k_min) == n_tail {
        return Err(Error::DegenerateTail { k_min });
    }
    let shift = k_min as f64 - 0.5;
    let log_sum: f64 = h
        .iter()
        .filter(|&(k, _)| k >= k_min)
        .map(|(k, c)| c as f64 * (k as f64 / shift).ln())
        .sum();
    let tau = 1.0 + n_tail as f64 / log_sum;
    let zeta_min = hurwitz_zeta(tau, k_min as f64);
    Ok(PowerLawFit {
        tau,
        k_min,
        n_tail,
        normalization: n_tail as f64 / h.n() as f64 / zeta_min,
        ks_distance: ks_distance(h, k_min, n_tail, tau, zeta_min),
    })
}

/// Fit with `k_min` chosen to minimise the Kolmogorov–Smirnov distance over
/// all observed degrees whose tail holds at least `min_tail` nodes. Ties go to
/// the smaller `k_min`. Fails when no candidate tail is large enough.
pub fn fit_power_law_auto(h: &DegreeHistogram, min_tail: u64) -> Result<PowerLawFit> {
    let mut best: Option<PowerLawFit> = None;
    for (k, _) in h.iter().filter(|&(k, _)| k >= 1) {
        if h.count_at_least(k) < min_tail.max(2) {
            break;
        }
        let Ok(fit) = fit_power_law(h, k) else {
            continue;
        };
        if best.is_none_or(|b| fit.ks_distance < b.ks_distance) {
            best = Some(fit);
        }
    }
    match best {
        Some(fit) => Ok(fit),
        None => Err(Error::ShortTail {
            k_min: h.min_positive_degree().unwrap_or(1),
            n_tail: h.count_at_least(1),
        }),
    }
}

fn ks_distance(h: &DegreeHistogram, k_min: u64, n_tail: u64, tau: f64, zeta_min: f64) -> f64 {
    let k_max = h.max_degree().unwrap_or(k_min);
    let mut remaining = n_tail;
    let mut zeta_k = zeta_min;
    let mut worst: f64 = 0.0;
    for k in k_min..=k_max {
        let empirical = remaining as f64 / n_tail as f64;
        let model = zeta_k / zeta_min;
        worst = worst.max((empirical - model).abs());
        remaining -= h.count(k);
        zeta_k -= (k as f64).powf(-tau);
    }
    worst
}

/// Hurwitz zeta `sum_{k>=0} (q + k)^(-s)` for `s > 1`, `q > 0`, by
/// Euler–Maclaurin summation.
pub fn hurwitz_zeta(s: f64, q: f64) -> f64 {
    assert!(s > 1.0 && q > 0.0, "hurwitz_zeta needs s > 1 and q > 0");
    // B_{2j} / (2j)!
    const COEFFS: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30_240.0,
        -1.0 / 1_209_600.0,
        1.0 / 47_900_160.0,
        -691.0 / 1_307_674_368_000.0,
        1.0 / 74_724_249_600.0,
    ];
    const HEAD: usize = 16;
    let head: f64 = (0..HEAD).map(|k| (q + k as f64).powf(-s)).sum();
    let a = q + HEAD as f64;
    let mut tail = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    // rising = s (s+1) ... (s+2j-2), power = a^(-s-2j+1)
    let mut rising = s;
    let mut power = a.powf(-s - 1.0);
    for (j, coeff) in COEFFS.iter().enumerate() {
        tail += coeff * rising * power;
        let base = s + 2.0 * j as f64;
        rising *= (base + 1.0) * (base + 2.0);
        power /= a * a;
    }
    head + tail
}

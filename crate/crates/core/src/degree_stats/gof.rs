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

//! Pearson chi-square tests on degree histograms.

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::histogram::DegreeHistogram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    pub bins: usize,
}

impl ChiSquareTest {
    pub fn passes(&self, significance: f64) -> bool {
        self.p_value >= significance
    }
}

fn finish(statistic: f64, bins: usize) -> Result<ChiSquareTest> {
    if bins < 2 {
        return Err(Error::InvalidParameter(
            "chi-square test needs at least two bins after merging".into(),
        ));
    }
    let dof = bins - 1;
    let dist = ChiSquared::new(dof as f64).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    Ok(ChiSquareTest {
        statistic,
        dof,
        p_value: dist.sf(statistic),
        bins,
    })
}

/// Split `0..=support_max` into contiguous bins each carrying at least
/// `min_expected` of `weight`. The last bin absorbs everything above.
fn merge_bins<F: Fn(u64) -> f64>(support_max: u64, weight: F, min_expected: f64) -> Vec<u64> {
    let mut starts = vec![0u64];
    let mut acc = 0.0;
    for k in 0..=support_max {
        acc += weight(k);
        if acc >= min_expected && k < support_max {
            starts.push(k + 1);
            acc = 0.0;
        }
    }
    // Fold an underfilled final bin into its neighbour.
    if acc < min_expected && starts.len() > 1 {
        starts.pop();
    }
    starts
}

fn bin_of(starts: &[u64], k: u64) -> usize {
    starts.partition_point(|&s| s <= k) - 1
}

/// Goodness of fit of `h` to a law on `0..=support_max` given by `pmf`.
/// Adjacent degrees are merged until every bin expects at least
/// `min_expected` nodes; no parameters are treated as estimated.
pub fn chi_square_gof<F: Fn(u64) -> f64>(
    h: &DegreeHistogram,
    pmf: F,
    support_max: u64,
    min_expected: f64,
) -> Result<ChiSquareTest> {
    let total = h.n() as f64;
    let starts = merge_bins(support_max, |k| total * pmf(k), min_expected);
    let mut expected = vec![0.0; starts.len()];
    let mut observed = vec![0.0; starts.len()];
    for k in 0..=support_max {
        expected[bin_of(&starts, k)] += total * pmf(k);
    }
    for (k, c) in h.iter() {
        observed[bin_of(&starts, k.min(support_max))] += c as f64;
    }
    let statistic = observed
        .iter()
        .zip(&expected)
        .map(|(o, e)| (o - e).powi(2) / e)
        .sum();
    finish(statistic, starts.len())
}

/// Two-sample test that `a` and `b` come from the same degree law.
pub fn chi_square_two_sample(
    a: &DegreeHistogram,
    b: &DegreeHistogram,
    min_expected: f64,
) -> Result<ChiSquareTest> {
    let top = a.max_degree().unwrap_or(0).max(b.max_degree().unwrap_or(0));
    let starts = merge_bins(top, |k| (a.count(k) + b.count(k)) as f64, min_expected);
    let mut oa = vec![0.0; starts.len()];
    let mut ob = vec![0.0; starts.len()];
    for (k, c) in a.iter() {
        oa[bin_of(&starts, k)] += c as f64;
    }
    for (k, c) in b.iter() {
        ob[bin_of(&starts, k)] += c as f64;
    }
    let (na, nb) = (a.n() as f64, b.n() as f64);
    let (ra, rb) = ((nb / na).sqrt(), (na / nb).sqrt());
    let statistic = oa
        .iter()
        .zip(&ob)
        .filter(|(x, y)| **x + **y > 0.0)
        .map(|(x, y)| (ra * x - rb * y).powi(2) / (x + y))
        .sum();
    finish(statistic, starts.len())
}

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

//! Shared fixtures and independent oracles for the integration tests.

#![allow(dead_code)]

use graphlab::rng;
use graphlab::WeightedGraph;
use rand::Rng;

/// Connected simple graph: a random recursive tree plus independent extra
/// edges with probability `extra`. Conductances uniform on `[lo, hi)`, or all
/// one when `unit` is set.
#[allow(clippy::needless_range_loop)]
pub fn random_connected(seed: u64, n: usize, extra: f64, unit: bool) -> WeightedGraph {
    let mut r = rng::from_seed(seed);
    let mut present = vec![vec![false; n + 1]; n + 1];
    let mut pairs = Vec::new();
    for v in 2..=n {
        let u = r.random_range(1..v);
        present[u][v] = true;
        pairs.push((u, v));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if !present[u][v] && r.random_bool(extra) {
                present[u][v] = true;
                pairs.push((u, v));
            }
        }
    }
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| {
            let c = if unit { 1.0 } else { r.random_range(0.1..10.0) };
            (u, v, c)
        })
        .collect();
    WeightedGraph::from_edges(n, edges, false).unwrap()
}

/// The acceptance family: 50 graphs with `n` uniform on `[3, 50]`.
pub fn acceptance_graphs(unit: bool) -> Vec<WeightedGraph> {
    (0..50u64)
        .map(|s| {
            let mut r = rng::from_seed(1_000 + s);
            let n = r.random_range(3..=50usize);
            random_connected(2_000 + s, n, 0.1, unit)
        })
        .collect()
}

/// Exact draws from `P(K = k) ∝ k^(-tau)`, `k >= k_min`, by rejection from
/// the floor of a continuous Pareto variable.
pub fn sample_discrete_power_law(seed: u64, count: usize, tau: f64, k_min: u64) -> Vec<u64> {
    assert!(tau > 1.0 && k_min >= 1);
    let kmin = k_min as f64;
    let ratio = |k: f64| k.powf(-tau) / (k.powf(1.0 - tau) - (k + 1.0).powf(1.0 - tau));
    let bound = ratio(kmin);
    let mut r = rng::from_seed(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let u: f64 = r.random();
        let y = kmin * (1.0 - u).powf(-1.0 / (tau - 1.0));
        if !y.is_finite() || y > 1e15 {
            continue;
        }
        let k = y.floor();
        if r.random::<f64>() * bound <= ratio(k) {
            out.push(k as u64);
        }
    }
    out
}

pub fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

pub fn sample_variance(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
}

/// Bootstrap standard error of the sample variance.
pub fn bootstrap_variance_stderr(xs: &[f64], resamples: usize, seed: u64) -> f64 {
    let mut r = rng::from_seed(seed);
    let mut buf = vec![0.0; xs.len()];
    let stats: Vec<f64> = (0..resamples)
        .map(|_| {
            for slot in buf.iter_mut() {
                *slot = xs[r.random_range(0..xs.len())];
            }
            sample_variance(&buf)
        })
        .collect();
    sample_variance(&stats).sqrt()
}

/// All-pairs Hamming-distance-1 oracle, no bucketing and no early exit.
pub fn brute_force_mutation_pairs(seqs: &[String]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..seqs.len() {
        for j in i + 1..seqs.len() {
            let (a, b) = (seqs[i].as_bytes(), seqs[j].as_bytes());
            if a.len() == b.len() && a.iter().zip(b).filter(|(x, y)| x != y).count() == 1 {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// Sequences of length `len` over `letters`, grown by point mutations from a
/// few random ancestors so that many pairs sit at distance one.
pub fn mutated_corpus(seed: u64, count: usize, len: usize, letters: &[u8]) -> Vec<String> {
    let mut r = rng::from_seed(seed);
    let mut pool: Vec<Vec<u8>> = (0..3)
        .map(|_| {
            (0..len)
                .map(|_| letters[r.random_range(0..letters.len())])
                .collect()
        })
        .collect();
    while pool.len() < count {
        let mut child = pool[r.random_range(0..pool.len())].clone();
        let hits = if r.random_bool(0.7) { 1 } else { 2 };
        for _ in 0..hits {
            let pos = r.random_range(0..len);
            child[pos] = letters[r.random_range(0..letters.len())];
        }
        pool.push(child);
    }
    pool.into_iter()
        .map(|s| String::from_utf8(s).unwrap())
        .collect()
}

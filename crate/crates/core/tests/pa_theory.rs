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

mod common;

use graphlab::degree_stats::{
    fit_power_law, fit_power_law_auto, histogram_from_degrees, hurwitz_zeta, pa_c,
    pa_degree_variance, pa_degree_variance_recursive, pa_expected_degree, pa_limit_pmf, pa_tau,
    PaMoments,
};
use graphlab::random_gen::{generate_pa, PaParams};
use proptest::prelude::*;
use rayon::prelude::*;

#[test]
fn limit_pmf_for_m1_delta0_is_the_closed_form() {
    for k in 1..=2000u64 {
        let kf = k as f64;
        let want = 4.0 / (kf * (kf + 1.0) * (kf + 2.0));
        let got = pa_limit_pmf(1, 0.0, k).unwrap();
        let tol = if k <= 100 { 1e-12 } else { 1e-10 };
        assert!(
            (got - want).abs() <= tol * want,
            "k = {k}: {}",
            (got - want).abs() / want
        );
    }
    assert_eq!(pa_limit_pmf(3, 0.0, 2).unwrap(), 0.0);
}

#[test]
fn limit_pmf_tail_approaches_the_power_law() {
    for &(m, delta) in &[(1usize, 0.0), (2, 0.0), (2, 1.0), (3, -2.0), (5, 7.5)] {
        let tau = pa_tau(m, delta).unwrap();
        let c = pa_c(m, delta).unwrap();
        let k = 10_000u64;
        let ratio = pa_limit_pmf(m, delta, k).unwrap() / (c * (k as f64).powf(-tau));
        assert!(
            (ratio - 1.0).abs() < 0.05,
            "m = {m}, delta = {delta}, ratio = {ratio}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn limit_pmf_is_a_probability_law(m in 1usize..6, frac in 0.05f64..4.0) {
        let delta = -(m as f64) + frac * m as f64;
        let tau = pa_tau(m, delta).unwrap();
        let c = pa_c(m, delta).unwrap();
        let top = 200_000u64;
        let mut mass = 0.0;
        for k in m as u64..=top {
            let p = pa_limit_pmf(m, delta, k).unwrap();
            prop_assert!(p > 0.0);
            mass += p;
        }
        // The remaining tail is about c k^(1 - tau) / (tau - 1).
        let tail = c * (top as f64).powf(1.0 - tau) / (tau - 1.0);
        prop_assert!((mass + tail - 1.0).abs() < 1e-3 + 0.1 * tail, "mass {} tail {}", mass, tail);
    }

    #[test]
    fn expected_degree_properties(m in 1usize..5, frac in 0.05f64..3.0, n in 1usize..300) {
        let delta = -(m as f64) + frac * m as f64;
        let pm = PaMoments::new(m, delta).unwrap();
        let degs: Vec<f64> = (1..=n).map(|i| pm.expected_degree(i, n).unwrap()).collect();
        prop_assert!(degs.windows(2).all(|w| w[0] >= w[1] - 1e-12));
        let total: f64 = degs.iter().sum();
        let want = 2.0 * (m * n) as f64;
        prop_assert!((total - want).abs() <= 1e-9 * want);
        let newest = if n == 1 { 2.0 * m as f64 } else { m as f64 };
        prop_assert!((degs[n - 1] - newest).abs() < 1e-12);
    }

    #[test]
    fn variance_closed_form_matches_recursion(
        m in 1usize..5,
        frac in 0.05f64..3.0,
        i in 1usize..100,
        extra in 0usize..400,
    ) {
        let delta = -(m as f64) + frac * m as f64;
        let n = i + extra;
        let a = pa_degree_variance(m, delta, i, n).unwrap();
        let b = pa_degree_variance_recursive(m, delta, i, n).unwrap();
        prop_assert!(a >= -1e-12);
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "{} vs {}", a, b);
    }
}

#[test]
fn expected_degree_matches_simulation() {
    let (n, m, delta) = (300usize, 2usize, 0.5);
    let runs: Vec<Vec<u64>> = (0..400u64)
        .into_par_iter()
        .map(|s| {
            generate_pa(&PaParams {
                n,
                m,
                delta,
                seed: 11_000 + s,
            })
            .unwrap()
            .degrees
        })
        .collect();
    for &i in &[1usize, 3, 10, 50, 299] {
        let xs: Vec<f64> = runs.iter().map(|d| d[i] as f64).collect();
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let se = (pa_degree_variance(m, delta, i, n).unwrap() / xs.len() as f64).sqrt();
        let want = pa_expected_degree(m, delta, i, n).unwrap();
        assert!(
            (mean - want).abs() <= 4.0 * se,
            "i = {i}: {mean} vs {want} (se {se})"
        );
    }
}

#[test]
fn growth_factor_and_moment_edges() {
    let pm = PaMoments::new(2, 0.0).unwrap();
    assert_eq!(pm.expected_degree(1, 1).unwrap(), 4.0);
    assert_eq!(pm.variance(7, 7).unwrap(), 0.0);
    assert!(pm.expected_degree(0, 3).is_err());
    assert!(pm.expected_degree(4, 3).is_err());
    assert!(PaMoments::new(2, -2.0).is_err());
}

#[test]
fn hurwitz_zeta_known_values() {
    let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
    assert!((hurwitz_zeta(2.0, 1.0) - zeta2).abs() < 1e-12);
    assert!((hurwitz_zeta(2.0, 2.0) - (zeta2 - 1.0)).abs() < 1e-12);
    assert!((hurwitz_zeta(3.0, 1.0) - 1.202_056_903_159_594_3).abs() < 1e-12);
}

#[test]
fn power_law_fit_recovers_synthetic_exponents() {
    for &(tau, k_min) in &[(2.5f64, 5u64), (3.0, 5), (3.5, 10)] {
        let data = common::sample_discrete_power_law(17, 100_000, tau, k_min);
        let h = histogram_from_degrees(data);
        let fit = fit_power_law(&h, k_min).unwrap();
        assert!((fit.tau - tau).abs() / tau < 0.03, "tau {tau}: {fit:?}");
        assert!(fit.ks_distance < 0.02, "{fit:?}");
    }
}

#[test]
fn power_law_fit_errors() {
    let h = histogram_from_degrees([1u64, 1, 2]);
    assert!(fit_power_law(&h, 0).is_err());
    assert!(fit_power_law(&h, 9).is_err());
    assert!(fit_power_law(&h, 2).is_err());
    assert!(fit_power_law(&histogram_from_degrees([4u64, 4, 4]), 4).is_err());
    assert!(fit_power_law_auto(&histogram_from_degrees([1u64, 2]), 10).is_err());
}

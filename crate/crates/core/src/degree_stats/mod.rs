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

//! Degree distributions and the analytic laws used to check them.

mod binomial;
mod gof;
mod histogram;
mod pa_theory;
mod powerlaw;

pub use binomial::{binomial_pmf, ln_binomial_coefficient};
pub use gof::{chi_square_gof, chi_square_two_sample, ChiSquareTest};
pub use histogram::{histogram, histogram_from_degrees, DegreeHistogram, ModelDiagnostics};
pub use pa_theory::{
    pa_c, pa_degree_variance, pa_degree_variance_recursive, pa_expected_degree, pa_limit_pmf,
    pa_tau, PaMoments,
};
pub use powerlaw::{
    fit_power_law, fit_power_law_auto, hurwitz_zeta, PowerLawFit, DEFAULT_MIN_TAIL,
};

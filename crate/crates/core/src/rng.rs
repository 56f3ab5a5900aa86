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

//! Reproducible random streams.
//!
//! All stochastic code draws from ChaCha8 (`rand_chacha`), a counter-based
//! stream cipher generator whose output is identical on every platform. A
//! `u64` seed is expanded with `SeedableRng::seed_from_u64`; independent
//! sub-streams for parallel work are selected with `set_stream`, so results do
//! not depend on the number of worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GraphRng = ChaCha8Rng;

pub fn from_seed(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Stream `stream` of the generator family keyed by `seed`.
pub fn stream(seed: u64, stream: u64) -> GraphRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

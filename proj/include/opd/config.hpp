// Copyright 2026 The opdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace opd {

/// Budgets and tolerances for the discord searches.
///
/// Only the first five fields are part of the SearchConfig file format; the
/// rest are optional keys with the defaults below.
struct SearchConfig {
    int grid_points = 2000;      // Fibonacci-sphere directions for a qubit A side
    int refine_iters = 200;      // Nelder-Mead iterations per refinement
    int restarts = 4;            // best grid points that get refined
    std::uint64_t seed = 0x5EED;
    double tol_zero = 1e-6;      // discord values at or below this count as zero

    int unitary_samples = 5000;  // Haar samples when the A side has d >= 3
    int inner_starts = 16;       // multi-start count of the quantum inner problem
    int inner_sweeps = 3;        // block sweeps per inner start
    long max_family_checks = 1000000;
    int rotation_resolution = 24;

    bool operator==(const SearchConfig&) const = default;
};

}  // namespace opd

// Copyright 2026 The acham Authors
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
#include <map>
#include <random>
#include <string>

#include "acham/model.hpp"

namespace acham {

/// MT19937-64 (std::mt19937_64, whose output sequence is fixed by the C++
/// standard) with hand-rolled conversions so results do not depend on the
/// standard library's distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [0, bound).
    std::size_t below(std::size_t bound);
    /// Uniform point on the unit sphere.
    std::array<double, 3> unit_vector();

   private:
    std::mt19937_64 engine_;
};

struct GeneratorSpec {
    std::string family;
    std::map<std::string, std::string> params;
};

/// Families: tfim-chain (n, h), tfim-grid (rows, cols, h), triangle-figure
/// (weight), triangle-paper, random-near-commuting (n, m, eps, seed,
/// one_local).
Hamiltonian generate(const GeneratorSpec &spec);

/// -sum Z_i Z_{i+1} - h sum X_i on an open chain; field terms only for h > 0.
Hamiltonian tfim_chain(std::size_t n, double h);
Hamiltonian tfim_grid(std::size_t rows, std::size_t cols, double h);

/// The three-qubit triangle: X (x) |0><0| + w Z (x) |1><1| on (0,1),
/// |0><0| (x) X + w |1><1| (x) Z on (1,2), X (x) X on (0,2).
Hamiltonian triangle_figure(double weight = 0.01);
/// Reference commuting rounding of the triangle: X (x) |0><0|, X (x) X,
/// |0><0| (x) X.
Hamiltonian triangle_unweighted();

struct RandomNearCommutingOptions {
    std::size_t n = 6;
    /// Total number of terms, including `one_local` single-qubit ones.
    std::size_t m = 10;
    std::size_t one_local = 0;
    double eps_target = 1e-3;
    std::uint64_t seed = 1;
};

/// Terms diagonal in random per-qubit bases (so exactly commuting), each
/// perturbed by a random Hermitian operator of norm <= eps_target / 4.
Hamiltonian random_near_commuting(const RandomNearCommutingOptions &opt);

double realized_epsilon(const Hamiltonian &h);

}  // namespace acham

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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acham/io.hpp"
#include "acham/model.hpp"
#include "acham/rounding.hpp"

namespace acham {

/// Measured Gibbs trace distances are only computed up to this many qubits.
inline constexpr std::size_t kGibbsMeasureCap = 10;

struct PromiseInstance {
    Hamiltonian h;
    double a = 0.0;
    double b = 0.0;

    double gap() const {
        return b - a;
    }
    double relative_gap() const {
        return h.terms.empty() ? 0.0 : gap() / static_cast<double>(h.terms.size());
    }
};

PromiseInstance promise_from_json(const Json &doc);
Json promise_to_json(const PromiseInstance &p);

struct ReductionResult {
    PromiseInstance reduced;
    double eps = 0.0;
    /// 216 m eps^(1/6), added to a and subtracted from b.
    double shift = 0.0;
    RoundingReport report;
};

/// Rounds H and moves the thresholds inwards by 216 m eps^(1/6). Throws
/// GapCollapse (quoting the largest admissible eps) if a' >= b'.
ReductionResult reduce_promise(const PromiseInstance &inst, std::optional<double> eps = std::nullopt);

/// e^{-beta H} / Tr e^{-beta H}.
ComplexMatrix gibbs_state(const Hamiltonian &h, double beta);
/// ||rho - sigma||_1 for Hermitian arguments.
double trace_distance(const ComplexMatrix &rho, const ComplexMatrix &sigma);

struct GibbsCertificate {
    double beta = 0.0;
    double delta_target = 0.0;
    double eps = 0.0;
    std::size_t m = 0;
    double rounding_distance = 0.0;
    bool distance_exact = false;
    double continuity_bound = 0.0;
    /// ln(1 + delta/2) / (2 beta).
    double regime_threshold = 0.0;
    bool regime_ok = false;
    std::optional<double> measured_trace_distance;
    bool measured_within_bound = true;
};

GibbsCertificate certify_gibbs_reduction(const Hamiltonian &h, double beta, double delta,
                                         std::optional<double> eps = std::nullopt);
/// Same certificate for an already rounded pair.
GibbsCertificate certify_gibbs_pair(const Hamiltonian &h, const Hamiltonian &hhat, double eps, double beta,
                                    double delta);

/// prod_i exp(i h_i t), applied in stored term order. Throws Contract if the
/// terms do not commute to kCommuteTol.
ComplexMatrix commuting_evolution(const Hamiltonian &hc, double t);

struct EvolutionComparison {
    double t = 0.0;
    /// ||prod_i exp(i h_i t) - exp(i H t)||.
    double deviation = 0.0;
    /// ||U^dagger U - I|| for the product.
    double unitarity_defect = 0.0;
};

/// Compares the product formula against the dense exponential for several
/// times, sharing one eigendecomposition.
std::vector<EvolutionComparison> compare_evolution(const Hamiltonian &hc, std::span<const double> times);

struct SimulationSplit {
    Hamiltonian h_commuting;
    Hamiltonian delta;
    double eps = 0.0;
    double alpha_a = 0.0;
    bool alpha_a_exact = false;
    double alpha_b = 0.0;
    bool alpha_b_exact = false;
    double alpha_b_bound = 0.0;
    double t = 0.0;
    double t_block = 0.0;
    double cost_estimate = 0.0;
    std::string cost_formula;
};

SimulationSplit simulation_split(const Hamiltonian &h, double t, double t_block,
                                 std::optional<double> eps = std::nullopt);

Json gibbs_to_json(const GibbsCertificate &c);
Json split_to_json(const SimulationSplit &s);

}  // namespace acham

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
#include <string>
#include <vector>

#include "acham/io.hpp"
#include "acham/model.hpp"
#include "acham/rounding.hpp"

namespace acham {

/// Dense and iterative ground energies must agree to this.
inline constexpr double kEnergyTol = 1e-8;

struct CommutingCheck {
    bool commuting = true;
    double max_residual = 0.0;
};

/// Pairwise commutator audit built from Pauli-string actions, independent of
/// the model's embedding route.
CommutingCheck verify_commuting(const Hamiltonian &h, double tol = kCommuteTol);

struct GlobalDistance {
    double value = 0.0;
    /// False when n exceeds the dense cap and `value` is the summed per-term
    /// distances.
    bool exact = true;
};

GlobalDistance global_distance(const Hamiltonian &h, const Hamiltonian &hhat);

/// y = H x with H applied term by term.
void apply_hamiltonian(const Hamiltonian &h, const Eigen::VectorXcd &x, Eigen::VectorXcd &y);
/// Dense matrix assembled from Pauli-string actions.
ComplexMatrix dense_from_pauli_strings(const Hamiltonian &h);

double ground_energy_dense(const Hamiltonian &h);
/// Lanczos with full reorthogonalization and a fixed-seed start vector.
double ground_energy_lanczos(const Hamiltonian &h);
/// Dense value, after checking it against Lanczos to kEnergyTol.
double ground_energy(const Hamiltonian &h);

struct VerificationReport {
    double eps = 0.0;
    double realized_eps = 0.0;
    bool commuting = true;
    double max_residual = 0.0;
    std::vector<double> per_term_distances;
    double per_term_bound = 0.0;
    double distance_sum = 0.0;
    double global_distance = 0.0;
    bool global_exact = true;
    double global_bound = 0.0;
    std::optional<double> ground_energy_input;
    std::optional<double> ground_energy_output;
    double energy_shift_bound = 0.0;
    bool passed = true;
    std::vector<std::string> failures;
};

struct AuditOptions {
    /// Promised eps; the audit uses max(promised, realized).
    std::optional<double> eps;
    /// When given, its numbers are compared against the recomputed ones.
    const RoundingReport *report = nullptr;
    double commute_tol = kCommuteTol;
    /// Skip ground energies (they need two dense solves).
    bool energies = true;
};

VerificationReport audit_bounds(const Hamiltonian &h, const Hamiltonian &hhat, const AuditOptions &options = {});

Json verification_to_json(const VerificationReport &v);

}  // namespace acham

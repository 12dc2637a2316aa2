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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acham/io.hpp"
#include "acham/linalg.hpp"
#include "acham/model.hpp"
#include "acham/pauli.hpp"

namespace acham {

/// Residual commutator norms at or below this count as commuting.
inline constexpr double kCommuteTol = 1e-9;
/// Slack allowed when comparing measured distances against bounds.
inline constexpr double kBoundSlack = 1e-9;

struct StageParams {
    double eps2 = 0.0;
    double eta2 = 0.0;
    double eps1 = 0.0;
    double eta1 = 0.0;

    /// eta2 = eps^(1/3), eps1 = eps + 16 eta2, eta1 = sqrt(eps1).
    static StageParams from_epsilon(double eps);
};

/// 216 eps^(1/6).
double per_term_bound(double eps);

enum class TermStage { Kept2Local, Kept1Local, Kept0Local, SnappedTo1Local, SnappedTo0Local };
const char *stage_name(TermStage stage);

enum class PivotKind { Identity, OneLocalTerm, TwoLocalComponent };
const char *pivot_kind_name(PivotKind kind);

struct Pivot {
    std::size_t qubit = 0;
    PivotKind kind = PivotKind::Identity;
    /// Pauli coefficients of R_i (the identity for the marker).
    PauliCoeffs1 pauli{1.0, 0.0, 0.0, 0.0};
    double gap = 0.0;
    /// zeta_i: the gap certified for the pinching bound.
    double zeta = 1.0;
    /// max(zeta_i, 1e-12); the realized gap is never below this.
    double gap_floor = 0.0;
    double kappa = 0.0;
    std::optional<std::size_t> source_term;
    std::optional<PauliIndex> source_alpha;
    /// Largest ||[R_i (x) I, h]|| over snapped terms h on the qubit.
    double contract_residual = 0.0;

    bool is_identity() const {
        return kind == PivotKind::Identity;
    }
    Mat2 op() const {
        return matrix_from_pauli(pauli);
    }
};

/// A term after the two snapping stages. `effective` may have shrunk support
/// (2-local snapped to 1-local, or to a constant).
struct SnappedTerm {
    LocalTerm input;
    LocalTerm effective;
    TermStage stage = TermStage::Kept2Local;
    double snap_distance = 0.0;
    double stage_bound = 0.0;
};

struct SnappedHamiltonian {
    std::size_t n = 0;
    StageParams params;
    std::vector<SnappedTerm> terms;
};

struct TermReport {
    std::vector<std::size_t> support;
    TermStage stage = TermStage::Kept2Local;
    double snap_distance = 0.0;
    double stage_bound = 0.0;
    double pinch_distance = 0.0;
    double pinch_bound = 0.0;
    double distance_to_input = 0.0;
    double bound = 0.0;
};

struct RoundingReport {
    double eps = 0.0;
    bool eps_overridden = false;
    StageParams params;
    std::vector<TermReport> per_term;
    std::vector<Pivot> pivots;
    double per_term_bound = 0.0;
    double global_distance_bound = 0.0;
    /// Sum of per-term distances, an upper bound on ||H - Hhat||.
    double distance_sum = 0.0;
    double max_residual_commutator = 0.0;
    bool bounds_satisfied = true;
    std::vector<std::string> violations;
};

struct RoundingResult {
    Hamiltonian rounded;
    RoundingReport report;
};

/// Pi B Pi + (I - Pi) B (I - Pi) with Pi the low eigenprojector of A.
Mat2 pinch(const Mat2 &b, const Mat2 &a);
/// lambda_max(B) I.
Mat2 snap(const Mat2 &b);

/// Replaces every component about `weak_qubit` by its snap, leaving a 1-local
/// term on the other qubit.
LocalTerm snap_term_to_1local(const LocalTerm &term, std::size_t weak_qubit, double eta);

/// Stages 1-3: partition by two-sided eta2-gappedness, snap ungapped 2-local
/// terms to 1-local, snap eta1-ungapped 1-local terms to constants.
SnappedHamiltonian snap_stages(const Hamiltonian &h, const StageParams &params);

std::vector<Pivot> select_pivots(const SnappedHamiltonian &h_snap);

/// Pinches a term on each qubit of its support whose pivot is not the identity.
LocalTerm pinch_term(const LocalTerm &t, const std::vector<Pivot> &pivots);
Hamiltonian global_pinch(const Hamiltonian &h, const std::vector<Pivot> &pivots);

/// Rounds to a commuting Hamiltonian with the same supports. eps defaults to
/// the realized commutator profile maximum.
RoundingResult round(const Hamiltonian &h, std::optional<double> eps_override = std::nullopt);

Json report_to_json(const RoundingReport &report);
Json pivot_to_json(const Pivot &p);

}  // namespace acham

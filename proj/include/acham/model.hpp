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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "acham/linalg.hpp"
#include "acham/pauli.hpp"

namespace acham {

/// Terms may exceed unit norm by this much before ingestion rejects them.
inline constexpr double kNormSlack = 1e-9;

/// A Hamiltonian term on 0, 1 or 2 qubits, stored as real Pauli coefficients.
/// Layout of `coeffs`: 2-local c[4a+b] for sigma^a (x) sigma^b (lower qubit
/// left); 1-local c[a]; 0-local c[0].
struct LocalTerm {
    std::array<std::size_t, 2> qubits{0, 0};
    std::size_t arity = 0;
    std::array<double, 16> coeffs{};

    static LocalTerm constant(double value);
    static LocalTerm one_local(std::size_t q, const PauliCoeffs1 &c);
    /// Qubits are sorted; coefficients are transposed if i > j.
    static LocalTerm two_local(std::size_t i, std::size_t j, const PauliCoeffs2 &c);

    std::span<const std::size_t> support() const {
        return {qubits.data(), arity};
    }
    bool acts_on(std::size_t q) const;

    PauliCoeffs1 coeffs1() const;
    PauliCoeffs2 coeffs2() const;

    bool operator==(const LocalTerm &other) const = default;
};

/// Lexicographic order on supports: {} < {0} < {0,1} < {0,2} < {1} < ...
bool support_less(const LocalTerm &a, const LocalTerm &b);

struct Hamiltonian {
    std::size_t n = 0;
    std::vector<LocalTerm> terms;

    std::size_t m() const {
        return terms.size();
    }
    /// For each qubit, indices of terms whose support contains it.
    std::vector<std::vector<std::size_t>> terms_on_qubits() const;
    /// Interaction graph edges, one per 2-local term.
    std::vector<std::array<std::size_t, 2>> edges() const;
};

/// Validates indices, sorts terms by support, merges duplicate supports and
/// (unless disabled, e.g. for rounded outputs) enforces ||h|| <= 1 on the
/// merged terms.
Hamiltonian ingest_terms(std::size_t n, std::vector<LocalTerm> terms, bool enforce_unit_norm = true);

/// Dense 1x1, 2x2 or 4x4 matrix of the term on its own support.
ComplexMatrix term_matrix(const LocalTerm &t);
double term_norm(const LocalTerm &t);

/// ||a - b|| for two terms; `b` may be of lower arity as long as its support
/// is contained in `a`'s.
double term_distance(const LocalTerm &a, const LocalTerm &b);

/// Re-expresses `t` on a superset support (identity padding).
LocalTerm lift_to_support(const LocalTerm &t, std::span<const std::size_t> support);

double pairwise_commutator_norm(const LocalTerm &h1, const LocalTerm &h2);

/// propagation_check for two 2-local terms sharing exactly one qubit.
double propagation_check(const LocalTerm &h1, const LocalTerm &h2);

struct CommutatorProfile {
    struct Entry {
        std::size_t first = 0;
        std::size_t second = 0;
        double norm = 0.0;
    };
    /// Overlapping pairs only, first < second; disjoint pairs are 0.
    std::vector<Entry> pairwise;
    double epsilon = 0.0;

    double at(std::size_t i, std::size_t j) const;
};

CommutatorProfile commutator_profile(const Hamiltonian &h);

/// Full 2^n x 2^n matrix; n is capped at kDenseQubitCap.
ComplexMatrix dense_matrix(const Hamiltonian &h);

}  // namespace acham

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
#include <optional>

#include "acham/linalg.hpp"

namespace acham {

/// Index into {I, X, Y, Z}.
using PauliIndex = int;

/// sigma^(alpha). Throws IndexRange for alpha outside 0..3.
const Mat2 &pauli_basis(PauliIndex alpha);

/// Real Pauli coefficients of a 2-qubit operator: c[a][b] multiplies
/// sigma^a (x) sigma^b, left factor first.
using PauliCoeffs2 = std::array<std::array<double, 4>, 4>;
/// Real Pauli coefficients of a 1-qubit operator: c[0] I + c[1] X + c[2] Y + c[3] Z.
using PauliCoeffs1 = std::array<double, 4>;

Mat2 matrix_from_pauli(const PauliCoeffs1 &c);
Mat4 matrix_from_pauli(const PauliCoeffs2 &c);
/// Pauli coefficients Tr[(sigma^a (x) sigma^b) M] / 4; imaginary parts (present
/// only for non-Hermitian M) are discarded.
PauliCoeffs2 pauli_coefficients(const Mat4 &m);
PauliCoeffs1 pauli_coefficients(const Mat2 &m);

/// Which tensor factor of a 4x4 term the decomposition is taken about.
enum class Side { Left, Right };

struct LocalDecomposition {
    std::size_t about_qubit = 0;
    std::size_t partner_qubit = 1;
    Side about = Side::Left;
    /// components[alpha] acts on the `about` factor and multiplies
    /// sigma^(alpha) on the partner factor.
    std::array<Mat2, 4> components{};

    Mat4 reconstruct() const;
};

/// Decomposes a Hermitian 4x4 term as sum_alpha A^(alpha) (x) sigma^(alpha)
/// with A^(alpha) = 1/2 Tr_partner[(I (x) sigma^(alpha)) term] (factors
/// swapped when `about` is Right).
LocalDecomposition decompose_about(const Mat4 &term, Side about, std::size_t about_qubit = 0,
                                   std::size_t partner_qubit = 1);

/// Components from Pauli coefficients without forming matrices: entry alpha is
/// the coefficient vector of A^(alpha).
std::array<PauliCoeffs1, 4> components_about(const PauliCoeffs2 &c, Side about);

double spectral_gap(const Mat2 &h);
/// Gap of c[0] I + c[1..3] . sigma, i.e. 2 |c[1..3]|.
double spectral_gap(const PauliCoeffs1 &c);
/// Largest eigenvalue of c[0] I + c[1..3] . sigma.
double lambda_max(const PauliCoeffs1 &c);

struct GapWitness {
    bool gapped = false;
    std::optional<PauliIndex> witness;
    double max_gap = 0.0;
};

/// Index of the component with the largest gap; values within a relative
/// 1e-12 of the maximum count as tied and the smallest index wins.
PauliIndex max_gap_component(const std::array<double, 4> &gaps);

GapWitness is_gapped(const Mat4 &term, Side about, double eta);
GapWitness is_gapped(const PauliCoeffs2 &c, Side about, double eta);

/// max over alpha, beta of ||[A^(alpha), B^(beta)]|| for the components of two
/// terms about their shared qubit.
double propagation_check(const Mat4 &term1, Side shared_in_1, const Mat4 &term2, Side shared_in_2);

}  // namespace acham

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

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace acham {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<Complex, 8, 8>;

/// Entrywise tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermiticityTol = 1e-10;
/// 2x2 spectra with a gap below this are treated as degenerate.
inline constexpr double kDegenerateGap = 1e-12;
/// Largest qubit count for which dense 2^n x 2^n operators are built.
inline constexpr std::size_t kDenseQubitCap = 12;

/// Eigen-resolution of a Hermitian 2x2 matrix.
struct SpectralDecomposition2 {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    Mat2 projector_min = Mat2::Zero();
    Mat2 projector_max = Mat2::Zero();

    double gap() const {
        return lambda_max - lambda_min;
    }
    Mat2 reconstruct() const {
        return lambda_min * projector_min + lambda_max * projector_max;
    }
};

struct HermitianEig {
    Eigen::VectorXd values;  // ascending
    ComplexMatrix vectors;   // columns
};

double max_hermiticity_defect(const ComplexMatrix &m);

/// Throws Hermiticity if `m` is not Hermitian to kHermiticityTol, otherwise
/// returns (m + m^dagger) / 2.
ComplexMatrix require_hermitian(const ComplexMatrix &m);
Mat2 require_hermitian(const Mat2 &m);

double operator_norm(const ComplexMatrix &m);
double operator_norm(const Mat2 &m);

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

SpectralDecomposition2 spectral_decompose_2x2(const Mat2 &h);

HermitianEig hermitian_eig(const ComplexMatrix &h);
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &h);

/// exp(scale * m). Hermitian inputs go through an eigendecomposition, so
/// exp(i t H) comes out unitary to machine precision for large |t|.
ComplexMatrix matrix_exponential(const ComplexMatrix &m, Complex scale);

enum class KeepFactor { First, Second };

/// Partial trace of an operator on C^d1 (x) C^d2, keeping one factor.
ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t d1, std::size_t d2, KeepFactor keep);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Lifts `local` (acting on `support`, first tensor factor = support[0]) to
/// the full register of `n` qubits. Qubit 0 is the leftmost tensor factor.
ComplexMatrix embed_on_qubits(const ComplexMatrix &local, std::span<const std::size_t> support, std::size_t n);

/// Adds `local` embedded on `support` into an existing 2^n x 2^n matrix.
void accumulate_embedded(ComplexMatrix &target, const ComplexMatrix &local, std::span<const std::size_t> support,
                         std::size_t n);

}  // namespace acham

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

#include "acham/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "acham/errors.hpp"

namespace acham {

namespace {

constexpr std::size_t kDenseDimCap = std::size_t{1} << kDenseQubitCap;

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::Dimension, std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + ", expected square");
    }
}

void require_dense_cap(const ComplexMatrix &m, const char *what) {
    if (static_cast<std::size_t>(m.rows()) > kDenseDimCap) {
        throw Error(ErrorKind::SizeCap, std::string(what) + ": dimension " + std::to_string(m.rows()) +
                                            " exceeds the dense cap 2^" + std::to_string(kDenseQubitCap));
    }
}

// Hermitian up to accumulated rounding in products/sums; used only to pick the
// eigenvalue route, never to accept user input.
bool numerically_hermitian(const ComplexMatrix &m) {
    double scale = 1.0;
    if (m.size() > 0) {
        scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    }
    return max_hermiticity_defect(m) <= 1e-13 * scale;
}

}  // namespace

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Dimension:
            return "dimension error";
        case ErrorKind::Hermiticity:
            return "hermiticity error";
        case ErrorKind::SizeCap:
            return "size cap exceeded";
        case ErrorKind::IndexRange:
            return "index out of range";
        case ErrorKind::Schema:
            return "schema violation";
        case ErrorKind::NormViolation:
            return "norm violation";
        case ErrorKind::Regime:
            return "out of regime";
        case ErrorKind::DegeneratePivot:
            return "degenerate pivot";
        case ErrorKind::GapPrecondition:
            return "gap precondition violated";
        case ErrorKind::GapCollapse:
            return "promise gap collapsed";
        case ErrorKind::Contract:
            return "contract violation";
        case ErrorKind::Invariant:
            return "invariant violation";
    }
    return "error";
}

double max_hermiticity_defect(const ComplexMatrix &m) {
    require_square(m, "hermiticity check");
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix require_hermitian(const ComplexMatrix &m) {
    double defect = max_hermiticity_defect(m);
    if (!(defect <= kHermiticityTol)) {
        throw Error(ErrorKind::Hermiticity, "entrywise defect " + std::to_string(defect) + " exceeds tolerance");
    }
    return (m + m.adjoint()) * 0.5;
}

Mat2 require_hermitian(const Mat2 &m) {
    double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(defect <= kHermiticityTol)) {
        throw Error(ErrorKind::Hermiticity, "entrywise defect " + std::to_string(defect) + " exceeds tolerance");
    }
    return (m + m.adjoint()) * 0.5;
}

double operator_norm(const ComplexMatrix &m) {
    require_square(m, "operator_norm");
    if (m.size() == 0) {
        return 0.0;
    }
    if (m.rows() == 2) {
        return operator_norm(Mat2(m));
    }
    if (numerically_hermitian(m)) {
        Eigen::VectorXd ev = hermitian_eigenvalues((m + m.adjoint()) * 0.5);
        return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double operator_norm(const Mat2 &m) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0) {
        // c0 I + r . sigma has eigenvalues c0 +- r.
        double c0 = 0.5 * (m(0, 0).real() + m(1, 1).real());
        double rz = 0.5 * (m(0, 0).real() - m(1, 1).real());
        double r = std::hypot(std::abs(m(0, 1)), rz);
        return std::abs(c0) + r;
    }
    // The trace/determinant closed form cancels badly when the singular
    // values nearly coincide.
    return Eigen::JacobiSVD<Mat2>(m).singularValues()(0);
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "commutator");
    require_square(b, "commutator");
    if (a.rows() != b.rows()) {
        throw Error(ErrorKind::Dimension, "commutator: operands are " + std::to_string(a.rows()) + " and " +
                                              std::to_string(b.rows()) + " dimensional");
    }
    return a * b - b * a;
}

SpectralDecomposition2 spectral_decompose_2x2(const Mat2 &input) {
    Mat2 h = require_hermitian(input);
    // h = c0 I + r . sigma
    double c0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    double rx = h(0, 1).real();
    double ry = -h(0, 1).imag();
    double rz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    double r = std::sqrt(rx * rx + ry * ry + rz * rz);

    SpectralDecomposition2 out;
    out.lambda_min = c0 - r;
    out.lambda_max = c0 + r;
    if (2.0 * r < kDegenerateGap) {
        out.projector_max << 1, 0, 0, 0;
        out.projector_min << 0, 0, 0, 1;
        return out;
    }
    double nx = rx / r, ny = ry / r, nz = rz / r;
    // (I + n . sigma) / 2 projects onto the +r eigenvector.
    out.projector_max << 0.5 * (1 + nz), Complex(0.5 * nx, -0.5 * ny), Complex(0.5 * nx, 0.5 * ny), 0.5 * (1 - nz);
    out.projector_min = Mat2::Identity() - out.projector_max;
    return out;
}

HermitianEig hermitian_eig(const ComplexMatrix &h) {
    require_square(h, "hermitian_eig");
    require_dense_cap(h, "hermitian_eig");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(require_hermitian(h));
    return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &h) {
    require_square(h, "hermitian_eigenvalues");
    require_dense_cap(h, "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(require_hermitian(h), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

ComplexMatrix matrix_exponential(const ComplexMatrix &m, Complex scale) {
    require_square(m, "matrix_exponential");
    require_dense_cap(m, "matrix_exponential");
    if (m.size() == 0) {
        return m;
    }
    if (numerically_hermitian(m)) {
        HermitianEig eig = hermitian_eig((m + m.adjoint()) * 0.5);
        Eigen::VectorXcd phases(eig.values.size());
        for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
            phases(k) = std::exp(scale * eig.values(k));
        }
        return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
    }
    ComplexMatrix scaled = scale * m;
    return scaled.exp();
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t d1, std::size_t d2, KeepFactor keep) {
    require_square(m, "partial_trace");
    if (d1 == 0 || d2 == 0 || static_cast<std::size_t>(m.rows()) != d1 * d2) {
        throw Error(ErrorKind::Dimension, "partial_trace: dimension " + std::to_string(m.rows()) +
                                              " does not factor as " + std::to_string(d1) + "*" + std::to_string(d2));
    }
    const auto n1 = static_cast<Eigen::Index>(d1);
    const auto n2 = static_cast<Eigen::Index>(d2);
    if (keep == KeepFactor::First) {
        ComplexMatrix out = ComplexMatrix::Zero(n1, n1);
        for (Eigen::Index i = 0; i < n1; ++i) {
            for (Eigen::Index j = 0; j < n1; ++j) {
                for (Eigen::Index k = 0; k < n2; ++k) {
                    out(i, j) += m(i * n2 + k, j * n2 + k);
                }
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(n2, n2);
    for (Eigen::Index k = 0; k < n2; ++k) {
        for (Eigen::Index l = 0; l < n2; ++l) {
            for (Eigen::Index i = 0; i < n1; ++i) {
                out(k, l) += m(i * n2 + k, i * n2 + l);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void accumulate_embedded(ComplexMatrix &target, const ComplexMatrix &local, std::span<const std::size_t> support,
                         std::size_t n) {
    if (n > kDenseQubitCap) {
        throw Error(ErrorKind::SizeCap,
                    "embed: " + std::to_string(n) + " qubits exceeds dense cap " + std::to_string(kDenseQubitCap));
    }
    const std::size_t k = support.size();
    if (static_cast<std::size_t>(local.rows()) != (std::size_t{1} << k) || local.rows() != local.cols()) {
        throw Error(ErrorKind::Dimension, "embed: local operator dimension does not match support size");
    }
    std::size_t support_mask = 0;
    for (std::size_t q : support) {
        if (q >= n) {
            throw Error(ErrorKind::IndexRange, "embed: qubit " + std::to_string(q) + " >= n=" + std::to_string(n));
        }
        std::size_t bit = std::size_t{1} << (n - 1 - q);
        if (support_mask & bit) {
            throw Error(ErrorKind::IndexRange, "embed: qubit " + std::to_string(q) + " repeated in support");
        }
        support_mask |= bit;
    }
    const std::size_t dim = std::size_t{1} << n;
    if (static_cast<std::size_t>(target.rows()) != dim || target.rows() != target.cols()) {
        throw Error(ErrorKind::Dimension, "embed: target is not 2^n x 2^n");
    }

    // Global bit pattern for every local basis index.
    const std::size_t ldim = std::size_t{1} << k;
    std::vector<std::size_t> pattern(ldim, 0);
    for (std::size_t l = 0; l < ldim; ++l) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((l >> (k - 1 - t)) & 1) {
                pattern[l] |= std::size_t{1} << (n - 1 - support[t]);
            }
        }
    }
    for (std::size_t rest = 0; rest < dim; ++rest) {
        if (rest & support_mask) {
            continue;
        }
        for (std::size_t lr = 0; lr < ldim; ++lr) {
            const auto row = static_cast<Eigen::Index>(rest | pattern[lr]);
            for (std::size_t lc = 0; lc < ldim; ++lc) {
                const Complex v = local(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
                if (v != Complex(0.0, 0.0)) {
                    target(row, static_cast<Eigen::Index>(rest | pattern[lc])) += v;
                }
            }
        }
    }
}

ComplexMatrix embed_on_qubits(const ComplexMatrix &local, std::span<const std::size_t> support, std::size_t n) {
    if (n > kDenseQubitCap) {
        throw Error(ErrorKind::SizeCap,
                    "embed: " + std::to_string(n) + " qubits exceeds dense cap " + std::to_string(kDenseQubitCap));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    accumulate_embedded(out, local, support, n);
    return out;
}

}  // namespace acham

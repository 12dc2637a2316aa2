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

#include "acham/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acham/errors.hpp"

namespace acham {

namespace {

const std::array<Mat2, 4> &basis_table() {
    static const std::array<Mat2, 4> table = [] {
        const Complex i(0.0, 1.0);
        std::array<Mat2, 4> t;
        t[0] << 1, 0, 0, 1;
        t[1] << 0, 1, 1, 0;
        t[2] << 0, -i, i, 0;
        t[3] << 1, 0, 0, -1;
        return t;
    }();
    return table;
}

Mat4 kron2(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
        }
    }
    return out;
}

}  // namespace

const Mat2 &pauli_basis(PauliIndex alpha) {
    if (alpha < 0 || alpha > 3) {
        throw Error(ErrorKind::IndexRange, "pauli index " + std::to_string(alpha) + " outside 0..3");
    }
    return basis_table()[static_cast<std::size_t>(alpha)];
}

Mat2 matrix_from_pauli(const PauliCoeffs1 &c) {
    const Complex i(0.0, 1.0);
    Mat2 m;
    m << c[0] + c[3], c[1] - i * c[2], c[1] + i * c[2], c[0] - c[3];
    return m;
}

Mat4 matrix_from_pauli(const PauliCoeffs2 &c) {
    Mat4 out = Mat4::Zero();
    for (int a = 0; a < 4; ++a) {
        PauliCoeffs1 row{c[a][0], c[a][1], c[a][2], c[a][3]};
        if (row == PauliCoeffs1{0, 0, 0, 0}) {
            continue;
        }
        out += kron2(pauli_basis(a), matrix_from_pauli(row));
    }
    return out;
}

PauliCoeffs2 pauli_coefficients(const Mat4 &m) {
    PauliCoeffs2 c{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            c[a][b] = (kron2(pauli_basis(a), pauli_basis(b)) * m).trace().real() / 4.0;
        }
    }
    return c;
}

PauliCoeffs1 pauli_coefficients(const Mat2 &m) {
    PauliCoeffs1 c{};
    for (int a = 0; a < 4; ++a) {
        c[a] = (pauli_basis(a) * m).trace().real() / 2.0;
    }
    return c;
}

Mat4 LocalDecomposition::reconstruct() const {
    Mat4 out = Mat4::Zero();
    for (int alpha = 0; alpha < 4; ++alpha) {
        const Mat2 &comp = components[static_cast<std::size_t>(alpha)];
        out += about == Side::Left ? kron2(comp, pauli_basis(alpha)) : kron2(pauli_basis(alpha), comp);
    }
    return out;
}

LocalDecomposition decompose_about(const Mat4 &input, Side about, std::size_t about_qubit,
                                   std::size_t partner_qubit) {
    const Mat4 term = Mat4(require_hermitian(ComplexMatrix(input)));
    LocalDecomposition out;
    out.about = about;
    out.about_qubit = about_qubit;
    out.partner_qubit = partner_qubit;
    const Mat2 id = Mat2::Identity();
    for (int alpha = 0; alpha < 4; ++alpha) {
        const Mat2 &s = pauli_basis(alpha);
        ComplexMatrix weighted;
        ComplexMatrix reduced;
        if (about == Side::Left) {
            weighted = kron2(id, s) * term;
            reduced = partial_trace(weighted, 2, 2, KeepFactor::First);
        } else {
            weighted = kron2(s, id) * term;
            reduced = partial_trace(weighted, 2, 2, KeepFactor::Second);
        }
        out.components[static_cast<std::size_t>(alpha)] = Mat2(reduced) * 0.5;
    }
    return out;
}

std::array<PauliCoeffs1, 4> components_about(const PauliCoeffs2 &c, Side about) {
    std::array<PauliCoeffs1, 4> comps{};
    for (int alpha = 0; alpha < 4; ++alpha) {
        for (int k = 0; k < 4; ++k) {
            comps[alpha][k] = about == Side::Left ? c[k][alpha] : c[alpha][k];
        }
    }
    return comps;
}

double spectral_gap(const Mat2 &h) {
    return spectral_decompose_2x2(h).gap();
}

double spectral_gap(const PauliCoeffs1 &c) {
    return 2.0 * std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
}

double lambda_max(const PauliCoeffs1 &c) {
    return c[0] + 0.5 * spectral_gap(c);
}

PauliIndex max_gap_component(const std::array<double, 4> &gaps) {
    double best = *std::max_element(gaps.begin(), gaps.end());
    for (int alpha = 0; alpha < 4; ++alpha) {
        if (gaps[alpha] >= best - 1e-12 * best) {
            return alpha;
        }
    }
    return 0;
}

namespace {

GapWitness witness_from_gaps(const std::array<double, 4> &gaps, double eta) {
    GapWitness w;
    PauliIndex best = max_gap_component(gaps);
    w.max_gap = gaps[best];
    w.gapped = w.max_gap >= eta;
    if (w.gapped) {
        w.witness = best;
    }
    return w;
}

}  // namespace

GapWitness is_gapped(const Mat4 &term, Side about, double eta) {
    LocalDecomposition d = decompose_about(term, about);
    std::array<double, 4> gaps{};
    for (int alpha = 0; alpha < 4; ++alpha) {
        gaps[alpha] = spectral_gap(d.components[alpha]);
    }
    return witness_from_gaps(gaps, eta);
}

GapWitness is_gapped(const PauliCoeffs2 &c, Side about, double eta) {
    auto comps = components_about(c, about);
    std::array<double, 4> gaps{};
    for (int alpha = 0; alpha < 4; ++alpha) {
        gaps[alpha] = spectral_gap(comps[alpha]);
    }
    return witness_from_gaps(gaps, eta);
}

double propagation_check(const Mat4 &term1, Side shared_in_1, const Mat4 &term2, Side shared_in_2) {
    LocalDecomposition d1 = decompose_about(term1, shared_in_1);
    LocalDecomposition d2 = decompose_about(term2, shared_in_2);
    double worst = 0.0;
    for (const Mat2 &a : d1.components) {
        for (const Mat2 &b : d2.components) {
            Mat2 comm = a * b - b * a;
            worst = std::max(worst, operator_norm(comm));
        }
    }
    return worst;
}

}  // namespace acham

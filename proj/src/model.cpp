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

#include "acham/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "acham/errors.hpp"

namespace acham {

LocalTerm LocalTerm::constant(double value) {
    LocalTerm t;
    t.arity = 0;
    t.coeffs[0] = value;
    return t;
}

LocalTerm LocalTerm::one_local(std::size_t q, const PauliCoeffs1 &c) {
    LocalTerm t;
    t.arity = 1;
    t.qubits = {q, 0};
    for (int a = 0; a < 4; ++a) {
        t.coeffs[a] = c[a];
    }
    return t;
}

LocalTerm LocalTerm::two_local(std::size_t i, std::size_t j, const PauliCoeffs2 &c) {
    if (i == j) {
        throw Error(ErrorKind::IndexRange, "2-local term on repeated qubit " + std::to_string(i));
    }
    LocalTerm t;
    t.arity = 2;
    t.qubits = {std::min(i, j), std::max(i, j)};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            t.coeffs[4 * a + b] = i < j ? c[a][b] : c[b][a];
        }
    }
    return t;
}

bool LocalTerm::acts_on(std::size_t q) const {
    for (std::size_t k = 0; k < arity; ++k) {
        if (qubits[k] == q) {
            return true;
        }
    }
    return false;
}

PauliCoeffs1 LocalTerm::coeffs1() const {
    return {coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
}

PauliCoeffs2 LocalTerm::coeffs2() const {
    PauliCoeffs2 c{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            c[a][b] = coeffs[4 * a + b];
        }
    }
    return c;
}

bool support_less(const LocalTerm &a, const LocalTerm &b) {
    auto sa = a.support();
    auto sb = b.support();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::vector<std::vector<std::size_t>> Hamiltonian::terms_on_qubits() const {
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        for (std::size_t q : terms[t].support()) {
            out[q].push_back(t);
        }
    }
    return out;
}

std::vector<std::array<std::size_t, 2>> Hamiltonian::edges() const {
    std::vector<std::array<std::size_t, 2>> out;
    for (const LocalTerm &t : terms) {
        if (t.arity == 2) {
            out.push_back(t.qubits);
        }
    }
    return out;
}

namespace {

std::string describe_support(const LocalTerm &t) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < t.arity; ++k) {
        os << (k ? "," : "") << t.qubits[k];
    }
    os << "}";
    return os.str();
}

}  // namespace

Hamiltonian ingest_terms(std::size_t n, std::vector<LocalTerm> terms, bool enforce_unit_norm) {
    for (LocalTerm &t : terms) {
        if (t.arity > 2) {
            throw Error(ErrorKind::Schema, "terms act on at most two qubits");
        }
        for (double c : t.coeffs) {
            if (!std::isfinite(c)) {
                throw Error(ErrorKind::Schema, "non-finite coefficient in term on " + describe_support(t));
            }
        }
        for (std::size_t q : t.support()) {
            if (q >= n) {
                throw Error(ErrorKind::IndexRange,
                            "term on " + describe_support(t) + " uses qubit >= n=" + std::to_string(n));
            }
        }
        if (t.arity == 2 && t.qubits[0] > t.qubits[1]) {
            t = LocalTerm::two_local(t.qubits[0], t.qubits[1], t.coeffs2());
        } else if (t.arity == 2 && t.qubits[0] == t.qubits[1]) {
            throw Error(ErrorKind::IndexRange, "term on " + describe_support(t) + " repeats a qubit");
        }
        // Unused slots are zero so equal terms compare equal.
        if (t.arity < 2) {
            t.qubits[1] = 0;
            std::fill(t.coeffs.begin() + (t.arity == 1 ? 4 : 1), t.coeffs.end(), 0.0);
        }
        if (t.arity == 0) {
            t.qubits[0] = 0;
        }
    }
    std::stable_sort(terms.begin(), terms.end(), support_less);

    Hamiltonian h;
    h.n = n;
    for (const LocalTerm &t : terms) {
        if (!h.terms.empty() && !support_less(h.terms.back(), t)) {
            LocalTerm &last = h.terms.back();
            for (std::size_t k = 0; k < last.coeffs.size(); ++k) {
                last.coeffs[k] += t.coeffs[k];
            }
        } else {
            h.terms.push_back(t);
        }
    }
    for (const LocalTerm &t : h.terms) {
        if (!enforce_unit_norm) {
            break;
        }
        double norm = term_norm(t);
        if (norm > 1.0 + kNormSlack) {
            std::ostringstream os;
            os.precision(17);
            os << "term on " << describe_support(t) << " has norm " << norm << " > 1";
            throw Error(ErrorKind::NormViolation, os.str());
        }
    }
    return h;
}

ComplexMatrix term_matrix(const LocalTerm &t) {
    switch (t.arity) {
        case 0:
            return ComplexMatrix::Constant(1, 1, Complex(t.coeffs[0], 0.0));
        case 1:
            return matrix_from_pauli(t.coeffs1());
        default:
            return matrix_from_pauli(t.coeffs2());
    }
}

double term_norm(const LocalTerm &t) {
    switch (t.arity) {
        case 0:
            return std::abs(t.coeffs[0]);
        case 1: {
            PauliCoeffs1 c = t.coeffs1();
            return std::abs(c[0]) + 0.5 * spectral_gap(c);
        }
        default: {
            Eigen::SelfAdjointEigenSolver<Mat4> es(matrix_from_pauli(t.coeffs2()), Eigen::EigenvaluesOnly);
            return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(3)));
        }
    }
}

LocalTerm lift_to_support(const LocalTerm &t, std::span<const std::size_t> support) {
    for (std::size_t q : t.support()) {
        if (std::find(support.begin(), support.end(), q) == support.end()) {
            throw Error(ErrorKind::Dimension, "lift: term support is not contained in the target support");
        }
    }
    if (support.size() == t.arity) {
        return t;
    }
    if (support.size() == 1) {
        return LocalTerm::one_local(support[0], {t.coeffs[0], 0, 0, 0});
    }
    if (support.size() != 2) {
        throw Error(ErrorKind::Dimension, "lift: target support must have at most two qubits");
    }
    PauliCoeffs2 c{};
    if (t.arity == 0) {
        c[0][0] = t.coeffs[0];
    } else if (t.qubits[0] == std::min(support[0], support[1])) {
        for (int a = 0; a < 4; ++a) {
            c[a][0] = t.coeffs[a];
        }
    } else {
        for (int b = 0; b < 4; ++b) {
            c[0][b] = t.coeffs[b];
        }
    }
    return LocalTerm::two_local(std::min(support[0], support[1]), std::max(support[0], support[1]), c);
}

double term_distance(const LocalTerm &a, const LocalTerm &b) {
    LocalTerm lb = lift_to_support(b, a.support());
    LocalTerm diff = a;
    for (std::size_t k = 0; k < diff.coeffs.size(); ++k) {
        diff.coeffs[k] -= lb.coeffs[k];
    }
    return term_norm(diff);
}

double pairwise_commutator_norm(const LocalTerm &h1, const LocalTerm &h2) {
    std::vector<std::size_t> joint;
    bool overlap = false;
    for (std::size_t q : h1.support()) {
        joint.push_back(q);
        overlap = overlap || h2.acts_on(q);
    }
    if (!overlap) {
        return 0.0;
    }
    for (std::size_t q : h2.support()) {
        if (!h1.acts_on(q)) {
            joint.push_back(q);
        }
    }
    std::sort(joint.begin(), joint.end());
    auto local_positions = [&](const LocalTerm &t) {
        std::vector<std::size_t> pos;
        for (std::size_t q : t.support()) {
            pos.push_back(static_cast<std::size_t>(std::find(joint.begin(), joint.end(), q) - joint.begin()));
        }
        return pos;
    };
    const std::size_t k = joint.size();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << k);
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
    accumulate_embedded(a, term_matrix(h1), local_positions(h1), k);
    accumulate_embedded(b, term_matrix(h2), local_positions(h2), k);
    ComplexMatrix comm = a * b - b * a;
    if (comm.squaredNorm() == 0.0) {
        return 0.0;
    }
    // i[A,B] is Hermitian for Hermitian A, B.
    ComplexMatrix herm = Complex(0.0, 1.0) * comm;
    herm = (herm + herm.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(dim - 1)));
}

double propagation_check(const LocalTerm &h1, const LocalTerm &h2) {
    if (h1.arity != 2 || h2.arity != 2) {
        throw Error(ErrorKind::Contract, "propagation check needs two 2-local terms");
    }
    std::size_t shared = 0;
    std::size_t count = 0;
    for (std::size_t q : h1.support()) {
        if (h2.acts_on(q)) {
            shared = q;
            ++count;
        }
    }
    if (count != 1) {
        throw Error(ErrorKind::Contract, "propagation check needs supports overlapping in exactly one qubit");
    }
    Side s1 = h1.qubits[0] == shared ? Side::Left : Side::Right;
    Side s2 = h2.qubits[0] == shared ? Side::Left : Side::Right;
    return propagation_check(matrix_from_pauli(h1.coeffs2()), s1, matrix_from_pauli(h2.coeffs2()), s2);
}

double CommutatorProfile::at(std::size_t i, std::size_t j) const {
    if (i > j) {
        std::swap(i, j);
    }
    for (const Entry &e : pairwise) {
        if (e.first == i && e.second == j) {
            return e.norm;
        }
    }
    return 0.0;
}

CommutatorProfile commutator_profile(const Hamiltonian &h) {
    CommutatorProfile profile;
    auto by_qubit = h.terms_on_qubits();
    for (std::size_t q = 0; q < by_qubit.size(); ++q) {
        const auto &list = by_qubit[q];
        for (std::size_t x = 0; x < list.size(); ++x) {
            for (std::size_t y = x + 1; y < list.size(); ++y) {
                const LocalTerm &a = h.terms[list[x]];
                const LocalTerm &b = h.terms[list[y]];
                // Count each pair once, at its smallest shared qubit.
                bool earlier = false;
                for (std::size_t s : a.support()) {
                    if (s < q && b.acts_on(s)) {
                        earlier = true;
                    }
                }
                if (earlier) {
                    continue;
                }
                double v = pairwise_commutator_norm(a, b);
                profile.pairwise.push_back({std::min(list[x], list[y]), std::max(list[x], list[y]), v});
                profile.epsilon = std::max(profile.epsilon, v);
            }
        }
    }
    return profile;
}

ComplexMatrix dense_matrix(const Hamiltonian &h) {
    if (h.n > kDenseQubitCap) {
        throw Error(ErrorKind::SizeCap, std::to_string(h.n) + " qubits exceeds dense cap " +
                                            std::to_string(kDenseQubitCap));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const LocalTerm &t : h.terms) {
        if (t.arity == 0) {
            out.diagonal().array() += t.coeffs[0];
            continue;
        }
        accumulate_embedded(out, term_matrix(t), t.support(), h.n);
    }
    return out;
}

}  // namespace acham

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

#include "acham/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "acham/errors.hpp"

namespace acham {

namespace {

// A Pauli string on the full register: P|x> = phase(x) |x ^ flip>.
struct PauliString {
    std::size_t flip = 0;
    std::size_t ymask = 0;
    std::size_t zmask = 0;
    int ycount = 0;
    Complex coeff{0.0, 0.0};

    Complex phase(std::size_t x) const {
        // Y|b> = i (-1)^b |b^1>, Z|b> = (-1)^b |b>.
        int sign = std::popcount(x & ymask) + std::popcount(x & zmask);
        Complex p = (sign & 1) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
        static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return p * ipow[ycount & 3];
    }
};

void add_factor(PauliString &s, int alpha, std::size_t bit) {
    switch (alpha) {
        case 1:
            s.flip |= bit;
            break;
        case 2:
            s.flip |= bit;
            s.ymask |= bit;
            ++s.ycount;
            break;
        case 3:
            s.zmask |= bit;
            break;
        default:
            break;
    }
}

std::vector<PauliString> pauli_strings(const LocalTerm &t, std::size_t n) {
    std::vector<PauliString> out;
    auto bit = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };
    if (t.arity == 0) {
        if (t.coeffs[0] != 0.0) {
            out.push_back({0, 0, 0, 0, Complex(t.coeffs[0], 0.0)});
        }
    } else if (t.arity == 1) {
        for (int a = 0; a < 4; ++a) {
            if (t.coeffs[a] == 0.0) {
                continue;
            }
            PauliString s;
            s.coeff = t.coeffs[a];
            add_factor(s, a, bit(t.qubits[0]));
            out.push_back(s);
        }
    } else {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                double c = t.coeffs[4 * a + b];
                if (c == 0.0) {
                    continue;
                }
                PauliString s;
                s.coeff = c;
                add_factor(s, a, bit(t.qubits[0]));
                add_factor(s, b, bit(t.qubits[1]));
                out.push_back(s);
            }
        }
    }
    return out;
}

// Dense matrix of a term list on the register of `n` qubits.
ComplexMatrix dense_of(const std::vector<const LocalTerm *> &terms, std::size_t n) {
    if (n > kDenseQubitCap) {
        throw Error(ErrorKind::SizeCap, std::to_string(n) + " qubits exceeds dense cap");
    }
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const LocalTerm *t : terms) {
        for (const PauliString &s : pauli_strings(*t, n)) {
            for (std::size_t x = 0; x < dim; ++x) {
                m(static_cast<Eigen::Index>(x ^ s.flip), static_cast<Eigen::Index>(x)) += s.coeff * s.phase(x);
            }
        }
    }
    return m;
}

// A term relabelled onto a small register given by `joint`.
LocalTerm relabel(const LocalTerm &t, const std::vector<std::size_t> &joint) {
    LocalTerm r = t;
    for (std::size_t k = 0; k < t.arity; ++k) {
        r.qubits[k] = static_cast<std::size_t>(std::find(joint.begin(), joint.end(), t.qubits[k]) - joint.begin());
    }
    return r;
}

double pair_commutator(const LocalTerm &a, const LocalTerm &b) {
    std::vector<std::size_t> joint;
    for (std::size_t q : a.support()) {
        joint.push_back(q);
    }
    for (std::size_t q : b.support()) {
        if (std::find(joint.begin(), joint.end(), q) == joint.end()) {
            joint.push_back(q);
        }
    }
    std::sort(joint.begin(), joint.end());
    LocalTerm ra = relabel(a, joint);
    LocalTerm rb = relabel(b, joint);
    ComplexMatrix ma = dense_of({&ra}, joint.size());
    ComplexMatrix mb = dense_of({&rb}, joint.size());
    return operator_norm(commutator(ma, mb));
}

double local_distance(const LocalTerm &a, const LocalTerm &b) {
    std::vector<std::size_t> joint(a.support().begin(), a.support().end());
    for (std::size_t q : b.support()) {
        if (std::find(joint.begin(), joint.end(), q) == joint.end()) {
            throw Error(ErrorKind::Contract, "rounded term leaves the support of its input term");
        }
    }
    LocalTerm ra = relabel(a, joint);
    LocalTerm rb = relabel(b, joint);
    return operator_norm(ComplexMatrix(dense_of({&ra}, joint.size()) - dense_of({&rb}, joint.size())));
}

void require_same_structure(const Hamiltonian &h, const Hamiltonian &hhat) {
    if (h.n != hhat.n || h.terms.size() != hhat.terms.size()) {
        throw Error(ErrorKind::Contract, "structure mismatch: instances differ in n or term count");
    }
    for (std::size_t k = 0; k < h.terms.size(); ++k) {
        for (std::size_t q : hhat.terms[k].support()) {
            if (!h.terms[k].acts_on(q)) {
                throw Error(ErrorKind::Contract,
                            "structure mismatch: term " + std::to_string(k) + " acts outside its input support");
            }
        }
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

CommutingCheck verify_commuting(const Hamiltonian &h, double tol) {
    CommutingCheck out;
    std::vector<std::vector<std::size_t>> by_qubit(h.n);
    for (std::size_t k = 0; k < h.terms.size(); ++k) {
        for (std::size_t q : h.terms[k].support()) {
            by_qubit.at(q).push_back(k);
        }
    }
    for (std::size_t q = 0; q < h.n; ++q) {
        const auto &list = by_qubit[q];
        for (std::size_t x = 0; x < list.size(); ++x) {
            for (std::size_t y = x + 1; y < list.size(); ++y) {
                const LocalTerm &a = h.terms[list[x]];
                const LocalTerm &b = h.terms[list[y]];
                bool seen = false;
                for (std::size_t s : a.support()) {
                    seen = seen || (s < q && b.acts_on(s));
                }
                if (!seen) {
                    out.max_residual = std::max(out.max_residual, pair_commutator(a, b));
                }
            }
        }
    }
    out.commuting = out.max_residual <= tol;
    return out;
}

GlobalDistance global_distance(const Hamiltonian &h, const Hamiltonian &hhat) {
    require_same_structure(h, hhat);
    GlobalDistance out;
    if (h.n > kDenseQubitCap) {
        out.exact = false;
        for (std::size_t k = 0; k < h.terms.size(); ++k) {
            out.value += local_distance(h.terms[k], hhat.terms[k]);
        }
        return out;
    }
    std::vector<const LocalTerm *> a, b;
    for (std::size_t k = 0; k < h.terms.size(); ++k) {
        a.push_back(&h.terms[k]);
        b.push_back(&hhat.terms[k]);
    }
    out.value = operator_norm(ComplexMatrix(dense_of(a, h.n) - dense_of(b, h.n)));
    return out;
}

void apply_hamiltonian(const Hamiltonian &h, const Eigen::VectorXcd &x, Eigen::VectorXcd &y) {
    const std::size_t dim = std::size_t{1} << h.n;
    if (static_cast<std::size_t>(x.size()) != dim) {
        throw Error(ErrorKind::Dimension, "apply_hamiltonian: vector length does not match 2^n");
    }
    y = Eigen::VectorXcd::Zero(x.size());
    for (const LocalTerm &t : h.terms) {
        for (const PauliString &s : pauli_strings(t, h.n)) {
            for (std::size_t i = 0; i < dim; ++i) {
                y(static_cast<Eigen::Index>(i ^ s.flip)) += s.coeff * s.phase(i) * x(static_cast<Eigen::Index>(i));
            }
        }
    }
}

ComplexMatrix dense_from_pauli_strings(const Hamiltonian &h) {
    std::vector<const LocalTerm *> terms;
    for (const LocalTerm &t : h.terms) {
        terms.push_back(&t);
    }
    return dense_of(terms, h.n);
}

double ground_energy_dense(const Hamiltonian &h) {
    if (h.n > kDenseQubitCap) {
        throw Error(ErrorKind::SizeCap, std::to_string(h.n) + " qubits exceeds dense cap");
    }
    return hermitian_eigenvalues(dense_matrix(h))(0);
}

double ground_energy_lanczos(const Hamiltonian &h) {
    if (h.n > kDenseQubitCap) {
        throw Error(ErrorKind::SizeCap, std::to_string(h.n) + " qubits exceeds dense cap");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n);
    std::mt19937_64 rng(0x5eed5eedULL);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        v(i) = Complex(re, im);
    }
    v.normalize();

    std::vector<Eigen::VectorXcd> basis;
    std::vector<double> alpha, beta;
    Eigen::VectorXcd w;
    double estimate = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
        basis.push_back(v);
        apply_hamiltonian(h, v, w);
        alpha.push_back(v.dot(w).real());
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &b : basis) {
                w -= b * b.dot(w);
            }
        }
        double b_next = w.norm();

        const auto kk = static_cast<Eigen::Index>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(kk, kk);
        for (Eigen::Index i = 0; i < kk; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < kk) {
                t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        estimate = es.eigenvalues()(0);
        double residual = std::abs(b_next * es.eigenvectors()(kk - 1, 0));
        double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
        if (b_next < 1e-12 * scale || residual < 1e-12 * scale) {
            break;
        }
        beta.push_back(b_next);
        v = w / b_next;
    }
    return estimate;
}

double ground_energy(const Hamiltonian &h) {
    double dense = ground_energy_dense(h);
    double iterative = ground_energy_lanczos(h);
    if (!(std::abs(dense - iterative) <= kEnergyTol)) {
        throw Error(ErrorKind::Invariant,
                    "ground energy disagreement: dense " + fmt(dense) + " vs Lanczos " + fmt(iterative));
    }
    return dense;
}

VerificationReport audit_bounds(const Hamiltonian &h, const Hamiltonian &hhat, const AuditOptions &options) {
    require_same_structure(h, hhat);
    VerificationReport v;
    auto fail = [&](const std::string &what) {
        v.passed = false;
        v.failures.push_back(what);
    };

    v.realized_eps = verify_commuting(h, 0.0).max_residual;
    v.eps = std::max(v.realized_eps, options.eps.value_or(0.0));
    v.per_term_bound = per_term_bound(v.eps);
    v.global_bound = v.per_term_bound * static_cast<double>(h.terms.size());

    CommutingCheck cc = verify_commuting(hhat, options.commute_tol);
    v.commuting = cc.commuting;
    v.max_residual = cc.max_residual;
    if (!cc.commuting) {
        fail("rounded terms do not commute: residual " + fmt(cc.max_residual) + " > " + fmt(options.commute_tol));
    }

    for (std::size_t k = 0; k < h.terms.size(); ++k) {
        double d = local_distance(h.terms[k], hhat.terms[k]);
        v.per_term_distances.push_back(d);
        v.distance_sum += d;
        if (d > v.per_term_bound + kBoundSlack) {
            fail("term " + std::to_string(k) + ": distance " + fmt(d) + " > " + fmt(v.per_term_bound));
        }
        double grown = term_norm(hhat.terms[k]);
        double allowed = term_norm(h.terms[k]) + v.per_term_bound + kBoundSlack;
        if (grown > allowed) {
            fail("term " + std::to_string(k) + ": norm " + fmt(grown) + " > " + fmt(allowed));
        }
    }

    GlobalDistance gd = global_distance(h, hhat);
    v.global_distance = gd.value;
    v.global_exact = gd.exact;
    if (gd.value > v.global_bound + kBoundSlack) {
        fail("global distance " + fmt(gd.value) + " > " + fmt(v.global_bound));
    }
    if (gd.exact && gd.value > v.distance_sum + kBoundSlack) {
        fail("dense global distance " + fmt(gd.value) + " exceeds summed per-term distances " + fmt(v.distance_sum));
    }
    v.energy_shift_bound = gd.value;

    if (options.energies && h.n <= kDenseQubitCap) {
        v.ground_energy_input = ground_energy(h);
        v.ground_energy_output = ground_energy(hhat);
        double shift = std::abs(*v.ground_energy_input - *v.ground_energy_output);
        if (shift > v.energy_shift_bound + kBoundSlack) {
            fail("ground energy shift " + fmt(shift) + " > " + fmt(v.energy_shift_bound));
        }
    }

    if (options.report != nullptr) {
        const RoundingReport &r = *options.report;
        if (r.per_term.size() != h.terms.size()) {
            fail("report lists " + std::to_string(r.per_term.size()) + " terms, instance has " +
                 std::to_string(h.terms.size()));
        } else {
            for (std::size_t k = 0; k < h.terms.size(); ++k) {
                if (std::abs(r.per_term[k].distance_to_input - v.per_term_distances[k]) > kBoundSlack) {
                    fail("term " + std::to_string(k) + ": reported distance " + fmt(r.per_term[k].distance_to_input) +
                         " differs from recomputed " + fmt(v.per_term_distances[k]));
                }
            }
        }
        if (std::abs(r.max_residual_commutator - v.max_residual) > kBoundSlack) {
            fail("reported residual " + fmt(r.max_residual_commutator) + " differs from recomputed " +
                 fmt(v.max_residual));
        }
        if (!r.bounds_satisfied) {
            fail("rounding report flags violated bounds");
        }
    }
    return v;
}

Json verification_to_json(const VerificationReport &v) {
    Json j;
    j["format"] = "acham-verify-v1";
    j["eps"] = v.eps;
    j["realized_eps"] = v.realized_eps;
    j["commuting"] = v.commuting;
    j["max_residual"] = v.max_residual;
    j["per_term_distances"] = v.per_term_distances;
    j["per_term_bound"] = v.per_term_bound;
    j["distance_sum"] = v.distance_sum;
    j["global_distance"] = v.global_distance;
    j["global_distance_exact"] = v.global_exact;
    j["global_bound"] = v.global_bound;
    j["ground_energy_input"] = v.ground_energy_input ? Json(*v.ground_energy_input) : Json(nullptr);
    j["ground_energy_output"] = v.ground_energy_output ? Json(*v.ground_energy_output) : Json(nullptr);
    j["energy_shift_bound"] = v.energy_shift_bound;
    j["passed"] = v.passed;
    j["failures"] = v.failures;
    return j;
}

}  // namespace acham

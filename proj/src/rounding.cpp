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

#include "acham/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acham/errors.hpp"

namespace acham {

namespace {

// Components with gap at or below this are treated as the identity when
// counting which terms act on a qubit.
constexpr double kTrivialGap = 1e-12;

double ratio(double kappa, double zeta) {
    return kappa == 0.0 ? 0.0 : kappa / zeta;
}

double hermitian_norm(const Mat4 &m) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(m, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(3)));
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

// ||[R on qubit q, t]|| for a term on its own support.
double pivot_commutator(const Mat2 &r, std::size_t q, const LocalTerm &t) {
    if (t.arity == 0 || !t.acts_on(q)) {
        return 0.0;
    }
    if (t.arity == 1) {
        Mat2 g = matrix_from_pauli(t.coeffs1());
        return operator_norm(Mat2(r * g - g * r));
    }
    Mat4 lifted = t.qubits[0] == q ? kron2(r, Mat2::Identity()) : kron2(Mat2::Identity(), r);
    Mat4 h = matrix_from_pauli(t.coeffs2());
    Mat4 herm = Complex(0.0, 1.0) * (lifted * h - h * lifted);
    return hermitian_norm((herm + herm.adjoint()) * 0.5);
}

// Keeps the components of a Bloch vector along the unit axis n.
void project(double &x, double &y, double &z, const std::array<double, 3> &n) {
    double d = x * n[0] + y * n[1] + z * n[2];
    x = d * n[0];
    y = d * n[1];
    z = d * n[2];
}

std::array<double, 3> pivot_axis(const Pivot &p) {
    double r = std::sqrt(p.pauli[1] * p.pauli[1] + p.pauli[2] * p.pauli[2] + p.pauli[3] * p.pauli[3]);
    if (!(2.0 * r > kDegenerateGap)) {
        throw Error(ErrorKind::DegeneratePivot,
                    "pivot on qubit " + std::to_string(p.qubit) + " has gap " + std::to_string(2.0 * r));
    }
    return {p.pauli[1] / r, p.pauli[2] / r, p.pauli[3] / r};
}

bool acts_nontrivially(const LocalTerm &t, std::size_t q) {
    if (!t.acts_on(q)) {
        return false;
    }
    if (t.arity == 1) {
        return spectral_gap(t.coeffs1()) > kTrivialGap;
    }
    Side side = t.qubits[0] == q ? Side::Left : Side::Right;
    return is_gapped(t.coeffs2(), side, 0.0).max_gap > kTrivialGap;
}

}  // namespace

StageParams StageParams::from_epsilon(double eps) {
    StageParams p;
    p.eps2 = eps;
    p.eta2 = std::cbrt(eps);
    p.eps1 = eps + 16.0 * p.eta2;
    p.eta1 = std::sqrt(p.eps1);
    return p;
}

double per_term_bound(double eps) {
    return 216.0 * std::pow(eps, 1.0 / 6.0);
}

const char *stage_name(TermStage stage) {
    switch (stage) {
        case TermStage::Kept2Local:
            return "kept-2local";
        case TermStage::Kept1Local:
            return "kept-1local";
        case TermStage::Kept0Local:
            return "kept-0local";
        case TermStage::SnappedTo1Local:
            return "snapped-to-1local";
        case TermStage::SnappedTo0Local:
            return "snapped-to-0local";
    }
    return "unknown";
}

const char *pivot_kind_name(PivotKind kind) {
    switch (kind) {
        case PivotKind::Identity:
            return "identity";
        case PivotKind::OneLocalTerm:
            return "1-local term";
        case PivotKind::TwoLocalComponent:
            return "2-local component";
    }
    return "unknown";
}

Mat2 pinch(const Mat2 &b, const Mat2 &a) {
    SpectralDecomposition2 sd = spectral_decompose_2x2(a);
    if (!(sd.gap() > kDegenerateGap)) {
        throw Error(ErrorKind::DegeneratePivot, "pinching operator has gap " + std::to_string(sd.gap()));
    }
    const Mat2 &p = sd.projector_min;
    const Mat2 q = Mat2::Identity() - p;
    return p * b * p + q * b * q;
}

Mat2 snap(const Mat2 &b) {
    SpectralDecomposition2 sd = spectral_decompose_2x2(b);
    return sd.lambda_max * Mat2::Identity();
}

LocalTerm snap_term_to_1local(const LocalTerm &term, std::size_t weak_qubit, double eta) {
    if (term.arity != 2) {
        throw Error(ErrorKind::Contract, "snap_term_to_1local needs a 2-local term");
    }
    if (!term.acts_on(weak_qubit)) {
        throw Error(ErrorKind::IndexRange, "qubit " + std::to_string(weak_qubit) + " is not in the term support");
    }
    Side weak = term.qubits[0] == weak_qubit ? Side::Left : Side::Right;
    PauliCoeffs2 c = term.coeffs2();
    GapWitness w = is_gapped(c, weak, eta);
    if (w.gapped) {
        std::ostringstream os;
        os.precision(17);
        os << "term is gapped on qubit " << weak_qubit << " (component gap " << w.max_gap << " >= " << eta << ")";
        throw Error(ErrorKind::GapPrecondition, os.str());
    }
    auto comps = components_about(c, weak);
    PauliCoeffs1 g{};
    for (int alpha = 0; alpha < 4; ++alpha) {
        g[alpha] = lambda_max(comps[alpha]);
    }
    std::size_t other = weak == Side::Left ? term.qubits[1] : term.qubits[0];
    return LocalTerm::one_local(other, g);
}

SnappedHamiltonian snap_stages(const Hamiltonian &h, const StageParams &params) {
    SnappedHamiltonian out;
    out.n = h.n;
    out.params = params;
    out.terms.reserve(h.terms.size());
    for (const LocalTerm &t : h.terms) {
        SnappedTerm s;
        s.input = t;
        s.effective = t;
        bool from_two_local = false;
        switch (t.arity) {
            case 0:
                s.stage = TermStage::Kept0Local;
                break;
            case 1:
                s.stage = TermStage::Kept1Local;
                break;
            default: {
                PauliCoeffs2 c = t.coeffs2();
                bool left = is_gapped(c, Side::Left, params.eta2).gapped;
                bool right = is_gapped(c, Side::Right, params.eta2).gapped;
                if (left && right) {
                    s.stage = TermStage::Kept2Local;
                } else {
                    std::size_t weak = !left ? t.qubits[0] : t.qubits[1];
                    s.effective = snap_term_to_1local(t, weak, params.eta2);
                    s.stage = TermStage::SnappedTo1Local;
                    s.stage_bound = 4.0 * params.eta2;
                    from_two_local = true;
                }
                break;
            }
        }
        if (s.effective.arity == 1) {
            PauliCoeffs1 g = s.effective.coeffs1();
            if (spectral_gap(g) < params.eta1) {
                s.effective = LocalTerm::constant(lambda_max(g));
                s.stage = TermStage::SnappedTo0Local;
                s.stage_bound = from_two_local ? 4.0 * params.eta2 + 4.0 * params.eta1 : 4.0 * params.eta1;
            }
        }
        s.snap_distance = term_distance(s.input, s.effective);
        out.terms.push_back(s);
    }
    return out;
}

std::vector<Pivot> select_pivots(const SnappedHamiltonian &h_snap) {
    const StageParams &params = h_snap.params;
    std::vector<std::vector<std::size_t>> touching(h_snap.n);
    std::vector<std::vector<std::size_t>> on_qubit(h_snap.n);
    for (std::size_t k = 0; k < h_snap.terms.size(); ++k) {
        const LocalTerm &e = h_snap.terms[k].effective;
        for (std::size_t q : e.support()) {
            if (q >= h_snap.n) {
                throw Error(ErrorKind::IndexRange, "term uses qubit " + std::to_string(q));
            }
            on_qubit[q].push_back(k);
            if (acts_nontrivially(e, q)) {
                touching[q].push_back(k);
            }
        }
    }
    auto first_by_support = [&](const std::vector<std::size_t> &candidates) {
        std::size_t best = candidates.front();
        for (std::size_t k : candidates) {
            if (support_less(h_snap.terms[k].input, h_snap.terms[best].input)) {
                best = k;
            }
        }
        return best;
    };

    std::vector<Pivot> pivots(h_snap.n);
    for (std::size_t q = 0; q < h_snap.n; ++q) {
        Pivot &p = pivots[q];
        p.qubit = q;
        if (touching[q].size() <= 1) {
            p.kind = PivotKind::Identity;
            p.kappa = 0.0;
            p.zeta = 1.0;
            p.gap_floor = 0.0;
            continue;
        }
        std::vector<std::size_t> one_local;
        std::vector<std::size_t> two_local;
        for (std::size_t k : touching[q]) {
            (h_snap.terms[k].effective.arity == 1 ? one_local : two_local).push_back(k);
        }
        if (!one_local.empty()) {
            std::size_t k = first_by_support(one_local);
            p.kind = PivotKind::OneLocalTerm;
            p.pauli = h_snap.terms[k].effective.coeffs1();
            p.source_term = k;
            p.kappa = params.eps1;
            p.zeta = params.eta1;
        } else {
            std::size_t k = first_by_support(two_local);
            const LocalTerm &e = h_snap.terms[k].effective;
            Side side = e.qubits[0] == q ? Side::Left : Side::Right;
            auto comps = components_about(e.coeffs2(), side);
            std::array<double, 4> gaps{};
            for (int alpha = 0; alpha < 4; ++alpha) {
                gaps[alpha] = spectral_gap(comps[alpha]);
            }
            PauliIndex alpha = max_gap_component(gaps);
            p.kind = PivotKind::TwoLocalComponent;
            p.pauli = comps[alpha];
            p.source_term = k;
            p.source_alpha = alpha;
            p.kappa = params.eta2 == 0.0 ? 0.0 : 24.0 * params.eps2 / params.eta2;
            p.zeta = params.eta2;
        }
        p.gap = spectral_gap(p.pauli);
        p.gap_floor = std::max(p.zeta, kTrivialGap);
        if (!(p.gap >= p.gap_floor)) {
            std::ostringstream os;
            os.precision(17);
            os << "pivot on qubit " << q << " (" << pivot_kind_name(p.kind) << ") has gap " << p.gap
               << " below its floor " << p.gap_floor;
            throw Error(ErrorKind::Invariant, os.str());
        }
        Mat2 r = p.op();
        // Terms acting trivially on q still count for the contract.
        for (std::size_t k : on_qubit[q]) {
            p.contract_residual = std::max(p.contract_residual, pivot_commutator(r, q, h_snap.terms[k].effective));
        }
    }
    return pivots;
}

LocalTerm pinch_term(const LocalTerm &t, const std::vector<Pivot> &pivots) {
    LocalTerm out = t;
    for (std::size_t pos = 0; pos < t.arity; ++pos) {
        std::size_t q = t.qubits[pos];
        if (q >= pivots.size()) {
            throw Error(ErrorKind::IndexRange, "no pivot for qubit " + std::to_string(q));
        }
        const Pivot &p = pivots[q];
        if (p.is_identity()) {
            continue;
        }
        auto axis = pivot_axis(p);
        if (t.arity == 1) {
            project(out.coeffs[1], out.coeffs[2], out.coeffs[3], axis);
        } else if (pos == 0) {
            for (int b = 0; b < 4; ++b) {
                project(out.coeffs[4 + b], out.coeffs[8 + b], out.coeffs[12 + b], axis);
            }
        } else {
            for (int a = 0; a < 4; ++a) {
                project(out.coeffs[4 * a + 1], out.coeffs[4 * a + 2], out.coeffs[4 * a + 3], axis);
            }
        }
    }
    return out;
}

Hamiltonian global_pinch(const Hamiltonian &h, const std::vector<Pivot> &pivots) {
    Hamiltonian out;
    out.n = h.n;
    out.terms.reserve(h.terms.size());
    for (const LocalTerm &t : h.terms) {
        out.terms.push_back(pinch_term(t, pivots));
    }
    return out;
}

RoundingResult round(const Hamiltonian &h, std::optional<double> eps_override) {
    for (const LocalTerm &t : h.terms) {
        double norm = term_norm(t);
        if (norm > 1.0 + kNormSlack) {
            throw Error(ErrorKind::NormViolation, "term norm " + std::to_string(norm) + " exceeds 1");
        }
    }
    RoundingResult result;
    RoundingReport &rep = result.report;
    rep.eps_overridden = eps_override.has_value();
    rep.eps = eps_override ? *eps_override : commutator_profile(h).epsilon;
    if (!(rep.eps >= 0.0 && rep.eps <= 1.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "eps = " << rep.eps << " outside [0, 1]";
        throw Error(ErrorKind::Regime, os.str());
    }
    rep.params = StageParams::from_epsilon(rep.eps);
    rep.per_term_bound = per_term_bound(rep.eps);
    rep.global_distance_bound = rep.per_term_bound * static_cast<double>(h.terms.size());

    SnappedHamiltonian snapped = snap_stages(h, rep.params);
    rep.pivots = select_pivots(snapped);

    result.rounded.n = h.n;
    result.rounded.terms.reserve(h.terms.size());
    rep.per_term.reserve(h.terms.size());
    auto violate = [&](const std::string &what) {
        rep.bounds_satisfied = false;
        rep.violations.push_back(what);
    };
    for (std::size_t k = 0; k < snapped.terms.size(); ++k) {
        const SnappedTerm &s = snapped.terms[k];
        LocalTerm pinched = pinch_term(s.effective, rep.pivots);
        LocalTerm out = lift_to_support(pinched, s.input.support());
        result.rounded.terms.push_back(out);

        TermReport tr;
        tr.support.assign(s.input.support().begin(), s.input.support().end());
        tr.stage = s.stage;
        tr.snap_distance = s.snap_distance;
        tr.stage_bound = s.stage_bound;
        tr.pinch_distance = term_distance(s.effective, pinched);
        for (std::size_t q : s.effective.support()) {
            const Pivot &p = rep.pivots[q];
            if (!p.is_identity()) {
                tr.pinch_bound += 4.0 * ratio(p.kappa, p.zeta);
            }
        }
        tr.distance_to_input = term_distance(s.input, out);
        tr.bound = rep.per_term_bound;
        rep.distance_sum += tr.distance_to_input;

        std::ostringstream os;
        os.precision(17);
        if (tr.distance_to_input > tr.bound + kBoundSlack) {
            os << "term " << k << ": distance " << tr.distance_to_input << " > " << tr.bound;
            violate(os.str());
        } else if (tr.snap_distance > tr.stage_bound + kBoundSlack) {
            os << "term " << k << ": snap distance " << tr.snap_distance << " > " << tr.stage_bound;
            violate(os.str());
        } else if (tr.pinch_distance > tr.pinch_bound + kBoundSlack) {
            os << "term " << k << ": pinch distance " << tr.pinch_distance << " > " << tr.pinch_bound;
            violate(os.str());
        }
        rep.per_term.push_back(std::move(tr));
    }
    for (const Pivot &p : rep.pivots) {
        if (!p.is_identity() && p.contract_residual > p.kappa + kBoundSlack) {
            std::ostringstream os;
            os.precision(17);
            os << "pivot " << p.qubit << ": commutator " << p.contract_residual << " > kappa " << p.kappa;
            violate(os.str());
        }
    }
    rep.max_residual_commutator = commutator_profile(result.rounded).epsilon;
    for (std::size_t k = 0; k < result.rounded.terms.size(); ++k) {
        const LocalTerm &t = result.rounded.terms[k];
        for (std::size_t q : t.support()) {
            const Pivot &p = rep.pivots[q];
            if (!p.is_identity()) {
                rep.max_residual_commutator = std::max(rep.max_residual_commutator, pivot_commutator(p.op(), q, t));
            }
        }
    }
    if (rep.max_residual_commutator > kCommuteTol) {
        std::ostringstream os;
        os.precision(17);
        os << "residual commutator " << rep.max_residual_commutator << " > " << kCommuteTol;
        violate(os.str());
    }
    return result;
}

Json pivot_to_json(const Pivot &p) {
    Json j;
    j["qubit"] = p.qubit;
    j["kind"] = pivot_kind_name(p.kind);
    j["pauli"] = {p.pauli[0], p.pauli[1], p.pauli[2], p.pauli[3]};
    j["gap"] = p.gap;
    j["zeta"] = p.zeta;
    j["gap_floor"] = p.gap_floor;
    j["kappa"] = p.kappa;
    j["source_term"] = p.source_term ? Json(*p.source_term) : Json(nullptr);
    j["source_alpha"] = p.source_alpha ? Json(*p.source_alpha) : Json(nullptr);
    j["contract_residual"] = p.contract_residual;
    return j;
}

Json report_to_json(const RoundingReport &r) {
    Json j;
    j["format"] = "acham-report-v1";
    j["eps"] = r.eps;
    j["eps_source"] = r.eps_overridden ? "override" : "auto";
    j["stage_params"] = {{"eps2", r.params.eps2}, {"eta2", r.params.eta2}, {"eps1", r.params.eps1},
                         {"eta1", r.params.eta1}};
    j["pivots"] = Json::array();
    for (const Pivot &p : r.pivots) {
        j["pivots"].push_back(pivot_to_json(p));
    }
    j["per_term"] = Json::array();
    for (const TermReport &t : r.per_term) {
        j["per_term"].push_back({{"support", t.support},
                                 {"stage", stage_name(t.stage)},
                                 {"snap_distance", t.snap_distance},
                                 {"stage_bound", t.stage_bound},
                                 {"pinch_distance", t.pinch_distance},
                                 {"pinch_bound", t.pinch_bound},
                                 {"distance_to_input", t.distance_to_input},
                                 {"bound", t.bound}});
    }
    j["per_term_bound"] = r.per_term_bound;
    j["global_distance_bound"] = r.global_distance_bound;
    j["distance_sum"] = r.distance_sum;
    j["max_residual_commutator"] = r.max_residual_commutator;
    j["bounds_satisfied"] = r.bounds_satisfied;
    j["violations"] = r.violations;
    return j;
}

}  // namespace acham

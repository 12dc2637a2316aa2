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

#include "acham/apps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acham/errors.hpp"
#include "acham/verify.hpp"

namespace acham {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// M <- (local on support) M, acting on rows.
void apply_local_left(ComplexMatrix &m, const ComplexMatrix &local, std::span<const std::size_t> support,
                      std::size_t n) {
    const std::size_t k = support.size();
    const std::size_t ldim = std::size_t{1} << k;
    std::vector<std::size_t> pattern(ldim, 0);
    std::size_t mask = 0;
    for (std::size_t l = 0; l < ldim; ++l) {
        for (std::size_t s = 0; s < k; ++s) {
            if ((l >> (k - 1 - s)) & 1) {
                pattern[l] |= std::size_t{1} << (n - 1 - support[s]);
            }
        }
    }
    for (std::size_t q : support) {
        mask |= std::size_t{1} << (n - 1 - q);
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Eigen::Index> rows(ldim);
    ComplexMatrix block(static_cast<Eigen::Index>(ldim), m.cols());
    for (std::size_t rest = 0; rest < dim; ++rest) {
        if (rest & mask) {
            continue;
        }
        for (std::size_t l = 0; l < ldim; ++l) {
            rows[l] = static_cast<Eigen::Index>(rest | pattern[l]);
            block.row(static_cast<Eigen::Index>(l)) = m.row(rows[l]);
        }
        ComplexMatrix updated = local * block;
        for (std::size_t l = 0; l < ldim; ++l) {
            m.row(rows[l]) = updated.row(static_cast<Eigen::Index>(l));
        }
    }
}

}  // namespace

PromiseInstance promise_from_json(const Json &doc) {
    PromiseInstance p;
    p.h = ingest(doc);
    if (!doc.contains("a") || !doc.contains("b") || !doc.at("a").is_number() || !doc.at("b").is_number()) {
        throw Error(ErrorKind::Schema, "promise instances need numeric \"a\" and \"b\"");
    }
    p.a = doc.at("a").get<double>();
    p.b = doc.at("b").get<double>();
    return p;
}

Json promise_to_json(const PromiseInstance &p) {
    Json doc = to_json(p.h);
    doc["a"] = p.a;
    doc["b"] = p.b;
    return doc;
}

ReductionResult reduce_promise(const PromiseInstance &inst, std::optional<double> eps) {
    if (!(inst.a < inst.b)) {
        throw Error(ErrorKind::Contract, "promise thresholds need a < b, got a=" + fmt(inst.a) + " b=" + fmt(inst.b));
    }
    RoundingResult rr = round(inst.h, eps);
    ReductionResult out;
    out.eps = rr.report.eps;
    out.report = rr.report;
    const double m = static_cast<double>(inst.h.terms.size());
    out.shift = per_term_bound(out.eps) * m;
    out.reduced.h = std::move(rr.rounded);
    out.reduced.a = inst.a + out.shift;
    out.reduced.b = inst.b - out.shift;
    if (!(out.reduced.a < out.reduced.b)) {
        double ceiling = std::pow(inst.gap() / (432.0 * m), 6.0);
        throw Error(ErrorKind::GapCollapse, "a'=" + fmt(out.reduced.a) + " >= b'=" + fmt(out.reduced.b) +
                                                " at eps=" + fmt(out.eps) + "; the gap survives only for eps < " +
                                                fmt(ceiling));
    }
    return out;
}

ComplexMatrix gibbs_state(const Hamiltonian &h, double beta) {
    if (!(beta >= 0.0)) {
        throw Error(ErrorKind::Contract, "beta must be non-negative, got " + fmt(beta));
    }
    HermitianEig eig = hermitian_eig(dense_matrix(h));
    const double lo = eig.values(0);
    Eigen::VectorXd w(eig.values.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        w(k) = std::exp(-beta * (eig.values(k) - lo));
    }
    w /= w.sum();
    ComplexMatrix rho = eig.vectors * w.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    return (rho + rho.adjoint()) * 0.5;
}

double trace_distance(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    ComplexMatrix diff = rho - sigma;
    diff = (diff + diff.adjoint()) * 0.5;
    return hermitian_eigenvalues(diff).cwiseAbs().sum();
}

GibbsCertificate certify_gibbs_pair(const Hamiltonian &h, const Hamiltonian &hhat, double eps, double beta,
                                    double delta) {
    if (!(beta > 0.0) || !(delta > 0.0)) {
        throw Error(ErrorKind::Contract, "beta and delta must be positive");
    }
    GibbsCertificate c;
    c.beta = beta;
    c.delta_target = delta;
    c.eps = eps;
    c.m = h.terms.size();
    const double global_bound = per_term_bound(eps) * static_cast<double>(c.m);
    if (h.n <= kDenseQubitCap) {
        c.rounding_distance = global_distance(h, hhat).value;
        c.distance_exact = true;
    } else {
        c.rounding_distance = global_bound;
    }
    c.continuity_bound = std::expm1(2.0 * beta * c.rounding_distance);
    c.regime_threshold = std::log1p(delta / 2.0) / (2.0 * beta);
    c.regime_ok = global_bound <= c.regime_threshold;
    if (h.n <= kGibbsMeasureCap) {
        double td = trace_distance(gibbs_state(h, beta), gibbs_state(hhat, beta));
        c.measured_trace_distance = td;
        c.measured_within_bound = td <= c.continuity_bound + kBoundSlack;
    }
    return c;
}

GibbsCertificate certify_gibbs_reduction(const Hamiltonian &h, double beta, double delta, std::optional<double> eps) {
    RoundingResult rr = round(h, eps);
    return certify_gibbs_pair(h, rr.rounded, rr.report.eps, beta, delta);
}

ComplexMatrix commuting_evolution(const Hamiltonian &hc, double t) {
    if (hc.n > kDenseQubitCap) {
        throw Error(ErrorKind::SizeCap, std::to_string(hc.n) + " qubits exceeds dense cap");
    }
    CommutingCheck cc = verify_commuting(hc, kCommuteTol);
    if (!cc.commuting) {
        throw Error(ErrorKind::Contract, "terms do not commute (residual " + fmt(cc.max_residual) + ")");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << hc.n);
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    Complex global_phase(1.0, 0.0);
    for (const LocalTerm &term : hc.terms) {
        ComplexMatrix local = matrix_exponential(term_matrix(term), Complex(0.0, t));
        if (term.arity == 0) {
            global_phase *= local(0, 0);
            continue;
        }
        apply_local_left(u, local, term.support(), hc.n);
    }
    return global_phase * u;
}

std::vector<EvolutionComparison> compare_evolution(const Hamiltonian &hc, std::span<const double> times) {
    HermitianEig eig = hermitian_eig(dense_matrix(hc));
    std::vector<EvolutionComparison> out;
    for (double t : times) {
        ComplexMatrix product = commuting_evolution(hc, t);
        Eigen::VectorXcd phases(eig.values.size());
        for (Eigen::Index k = 0; k < phases.size(); ++k) {
            phases(k) = std::exp(Complex(0.0, t * eig.values(k)));
        }
        ComplexMatrix dense = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
        EvolutionComparison cmp;
        cmp.t = t;
        cmp.deviation = operator_norm(ComplexMatrix(product - dense));
        ComplexMatrix gram = product.adjoint() * product;
        gram -= ComplexMatrix::Identity(gram.rows(), gram.cols());
        cmp.unitarity_defect = operator_norm(gram);
        out.push_back(cmp);
    }
    return out;
}

SimulationSplit simulation_split(const Hamiltonian &h, double t, double t_block, std::optional<double> eps) {
    RoundingResult rr = round(h, eps);
    SimulationSplit s;
    s.eps = rr.report.eps;
    s.t = t;
    s.t_block = t_block;
    s.h_commuting = rr.rounded;
    s.delta.n = h.n;
    for (std::size_t k = 0; k < h.terms.size(); ++k) {
        LocalTerm d = h.terms[k];
        for (std::size_t c = 0; c < d.coeffs.size(); ++c) {
            d.coeffs[c] -= rr.rounded.terms[k].coeffs[c];
        }
        s.delta.terms.push_back(d);
    }
    const double m = static_cast<double>(h.terms.size());
    s.alpha_b_bound = per_term_bound(s.eps) * m;
    if (h.n <= kDenseQubitCap) {
        s.alpha_a = operator_norm(dense_matrix(s.h_commuting));
        s.alpha_a_exact = true;
        s.alpha_b = operator_norm(dense_matrix(s.delta));
        s.alpha_b_exact = true;
    } else {
        for (const LocalTerm &term : s.h_commuting.terms) {
            s.alpha_a += term_norm(term);
        }
        s.alpha_b = s.alpha_b_bound;
    }
    s.cost_estimate = s.alpha_b * t * (t_block + m);
    std::ostringstream os;
    os.precision(6);
    os << "O~(alpha_B * t * (T_block + m)) = " << s.alpha_b << " * " << t << " * (" << t_block << " + " << m
       << ") = " << s.cost_estimate;
    s.cost_formula = os.str();
    return s;
}

Json gibbs_to_json(const GibbsCertificate &c) {
    Json j;
    j["format"] = "acham-gibbs-v1";
    j["beta"] = c.beta;
    j["delta"] = c.delta_target;
    j["eps"] = c.eps;
    j["m"] = c.m;
    j["rounding_distance"] = c.rounding_distance;
    j["rounding_distance_exact"] = c.distance_exact;
    j["continuity_bound"] = c.continuity_bound;
    j["regime_threshold"] = c.regime_threshold;
    j["regime_ok"] = c.regime_ok;
    j["measured_trace_distance"] = c.measured_trace_distance ? Json(*c.measured_trace_distance) : Json(nullptr);
    j["measured_within_bound"] = c.measured_within_bound;
    return j;
}

Json split_to_json(const SimulationSplit &s) {
    Json j;
    j["format"] = "acham-split-v1";
    j["eps"] = s.eps;
    j["alpha_A"] = s.alpha_a;
    j["alpha_A_exact"] = s.alpha_a_exact;
    j["alpha_B"] = s.alpha_b;
    j["alpha_B_exact"] = s.alpha_b_exact;
    j["alpha_B_bound"] = s.alpha_b_bound;
    j["t"] = s.t;
    j["T_block"] = s.t_block;
    j["cost_estimate"] = s.cost_estimate;
    j["cost_formula"] = s.cost_formula;
    j["H_commuting"] = to_json(s.h_commuting);
    j["Delta"] = to_json(s.delta);
    return j;
}

}  // namespace acham

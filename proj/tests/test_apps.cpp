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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "acham/apps.hpp"
#include "acham/errors.hpp"
#include "acham/generators.hpp"
#include "acham/verify.hpp"
#include "oracles.hpp"

using namespace acham;

TEST(Promise, CollapsingGap) {
    PromiseInstance p{tfim_chain(3, 0.0), -3.0, -1.0};
    ASSERT_EQ(p.h.m(), 2u);
    p.h.terms.push_back(LocalTerm::one_local(0, {0.0, 0.0, 0.0, 0.5}));
    p.h = ingest_terms(3, p.h.terms);
    try {
        reduce_promise(p, 1e-12);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::GapCollapse);
        // Ceiling ((b - a) / (432 m))^6 for m = 3.
        const double ceiling = std::pow(2.0 / (432.0 * 3.0), 6.0);
        std::ostringstream os;
        os.precision(17);
        os << "eps < " << ceiling;
        EXPECT_NE(std::string(e.what()).find(os.str()), std::string::npos) << e.what();
    }
}

TEST(Promise, ShiftArithmetic) {
    PromiseInstance p{tfim_chain(4, 0.0), -10.0, 10.0};
    ReductionResult r = reduce_promise(p, 1e-18);
    EXPECT_NEAR(r.shift, 216.0 * 3.0 * 1e-3, 1e-12);
    EXPECT_NEAR(r.reduced.a, -10.0 + r.shift, 1e-12);
    EXPECT_NEAR(r.reduced.b, 10.0 - r.shift, 1e-12);
    EXPECT_TRUE(verify_commuting(r.reduced.h).commuting);
}

TEST(Promise, ClassificationPreservedOnIsing) {
    Hamiltonian h = tfim_chain(5, 0.0);
    const double e0 = ground_energy(h);
    EXPECT_NEAR(e0, -4.0, 1e-12);
    PromiseInstance yes{h, -3.5, -3.0};
    ReductionResult r = reduce_promise(yes);
    EXPECT_EQ(r.shift, 0.0);
    EXPECT_LE(ground_energy(r.reduced.h), r.reduced.a);
    PromiseInstance no{h, -5.0, -4.5};
    ReductionResult rn = reduce_promise(no);
    EXPECT_GE(ground_energy(rn.reduced.h), rn.reduced.b);
}

TEST(Promise, BadThresholds) {
    PromiseInstance p{tfim_chain(3, 0.0), 1.0, 1.0};
    try {
        reduce_promise(p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Contract);
    }
}

TEST(Promise, JsonRoundTrip) {
    PromiseInstance p{triangle_figure(), -1.5, -0.5};
    PromiseInstance back = promise_from_json(promise_to_json(p));
    EXPECT_EQ(back.a, p.a);
    EXPECT_EQ(back.b, p.b);
    EXPECT_EQ(back.h.terms, p.h.terms);
}

TEST(Gibbs, StateIsNormalized) {
    ComplexMatrix rho = gibbs_state(triangle_figure(), 1.0);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT(max_hermiticity_defect(rho), 1e-14);
    for (double ev : hermitian_eigenvalues(rho)) {
        EXPECT_GT(ev, 0.0);
    }
    EXPECT_EQ(trace_distance(rho, rho), 0.0);
}

TEST(Gibbs, StateMatchesExponential) {
    oracle::CM h = oracle::triangle_h01() + oracle::triangle_h12() + oracle::triangle_h02();
    oracle::CM e = oracle::expm(-0.7 * h);
    e /= e.trace();
    EXPECT_LT(oracle::max_abs_diff(gibbs_state(triangle_figure(), 0.7), e), 1e-12);
}

TEST(Gibbs, TriangleCertificate) {
    Hamiltonian h = triangle_figure();
    Hamiltonian hhat = round(h).rounded;
    GibbsCertificate c = certify_gibbs_pair(h, hhat, 0.02, 0.5, 0.1);
    ASSERT_TRUE(c.measured_trace_distance.has_value());
    EXPECT_NEAR(*c.measured_trace_distance, 0.00452587491170978, 1e-12);
    EXPECT_NEAR(c.continuity_bound, 0.024435042040682916, 1e-12);
    EXPECT_TRUE(c.measured_within_bound);
    EXPECT_NEAR(c.regime_threshold, std::log1p(0.05) / 1.0, 1e-15);
    EXPECT_FALSE(c.regime_ok);
    EXPECT_EQ(gibbs_to_json(c)["format"], "acham-gibbs-v1");
}

TEST(Evolution, MatchesDenseExponential) {
    Hamiltonian hc = round(triangle_figure()).rounded;
    oracle::CM dense = dense_matrix(hc);
    for (double t : {0.1, 1.0, 10.0}) {
        oracle::CM expected = oracle::expm(Complex(0.0, t) * dense);
        EXPECT_LT(oracle::max_abs_diff(commuting_evolution(hc, t), expected), 1e-9) << "t = " << t;
    }
}

TEST(Evolution, CompareReportsSmallDeviation) {
    Hamiltonian hc = round(random_near_commuting({.n = 6, .m = 10, .one_local = 2, .eps_target = 1e-3, .seed = 2})).rounded;
    std::vector<double> times{0.1, 1.0, 10.0, 100.0};
    for (const EvolutionComparison &c : compare_evolution(hc, times)) {
        EXPECT_LE(c.deviation, 1e-8) << "t = " << c.t;
        EXPECT_LE(c.unitarity_defect, 1e-9);
    }
}

TEST(Evolution, RejectsNonCommuting) {
    try {
        commuting_evolution(triangle_figure(), 1.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Contract);
    }
}

TEST(Split, WeakFieldTfim) {
    Hamiltonian h = tfim_chain(6, 1e-6);
    SimulationSplit s = simulation_split(h, 2.0, 5.0);
    EXPECT_TRUE(s.alpha_b_exact);
    EXPECT_NEAR(s.alpha_b, 1.2e-5, 1e-15);
    EXPECT_LT(s.alpha_b, s.alpha_b_bound);
    EXPECT_NEAR(s.alpha_b_bound, 216.0 * 11.0 * std::pow(2e-6, 1.0 / 6.0), 1e-9);
    EXPECT_TRUE(verify_commuting(s.h_commuting).commuting);
    EXPECT_NEAR(s.cost_estimate, s.alpha_b * 2.0 * (5.0 + 11.0), 1e-15);
    EXPECT_LT(oracle::max_abs_diff(dense_matrix(s.h_commuting) + dense_matrix(s.delta), dense_matrix(h)), 1e-10);
}

TEST(Split, CommutingInputHasZeroRemainder) {
    SimulationSplit s = simulation_split(tfim_chain(5, 0.0), 1.0, 1.0);
    EXPECT_EQ(s.alpha_b, 0.0);
    EXPECT_EQ(split_to_json(s)["format"], "acham-split-v1");
}

TEST(Split, TriangleRemainderSupports) {
    Hamiltonian h = triangle_figure();
    SimulationSplit s = simulation_split(h, 1.0, 1.0);
    for (std::size_t k = 0; k < s.delta.m(); ++k) {
        EXPECT_EQ(s.delta.terms[k].qubits, h.terms[k].qubits);
    }
}

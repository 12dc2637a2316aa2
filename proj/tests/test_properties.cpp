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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "acham/apps.hpp"
#include "acham/errors.hpp"
#include "acham/generators.hpp"
#include "acham/io.hpp"
#include "acham/linalg.hpp"
#include "acham/model.hpp"
#include "acham/pauli.hpp"
#include "acham/rounding.hpp"
#include "acham/verify.hpp"

using namespace acham;

namespace {

ComplexMatrix random_hermitian(Rng &rng, Eigen::Index d, double scale = 1.0) {
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            m(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
    }
    ComplexMatrix h = (m + m.adjoint()) / 2.0;
    return h * (scale / operator_norm(h));
}

Mat2 random_hermitian2(Rng &rng) {
    return Mat2(random_hermitian(rng, 2));
}

PauliCoeffs2 random_coeffs2(Rng &rng, double norm) {
    PauliCoeffs2 c{};
    for (auto &row : c) {
        for (double &x : row) {
            x = rng.uniform(-1, 1);
        }
    }
    const double s = norm / operator_norm(ComplexMatrix(matrix_from_pauli(c)));
    for (auto &row : c) {
        for (double &x : row) {
            x *= s;
        }
    }
    return c;
}

double gap2(const Mat2 &m) {
    return spectral_decompose_2x2(m).gap();
}

}  // namespace

TEST(Property, SpectralReconstruction2x2) {
    Rng rng(101);
    for (int t = 0; t < 2000; ++t) {
        Mat2 h = random_hermitian2(rng) * rng.uniform(0.0, 3.0);
        EXPECT_LE((h - spectral_decompose_2x2(h).reconstruct()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Property, CommutatorTransitivityFact) {
    Rng rng(102);
    for (int t = 0; t < 500; ++t) {
        ComplexMatrix a = random_hermitian(rng, 4), b = random_hermitian(rng, 4), c = random_hermitian(rng, 4);
        b = a + 0.1 * rng.uniform() * b;
        double lhs = operator_norm(commutator(a, c));
        double rhs = 2.0 * operator_norm(ComplexMatrix(a - b)) * operator_norm(c) + operator_norm(commutator(b, c));
        EXPECT_LE(lhs, rhs + 1e-12);
    }
}

TEST(Property, PartialTraceNormBound) {
    Rng rng(103);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d1 = 2, d2 = t % 2 == 0 ? 2 : 4;
        ComplexMatrix g(d1 * d2, d1 * d2);
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            for (Eigen::Index j = 0; j < g.cols(); ++j) {
                g(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
            }
        }
        ComplexMatrix rho = g * g.adjoint();
        rho /= rho.trace().real();
        ComplexMatrix reduced = partial_trace(rho, d1, d2, KeepFactor::First);
        EXPECT_GE(operator_norm(rho) + 1e-12, operator_norm(reduced) / static_cast<double>(d2));
    }
}

TEST(Property, WeylStability) {
    Rng rng(104);
    for (int t = 0; t < 300; ++t) {
        ComplexMatrix a = random_hermitian(rng, 8);
        ComplexMatrix b = random_hermitian(rng, 8, rng.uniform(0.0, 0.5));
        const double shift = hermitian_eigenvalues(a + b)(0) - hermitian_eigenvalues(a)(0);
        EXPECT_LE(std::abs(shift), operator_norm(b) + 1e-12);
    }
}

TEST(Property, HermitianExponentialIsUnitary) {
    Rng rng(105);
    for (int t = 0; t < 100; ++t) {
        ComplexMatrix h = random_hermitian(rng, 8, rng.uniform(0.0, 20.0));
        ComplexMatrix u = matrix_exponential(h, Complex(0.0, 1.0));
        ComplexMatrix defect = u.adjoint() * u - ComplexMatrix::Identity(8, 8);
        EXPECT_LE(defect.cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Property, ReconstructionIdentityBothSides) {
    Rng rng(106);
    for (int t = 0; t < 1000; ++t) {
        Mat4 h = Mat4(random_hermitian(rng, 4));
        for (Side side : {Side::Left, Side::Right}) {
            EXPECT_LE((decompose_about(h, side).reconstruct() - h).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(Property, HermiticityBiconditional) {
    Rng rng(107);
    for (int t = 0; t < 200; ++t) {
        Mat4 h = Mat4(random_hermitian(rng, 4));
        for (Side side : {Side::Left, Side::Right}) {
            for (const Mat2 &c : decompose_about(h, side).components) {
                EXPECT_LE(max_hermiticity_defect(c), 1e-14);
            }
        }
        // A non-Hermitian operator has at least one non-Hermitian component;
        // the components are recomputed by partial trace so the guard in
        // decompose_about does not decide the outcome.
        ComplexMatrix anti = ComplexMatrix(h) * Complex(0.0, 1.0);
        double worst = 0.0;
        for (int alpha = 0; alpha < 4; ++alpha) {
            ComplexMatrix s = kron(ComplexMatrix::Identity(2, 2), ComplexMatrix(pauli_basis(alpha)));
            ComplexMatrix comp = partial_trace(s * anti, 2, 2, KeepFactor::First) / 2.0;
            worst = std::max(worst, max_hermiticity_defect(comp));
        }
        EXPECT_GT(worst, 1e-6);
        EXPECT_THROW(decompose_about(Mat4(anti), Side::Left), Error);
    }
}

TEST(Property, NormLowerBoundFromPauliComponents) {
    Rng rng(108);
    for (int t = 0; t < 1000; ++t) {
        Mat4 h = Mat4(random_hermitian(rng, 4, rng.uniform(0.1, 2.0)));
        const double full = operator_norm(ComplexMatrix(h));
        for (Side side : {Side::Left, Side::Right}) {
            for (const Mat2 &c : decompose_about(h, side).components) {
                EXPECT_GE(full + 1e-9, operator_norm(c));
            }
        }
    }
}

TEST(Property, PropagationOverRandomPairs) {
    Rng rng(109);
    // Shared-qubit layouts: (0,1)&(1,2), (0,1)&(0,2), (0,2)&(1,2).
    const std::array<std::array<std::size_t, 4>, 3> layouts{{{0, 1, 1, 2}, {0, 1, 0, 2}, {0, 2, 1, 2}}};
    for (int t = 0; t < 1000; ++t) {
        const auto &l = layouts[t % 3];
        LocalTerm h1 = LocalTerm::two_local(l[0], l[1], random_coeffs2(rng, 1.0));
        PauliCoeffs2 c2 = random_coeffs2(rng, 1.0);
        if (t % 2 == 1) {
            // Nearly diagonal in the computational basis, so the pair is close to commuting.
            PauliCoeffs2 d{};
            for (int a : {0, 3}) {
                for (int b : {0, 3}) {
                    d[a][b] = c2[a][b];
                }
            }
            const double w = std::pow(10.0, -rng.uniform(1.0, 6.0));
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    c2[a][b] = d[a][b] + w * c2[a][b];
                }
            }
            h1 = LocalTerm::two_local(l[0], l[1], d);
        }
        LocalTerm h2 = LocalTerm::two_local(l[2], l[3], c2);
        EXPECT_LE(propagation_check(h1, h2), pairwise_commutator_norm(h1, h2) + 1e-9);
    }
}

TEST(Property, RobustTransitivity) {
    Rng rng(110);
    int checked = 0;
    for (int t = 0; t < 3000; ++t) {
        Mat2 b = random_hermitian2(rng);
        const double xi = gap2(b);
        if (!(xi > 0.05)) {
            continue;
        }
        const double w = std::pow(10.0, -rng.uniform(0.0, 6.0));
        Mat2 a = pinch(random_hermitian2(rng), b) + w * random_hermitian2(rng);
        Mat2 c = pinch(random_hermitian2(rng), b) + w * random_hermitian2(rng);
        a /= std::max(1.0, operator_norm(a));
        c /= std::max(1.0, operator_norm(c));
        const double eps = std::max(operator_norm(Mat2(a * b - b * a)), operator_norm(Mat2(b * c - c * b)));
        if (eps > xi) {
            continue;
        }
        ++checked;
        EXPECT_LE(operator_norm(Mat2(a * c - c * a)), 6.0 * eps / xi + 1e-9);
    }
    EXPECT_GT(checked, 1000);
}

TEST(Property, ExactTransitivity) {
    Rng rng(111);
    for (int t = 0; t < 1000; ++t) {
        Mat2 b = random_hermitian2(rng);
        if (!(gap2(b) > 1e-6)) {
            continue;
        }
        Mat2 a = pinch(random_hermitian2(rng), b);
        Mat2 c = pinch(random_hermitian2(rng), b);
        EXPECT_LE(operator_norm(Mat2(a * c - c * a)), 1e-10);
    }
}

TEST(Property, SnapDistanceEqualsGap) {
    Rng rng(112);
    for (int t = 0; t < 2000; ++t) {
        Mat2 b = random_hermitian2(rng) * rng.uniform(0.0, 2.0);
        EXPECT_NEAR(operator_norm(Mat2(b - snap(b))), gap2(b), 1e-10);
    }
}

TEST(Property, PinchDistanceIdentity) {
    Rng rng(113);
    for (int t = 0; t < 2000; ++t) {
        Mat2 a = random_hermitian2(rng);
        if (gap2(a) < 0.1) {
            continue;
        }
        Mat2 b = random_hermitian2(rng);
        Mat2 p = pinch(b, a);
        EXPECT_NEAR(operator_norm(Mat2(b - p)), operator_norm(Mat2(b * a - a * b)) / gap2(a), 1e-9);
        EXPECT_LE(operator_norm(Mat2(p * a - a * p)), 1e-10);
    }
}

TEST(Property, RoundingInvariantsOnRandomInstances) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const double eps_target = seed % 3 == 0 ? 1e-3 : (seed % 3 == 1 ? 1e-6 : 1e-9);
        const std::size_t n = 4 + seed % 5, one_local = seed % 4;
        const std::size_t m = std::min<std::size_t>(6 + seed % 8, n * (n - 1) / 2 + one_local);
        Hamiltonian h = random_near_commuting(
            {.n = n, .m = m, .one_local = one_local, .eps_target = eps_target, .seed = seed});
        RoundingResult r = round(h);
        ASSERT_TRUE(r.report.bounds_satisfied) << "seed " << seed;
        const double bound = per_term_bound(r.report.eps);
        ASSERT_EQ(r.rounded.m(), h.m());
        for (std::size_t k = 0; k < h.m(); ++k) {
            const LocalTerm &in = h.terms[k];
            const LocalTerm &out = r.rounded.terms[k];
            // Locality: same support, so support(out) is contained in support(in).
            EXPECT_EQ(out.arity, in.arity);
            EXPECT_EQ(out.qubits, in.qubits);
            const double d = term_distance(in, out);
            EXPECT_LE(d, bound + 1e-9);
            EXPECT_LE(term_norm(out), term_norm(in) + bound + 1e-9);
            const TermReport &tr = r.report.per_term[k];
            EXPECT_LE(tr.snap_distance, tr.stage_bound + 1e-9);
        }
        for (const Pivot &p : r.report.pivots) {
            if (!p.is_identity()) {
                EXPECT_LE(p.contract_residual, p.kappa + 1e-9);
                EXPECT_GE(p.gap, p.gap_floor);
            }
        }
        EXPECT_TRUE(verify_commuting(r.rounded).commuting) << "seed " << seed;
    }
}

TEST(Property, EpsilonInvariantUnderReordering) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Hamiltonian h = random_near_commuting({.n = 6, .m = 10, .one_local = 3, .eps_target = 1e-3, .seed = seed});
        std::vector<LocalTerm> terms = h.terms;
        std::mt19937_64 shuffle_rng(seed);
        std::shuffle(terms.begin(), terms.end(), shuffle_rng);
        Hamiltonian raw{h.n, terms};
        EXPECT_EQ(commutator_profile(raw).epsilon, commutator_profile(h).epsilon);
        // Ingestion canonicalizes order, so rounding is order-independent too.
        Hamiltonian canon = ingest_terms(h.n, terms);
        EXPECT_EQ(dump_json(report_to_json(round(canon).report)), dump_json(report_to_json(round(h).report)));
    }
}

TEST(Property, IngestSerializeRoundTrip) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Hamiltonian h = random_near_commuting({.n = 7, .m = 12, .one_local = 4, .eps_target = 1e-4, .seed = seed});
        std::string text = dump_json(to_json(h));
        Hamiltonian back = ingest(Json::parse(text));
        EXPECT_EQ(back.terms, h.terms);
        EXPECT_EQ(dump_json(to_json(back)), text);
    }
}

TEST(Property, GibbsContinuityOnRandomInstances) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Hamiltonian h = random_near_commuting({.n = 6, .m = 9, .one_local = 2, .eps_target = 1e-3, .seed = seed});
        Hamiltonian hhat = round(h).rounded;
        const double dist = global_distance(h, hhat).value;
        for (double beta : {0.1, 1.0, 2.0}) {
            double td = trace_distance(gibbs_state(h, beta), gibbs_state(hhat, beta));
            EXPECT_LE(td, std::expm1(2.0 * beta * dist) + 1e-12);
        }
    }
}

TEST(Property, SplitAdditivity) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Hamiltonian h = random_near_commuting({.n = 6, .m = 10, .one_local = 3, .eps_target = 1e-3, .seed = seed});
        SimulationSplit s = simulation_split(h, 1.0, 1.0);
        ComplexMatrix diff = dense_matrix(s.h_commuting) + dense_matrix(s.delta) - dense_matrix(h);
        EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LE(s.alpha_b, s.alpha_b_bound + 1e-12);
    }
}

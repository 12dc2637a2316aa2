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

#include "acham/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "acham/errors.hpp"

namespace acham {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::size_t Rng::below(std::size_t bound) {
    // Rejection keeps the result unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

std::array<double, 3> Rng::unit_vector() {
    for (;;) {
        double x = uniform(-1, 1), y = uniform(-1, 1), z = uniform(-1, 1);
        double r2 = x * x + y * y + z * z;
        if (r2 > 1e-4 && r2 <= 1.0) {
            double r = std::sqrt(r2);
            return {x / r, y / r, z / r};
        }
    }
}

namespace {

double param_double(const GeneratorSpec &spec, const std::string &key, std::optional<double> fallback = {}) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (fallback) {
            return *fallback;
        }
        throw Error(ErrorKind::Schema, spec.family + " needs parameter " + key);
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(it->second, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != it->second.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::Schema, "parameter " + key + "=" + it->second + " is not a number");
    }
    return v;
}

std::uint64_t param_uint(const GeneratorSpec &spec, const std::string &key, std::optional<std::uint64_t> fallback = {}) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (fallback) {
            return *fallback;
        }
        throw Error(ErrorKind::Schema, spec.family + " needs parameter " + key);
    }
    const std::string &s = it->second;
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorKind::Schema, "parameter " + key + "=" + s + " is not a non-negative integer");
    }
    try {
        return std::stoull(s);
    } catch (const std::exception &) {
        throw Error(ErrorKind::Schema, "parameter " + key + "=" + s + " is out of range");
    }
}

void check_field(double h) {
    if (!(h >= 0.0)) {
        throw Error(ErrorKind::Schema, "field h must be non-negative");
    }
    if (h > 1.0) {
        std::ostringstream os;
        os << "field term has norm " << h << " > 1";
        throw Error(ErrorKind::NormViolation, os.str());
    }
}

LocalTerm zz(std::size_t i, std::size_t j) {
    PauliCoeffs2 c{};
    c[3][3] = -1.0;
    return LocalTerm::two_local(i, j, c);
}

LocalTerm field(std::size_t q, double h) {
    return LocalTerm::one_local(q, {0.0, -h, 0.0, 0.0});
}

// Coefficients of v . sigma.
PauliCoeffs1 along(const std::array<double, 3> &v) {
    return {0.0, v[0], v[1], v[2]};
}

PauliCoeffs2 outer(const PauliCoeffs1 &a, const PauliCoeffs1 &b, double scale) {
    PauliCoeffs2 c{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            c[i][j] = scale * a[i] * b[j];
        }
    }
    return c;
}

PauliCoeffs2 add(const PauliCoeffs2 &x, const PauliCoeffs2 &y) {
    PauliCoeffs2 c{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            c[i][j] = x[i][j] + y[i][j];
        }
    }
    return c;
}

// Smallest component gap needed on each side of a base term.
constexpr double kBaseGap = 0.05;

}  // namespace

Hamiltonian tfim_chain(std::size_t n, double h) {
    check_field(h);
    std::vector<LocalTerm> terms;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        terms.push_back(zz(i, i + 1));
    }
    if (h > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            terms.push_back(field(i, h));
        }
    }
    return ingest_terms(n, std::move(terms));
}

Hamiltonian tfim_grid(std::size_t rows, std::size_t cols, double h) {
    check_field(h);
    std::vector<LocalTerm> terms;
    auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                terms.push_back(zz(id(r, c), id(r, c + 1)));
            }
            if (r + 1 < rows) {
                terms.push_back(zz(id(r, c), id(r + 1, c)));
            }
            if (h > 0.0) {
                terms.push_back(field(id(r, c), h));
            }
        }
    }
    return ingest_terms(rows * cols, std::move(terms));
}

Hamiltonian triangle_figure(double weight) {
    const int I = 0, X = 1, Z = 3;
    PauliCoeffs2 h01{}, h12{}, h02{};
    // X (x) |0><0| + w Z (x) |1><1|
    h01[X][I] = 0.5;
    h01[X][Z] = 0.5;
    h01[Z][I] = weight / 2.0;
    h01[Z][Z] = -weight / 2.0;
    // |0><0| (x) X + w |1><1| (x) Z
    h12[I][X] = 0.5;
    h12[Z][X] = 0.5;
    h12[I][Z] = weight / 2.0;
    h12[Z][Z] = -weight / 2.0;
    h02[X][X] = 1.0;
    return ingest_terms(3, {LocalTerm::two_local(0, 1, h01), LocalTerm::two_local(1, 2, h12),
                            LocalTerm::two_local(0, 2, h02)});
}

Hamiltonian triangle_unweighted() {
    const int I = 0, X = 1, Z = 3;
    PauliCoeffs2 h01{}, h12{}, h02{};
    h01[X][I] = 0.5;
    h01[X][Z] = 0.5;
    h12[I][X] = 0.5;
    h12[Z][X] = 0.5;
    h02[X][X] = 1.0;
    return ingest_terms(3, {LocalTerm::two_local(0, 1, h01), LocalTerm::two_local(1, 2, h12),
                            LocalTerm::two_local(0, 2, h02)});
}

Hamiltonian random_near_commuting(const RandomNearCommutingOptions &opt) {
    if (!(opt.eps_target >= 0.0)) {
        throw Error(ErrorKind::Schema, "eps target must be non-negative");
    }
    if (opt.eps_target > 1.0) {
        throw Error(ErrorKind::Regime, "eps target exceeds 1");
    }
    if (opt.one_local > opt.m || opt.one_local > opt.n) {
        throw Error(ErrorKind::Schema, "one_local must not exceed m or n");
    }
    const std::size_t two_local = opt.m - opt.one_local;
    if (two_local > 0 && (opt.n < 2 || two_local > opt.n * (opt.n - 1) / 2)) {
        throw Error(ErrorKind::Schema, "too many 2-local terms for n=" + std::to_string(opt.n));
    }
    Rng rng(opt.seed);
    const double delta = opt.eps_target / 4.0;

    std::vector<std::array<double, 3>> axes(opt.n);
    for (auto &a : axes) {
        a = rng.unit_vector();
    }

    auto perturbation2 = [&]() {
        PauliCoeffs2 e{};
        for (auto &row : e) {
            for (double &v : row) {
                v = rng.uniform(-1, 1);
            }
        }
        e[0][0] = 0.0;
        double norm = term_norm(LocalTerm::two_local(0, 1, e));
        double target = delta * rng.uniform();
        for (auto &row : e) {
            for (double &v : row) {
                v *= norm > 0.0 ? target / norm : 0.0;
            }
        }
        return e;
    };

    std::vector<LocalTerm> terms;
    std::set<std::pair<std::size_t, std::size_t>> used;
    while (used.size() < two_local) {
        std::size_t i = rng.below(opt.n);
        std::size_t j = rng.below(opt.n);
        if (i == j) {
            continue;
        }
        if (i > j) {
            std::swap(i, j);
        }
        if (!used.insert({i, j}).second) {
            continue;
        }
        PauliCoeffs1 pi = along(axes[i]);
        PauliCoeffs1 pj = along(axes[j]);
        PauliCoeffs1 id{1.0, 0.0, 0.0, 0.0};
        PauliCoeffs2 base{};
        for (;;) {
            double d00 = rng.uniform(-1, 1), d01 = rng.uniform(-1, 1);
            double d10 = rng.uniform(-1, 1), d11 = rng.uniform(-1, 1);
            // Eigenvalues are d00 + s d10 + t d01 + s t d11 for s, t = +-1.
            double norm = 0.0;
            for (int s = -1; s <= 1; s += 2) {
                for (int t = -1; t <= 1; t += 2) {
                    norm = std::max(norm, std::abs(d00 + s * d10 + t * d01 + s * t * d11));
                }
            }
            double scale = (1.0 - delta) * rng.uniform(0.5, 1.0) / norm;
            base = add(add(outer(id, id, d00 * scale), outer(id, pj, d01 * scale)),
                       add(outer(pi, id, d10 * scale), outer(pi, pj, d11 * scale)));
            if (is_gapped(base, Side::Left, kBaseGap).gapped && is_gapped(base, Side::Right, kBaseGap).gapped) {
                break;
            }
        }
        terms.push_back(LocalTerm::two_local(i, j, add(base, perturbation2())));
    }
    std::set<std::size_t> singles;
    while (singles.size() < opt.one_local) {
        std::size_t q = rng.below(opt.n);
        if (!singles.insert(q).second) {
            continue;
        }
        PauliCoeffs1 g{};
        for (;;) {
            double d0 = rng.uniform(-1, 1), d1 = rng.uniform(-1, 1);
            double scale = (1.0 - delta) * rng.uniform(0.5, 1.0) / (std::abs(d0) + std::abs(d1));
            d0 *= scale;
            d1 *= scale;
            if (2.0 * std::abs(d1) >= 2.0 * kBaseGap) {
                g = {d0, d1 * axes[q][0], d1 * axes[q][1], d1 * axes[q][2]};
                break;
            }
        }
        PauliCoeffs1 e{0.0, rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        double enorm = 0.5 * spectral_gap(e);
        double target = delta * rng.uniform();
        for (int a = 1; a < 4; ++a) {
            g[a] += enorm > 0.0 ? e[a] * target / enorm : 0.0;
        }
        terms.push_back(LocalTerm::one_local(q, g));
    }
    return ingest_terms(opt.n, std::move(terms));
}

double realized_epsilon(const Hamiltonian &h) {
    return commutator_profile(h).epsilon;
}

Hamiltonian generate(const GeneratorSpec &spec) {
    const std::string &f = spec.family;
    if (f == "tfim-chain") {
        return tfim_chain(param_uint(spec, "n"), param_double(spec, "h", 0.0));
    }
    if (f == "tfim-grid") {
        return tfim_grid(param_uint(spec, "rows"), param_uint(spec, "cols"), param_double(spec, "h", 0.0));
    }
    if (f == "triangle-figure") {
        return triangle_figure(param_double(spec, "weight", 0.01));
    }
    if (f == "triangle-paper") {
        return triangle_unweighted();
    }
    if (f == "random-near-commuting") {
        RandomNearCommutingOptions opt;
        opt.n = param_uint(spec, "n", opt.n);
        opt.m = param_uint(spec, "m", opt.m);
        opt.one_local = param_uint(spec, "one_local", opt.one_local);
        opt.eps_target = param_double(spec, "eps", opt.eps_target);
        opt.seed = param_uint(spec, "seed", opt.seed);
        return random_near_commuting(opt);
    }
    throw Error(ErrorKind::Schema, "unknown family " + f);
}

}  // namespace acham

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

// Slow, self-contained reference implementations used only by the tests.
// Nothing here calls into the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using CM = Eigen::MatrixXcd;

inline CM pauli(char which) {
    CM m = CM::Zero(2, 2);
    switch (which) {
        case 'I':
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case 'X':
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 'Y':
            m(0, 1) = C(0, -1);
            m(1, 0) = C(0, 1);
            break;
        default:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
    }
    return m;
}

inline CM ket0() {
    CM m = CM::Zero(2, 2);
    m(0, 0) = 1;
    return m;
}

inline CM ket1() {
    CM m = CM::Zero(2, 2);
    m(1, 1) = 1;
    return m;
}

inline CM mul(const CM &a, const CM &b) {
    CM out = CM::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            C s = 0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                s += a(i, k) * b(k, j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

inline CM kron(const CM &a, const CM &b) {
    CM out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            for (Eigen::Index k = 0; k < b.rows(); ++k) {
                for (Eigen::Index l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline CM kron3(const CM &a, const CM &b, const CM &c) {
    return kron(kron(a, b), c);
}

inline CM comm(const CM &a, const CM &b) {
    return mul(a, b) - mul(b, a);
}

inline CM dagger(const CM &a) {
    CM out(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

inline double max_abs_diff(const CM &a, const CM &b) {
    double worst = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

// Cyclic Jacobi on the real symmetric embedding [[Re, -Im], [Im, Re]]; each
// eigenvalue of the Hermitian input appears twice there.
inline std::vector<double> eigenvalues(const CM &h) {
    const Eigen::Index n = h.rows();
    const Eigen::Index d = 2 * n;
    std::vector<double> a(static_cast<std::size_t>(d * d));
    auto at = [&](Eigen::Index i, Eigen::Index j) -> double & { return a[static_cast<std::size_t>(i * d + j)]; };
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double re = 0.5 * (h(i, j).real() + h(j, i).real());
            double im = 0.5 * (h(i, j).imag() - h(j, i).imag());
            at(i, j) = re;
            at(i + n, j + n) = re;
            at(i, j + n) = -im;
            at(i + n, j) = im;
        }
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = i + 1; j < d; ++j) {
                off += at(i, j) * at(i, j);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (Eigen::Index p = 0; p < d; ++p) {
            for (Eigen::Index q = p + 1; q < d; ++q) {
                if (std::abs(at(p, q)) < 1e-300) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (Eigen::Index k = 0; k < d; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < d; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev;
    for (Eigen::Index i = 0; i < d; ++i) {
        ev.push_back(at(i, i));
    }
    std::sort(ev.begin(), ev.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < ev.size(); i += 2) {
        out.push_back(0.5 * (ev[i] + ev[i + 1]));
    }
    return out;
}

inline double norm(const CM &m) {
    auto ev = eigenvalues(mul(dagger(m), m));
    return std::sqrt(std::max(0.0, ev.back()));
}

inline double lambda_min(const CM &h) {
    return eigenvalues(h).front();
}

// exp(m) by Taylor series with scaling and squaring.
inline CM expm(const CM &m) {
    double scale = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            scale += std::abs(m(i, j));
        }
    }
    int squarings = 0;
    while (scale > 0.25) {
        scale /= 2;
        ++squarings;
    }
    CM a = m / std::pow(2.0, squarings);
    CM term = CM::Identity(m.rows(), m.cols());
    CM sum = term;
    for (int k = 1; k < 30; ++k) {
        term = mul(term, a) / static_cast<double>(k);
        sum += term;
    }
    for (int k = 0; k < squarings; ++k) {
        sum = mul(sum, sum);
    }
    return sum;
}

// Tr over the second factor by index sums.
inline CM trace_second(const CM &m, Eigen::Index d1, Eigen::Index d2) {
    CM out = CM::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d1; ++j) {
            for (Eigen::Index k = 0; k < d2; ++k) {
                out(i, j) += m(i * d2 + k, j * d2 + k);
            }
        }
    }
    return out;
}

// The triangle instance written out with explicit tensor products.
inline CM triangle_h01(double w = 0.01) {
    return kron3(pauli('X'), ket0(), pauli('I')) + w * kron3(pauli('Z'), ket1(), pauli('I'));
}
inline CM triangle_h12(double w = 0.01) {
    return kron3(pauli('I'), ket0(), pauli('X')) + w * kron3(pauli('I'), ket1(), pauli('Z'));
}
inline CM triangle_h02() {
    return kron3(pauli('X'), pauli('I'), pauli('X'));
}

}  // namespace oracle

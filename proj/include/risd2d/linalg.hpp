// SPDX-License-Identifier: Apache-2.0
//
// ris-d2d: sum-rate optimization for RIS-assisted D2D underlay uplinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISD2D_LINALG_HPP
#define RISD2D_LINALG_HPP

/// Dense complex vectors/matrices and the few decompositions the pipeline
/// needs. Everything is double precision, value-semantic and pure; matrices
/// are small (at most a few hundred rows), so the algorithms are the simple
/// dense ones: rank-one inverse updates, cyclic Jacobi for Hermitian
/// eigenproblems, eigen-based PSD square roots.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "risd2d/errors.hpp"

namespace risd2d {

using cxd = std::complex<double>;

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(cxd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// ---------------------------------------------------------------------------
// CVector

class CVector {
  public:
    CVector() = default;
    explicit CVector(std::size_t n) : e_(n, cxd{0.0, 0.0}) {}
    CVector(std::initializer_list<cxd> init) : e_(init) {}

    static CVector zeros(std::size_t n) { return CVector(n); }

    std::size_t size() const { return e_.size(); }
    cxd& operator[](std::size_t i) { return e_[i]; }
    const cxd& operator[](std::size_t i) const { return e_[i]; }
    cxd* data() { return e_.data(); }
    const cxd* data() const { return e_.data(); }
    auto begin() { return e_.begin(); }
    auto end() { return e_.end(); }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool all_finite() const {
        return std::all_of(e_.begin(), e_.end(), [](cxd z) { return finite(z); });
    }

  private:
    std::vector<cxd> e_;
};

// ---------------------------------------------------------------------------
// CMatrix (row-major)

class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cxd& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    cxd* data() { return e_.data(); }
    const cxd* data() const { return e_.data(); }

    bool all_finite() const {
        return std::all_of(e_.begin(), e_.end(), [](cxd z) { return finite(z); });
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cxd> e_;
};

// ---------------------------------------------------------------------------
// Elementary operations

/// Conjugating inner product x^H y.
inline cxd vdot(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw DimensionError("vdot: size mismatch");
    cxd acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

inline double norm2_sq(const CVector& x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::norm(x[i]);
    return acc;
}

inline double norm2(const CVector& x) { return std::sqrt(norm2_sq(x)); }

inline CVector scaled(const CVector& x, cxd a) {
    CVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
    return r;
}

inline CVector add(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw DimensionError("add: size mismatch");
    CVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

inline CVector sub(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw DimensionError("sub: size mismatch");
    CVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

/// A x.
inline CVector matvec(const CMatrix& a, const CVector& x) {
    if (a.cols() != x.size()) throw DimensionError("matvec: size mismatch");
    CVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cxd acc{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        r[i] = acc;
    }
    return r;
}

/// A^H x.
inline CVector matvec_adj(const CMatrix& a, const CVector& x) {
    if (a.rows() != x.size()) throw DimensionError("matvec_adj: size mismatch");
    CVector r(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        cxd acc{0.0, 0.0};
        for (std::size_t i = 0; i < a.rows(); ++i) acc += std::conj(a(i, j)) * x[i];
        r[j] = acc;
    }
    return r;
}

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: size mismatch");
    CMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cxd aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline CMatrix adjoint(const CMatrix& a) {
    CMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

/// x y^H.
inline CMatrix outer(const CVector& x, const CVector& y) {
    CMatrix r(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = x[i] * std::conj(y[j]);
    return r;
}

/// r += a * (x y^H), in place.
inline void outer_acc(CMatrix& r, cxd a, const CVector& x, const CVector& y) {
    if (r.rows() != x.size() || r.cols() != y.size()) throw DimensionError("outer_acc: size mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r(i, j) += a * x[i] * std::conj(y[j]);
}

inline double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

inline double fro_norm(const CMatrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
}

/// max |A - A^H| <= 1e-12 * max |A| (zero matrices count as Hermitian).
inline bool is_hermitian(const CMatrix& a, double rtol = 1e-12) {
    if (a.rows() != a.cols()) return false;
    double dev = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
    return dev <= rtol * max_abs(a);
}

/// (A + A^H) / 2.
inline CMatrix hermitian_part(const CMatrix& a) {
    CMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return r;
}

/// Re tr(A B); exact real for Hermitian pairs.
inline double trace_inner(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.cols() || a.cols() != b.rows()) throw DimensionError("trace_inner: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) acc += (a(i, j) * b(j, i)).real();
    return acc;
}

// ---------------------------------------------------------------------------
// sherman_morrison_inv

/// (scale * v v^H + sigma2 * I)^{-1} through the rank-one update identity:
/// (1/sigma2) * (I - scale/(sigma2 + scale*||v||^2) * v v^H).
inline CMatrix sherman_morrison_inv(double scale, const CVector& v, double sigma2) {
    if (!(sigma2 > 0.0)) throw InvalidInputError("sherman_morrison_inv: sigma2 must be > 0");
    if (!(scale >= 0.0)) throw InvalidInputError("sherman_morrison_inv: scale must be >= 0");
    if (!finite(scale) || !finite(sigma2) || !v.all_finite())
        throw InvalidInputError("sherman_morrison_inv: non-finite input");
    const std::size_t n = v.size();
    const double coef = scale / (sigma2 + scale * norm2_sq(v));
    CMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        r(i, i) = (1.0 - coef * std::norm(v[i])) / sigma2;
        for (std::size_t j = i + 1; j < n; ++j) {
            const cxd val = -coef * v[i] * std::conj(v[j]) / sigma2;
            r(i, j) = val;
            r(j, i) = std::conj(val);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition (cyclic Jacobi with complex rotations)

struct HermitianEig {
    std::vector<double> values; // ascending
    CMatrix vectors;            // columns; A = V diag(values) V^H
};

inline HermitianEig eig_hermitian(const CMatrix& a_in) {
    if (a_in.rows() != a_in.cols()) throw DimensionError("eig_hermitian: square matrix required");
    if (!a_in.all_finite()) throw InvalidInputError("eig_hermitian: non-finite input");
    const std::size_t n = a_in.rows();
    CMatrix a = hermitian_part(a_in);
    CMatrix v = CMatrix::identity(n);
    const double fro = fro_norm(a);
    const double stop = 1e-15 * std::max(fro, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cxd b = a(p, q);
                const double ab = std::abs(b);
                if (ab <= stop / n) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cxd u = b / ab;
                const double tau = (aqq - app) / (2.0 * ab);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cxd akp = a(k, p);
                    const cxd akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(u) * akq;
                    a(k, q) = s * u * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = c * c * app + s * s * aqq - 2.0 * c * s * ab;
                a(q, q) = s * s * app + c * c * aqq + 2.0 * c * s * ab;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const cxd vkp = v(k, p);
                    const cxd vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(u) * vkq;
                    v(k, q) = s * u * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEig out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

/// Smallest eigenvalue of a Hermitian matrix.
inline double eig_min_hermitian(const CMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("eig_min_hermitian: square matrix required");
    if (!a.all_finite()) throw InvalidInputError("eig_min_hermitian: non-finite input");
    if (!is_hermitian(a)) throw InvalidInputError("eig_min_hermitian: matrix is not Hermitian");
    if (a.rows() == 0) throw InvalidInputError("eig_min_hermitian: empty matrix");
    return eig_hermitian(a).values.front();
}

// ---------------------------------------------------------------------------
// psd_sqrt

/// Hermitian square root L (= L^H) with L L^H = A', where A' clips negative
/// eigenvalues of A to zero. Eigenvalues below -clip_tol are an error.
inline CMatrix psd_sqrt(const CMatrix& a, double clip_tol = 1e-9) {
    if (a.rows() != a.cols()) throw DimensionError("psd_sqrt: square matrix required");
    if (!a.all_finite()) throw InvalidInputError("psd_sqrt: non-finite input");
    if (!is_hermitian(a)) throw InvalidInputError("psd_sqrt: matrix is not Hermitian");
    const HermitianEig eig = eig_hermitian(a);
    if (!eig.values.empty() && eig.values.front() < -clip_tol)
        throw NotPsdError("psd_sqrt: eigenvalue below -clip_tol");
    const std::size_t n = a.rows();
    CMatrix l(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(eig.values[k], 0.0);
        if (lam == 0.0) continue;
        const double rl = std::sqrt(lam);
        for (std::size_t i = 0; i < n; ++i) {
            const cxd vik = rl * eig.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) l(i, j) += vik * std::conj(eig.vectors(j, k));
        }
    }
    return l;
}

} // namespace risd2d

#endif // RISD2D_LINALG_HPP

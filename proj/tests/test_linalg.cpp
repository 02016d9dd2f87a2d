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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "risd2d/linalg.hpp"
#include "risd2d/rng.hpp"

using namespace risd2d;

namespace {

CVector random_cvector(SplitMix64& rng, std::size_t n) {
    CVector v(n);
    for (auto& z : v) z = rng.next_cgaussian(1.0);
    return v;
}

CMatrix random_hermitian(SplitMix64& rng, std::size_t n) {
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = rng.next_gaussian_pair().first;
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = rng.next_cgaussian(1.0);
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

// Oracle: dense inverse by Gauss-Jordan elimination with partial pivoting.
// Independent of the library's rank-one identity path.
CMatrix oracle_inverse(CMatrix a) {
    const std::size_t n = a.rows();
    CMatrix inv = CMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(col, c), a(piv, c));
                std::swap(inv(col, c), inv(piv, c));
            }
        const cxd d = a(col, col);
        REQUIRE(std::abs(d) > 0.0);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const cxd f = a(r, col);
            if (f == cxd{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

// Oracle: det(A - lambda I) via LU with partial pivoting (real for Hermitian A).
double oracle_char_poly(const CMatrix& a_in, double lambda) {
    CMatrix a = a_in;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= lambda;
    cxd det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
            det = -det;
        }
        det *= a(col, col);
        if (std::abs(a(col, col)) == 0.0) return 0.0;
        for (std::size_t r = col + 1; r < n; ++r) {
            const cxd f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det.real();
}

// Oracle: the smallest root of the characteristic polynomial, found by an
// upward scan from below the Gershgorin range followed by bisection.
double oracle_eig_min(const CMatrix& a) {
    const std::size_t n = a.rows();
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) radius += std::abs(a(i, j));
        lo = std::min(lo, a(i, i).real() - radius);
        hi = std::max(hi, a(i, i).real() + radius);
    }
    lo -= 1.0;
    hi += 1.0;
    const int steps = 20000;
    const double h = (hi - lo) / steps;
    double prev = lo;
    REQUIRE(oracle_char_poly(a, lo) > 0.0); // below every eigenvalue: det > 0
    for (int k = 1; k <= steps; ++k) {
        const double x = lo + k * h;
        if (oracle_char_poly(a, x) <= 0.0) {
            double a_lo = prev, a_hi = x;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a_lo + a_hi);
                if (oracle_char_poly(a, mid) > 0.0)
                    a_lo = mid;
                else
                    a_hi = mid;
            }
            return 0.5 * (a_lo + a_hi);
        }
        prev = x;
    }
    FAIL("oracle_eig_min: no sign change found");
    return 0.0;
}

double entrywise_dist(const CMatrix& a, const CMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

} // namespace

TEST_CASE("sherman_morrison_inv: vanishing rank-one term gives identity") {
    SplitMix64 rng(11);
    const CVector v = random_cvector(rng, 4);
    const CMatrix inv = sherman_morrison_inv(0.0, v, 1.0);
    CHECK(entrywise_dist(inv, CMatrix::identity(4)) < 1e-15);
}

TEST_CASE("sherman_morrison_inv: unit basis vector updates one diagonal entry") {
    CVector e1(4);
    e1[0] = 1.0;
    const CMatrix inv = sherman_morrison_inv(1.0, e1, 1.0);
    CMatrix expected = CMatrix::identity(4);
    expected(0, 0) = 0.5;
    CHECK(entrywise_dist(inv, expected) < 1e-15);
}

TEST_CASE("sherman_morrison_inv matches direct Gaussian-elimination inverse") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const CVector v = random_cvector(rng, 4);
        const double scale = 3.0 * rng.next_unit();
        const double sigma2 = 0.1 + rng.next_unit();
        CMatrix a = CMatrix::identity(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                a(i, j) = scale * v[i] * std::conj(v[j]) + (i == j ? sigma2 : 0.0);
        const CMatrix direct = oracle_inverse(a);
        const CMatrix fast = sherman_morrison_inv(scale, v, sigma2);
        CHECK(entrywise_dist(fast, direct) < 1e-10);
        CHECK(is_hermitian(fast));
    }
}

TEST_CASE("sherman_morrison_inv: inverse identity property") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + (rng.next_u64() % 6);
        const CVector v = random_cvector(rng, n);
        const double scale = 5.0 * rng.next_unit();
        const double sigma2 = 0.05 + 2.0 * rng.next_unit();
        CMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = scale * v[i] * std::conj(v[j]) + (i == j ? sigma2 : 0.0);
        const CMatrix prod = matmul(sherman_morrison_inv(scale, v, sigma2), a);
        CHECK(entrywise_dist(prod, CMatrix::identity(n)) < 1e-9);
    }
}

TEST_CASE("sherman_morrison_inv: degenerate zero vector is legal") {
    const CVector z(3);
    const CMatrix inv = sherman_morrison_inv(2.0, z, 4.0);
    CMatrix expected = CMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i) expected(i, i) = 0.25;
    CHECK(entrywise_dist(inv, expected) < 1e-15);
}

TEST_CASE("sherman_morrison_inv rejects invalid input") {
    CVector v(2);
    v[0] = cxd{std::nan(""), 0.0};
    CHECK_THROWS_AS(sherman_morrison_inv(1.0, v, 1.0), InvalidInputError);
    CHECK_THROWS_AS(sherman_morrison_inv(1.0, CVector(2), 0.0), InvalidInputError);
    CHECK_THROWS_AS(sherman_morrison_inv(-1.0, CVector(2), 1.0), InvalidInputError);
}

TEST_CASE("eig_min_hermitian: identity and diagonal cases") {
    CHECK(eig_min_hermitian(CMatrix::identity(4)) == Catch::Approx(1.0).margin(1e-12));
    CMatrix d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = -2.0;
    d(2, 2) = 5.0;
    CHECK(eig_min_hermitian(d) == Catch::Approx(-2.0).margin(1e-12));
}

TEST_CASE("eig_min_hermitian matches characteristic-polynomial root oracle") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix a = random_hermitian(rng, 6);
        const double expected = oracle_eig_min(a);
        CHECK(eig_min_hermitian(a) == Catch::Approx(expected).margin(1e-8));
    }
}

TEST_CASE("eig_min_hermitian: shift property") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix a = random_hermitian(rng, 5);
        const double c = 10.0 * (rng.next_unit() - 0.5);
        CMatrix shifted = a;
        for (std::size_t i = 0; i < 5; ++i) shifted(i, i) += c;
        CHECK(eig_min_hermitian(shifted) == Catch::Approx(eig_min_hermitian(a) + c).margin(1e-9));
    }
}

TEST_CASE("eig_min_hermitian rejects non-Hermitian input") {
    CMatrix a(2, 2);
    a(0, 1) = 1.0;
    a(1, 0) = 5.0;
    CHECK_THROWS_AS(eig_min_hermitian(a), InvalidInputError);
}

TEST_CASE("psd_sqrt: identity and rank-one factorizations") {
    const CMatrix l = psd_sqrt(CMatrix::identity(4), 1e-9);
    CHECK(entrywise_dist(l, CMatrix::identity(4)) < 1e-12);

    SplitMix64 rng(16);
    CVector theta_bar = random_cvector(rng, 3);
    const CMatrix rank_one = outer(theta_bar, theta_bar);
    const CMatrix lr = psd_sqrt(rank_one, 1e-9);
    // every nonzero column is proportional to theta_bar
    for (std::size_t j = 0; j < 3; ++j) {
        CVector col(3);
        for (std::size_t i = 0; i < 3; ++i) col[i] = lr(i, j);
        const double nc = norm2(col);
        if (nc < 1e-12) continue;
        const double overlap = std::abs(vdot(theta_bar, col)) / (norm2(theta_bar) * nc);
        CHECK(overlap == Catch::Approx(1.0).margin(1e-10));
    }
    CHECK(entrywise_dist(matmul(lr, adjoint(lr)), rank_one) < 1e-10);
}

TEST_CASE("psd_sqrt: construct-then-factor oracle") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        // Build Q via Gram-Schmidt on random complex vectors, then A = Q diag(lam) Q^H.
        const std::size_t n = 5;
        std::vector<CVector> q;
        while (q.size() < n) {
            CVector x = random_cvector(rng, n);
            for (const auto& prev : q) {
                const cxd proj = vdot(prev, x);
                for (std::size_t i = 0; i < n; ++i) x[i] -= proj * prev[i];
            }
            const double nx = norm2(x);
            if (nx < 1e-6) continue;
            for (std::size_t i = 0; i < n; ++i) x[i] /= nx;
            q.push_back(x);
        }
        CMatrix a(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const double lam = 4.0 * rng.next_unit();
            outer_acc(a, lam, q[k], q[k]);
        }
        a = hermitian_part(a);
        const CMatrix l = psd_sqrt(a, 1e-9);
        CHECK(entrywise_dist(matmul(l, adjoint(l)), a) < 1e-9);
        CHECK(eig_min_hermitian(hermitian_part(matmul(l, adjoint(l)))) >= -1e-9);
    }
}

TEST_CASE("psd_sqrt rejects clearly indefinite input") {
    CMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = -1e-3;
    CHECK_THROWS_AS(psd_sqrt(a, 1e-9), NotPsdError);
}

TEST_CASE("psd_sqrt clips slightly negative eigenvalues") {
    CMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = -1e-12;
    const CMatrix l = psd_sqrt(a, 1e-9);
    CHECK(eig_min_hermitian(hermitian_part(matmul(l, adjoint(l)))) >= -1e-9);
}

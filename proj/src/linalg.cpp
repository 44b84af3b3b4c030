// SPDX-License-Identifier: Apache-2.0
//
// efa-relay: energy-flow-assisted amplify-and-forward relay optimization
// Copyright (C) 2026 The efa-relay authors
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

#include "efa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "efa/errors.hpp"
#include "efa/rng.hpp"

namespace efa {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < out.data().size(); ++i)
        out.data()[i] = a.data()[i] + b.data()[i];
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < out.data().size(); ++i)
        out.data()[i] = a.data()[i] - b.data()[i];
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CMatrix operator*(const cplx& s, const CMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.data().size(); ++i)
        out.data()[i] = s * m.data()[i];
    return out;
}

CVector operator*(const CMatrix& m, const CVector& v) {
    CVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx acc{};
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

CVector operator+(const CVector& a, const CVector& b) {
    CVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

CVector operator-(const CVector& a, const CVector& b) {
    CVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

CVector operator*(const cplx& s, const CVector& v) {
    CVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * v[i];
    return out;
}

CMatrix transpose(const CMatrix& m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j);
    return out;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = std::conj(m(i, j));
    return out;
}

CVector conjugate(const CVector& v) {
    CVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = std::conj(v[i]);
    return out;
}

cplx dot(const CVector& a, const CVector& b) {
    cplx acc{};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

cplx tdot(const CVector& a, const CVector& b) {
    cplx acc{};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

CMatrix outer(const CVector& a, const CVector& b) {
    CMatrix out(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out(i, j) = a[i] * std::conj(b[j]);
    return out;
}

double norm_sq(const CVector& v) {
    double acc = 0.0;
    for (const cplx& x : v)
        acc += std::norm(x);
    return acc;
}

double norm(const CVector& v) { return std::sqrt(norm_sq(v)); }

double frobenius_norm(const CMatrix& m) {
    double acc = 0.0;
    for (const cplx& x : m.data())
        acc += std::norm(x);
    return std::sqrt(acc);
}

double herm_quad(const CMatrix& m, const CVector& f) {
    return dot(f, m * f).real();
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
    if (m.rows() != m.cols())
        return false;
    double scale = 0.0;
    for (const cplx& x : m.data())
        scale = std::max(scale, std::abs(x));
    if (scale == 0.0)
        return true;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > rel_tol * scale)
                return false;
    return true;
}

CVector vec(const CMatrix& m) {
    CVector f(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            f[j * m.rows() + i] = m(i, j);
    return f;
}

CMatrix unvec(const CVector& f, std::size_t rows, std::size_t cols) {
    if (f.size() != rows * cols)
        throw DomainError("unvec: size mismatch");
    CMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = f[j * rows + i];
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cplx s = a(ia, ja);
            if (s == cplx{})
                continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
    return out;
}

CMatrix cholesky_hermitian(const CMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n)
        throw DomainError("cholesky_hermitian: square matrix required");
    // Lower factor G with G G^H = m; the returned factor is L = G^H so that
    // L^H L = m.
    CMatrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j).real();
        for (std::size_t k = 0; k < j; ++k)
            d -= std::norm(g(j, k));
        if (!(d > 0.0) || !std::isfinite(d))
            throw NotPositiveDefinite("cholesky_hermitian: nonpositive pivot");
        const double gjj = std::sqrt(d);
        g(j, j) = gjj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx acc = m(i, j);
            for (std::size_t k = 0; k < j; ++k)
                acc -= g(i, k) * std::conj(g(j, k));
            g(i, j) = acc / gjj;
        }
    }
    return adjoint(g);
}

CVector solve_upper(const CMatrix& u, const CVector& b) {
    const std::size_t n = u.rows();
    CVector x(b);
    for (std::size_t ii = n; ii-- > 0;) {
        cplx acc = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j)
            acc -= u(ii, j) * x[j];
        x[ii] = acc / u(ii, ii);
    }
    return x;
}

CVector solve_upper_adjoint(const CMatrix& u, const CVector& b) {
    // u^H is lower triangular with entries conj(u(j, i)).
    const std::size_t n = u.rows();
    CVector x(b);
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = x[i];
        for (std::size_t j = 0; j < i; ++j)
            acc -= std::conj(u(j, i)) * x[j];
        x[i] = acc / std::conj(u(i, i));
    }
    return x;
}

CVector solve_hermitian(const CMatrix& m, const CVector& b) {
    const CMatrix l = cholesky_hermitian(m);
    return solve_upper(l, solve_upper_adjoint(l, b));
}

void normalize_phase(CVector& v) {
    double peak = 0.0;
    for (const cplx& x : v)
        peak = std::max(peak, std::abs(x));
    if (peak == 0.0)
        return;
    for (const cplx& x : v) {
        if (std::abs(x) > 1e-12 * peak) {
            const cplx rot = std::conj(x) / std::abs(x);
            for (cplx& y : v)
                y *= rot;
            return;
        }
    }
}

EigenPair dominant_eigenpair(const CMatrix& m, double tol, std::size_t max_iters) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n)
        throw DomainError("dominant_eigenpair: square matrix required");

    // Deterministic pseudo-random start so results are reproducible.
    Rng start(0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(n));
    CVector v(n);
    for (cplx& x : v)
        x = start.circular_gaussian();
    v = (1.0 / norm(v)) * v;

    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        CVector w = m * v;
        const double lambda = dot(v, w).real();
        const double resid = norm(w - lambda * v);
        const double wn = norm(w);
        if (wn == 0.0 || resid <= tol * std::abs(lambda)) {
            normalize_phase(v);
            return {std::max(lambda, 0.0), v};
        }
        v = (1.0 / wn) * w;
    }
    throw NoConvergence("dominant_eigenpair: power iteration budget exceeded");
}

Svd svd(const CMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n)
        throw DomainError("svd: square matrix required");

    CMatrix w = m;
    CMatrix v = CMatrix::identity(n);

    auto col_dot = [&w, n](std::size_t p, std::size_t q) {
        cplx acc{};
        for (std::size_t i = 0; i < n; ++i)
            acc += std::conj(w(i, p)) * w(i, q);
        return acc;
    };
    auto col_norm_sq = [&w, n](std::size_t p) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            acc += std::norm(w(i, p));
        return acc;
    };

    const std::size_t max_sweeps = 60;
    bool converged = false;
    for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx c = col_dot(p, q);
                const double app = col_norm_sq(p);
                const double aqq = col_norm_sq(q);
                const double mag = std::abs(c);
                if (mag <= 1e-30 || mag * mag <= 1e-28 * app * aqq)
                    continue;
                converged = false;
                // Phase column q so the cross term becomes real positive,
                // then apply the classical real Jacobi rotation.
                const cplx phase = std::conj(c) / mag;
                for (std::size_t i = 0; i < n; ++i) {
                    w(i, q) *= phase;
                    v(i, q) *= phase;
                }
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx wp = w(i, p), wq = w(i, q);
                    w(i, p) = cs * wp - sn * wq;
                    w(i, q) = sn * wp + cs * wq;
                    const cplx vp = v(i, p), vq = v(i, q);
                    v(i, p) = cs * vp - sn * vq;
                    v(i, q) = sn * vp + cs * vq;
                }
            }
        }
    }
    if (!converged)
        throw NoConvergence("svd: Jacobi sweeps did not converge");

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j)
        sigma[j] = std::sqrt(col_norm_sq(j));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&sigma](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

    Svd out;
    out.u = CMatrix(n, n);
    out.v = CMatrix(n, n);
    out.singular_values.resize(n);
    const double sigma_max = sigma[order[0]];
    std::vector<std::size_t> degenerate;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.singular_values[j] = sigma[src];
        for (std::size_t i = 0; i < n; ++i)
            out.v(i, j) = v(i, src);
        if (sigma[src] > sigma_max * 1e-13 && sigma[src] > 0.0) {
            for (std::size_t i = 0; i < n; ++i)
                out.u(i, j) = w(i, src) / sigma[src];
        } else {
            degenerate.push_back(j);
        }
    }
    // Complete U to a unitary basis for (numerically) zero singular values.
    for (std::size_t j : degenerate) {
        for (std::size_t cand = 0; cand < n; ++cand) {
            CVector e(n);
            e[cand] = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (std::find(degenerate.begin(), degenerate.end(), k) != degenerate.end() && k >= j)
                    continue;
                CVector uk(n);
                for (std::size_t i = 0; i < n; ++i)
                    uk[i] = out.u(i, k);
                const cplx proj = dot(uk, e);
                for (std::size_t i = 0; i < n; ++i)
                    e[i] -= proj * uk[i];
            }
            const double en = norm(e);
            if (en > 0.5) {
                for (std::size_t i = 0; i < n; ++i)
                    out.u(i, j) = e[i] / en;
                break;
            }
        }
    }
    return out;
}

} // namespace efa

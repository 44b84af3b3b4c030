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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace efa {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense complex matrix with row-major storage. Sized for the small
/// operator blocks this library works with (up to r^2 x r^2).
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// --- Elementary arithmetic ---

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const cplx& s, const CMatrix& m);
inline CMatrix operator*(double s, const CMatrix& m) { return cplx(s, 0.0) * m; }
CVector operator*(const CMatrix& m, const CVector& v);

CVector operator+(const CVector& a, const CVector& b);
CVector operator-(const CVector& a, const CVector& b);
CVector operator*(const cplx& s, const CVector& v);
inline CVector operator*(double s, const CVector& v) { return cplx(s, 0.0) * v; }

CMatrix transpose(const CMatrix& m);
CMatrix adjoint(const CMatrix& m);                 // conjugate transpose
CVector conjugate(const CVector& v);

/// Inner product a^H b.
cplx dot(const CVector& a, const CVector& b);
/// Unconjugated product sum_i a_i b_i.
cplx tdot(const CVector& a, const CVector& b);
/// Outer product a b^H.
CMatrix outer(const CVector& a, const CVector& b);

double norm(const CVector& v);
double norm_sq(const CVector& v);
double frobenius_norm(const CMatrix& m);

/// Real-valued Hermitian quadratic form f^H m f (imaginary part discarded).
double herm_quad(const CMatrix& m, const CVector& f);

bool is_hermitian(const CMatrix& m, double rel_tol = 1e-12);

/// Column-stacking vectorization and its inverse.
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& f, std::size_t rows, std::size_t cols);

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Factor L (upper triangular, real positive diagonal) with L^H L == m.
/// Throws NotPositiveDefinite when a pivot is not strictly positive.
CMatrix cholesky_hermitian(const CMatrix& m);

/// Back substitution u x = b with u upper triangular.
CVector solve_upper(const CMatrix& u, const CVector& b);
/// Forward substitution u^H x = b with u upper triangular.
CVector solve_upper_adjoint(const CMatrix& u, const CVector& b);
/// Solves m x = b for Hermitian positive definite m via cholesky_hermitian.
CVector solve_hermitian(const CMatrix& m, const CVector& b);

struct EigenPair {
    double value = 0.0;
    CVector vector;
};

/// Dominant eigenpair of a Hermitian positive semidefinite matrix by power
/// iteration from a deterministic pseudo-random start. The returned vector
/// has unit norm and a normalized phase (first significant entry real
/// nonnegative). Throws NoConvergence after max_iters.
EigenPair dominant_eigenpair(const CMatrix& m, double tol = 1e-12,
                             std::size_t max_iters = 100000);

struct Svd {
    CMatrix u;                          // unitary, columns are left singular vectors
    std::vector<double> singular_values; // descending
    CMatrix v;                          // unitary, columns are right singular vectors
};

/// Singular value decomposition of a square complex matrix by one-sided
/// Jacobi rotations: m == u * diag(s) * v^H.
Svd svd(const CMatrix& m);

/// Rotates v so its first entry with significant modulus is real nonnegative.
void normalize_phase(CVector& v);

} // namespace efa

// Copyright 2026 The tqc Authors
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

#ifndef TQC_STRUCTURED_H
#define TQC_STRUCTURED_H

#include <cstdint>
#include <map>

#include "tqc/numerics.h"

namespace tqc {

inline constexpr size_t kDefaultOracleCap = 1024;

/// Sparse Toeplitz matrix of size n x n. Entry (i, j) is t_{i-j}: negative
/// offsets are superdiagonals (first row), positive offsets subdiagonals
/// (first column). Unstored offsets are zero.
class ToeplitzSpec {
   public:
    explicit ToeplitzSpec(size_t n);

    size_t n() const noexcept {
        return n_;
    }
    /// Stores t_offset. Throws if offset is outside [-(n-1), n-1].
    void set(int64_t offset, Complex value);
    Complex coefficient(int64_t offset) const;
    const std::map<int64_t, Complex> &diagonals() const noexcept {
        return diagonals_;
    }
    bool is_zero() const noexcept;

    bool operator==(const ToeplitzSpec &other) const;

   private:
    size_t n_;
    std::map<int64_t, Complex> diagonals_;
};

/// Sparse Hankel matrix. Entry (i, j) is h_{i+j-(n-1)}, so h_{-(n-1)} sits in
/// the top-left corner, h_0 on the main antidiagonal and h_{n-1} bottom-right.
class HankelSpec {
   public:
    explicit HankelSpec(size_t n);

    size_t n() const noexcept {
        return n_;
    }
    void set(int64_t index, Complex value);
    Complex coefficient(int64_t index) const;
    const std::map<int64_t, Complex> &skew_diagonals() const noexcept {
        return skew_diagonals_;
    }

    bool operator==(const HankelSpec &other) const;

   private:
    size_t n_;
    std::map<int64_t, Complex> skew_diagonals_;
};

/// Circulant given by its first row; row r is the first row cyclically
/// shifted right by r, so entry (i, j) is c[(j - i) mod m].
class CirculantSpec {
   public:
    explicit CirculantSpec(ComplexVector first_row);

    size_t m() const noexcept {
        return first_row_.size();
    }
    const ComplexVector &first_row() const noexcept {
        return first_row_;
    }

    bool operator==(const CirculantSpec &other) const = default;

   private:
    ComplexVector first_row_;
};

struct SparsityReport {
    size_t n = 0;
    size_t nnz_time = 0;
    size_t nnz_freq = 0;
    double density_time = 0;
    double density_freq = 0;
    double tau = 0;
};

/// (t_0, t_{-1}, ..., t_{-(n-1)}, 0, t_{n-1}, ..., t_1), length 2n.
ComplexVector toeplitz_defining_array(const ToeplitzSpec &t);
/// Inverse of toeplitz_defining_array. Entry n must be zero up to
/// 1e-12 relative to the largest entry; it is dropped.
ToeplitzSpec toeplitz_from_defining_array(std::span<const Complex> psi);

/// The 2n x 2n circulant [[T, B], [B, T]] whose first row is the defining array.
CirculantSpec embed_in_circulant(const ToeplitzSpec &t);
/// Circulants are Toeplitz: t_{-p} = c[p], t_q = c[m - q].
ToeplitzSpec circulant_as_toeplitz(const CirculantSpec &c);

/// lambda_j = sum_k c_k e^{+2 pi i jk/m}, the eigenvalue paired with the
/// eigenvector e^{2 pi i jl/m}. With the unitary dft this gives
/// C v = idft(lambda .* dft(v)).
ComplexVector circulant_eigenvalues(const CirculantSpec &c);

DenseMatrix materialize_dense(const ToeplitzSpec &t, size_t cap = kDefaultOracleCap);
DenseMatrix materialize_dense(const HankelSpec &h, size_t cap = kDefaultOracleCap);
DenseMatrix materialize_dense(const CirculantSpec &c, size_t cap = kDefaultOracleCap);

/// T_H = H P with P the reversal permutation. Since (HP)(i, j) = h_{i-j},
/// the Toeplitz coefficients are the Hankel coefficients verbatim.
ToeplitzSpec hankel_to_toeplitz(const HankelSpec &h);
ComplexVector reverse(std::span<const Complex> v);

/// Second-order central-difference Laplacian: t_0 = 2, t_{+-1} = -1.
ToeplitzSpec build_laplacian(size_t n);

/// tau < 0 selects the default relative threshold 1e-12 * max |dft(psi_T)|.
SparsityReport sparsity_report(const ToeplitzSpec &t, double tau = -1.0);

}  // namespace tqc

#endif

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

#ifndef TQC_NUMERICS_H
#define TQC_NUMERICS_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tqc {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Row-major dense complex matrix. Only used as a brute-force oracle and for
/// inspection dumps; the simulation paths never build one.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols);

    static DenseMatrix identity(size_t n);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const Complex> data() const noexcept {
        return data_;
    }

    DenseMatrix adjoint() const;
    DenseMatrix operator*(const DenseMatrix &rhs) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

bool is_power_of_two(size_t m) noexcept;

/// Unitary forward transform: out_j = m^{-1/2} sum_k v_k e^{-2 pi i jk/m}.
/// Radix-2 for power-of-two lengths, direct summation otherwise.
ComplexVector dft(std::span<const Complex> v);
/// Inverse of dft (positive exponent, same 1/sqrt(m) scaling).
ComplexVector idft(std::span<const Complex> v);
/// The O(m^2) summation path, exposed so both paths can be compared.
ComplexVector dft_direct(std::span<const Complex> v, bool inverse);

ComplexVector dense_matvec(const DenseMatrix &m, std::span<const Complex> v);

double norm2(std::span<const Complex> v) noexcept;
double squared_norm(std::span<const Complex> v) noexcept;
/// <a, b> with a conjugated.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);
/// ||a - b|| / ||b||, or ||a|| when b is zero.
double relative_l2_error(std::span<const Complex> a, std::span<const Complex> b);
bool all_finite(std::span<const Complex> v) noexcept;
bool is_zero(std::span<const Complex> v) noexcept;

}  // namespace tqc

#endif

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

#include "tqc/numerics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tqc/error.h"

namespace tqc {

DenseMatrix::DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

DenseMatrix DenseMatrix::identity(size_t n) {
    DenseMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(ErrorKind::kDimension, "matrix product dimension mismatch");
    }
    DenseMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < rhs.cols_; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

bool is_power_of_two(size_t m) noexcept {
    return m != 0 && (m & (m - 1)) == 0;
}

namespace {

void require_nonempty(std::span<const Complex> v) {
    if (v.empty()) {
        throw Error(ErrorKind::kDimension, "Fourier transform of an empty vector");
    }
}

// e^{-2 pi i k/m} for k < m/2, evaluated directly (not by recurrence) so the
// error stays at a few ulp. Cached per thread for the last length used.
const std::vector<Complex> &forward_twiddles(size_t m) {
    thread_local size_t cached_m = 0;
    thread_local std::vector<Complex> cache;
    if (cached_m != m) {
        cache.resize(m / 2);
        for (size_t k = 0; k < m / 2; k++) {
            double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
            cache[k] = Complex(std::cos(angle), std::sin(angle));
        }
        cached_m = m;
    }
    return cache;
}

// In-place iterative Cooley-Tukey. sign = -1 forward, +1 inverse. Unscaled.
void fft_radix2(std::vector<Complex> &a, int sign) {
    const size_t m = a.size();
    for (size_t i = 1, j = 0; i < m; i++) {
        size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    const auto &twiddle = forward_twiddles(m);
    const bool conjugate = sign > 0;
    for (size_t len = 2; len <= m; len <<= 1) {
        size_t half = len >> 1;
        size_t stride = m / len;
        for (size_t start = 0; start < m; start += len) {
            for (size_t k = 0; k < half; k++) {
                // Plain real arithmetic; operator* on std::complex takes the
                // slow Annex G path for inf/nan handling.
                const Complex w = conjugate ? std::conj(twiddle[k * stride]) : twiddle[k * stride];
                const Complex x = a[start + k + half];
                const Complex t(w.real() * x.real() - w.imag() * x.imag(), w.real() * x.imag() + w.imag() * x.real());
                const Complex u = a[start + k];
                a[start + k] = u + t;
                a[start + k + half] = u - t;
            }
        }
    }
}

ComplexVector transform(std::span<const Complex> v, bool inverse) {
    require_nonempty(v);
    if (!is_power_of_two(v.size())) {
        return dft_direct(v, inverse);
    }
    ComplexVector out(v.begin(), v.end());
    fft_radix2(out, inverse ? +1 : -1);
    double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
    for (auto &x : out) {
        x *= scale;
    }
    return out;
}

}  // namespace

ComplexVector dft_direct(std::span<const Complex> v, bool inverse) {
    require_nonempty(v);
    const size_t m = v.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<Complex> root(m);
    for (size_t k = 0; k < m; k++) {
        double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        root[k] = Complex(std::cos(angle), std::sin(angle));
    }
    ComplexVector out(m);
    double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (size_t j = 0; j < m; j++) {
        Complex acc{};
        for (size_t k = 0; k < m; k++) {
            acc += v[k] * root[(j * k) % m];
        }
        out[j] = acc * scale;
    }
    return out;
}

ComplexVector dft(std::span<const Complex> v) {
    return transform(v, false);
}

ComplexVector idft(std::span<const Complex> v) {
    return transform(v, true);
}

ComplexVector dense_matvec(const DenseMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw Error(ErrorKind::kDimension, "dense_matvec: matrix has " + std::to_string(m.cols()) +
                                               " columns but vector has " + std::to_string(v.size()) +
                                               " entries");
    }
    ComplexVector out(m.rows());
    const Complex *row = m.data().data();
    for (size_t r = 0; r < m.rows(); r++, row += m.cols()) {
        Complex acc{};
        for (size_t c = 0; c < m.cols(); c++) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double squared_norm(std::span<const Complex> v) noexcept {
    double s = 0;
    for (const auto &x : v) {
        s += std::norm(x);
    }
    return s;
}

double norm2(std::span<const Complex> v) noexcept {
    return std::sqrt(squared_norm(v));
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::kDimension, "inner product length mismatch");
    }
    Complex acc{};
    for (size_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::kDimension, "max_abs_diff length mismatch");
    }
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::kDimension, "max_abs_diff shape mismatch");
    }
    return max_abs_diff(a.data(), b.data());
}

double relative_l2_error(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::kDimension, "relative_l2_error length mismatch");
    }
    double diff = 0;
    for (size_t i = 0; i < a.size(); i++) {
        diff += std::norm(a[i] - b[i]);
    }
    double ref = norm2(b);
    return ref == 0 ? std::sqrt(diff) : std::sqrt(diff) / ref;
}

bool all_finite(std::span<const Complex> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](const Complex &x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    });
}

bool is_zero(std::span<const Complex> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](const Complex &x) { return x == Complex{}; });
}

}  // namespace tqc

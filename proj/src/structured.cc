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

#include "tqc/structured.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tqc/error.h"

namespace tqc {

namespace {

void check_offset(int64_t offset, size_t n, const char *what) {
    auto limit = static_cast<int64_t>(n) - 1;
    if (offset < -limit || offset > limit) {
        throw Error(ErrorKind::kDimension, std::string(what) + " " + std::to_string(offset) +
                                               " outside [-" + std::to_string(limit) + ", " +
                                               std::to_string(limit) + "]");
    }
}

void check_dimension(size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::kDimension, "matrix dimension must be at least 1");
    }
}

void check_cap(size_t n, size_t cap) {
    if (n > cap) {
        throw Error(ErrorKind::kCapExceeded,
                    "dimension " + std::to_string(n) + " exceeds dense oracle cap " + std::to_string(cap));
    }
}

Complex lookup(const std::map<int64_t, Complex> &entries, int64_t key) {
    auto it = entries.find(key);
    return it == entries.end() ? Complex{} : it->second;
}

bool same_entries(const std::map<int64_t, Complex> &a, const std::map<int64_t, Complex> &b) {
    for (const auto &[k, v] : a) {
        if (lookup(b, k) != v) {
            return false;
        }
    }
    for (const auto &[k, v] : b) {
        if (lookup(a, k) != v) {
            return false;
        }
    }
    return true;
}

}  // namespace

ToeplitzSpec::ToeplitzSpec(size_t n) : n_(n) {
    check_dimension(n);
}

void ToeplitzSpec::set(int64_t offset, Complex value) {
    check_offset(offset, n_, "Toeplitz offset");
    diagonals_[offset] = value;
}

Complex ToeplitzSpec::coefficient(int64_t offset) const {
    return lookup(diagonals_, offset);
}

bool ToeplitzSpec::is_zero() const noexcept {
    return std::all_of(diagonals_.begin(), diagonals_.end(), [](const auto &kv) { return kv.second == Complex{}; });
}

bool ToeplitzSpec::operator==(const ToeplitzSpec &other) const {
    return n_ == other.n_ && same_entries(diagonals_, other.diagonals_);
}

HankelSpec::HankelSpec(size_t n) : n_(n) {
    check_dimension(n);
}

void HankelSpec::set(int64_t index, Complex value) {
    check_offset(index, n_, "Hankel index");
    skew_diagonals_[index] = value;
}

Complex HankelSpec::coefficient(int64_t index) const {
    return lookup(skew_diagonals_, index);
}

bool HankelSpec::operator==(const HankelSpec &other) const {
    return n_ == other.n_ && same_entries(skew_diagonals_, other.skew_diagonals_);
}

CirculantSpec::CirculantSpec(ComplexVector first_row) : first_row_(std::move(first_row)) {
    check_dimension(first_row_.size());
}

ComplexVector toeplitz_defining_array(const ToeplitzSpec &t) {
    const auto n = static_cast<int64_t>(t.n());
    ComplexVector psi(2 * t.n());
    for (const auto &[offset, value] : t.diagonals()) {
        // t_{-p} lands at position p; t_q (q > 0) at position 2n - q.
        int64_t pos = offset <= 0 ? -offset : 2 * n - offset;
        psi[static_cast<size_t>(pos)] = value;
    }
    return psi;
}

ToeplitzSpec toeplitz_from_defining_array(std::span<const Complex> psi) {
    if (psi.size() < 2 || psi.size() % 2 != 0) {
        throw Error(ErrorKind::kDimension, "defining array must have even length 2n >= 2");
    }
    const size_t n = psi.size() / 2;
    double largest = 0;
    for (const auto &x : psi) {
        largest = std::max(largest, std::abs(x));
    }
    if (std::abs(psi[n]) > 1e-12 * largest) {
        throw Error(ErrorKind::kParse, "defining array entry n must be zero");
    }
    ToeplitzSpec t(n);
    for (size_t p = 0; p < n; p++) {
        if (psi[p] != Complex{}) {
            t.set(-static_cast<int64_t>(p), psi[p]);
        }
    }
    for (size_t q = 1; q < n; q++) {
        if (psi[2 * n - q] != Complex{}) {
            t.set(static_cast<int64_t>(q), psi[2 * n - q]);
        }
    }
    return t;
}

CirculantSpec embed_in_circulant(const ToeplitzSpec &t) {
    return CirculantSpec(toeplitz_defining_array(t));
}

ToeplitzSpec circulant_as_toeplitz(const CirculantSpec &c) {
    const size_t m = c.m();
    ToeplitzSpec t(m);
    const auto &row = c.first_row();
    for (size_t p = 0; p < m; p++) {
        if (row[p] != Complex{}) {
            t.set(-static_cast<int64_t>(p), row[p]);
        }
    }
    for (size_t q = 1; q < m; q++) {
        if (row[m - q] != Complex{}) {
            t.set(static_cast<int64_t>(q), row[m - q]);
        }
    }
    return t;
}

ComplexVector circulant_eigenvalues(const CirculantSpec &c) {
    auto lambda = idft(c.first_row());
    double scale = std::sqrt(static_cast<double>(c.m()));
    for (auto &x : lambda) {
        x *= scale;
    }
    return lambda;
}

DenseMatrix materialize_dense(const ToeplitzSpec &t, size_t cap) {
    check_cap(t.n(), cap);
    const size_t n = t.n();
    DenseMatrix m(n, n);
    for (const auto &[offset, value] : t.diagonals()) {
        for (size_t i = 0; i < n; i++) {
            auto j = static_cast<int64_t>(i) - offset;
            if (j >= 0 && j < static_cast<int64_t>(n)) {
                m(i, static_cast<size_t>(j)) = value;
            }
        }
    }
    return m;
}

DenseMatrix materialize_dense(const HankelSpec &h, size_t cap) {
    check_cap(h.n(), cap);
    const size_t n = h.n();
    DenseMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m(i, j) = h.coefficient(static_cast<int64_t>(i + j) - static_cast<int64_t>(n - 1));
        }
    }
    return m;
}

DenseMatrix materialize_dense(const CirculantSpec &c, size_t cap) {
    check_cap(c.m(), cap);
    const size_t m = c.m();
    DenseMatrix out(m, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            out(i, j) = c.first_row()[(j + m - i) % m];
        }
    }
    return out;
}

ToeplitzSpec hankel_to_toeplitz(const HankelSpec &h) {
    ToeplitzSpec t(h.n());
    for (const auto &[index, value] : h.skew_diagonals()) {
        t.set(index, value);
    }
    return t;
}

ComplexVector reverse(std::span<const Complex> v) {
    return ComplexVector(v.rbegin(), v.rend());
}

ToeplitzSpec build_laplacian(size_t n) {
    if (n < 2) {
        throw Error(ErrorKind::kUsage, "Laplacian needs n >= 2");
    }
    ToeplitzSpec t(n);
    t.set(0, 2.0);
    t.set(-1, -1.0);
    t.set(1, -1.0);
    return t;
}

SparsityReport sparsity_report(const ToeplitzSpec &t, double tau) {
    auto psi = toeplitz_defining_array(t);
    auto spectrum = dft(psi);
    if (tau < 0) {
        double largest = 0;
        for (const auto &x : spectrum) {
            largest = std::max(largest, std::abs(x));
        }
        tau = 1e-12 * largest;
    }
    SparsityReport report;
    report.n = t.n();
    report.tau = tau;
    report.nnz_time = static_cast<size_t>(
        std::count_if(psi.begin(), psi.end(), [](const Complex &x) { return x != Complex{}; }));
    report.nnz_freq = static_cast<size_t>(
        std::count_if(spectrum.begin(), spectrum.end(), [tau](const Complex &x) { return std::abs(x) > tau; }));
    report.density_time = static_cast<double>(report.nnz_time) / static_cast<double>(psi.size());
    report.density_freq = static_cast<double>(report.nnz_freq) / static_cast<double>(psi.size());
    return report;
}

}  // namespace tqc

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

#include "tqc/dilation.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tqc/error.h"

namespace tqc {

namespace {

void check_length(size_t got, size_t want, const char *what) {
    if (got != want) {
        throw Error(ErrorKind::kDimension, std::string(what) + ": expected length " + std::to_string(want) +
                                               ", got " + std::to_string(got));
    }
}

}  // namespace

double scale_factor(std::span<const Complex> lambdas, ScaleRule rule) {
    double largest = 0;
    for (const auto &x : lambdas) {
        largest = std::max(largest, std::abs(x));
    }
    if (!(largest > 0)) {
        throw Error(ErrorKind::kZeroMatrix, "zero operator has no dilation scale");
    }
    if (rule == ScaleRule::kMaxModulus) {
        return largest;
    }
    if (largest > 1) {
        throw Error(ErrorKind::kNumerics, "square-root scale rule needs max |lambda| <= 1, got " +
                                              std::to_string(largest));
    }
    return std::sqrt(largest);
}

DiagonalDilation build_dilation(std::span<const Complex> lambdas, ScaleRule rule) {
    DiagonalDilation d;
    d.lambdas.assign(lambdas.begin(), lambdas.end());
    d.k = scale_factor(lambdas, rule);
    d.d_main.resize(lambdas.size());
    d.d_comp.resize(lambdas.size());
    for (size_t j = 0; j < lambdas.size(); j++) {
        d.d_main[j] = lambdas[j] / d.k;
        // Derived from d_main itself so |d_main|^2 + d_comp^2 = 1 to rounding.
        double rest = 1.0 - std::norm(d.d_main[j]);
        if (rest < 0) {
            if (rest < -1e-15) {
                throw Error(ErrorKind::kNumerics, "eigenvalue " + std::to_string(j) + " exceeds dilation scale");
            }
            rest = 0;
        }
        d.d_comp[j] = std::sqrt(rest);
    }
    return d;
}

ComplexVector apply_dilation(const DiagonalDilation &d, std::span<const Complex> v) {
    const size_t m = d.m();
    check_length(v.size(), 2 * m, "apply_dilation");
    ComplexVector out(2 * m);
    for (size_t j = 0; j < m; j++) {
        const Complex top = v[j];
        const Complex bottom = v[m + j];
        out[j] = d.d_main[j] * top + d.d_comp[j] * bottom;
        out[m + j] = d.d_comp[j] * top - std::conj(d.d_main[j]) * bottom;
    }
    return out;
}

ComplexVector apply_dilation_adjoint(const DiagonalDilation &d, std::span<const Complex> v) {
    const size_t m = d.m();
    check_length(v.size(), 2 * m, "apply_dilation_adjoint");
    ComplexVector out(2 * m);
    for (size_t j = 0; j < m; j++) {
        const Complex top = v[j];
        const Complex bottom = v[m + j];
        out[j] = std::conj(d.d_main[j]) * top + d.d_comp[j] * bottom;
        out[m + j] = d.d_comp[j] * top - d.d_main[j] * bottom;
    }
    return out;
}

ComplexVector apply_hermitian_embedding(const HermitianEmbedding &h, std::span<const Complex> v) {
    const size_t half = 2 * h.dilation.m();
    check_length(v.size(), 2 * half, "apply_hermitian_embedding");
    auto top = apply_dilation(h.dilation, v.subspan(half, half));
    auto bottom = apply_dilation_adjoint(h.dilation, v.subspan(0, half));
    ComplexVector out;
    out.reserve(2 * half);
    out.insert(out.end(), top.begin(), top.end());
    out.insert(out.end(), bottom.begin(), bottom.end());
    return out;
}

ComplexVector apply_exp_embedding(const HermitianEmbedding &h, double theta, std::span<const Complex> v) {
    auto hv = apply_hermitian_embedding(h, v);
    const double c = std::cos(theta);
    const Complex minus_i_sin(0.0, -std::sin(theta));
    for (size_t i = 0; i < hv.size(); i++) {
        hv[i] = c * v[i] + minus_i_sin * hv[i];
    }
    return hv;
}

DenseMatrix materialize_dilation(const DiagonalDilation &d, size_t cap) {
    const size_t m = d.m();
    if (m > cap) {
        throw Error(ErrorKind::kCapExceeded,
                    "dilation size " + std::to_string(m) + " exceeds dense oracle cap " + std::to_string(cap));
    }
    DenseMatrix u(2 * m, 2 * m);
    for (size_t j = 0; j < m; j++) {
        u(j, j) = d.d_main[j];
        u(j, m + j) = d.d_comp[j];
        u(m + j, j) = d.d_comp[j];
        u(m + j, m + j) = -std::conj(d.d_main[j]);
    }
    return u;
}

DenseMatrix materialize_embedding(const HermitianEmbedding &h, size_t cap) {
    auto u = materialize_dilation(h.dilation, cap);
    const size_t half = u.rows();
    DenseMatrix out(2 * half, 2 * half);
    for (size_t r = 0; r < half; r++) {
        for (size_t c = 0; c < half; c++) {
            out(r, half + c) = u(r, c);
            out(half + c, r) = std::conj(u(r, c));
        }
    }
    return out;
}

}  // namespace tqc

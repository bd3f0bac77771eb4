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

#ifndef TQC_DILATION_H
#define TQC_DILATION_H

#include "tqc/numerics.h"
#include "tqc/structured.h"

namespace tqc {

/// How the dilation scale is derived from the spectrum.
enum class ScaleRule {
    /// k = max |lambda|. Always yields a unitary dilation.
    kMaxModulus,
    /// k = sqrt(max |lambda|). Only accepted when max |lambda| <= 1, where it
    /// is >= max |lambda| and the completion blocks stay real.
    kSqrtMaxModulus,
};

double scale_factor(std::span<const Complex> lambdas, ScaleRule rule = ScaleRule::kMaxModulus);

/// Structured form of the 2m x 2m unitary
///
///     U = [[ D,  S ],
///          [ S, -D* ]],   D = diag(lambda / k),  S = diag(sqrt(1 - |lambda|^2 / k^2)).
///
/// Only the two diagonals are stored.
struct DiagonalDilation {
    ComplexVector lambdas;
    double k = 1;
    ComplexVector d_main;
    std::vector<double> d_comp;

    size_t m() const noexcept {
        return lambdas.size();
    }
};

DiagonalDilation build_dilation(std::span<const Complex> lambdas, ScaleRule rule = ScaleRule::kMaxModulus);

/// U v for v of length 2m, O(m).
ComplexVector apply_dilation(const DiagonalDilation &d, std::span<const Complex> v);
/// U^dagger v.
ComplexVector apply_dilation_adjoint(const DiagonalDilation &d, std::span<const Complex> v);

/// The involutory Hermitian operator [[0, U], [U^dagger, 0]] on 4m amplitudes.
struct HermitianEmbedding {
    DiagonalDilation dilation;

    size_t dim() const noexcept {
        return 4 * dilation.m();
    }
};

ComplexVector apply_hermitian_embedding(const HermitianEmbedding &h, std::span<const Complex> v);
/// exp(-i theta H) v = cos(theta) v - i sin(theta) H v, exact because H^2 = I.
ComplexVector apply_exp_embedding(const HermitianEmbedding &h, double theta, std::span<const Complex> v);

/// Dense oracles; cap bounds m.
DenseMatrix materialize_dilation(const DiagonalDilation &d, size_t cap = kDefaultOracleCap);
DenseMatrix materialize_embedding(const HermitianEmbedding &h, size_t cap = kDefaultOracleCap);

}  // namespace tqc

#endif

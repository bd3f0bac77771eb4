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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "tqc/error.h"
#include "tqc/structured.h"

using namespace tqc;
using tqc::testing::naive_dft;
using tqc::testing::random_vector;

TEST(numerics, dft_of_impulse_is_flat) {
    auto out = dft(ComplexVector{1, 0, 0, 0});
    for (const auto &x : out) {
        EXPECT_NEAR(x.real(), 0.5, 1e-15);
        EXPECT_NEAR(x.imag(), 0.0, 1e-15);
    }
}

TEST(numerics, dft_of_flat_is_scaled_impulse) {
    auto out = dft(ComplexVector{1, 1, 1, 1});
    EXPECT_LE(max_abs_diff(out, ComplexVector{2, 0, 0, 0}), 1e-15);
}

TEST(numerics, idft_of_scaled_impulse) {
    auto out = idft(ComplexVector{2, 0, 0, 0});
    EXPECT_LE(max_abs_diff(out, ComplexVector{1, 1, 1, 1}), 1e-15);
}

TEST(numerics, dft_matches_direct_sum_length8) {
    std::mt19937_64 rng(11);
    auto v = random_vector(rng, 8);
    EXPECT_LE(max_abs_diff(dft(v), naive_dft(v)), 1e-12);
    EXPECT_LE(max_abs_diff(idft(v), naive_dft(v, true)), 1e-12);
}

TEST(numerics, round_trip_power_of_two) {
    std::mt19937_64 rng(12);
    auto v = random_vector(rng, 16);
    EXPECT_LE(max_abs_diff(idft(dft(v)), v), 1e-12);
}

TEST(numerics, round_trip_non_power_of_two) {
    std::mt19937_64 rng(13);
    for (size_t m : {1, 3, 5, 6, 7, 12}) {
        auto v = random_vector(rng, m);
        EXPECT_LE(max_abs_diff(idft(dft(v)), v), 1e-12) << "m=" << m;
        EXPECT_LE(max_abs_diff(dft(v), naive_dft(v)), 1e-12) << "m=" << m;
    }
}

TEST(numerics, dft_rejects_empty) {
    EXPECT_THROW(dft(ComplexVector{}), Error);
    EXPECT_THROW(idft(ComplexVector{}), Error);
}

TEST(numerics, unitarity_random_lengths) {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<size_t> len(1, 300);
    for (int trial = 0; trial < 50; trial++) {
        auto v = random_vector(rng, len(rng));
        EXPECT_NEAR(norm2(dft(v)), norm2(v), 1e-12 * std::max(1.0, norm2(v)));
    }
}

TEST(numerics, fft_and_direct_paths_agree_up_to_1024) {
    std::mt19937_64 rng(15);
    for (size_t m = 1; m <= 1024; m *= 2) {
        auto v = random_vector(rng, m);
        EXPECT_LE(max_abs_diff(dft(v), dft_direct(v, false)), 1e-12) << "m=" << m;
        EXPECT_LE(max_abs_diff(idft(v), dft_direct(v, true)), 1e-12) << "m=" << m;
    }
}

TEST(numerics, convolution_diagonalization) {
    // idft(lambda .* dft(v)) is the circulant product: this fixes the pairing
    // between the transform sign and the eigenvalue formula.
    std::mt19937_64 rng(16);
    for (size_t m : {1, 2, 4, 8, 32, 128}) {
        CirculantSpec c(random_vector(rng, m));
        auto v = random_vector(rng, m);
        auto lambda = circulant_eigenvalues(c);
        auto spectrum = dft(v);
        for (size_t j = 0; j < m; j++) {
            spectrum[j] *= lambda[j];
        }
        auto fast = idft(spectrum);
        auto dense = dense_matvec(materialize_dense(c), v);
        EXPECT_LE(max_abs_diff(fast, dense), 1e-10) << "m=" << m;
    }
}

TEST(numerics, dense_matvec_examples) {
    Complex a(1.5, -2), b(0.25, 3);
    EXPECT_EQ(dense_matvec(DenseMatrix::identity(2), ComplexVector{a, b}), (ComplexVector{a, b}));

    DenseMatrix lap(2, 2);
    lap(0, 0) = 2;
    lap(0, 1) = -1;
    lap(1, 0) = -1;
    lap(1, 1) = 2;
    EXPECT_EQ(dense_matvec(lap, ComplexVector{1, 2}), (ComplexVector{0, 3}));

    DenseMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    EXPECT_EQ(dense_matvec(swap, ComplexVector{a, b}), (ComplexVector{b, a}));
}

TEST(numerics, dense_matvec_dimension_mismatch) {
    try {
        dense_matvec(DenseMatrix::identity(3), ComplexVector{1, 2});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kDimension);
    }
}

TEST(numerics, relative_error_and_helpers) {
    EXPECT_DOUBLE_EQ(relative_l2_error(ComplexVector{3, 4}, ComplexVector{3, 4}), 0.0);
    EXPECT_DOUBLE_EQ(relative_l2_error(ComplexVector{0, 0}, ComplexVector{3, 4}), 1.0);
    EXPECT_TRUE(is_zero(ComplexVector{0, 0}));
    EXPECT_FALSE(all_finite(ComplexVector{Complex(std::nan(""), 0)}));
    EXPECT_TRUE(is_power_of_two(64));
    EXPECT_FALSE(is_power_of_two(0));
    EXPECT_FALSE(is_power_of_two(12));
    EXPECT_EQ(inner(ComplexVector{Complex(0, 1)}, ComplexVector{Complex(0, 1)}), Complex(1, 0));
}

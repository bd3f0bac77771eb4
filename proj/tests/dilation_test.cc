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

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "tqc/error.h"

using namespace tqc;
using namespace tqc::testing;

namespace {

DiagonalDilation random_dilation(std::mt19937_64 &rng, size_t m) {
    return build_dilation(random_vector(rng, m));
}

ComplexVector concat(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

TEST(dilation, scale_factor_examples) {
    EXPECT_DOUBLE_EQ(scale_factor(ComplexVector{1, 1, 1, 1}), 1.0);
    EXPECT_DOUBLE_EQ(scale_factor(ComplexVector{0, 2, 4, 2}), 4.0);
    try {
        scale_factor(ComplexVector{0, 0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kZeroMatrix);
        EXPECT_STREQ(e.what(), "zero operator has no dilation scale");
    }
}

TEST(dilation, sqrt_rule_is_opt_in_and_bounded) {
    EXPECT_DOUBLE_EQ(scale_factor(ComplexVector{0.25, 0.1}, ScaleRule::kSqrtMaxModulus), 0.5);
    EXPECT_THROW(scale_factor(ComplexVector{0, 2, 4, 2}, ScaleRule::kSqrtMaxModulus), Error);
    auto d = build_dilation(ComplexVector{0.25, Complex(0, 0.1)}, ScaleRule::kSqrtMaxModulus);
    EXPECT_LE(max_abs_diff_from_identity(materialize_dilation(d).adjoint() * materialize_dilation(d)), 1e-12);
}

TEST(dilation, unit_spectrum_needs_no_completion) {
    auto d = build_dilation(ComplexVector{1, 1});
    EXPECT_EQ(d.d_comp, (std::vector<double>{0, 0}));
    DenseMatrix expected(4, 4);
    expected(0, 0) = expected(1, 1) = 1;
    expected(2, 2) = expected(3, 3) = -1;
    EXPECT_EQ(max_abs_diff(materialize_dilation(d), expected), 0.0);
    Complex a(1, 2), b(3, 4), c(5, 6), e(7, 8);
    EXPECT_EQ(apply_dilation(d, ComplexVector{a, b, c, e}), (ComplexVector{a, b, -c, -e}));
}

TEST(dilation, hand_evaluated_entries) {
    auto d = build_dilation(ComplexVector{2, 0});
    EXPECT_DOUBLE_EQ(d.k, 2.0);
    EXPECT_EQ(d.d_main, (ComplexVector{1, 0}));
    EXPECT_EQ(d.d_comp, (std::vector<double>{0, 1}));
    EXPECT_EQ(apply_dilation(d, ComplexVector{1, 0, 0, 1}), (ComplexVector{1, 1, 0, 0}));
}

TEST(dilation, completion_invariant) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; trial++) {
        auto d = random_dilation(rng, 32);
        for (size_t j = 0; j < d.m(); j++) {
            EXPECT_LE(std::abs(d.lambdas[j]), d.k);
            EXPECT_GE(d.d_comp[j], 0.0);
            EXPECT_NEAR(std::norm(d.d_main[j]) + d.d_comp[j] * d.d_comp[j], 1.0, 1e-12);
        }
    }
}

TEST(dilation, dense_unitarity) {
    std::mt19937_64 rng(32);
    for (size_t m : {1, 2, 3, 8, 16, 64}) {
        auto u = materialize_dilation(random_dilation(rng, m));
        EXPECT_LE(max_abs_diff_from_identity(u.adjoint() * u), 1e-12) << "m=" << m;
        EXPECT_LE(max_abs_diff_from_identity(u * u.adjoint()), 1e-12) << "m=" << m;
    }
}

TEST(dilation, apply_matches_dense) {
    std::mt19937_64 rng(33);
    for (size_t m : {1, 4, 8, 32}) {
        auto d = random_dilation(rng, m);
        auto v = random_vector(rng, 2 * m);
        auto u = materialize_dilation(d);
        EXPECT_LE(max_abs_diff(apply_dilation(d, v), dense_matvec(u, v)), 1e-12);
        EXPECT_LE(max_abs_diff(apply_dilation_adjoint(d, v), dense_matvec(u.adjoint(), v)), 1e-12);
        EXPECT_NEAR(norm2(apply_dilation(d, v)), norm2(v), 1e-12 * norm2(v));
    }
}

TEST(dilation, length_mismatch) {
    auto d = build_dilation(ComplexVector{1, 2});
    EXPECT_THROW(apply_dilation(d, ComplexVector(3)), Error);
    HermitianEmbedding h{d};
    EXPECT_THROW(apply_hermitian_embedding(h, ComplexVector(4)), Error);
    EXPECT_THROW(apply_exp_embedding(h, 0.3, ComplexVector(9)), Error);
}

TEST(dilation, top_left_block_is_scaled_spectrum) {
    std::mt19937_64 rng(34);
    auto lambdas = random_vector(rng, 8);
    auto d = build_dilation(lambdas);
    for (size_t j = 0; j < 8; j++) {
        ComplexVector basis(16);
        basis[j] = 1.0;
        auto col = apply_dilation(d, basis);
        for (size_t i = 0; i < 8; i++) {
            EXPECT_EQ(col[i], i == j ? lambdas[j] / d.k : Complex{});
        }
    }
}

TEST(dilation, embedding_on_bottom_half) {
    std::mt19937_64 rng(35);
    HermitianEmbedding h{random_dilation(rng, 4)};
    auto w = random_vector(rng, 8);
    auto v = concat(ComplexVector(8), w);
    auto out = apply_hermitian_embedding(h, v);
    auto uw = dense_matvec(materialize_dilation(h.dilation), w);
    EXPECT_LE(max_abs_diff(ComplexVector(out.begin(), out.begin() + 8), uw), 1e-12);
    EXPECT_EQ(ComplexVector(out.begin() + 8, out.end()), ComplexVector(8));
    EXPECT_LE(max_abs_diff(out, dense_matvec(materialize_embedding(h), v)), 1e-12);
}

TEST(dilation, embedding_is_hermitian_involution) {
    std::mt19937_64 rng(36);
    for (size_t m : {1, 2, 8, 64}) {
        HermitianEmbedding h{random_dilation(rng, m)};
        auto u = random_vector(rng, h.dim());
        auto v = random_vector(rng, h.dim());
        auto hv = apply_hermitian_embedding(h, v);
        auto hu = apply_hermitian_embedding(h, u);
        EXPECT_LE(max_abs_diff(apply_hermitian_embedding(h, hv), v), 1e-12);
        EXPECT_LE(std::abs(inner(u, hv) - std::conj(inner(v, hu))), 1e-12 * norm2(u) * norm2(v));
        if (m <= 8) {
            auto dense = materialize_embedding(h);
            EXPECT_LE(max_abs_diff(dense, dense.adjoint()), 0.0);
            EXPECT_LE(max_abs_diff_from_identity(dense * dense), 1e-12);
        }
    }
    HermitianEmbedding h{build_dilation(ComplexVector{1, 2})};
    EXPECT_EQ(apply_hermitian_embedding(h, ComplexVector(8)), ComplexVector(8));
}

TEST(dilation, exponential_special_angles) {
    std::mt19937_64 rng(37);
    HermitianEmbedding h{random_dilation(rng, 8)};
    auto v = random_vector(rng, h.dim());
    EXPECT_EQ(apply_exp_embedding(h, 0.0, v), v);

    auto quarter = apply_exp_embedding(h, std::numbers::pi / 2, v);
    auto hv = apply_hermitian_embedding(h, v);
    for (auto &x : hv) {
        x *= Complex(0, -1);
    }
    EXPECT_LE(max_abs_diff(quarter, hv), 1e-12);

    auto half = apply_exp_embedding(h, std::numbers::pi, v);
    for (size_t i = 0; i < v.size(); i++) {
        EXPECT_LE(std::abs(half[i] + v[i]), 1e-12);
    }
}

TEST(dilation, exponential_group_law) {
    std::mt19937_64 rng(38);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    for (int trial = 0; trial < 30; trial++) {
        HermitianEmbedding h{random_dilation(rng, 16)};
        auto v = random_vector(rng, h.dim());
        double a = angle(rng);
        double b = angle(rng);
        auto lhs = apply_exp_embedding(h, a, apply_exp_embedding(h, b, v));
        auto rhs = apply_exp_embedding(h, a + b, v);
        EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
    }
}

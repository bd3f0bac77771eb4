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

#include "tqc/pipeline.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "tqc/error.h"

namespace tqc {

namespace {

// Branch probabilities below this are at rounding level for a unit state.
constexpr double kZeroProbability = 1e-30;
constexpr double kFirstAncillaTolerance = 1e-12;

void check_input(std::span<const Complex> psi, size_t expected, const char *name) {
    if (psi.size() != expected) {
        throw Error(ErrorKind::kDimension, std::string(name) + " has " + std::to_string(psi.size()) +
                                               " entries, matrix dimension is " + std::to_string(expected));
    }
    if (!all_finite(psi)) {
        throw Error(ErrorKind::kNumerics, std::string(name) + " has non-finite entries");
    }
    if (is_zero(psi)) {
        throw Error(ErrorKind::kZeroVector, std::string(name) + " is the zero vector");
    }
}

void check_nonzero(const ToeplitzSpec &t) {
    if (t.is_zero()) {
        throw Error(ErrorKind::kZeroMatrix, "matrix is identically zero");
    }
}

RegisterState make_register(size_t base_dim, size_t num_ancillas, std::span<const Complex> block_input,
                            double input_norm) {
    RegisterState state;
    state.base_dim = base_dim;
    state.num_ancillas = num_ancillas;
    state.amplitudes.assign(base_dim << num_ancillas, Complex{});
    // (a1, a2) = (1, 0) is the third of the four Fourier blocks.
    const size_t offset = 2 * state.block_size();
    for (size_t i = 0; i < block_input.size(); i++) {
        state.amplitudes[offset + i] = block_input[i] / input_norm;
    }
    return state;
}

// Shared circuit: forward block Fourier, exp(-i pi/2 H(U)), inverse block
// Fourier. `block_input` occupies the (a1, a2) = (1, 0) block.
CircuitRun run_circuit(std::span<const Complex> lambdas, std::span<const Complex> block_input, size_t base_dim,
                       size_t num_ancillas, size_t output_dim, ScaleRule rule) {
    CircuitRun run;
    run.dilation = build_dilation(lambdas, rule);
    run.input_norm = norm2(block_input);
    run.output_dim = output_dim;

    RegisterState state = make_register(base_dim, num_ancillas, block_input, run.input_norm);
    state = apply_block_fourier(std::move(state), FourierDirection::kForward);
    run.stage_norms[0] = norm2(state.amplitudes);

    HermitianEmbedding embedding{run.dilation};
    state.amplitudes = apply_exp_embedding(embedding, std::numbers::pi / 2, state.amplitudes);
    run.stage_norms[1] = norm2(state.amplitudes);

    state = apply_block_fourier(std::move(state), FourierDirection::kInverse);
    run.stage_norms[2] = norm2(state.amplitudes);

    const size_t half = state.amplitudes.size() / 2;
    run.first_ancilla_mass = squared_norm(std::span<const Complex>(state.amplitudes).subspan(half));
    if (run.first_ancilla_mass > kFirstAncillaTolerance) {
        throw Error(ErrorKind::kNumerics, "first ancilla did not return to |0>: residual mass " +
                                              std::to_string(run.first_ancilla_mass));
    }
    run.state = std::move(state);
    return run;
}

ApplyResult finish(std::span<const Complex> branch, double k, double input_norm) {
    ApplyResult result;
    result.k = k;
    result.input_norm = input_norm;
    const double p = squared_norm(branch);
    result.output.assign(branch.size(), Complex{});
    if (p < kZeroProbability) {
        result.success_probability = 0;
        return result;
    }
    result.success_probability = p;
    // branch = global_phase * (1/k) * image / ||input||.
    const Complex undo = k * input_norm / result.global_phase;
    const double inv_norm = 1.0 / std::sqrt(p);
    result.post_selected_state.resize(branch.size());
    for (size_t i = 0; i < branch.size(); i++) {
        result.output[i] = branch[i] * undo;
        result.post_selected_state[i] = branch[i] * inv_norm;
    }
    return result;
}

void record_streaks(ShotRecord &record, const std::vector<bool> &outcomes) {
    size_t streak = 0;
    for (bool ok : outcomes) {
        streak = ok ? 0 : streak + 1;
        record.longest_failure_streak = std::max(record.longest_failure_streak, streak);
    }
    record.frequency = static_cast<double>(record.successes) / static_cast<double>(record.shots);
    record.mean_attempts_per_success = record.successes == 0
                                           ? std::numeric_limits<double>::infinity()
                                           : static_cast<double>(record.shots) / static_cast<double>(record.successes);
}

void check_shots(size_t shots) {
    if (shots == 0) {
        throw Error(ErrorKind::kUsage, "shots must be positive");
    }
}

// Reciprocal spectrum; rejects |lambda_j| <= threshold * max |lambda|.
ComplexVector inverse_spectrum(const CirculantSpec &c, double threshold) {
    auto lambdas = circulant_eigenvalues(c);
    double largest = 0;
    for (const auto &x : lambdas) {
        largest = std::max(largest, std::abs(x));
    }
    for (size_t j = 0; j < lambdas.size(); j++) {
        if (!(std::abs(lambdas[j]) > threshold * largest)) {
            char modulus[32];
            std::snprintf(modulus, sizeof(modulus), "%.3e", std::abs(lambdas[j]));
            throw Error(ErrorKind::kSingular, "singular circulant: eigenvalue lambda_" + std::to_string(j + 1) +
                                                  " (index " + std::to_string(j) + ") has modulus " + modulus +
                                                  ", threshold " + std::to_string(threshold) + " * max |lambda|");
        }
        lambdas[j] = 1.0 / lambdas[j];
    }
    return lambdas;
}

size_t ceil_log2(size_t x) {
    size_t bits = 0;
    while ((size_t{1} << bits) < x) {
        bits++;
    }
    return bits;
}

}  // namespace

std::span<const Complex> RegisterState::ancilla_block(size_t pattern) const {
    return std::span<const Complex>(amplitudes).subspan(pattern * base_dim, base_dim);
}

double RegisterState::ancilla_probability(size_t pattern) const {
    return squared_norm(ancilla_block(pattern));
}

RegisterState prepare_input(std::span<const Complex> psi) {
    const size_t n = psi.size();
    if (!is_power_of_two(n)) {
        throw Error(ErrorKind::kDimension, "register simulation needs a power-of-two dimension, got " +
                                               std::to_string(n));
    }
    check_input(psi, n, "input vector");
    return make_register(n, 3, psi, norm2(psi));
}

RegisterState apply_block_fourier(RegisterState state, FourierDirection direction) {
    const size_t block = state.block_size();
    std::span<Complex> all(state.amplitudes);
    for (size_t b = 0; b < 4; b++) {
        auto part = all.subspan(b * block, block);
        if (is_zero(part)) {
            continue;
        }
        auto transformed = direction == FourierDirection::kForward ? dft(part) : idft(part);
        std::copy(transformed.begin(), transformed.end(), part.begin());
    }
    return state;
}

CircuitRun simulate_toeplitz_circuit(const ToeplitzSpec &t, std::span<const Complex> psi,
                                     const PipelineOptions &options) {
    const size_t n = t.n();
    if (!is_power_of_two(n)) {
        throw Error(ErrorKind::kDimension, "register simulation needs a power-of-two dimension, got " +
                                               std::to_string(n));
    }
    check_nonzero(t);
    check_input(psi, n, "input vector");
    auto lambdas = circulant_eigenvalues(embed_in_circulant(t));
    ComplexVector padded(2 * n);
    std::copy(psi.begin(), psi.end(), padded.begin());
    return run_circuit(lambdas, padded, n, 3, n, options.scale_rule);
}

CircuitRun simulate_circulant_solve_circuit(const CirculantSpec &c, std::span<const Complex> b,
                                            const PipelineOptions &options) {
    check_input(b, c.m(), "right-hand side");
    auto inverse = inverse_spectrum(c, options.singular_threshold);
    return run_circuit(inverse, b, c.m(), 2, c.m(), options.scale_rule);
}

ApplyResult post_select(const CircuitRun &run) {
    auto branch = run.state.ancilla_block(0).subspan(0, run.output_dim);
    return finish(branch, run.dilation.k, run.input_norm);
}

ApplyResult run_pipeline(const ToeplitzSpec &t, std::span<const Complex> psi, const PipelineOptions &options) {
    return post_select(simulate_toeplitz_circuit(t, psi, options));
}

ApplyResult run_pipeline_fast(const ToeplitzSpec &t, std::span<const Complex> psi,
                              const PipelineOptions &options) {
    const size_t n = t.n();
    check_nonzero(t);
    check_input(psi, n, "input vector");
    auto lambdas = circulant_eigenvalues(embed_in_circulant(t));
    const double k = scale_factor(lambdas, options.scale_rule);
    const double input_norm = norm2(psi);

    // Same branch amplitudes the register circuit leaves on |000>:
    // -i / k * F^dagger diag(lambda) F (psi; 0) / ||psi||.
    ComplexVector padded(2 * n);
    std::copy(psi.begin(), psi.end(), padded.begin());
    auto spectrum = dft(padded);
    const Complex factor = Complex(0.0, -1.0) / (k * input_norm);
    for (size_t j = 0; j < spectrum.size(); j++) {
        spectrum[j] *= lambdas[j] * factor;
    }
    auto image = idft(spectrum);
    return finish(std::span<const Complex>(image).subspan(0, n), k, input_norm);
}

ShotRecord sample_measurement(const CircuitRun &run, size_t shots, uint64_t seed) {
    check_shots(shots);
    const size_t patterns = size_t{1} << run.state.num_ancillas;
    std::vector<double> weights(patterns);
    for (size_t p = 0; p < patterns; p++) {
        weights[p] = run.state.ancilla_probability(p);
    }
    // Only the leading output_dim amplitudes of pattern 0 form the result
    // (the rest of that block is zero for both circuits).
    std::mt19937_64 rng(seed);
    std::discrete_distribution<size_t> draw(weights.begin(), weights.end());
    ShotRecord record;
    record.shots = shots;
    record.outcome_counts.assign(patterns, 0);
    std::vector<bool> outcomes(shots);
    for (size_t s = 0; s < shots; s++) {
        size_t outcome = draw(rng);
        record.outcome_counts[outcome]++;
        outcomes[s] = outcome == 0;
    }
    record.successes = record.outcome_counts[0];
    record_streaks(record, outcomes);
    return record;
}

ShotRecord sample_success(double success_probability, size_t shots, uint64_t seed) {
    check_shots(shots);
    if (!(success_probability >= 0 && success_probability <= 1)) {
        throw Error(ErrorKind::kNumerics, "success probability outside [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution draw(success_probability);
    ShotRecord record;
    record.shots = shots;
    std::vector<bool> outcomes(shots);
    for (size_t s = 0; s < shots; s++) {
        outcomes[s] = draw(rng);
        record.successes += outcomes[s] ? 1 : 0;
    }
    record_streaks(record, outcomes);
    return record;
}

ApplyResult apply_hankel(const HankelSpec &h, std::span<const Complex> psi, const PipelineOptions &options) {
    auto t = hankel_to_toeplitz(h);
    auto flipped = reverse(psi);
    return options.engine == Engine::kFast ? run_pipeline_fast(t, flipped, options)
                                           : run_pipeline(t, flipped, options);
}

ApplyResult solve_circulant(const CirculantSpec &c, std::span<const Complex> b, const PipelineOptions &options) {
    if (options.engine == Engine::kRegister) {
        return post_select(simulate_circulant_solve_circuit(c, b, options));
    }
    check_input(b, c.m(), "right-hand side");
    auto inverse = inverse_spectrum(c, options.singular_threshold);
    const double k = scale_factor(inverse, options.scale_rule);
    const double input_norm = norm2(b);
    auto spectrum = dft(b);
    const Complex factor = Complex(0.0, -1.0) / (k * input_norm);
    for (size_t j = 0; j < spectrum.size(); j++) {
        spectrum[j] *= inverse[j] * factor;
    }
    auto image = idft(spectrum);
    return finish(image, k, input_norm);
}

ComplexVector acceleration(std::span<const Complex> u, double h) {
    if (!(h > 0) || !std::isfinite(h)) {
        throw Error(ErrorKind::kUsage, "sector spacing h must be positive");
    }
    auto laplacian = build_laplacian(u.size());
    ComplexVector out(u.size());
    if (is_zero(u)) {
        return out;
    }
    auto result = run_pipeline_fast(laplacian, u);
    const double scale = -1.0 / (h * h);
    for (size_t i = 0; i < u.size(); i++) {
        out[i] = result.output[i] * scale;
    }
    return out;
}

ResourceReport resource_report(const ToeplitzSpec &t, std::optional<std::span<const Complex>> psi) {
    ResourceReport report;
    report.n = t.n();
    report.qubits = ceil_log2(8 * t.n());
    report.qft_size = 2 * t.n();
    const size_t levels = ceil_log2(report.qft_size);
    report.qft_gates_each = levels * (levels + 1) / 2;
    report.qft_gates_total = 2 * report.qft_gates_each;
    if (t.is_zero()) {
        return report;
    }
    auto lambdas = circulant_eigenvalues(embed_in_circulant(t));
    report.k = scale_factor(lambdas);
    if (report.k <= 1) {
        report.k_sqrt_rule = std::sqrt(report.k);
    }
    if (psi) {
        auto result = run_pipeline_fast(t, *psi);
        report.success_probability = result.success_probability;
        report.expected_repeats = result.success_probability > 0 ? 1.0 / result.success_probability
                                                                 : std::numeric_limits<double>::infinity();
    }
    return report;
}

}  // namespace tqc

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

#ifndef TQC_PIPELINE_H
#define TQC_PIPELINE_H

#include <array>
#include <cstdint>
#include <optional>

#include "tqc/dilation.h"
#include "tqc/numerics.h"
#include "tqc/structured.h"

namespace tqc {

/// Statevector over `num_ancillas` ancilla qubits and a base register of
/// `base_dim` amplitudes. The ancilla pattern (first ancilla is the most
/// significant bit) selects a contiguous block:
///
///     global index = pattern * base_dim + base_index.
///
/// Toeplitz circuits use three ancillas over n, i.e.
/// a1 * 4n + a2 * 2n + a3 * n + base_index. The circulant solver uses two
/// ancillas over m.
struct RegisterState {
    size_t base_dim = 0;
    size_t num_ancillas = 0;
    ComplexVector amplitudes;

    /// Size of one (a1, a2) block: the unit the Fourier transforms act on.
    size_t block_size() const noexcept {
        return amplitudes.size() / 4;
    }
    std::span<const Complex> ancilla_block(size_t pattern) const;
    double ancilla_probability(size_t pattern) const;
};

enum class FourierDirection { kForward, kInverse };
enum class Engine { kRegister, kFast };

struct PipelineOptions {
    ScaleRule scale_rule = ScaleRule::kMaxModulus;
    Engine engine = Engine::kRegister;
    /// solve_circulant rejects |lambda_j| <= singular_threshold * max |lambda|.
    double singular_threshold = 1e-12;
};

struct ShotRecord {
    size_t shots = 0;
    size_t successes = 0;
    double frequency = 0;
    /// Counts per ancilla pattern; empty when only the success bit was sampled.
    std::vector<size_t> outcome_counts;
    double mean_attempts_per_success = 0;
    size_t longest_failure_streak = 0;
};

struct ApplyResult {
    /// The unnormalized operator image, global phase removed.
    ComplexVector output;
    double success_probability = 0;
    double k = 0;
    double input_norm = 0;
    /// Unit-norm post-selected branch (still carrying the global phase);
    /// empty when the success probability is zero.
    ComplexVector post_selected_state;
    /// Phase the circuit leaves on the post-selected branch.
    Complex global_phase{0.0, -1.0};
    std::optional<ShotRecord> shots;
};

/// Full register state just before the ancilla measurement.
struct CircuitRun {
    RegisterState state;
    DiagonalDilation dilation;
    double input_norm = 0;
    /// Norm after the forward Fourier, exponential and inverse Fourier stages.
    std::array<double, 3> stage_norms{};
    /// Probability of the first ancilla reading 1.
    double first_ancilla_mass = 0;
    /// Leading amplitudes of the all-zero ancilla block that form the output.
    size_t output_dim = 0;
};

/// |1>|0>|0>|psi / ||psi||>; n must be a power of two.
RegisterState prepare_input(std::span<const Complex> psi);
RegisterState apply_block_fourier(RegisterState state, FourierDirection direction);

CircuitRun simulate_toeplitz_circuit(const ToeplitzSpec &t, std::span<const Complex> psi,
                                     const PipelineOptions &options = {});
CircuitRun simulate_circulant_solve_circuit(const CirculantSpec &c, std::span<const Complex> b,
                                            const PipelineOptions &options = {});
/// Exact post-selection on the all-zero ancilla pattern.
ApplyResult post_select(const CircuitRun &run);

ApplyResult run_pipeline(const ToeplitzSpec &t, std::span<const Complex> psi, const PipelineOptions &options = {});
/// FFT -> diagonal scale -> inverse FFT on the padded vector. Any n >= 1.
ApplyResult run_pipeline_fast(const ToeplitzSpec &t, std::span<const Complex> psi,
                              const PipelineOptions &options = {});

/// Measures all ancillas `shots` times from the exact pre-measurement state.
ShotRecord sample_measurement(const CircuitRun &run, size_t shots, uint64_t seed);
/// Bernoulli sampling of the post-selection outcome alone.
ShotRecord sample_success(double success_probability, size_t shots, uint64_t seed);

ApplyResult apply_hankel(const HankelSpec &h, std::span<const Complex> psi, const PipelineOptions &options = {});
ApplyResult solve_circulant(const CirculantSpec &c, std::span<const Complex> b, const PipelineOptions &options = {});

/// -(1/h^2) L2 u with fixed zero ends, evaluated through the fast pipeline.
ComplexVector acceleration(std::span<const Complex> u, double h);

struct ResourceReport {
    size_t n = 0;
    size_t qubits = 0;
    size_t qft_size = 0;
    size_t qft_gates_each = 0;
    size_t qft_gates_total = 0;
    double k = 0;
    /// k under the literal square-root rule, when that rule is admissible.
    std::optional<double> k_sqrt_rule;
    std::optional<double> success_probability;
    std::optional<double> expected_repeats;
};

ResourceReport resource_report(const ToeplitzSpec &t, std::optional<std::span<const Complex>> psi = std::nullopt);

}  // namespace tqc

#endif

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

#include "tqc/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tqc/dilation.h"
#include "tqc/io.h"
#include "tqc/pipeline.h"
#include "tqc/structured.h"

namespace tqc {

namespace {

// Full register simulation is used up to this dimension unless --fast.
constexpr size_t kRegisterLimit = size_t{1} << 12;

struct ApplyArgs {
    std::string matrix;
    std::string vector;
    std::string mode = "exact";
    size_t shots = 1000;
    uint64_t seed = 1;
    bool fast = false;
    std::string out;
};

struct SolveArgs {
    std::string matrix;
    std::string rhs;
    bool fast = false;
    std::string out;
};

struct LaplacianArgs {
    size_t n = 0;
    double h = 1.0;
    std::string vector;
    std::string out;
};

struct InfoArgs {
    std::string matrix;
    std::string vector;
    double tau = -1.0;
};

struct EmbedArgs {
    std::string what;
    std::string matrix;
    std::string out;
    size_t cap = kDefaultOracleCap;
};

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

std::string full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Every kind is applied through its Toeplitz form; Hankel inputs are also
// reversed so the Toeplitz image equals H psi.
ToeplitzSpec as_toeplitz(const MatrixSpec &spec) {
    if (const auto *t = std::get_if<ToeplitzSpec>(&spec)) {
        return *t;
    }
    if (const auto *h = std::get_if<HankelSpec>(&spec)) {
        return hankel_to_toeplitz(*h);
    }
    return circulant_as_toeplitz(std::get<CirculantSpec>(spec));
}

void emit_vector(std::ostream &out, const std::string &path, std::span<const Complex> v,
                 std::vector<std::pair<std::string, std::string>> &pending) {
    if (path.empty()) {
        out << format_vector(v);
    } else {
        pending.emplace_back(path, format_vector(v));
    }
}

void flush(const std::vector<std::pair<std::string, std::string>> &pending) {
    for (const auto &[path, content] : pending) {
        write_text_file(path, content);
    }
}

void report_k(std::ostream &out, double k) {
    out << "k: " << full(k) << " (max |lambda|";
    if (k <= 1) {
        out << "; square-root rule would give " << full(std::sqrt(k));
    }
    out << ")\n";
}

int cmd_apply(const ApplyArgs &args, std::ostream &out) {
    if (args.mode != "exact" && args.mode != "sample") {
        throw Error(ErrorKind::kUsage, "--mode must be 'exact' or 'sample'");
    }
    const auto spec = parse_matrix_spec(read_text_file(args.matrix));
    auto psi = parse_vector(read_text_file(args.vector));
    const size_t n = dimension(spec);
    if (psi.size() != n) {
        throw Error(ErrorKind::kDimension, "vector has " + std::to_string(psi.size()) +
                                               " entries but matrix dimension is " + std::to_string(n));
    }
    const bool sample = args.mode == "sample";
    const auto t = as_toeplitz(spec);
    auto input = std::holds_alternative<HankelSpec>(spec) ? reverse(psi) : psi;
    const bool register_path = !args.fast && n <= kRegisterLimit && is_power_of_two(n);

    ApplyResult result;
    if (register_path) {
        auto run = simulate_toeplitz_circuit(t, input);
        result = post_select(run);
        if (sample) {
            result.shots = sample_measurement(run, args.shots, args.seed);
        }
    } else {
        result = run_pipeline_fast(t, input);
        if (sample) {
            result.shots = sample_success(result.success_probability, args.shots, args.seed);
        }
    }

    std::vector<std::pair<std::string, std::string>> pending;
    out << "kind: " << kind_name(spec) << "\n";
    out << "dimension: " << n << "\n";
    if (register_path) {
        out << "path: register simulation (3 ancillas, " << 8 * n << " amplitudes)\n";
    } else {
        out << "path: structured fast path\n";
    }
    report_k(out, result.k);
    out << "success_probability: " << fixed6(result.success_probability) << " (" << full(result.success_probability)
        << ")\n";
    out << "expected_repeats: "
        << (result.success_probability > 0 ? full(1.0 / result.success_probability) : std::string("inf")) << "\n";
    out << "global_phase: -i (divided out of the output)\n";
    if (result.shots) {
        const auto &s = *result.shots;
        out << "shots: " << s.shots << "\n";
        out << "successes: " << s.successes << "\n";
        out << "frequency: " << fixed6(s.frequency) << "\n";
        out << "longest_failure_streak: " << s.longest_failure_streak << "\n";
        if (!s.outcome_counts.empty()) {
            out << "outcome_counts:";
            for (size_t p = 0; p < s.outcome_counts.size(); p++) {
                out << " " << p << ":" << s.outcome_counts[p];
            }
            out << "\n";
        }
    }
    emit_vector(out, args.out, result.output, pending);
    flush(pending);
    return kExitOk;
}

int cmd_solve(const SolveArgs &args, std::ostream &out) {
    const auto spec = parse_matrix_spec(read_text_file(args.matrix));
    const auto *c = std::get_if<CirculantSpec>(&spec);
    if (c == nullptr) {
        throw Error(ErrorKind::kUsage, std::string("solve-circulant needs a circulant spec, got ") + kind_name(spec));
    }
    auto b = parse_vector(read_text_file(args.rhs));
    if (b.size() != c->m()) {
        throw Error(ErrorKind::kDimension, "right-hand side has " + std::to_string(b.size()) +
                                               " entries but circulant dimension is " + std::to_string(c->m()));
    }
    PipelineOptions options;
    options.engine = args.fast || c->m() > kRegisterLimit ? Engine::kFast : Engine::kRegister;
    auto result = solve_circulant(*c, b, options);

    // Residual through the spectrum, O(m log m): C x = idft(lambda .* dft(x)).
    auto lambdas = circulant_eigenvalues(*c);
    auto spectrum = dft(result.output);
    for (size_t j = 0; j < spectrum.size(); j++) {
        spectrum[j] *= lambdas[j];
    }
    auto cx = idft(spectrum);
    double residual = relative_l2_error(cx, b);

    std::vector<std::pair<std::string, std::string>> pending;
    out << "kind: circulant\n";
    out << "dimension: " << c->m() << "\n";
    out << "path: "
        << (options.engine == Engine::kRegister ? "register simulation (2 ancillas)" : "structured fast path") << "\n";
    report_k(out, result.k);
    out << "success_probability: " << fixed6(result.success_probability) << " (" << full(result.success_probability)
        << ")\n";
    out << "residual: " << full(residual) << "\n";
    emit_vector(out, args.out, result.output, pending);
    flush(pending);
    return kExitOk;
}

int cmd_laplacian(const LaplacianArgs &args, std::ostream &out) {
    if (args.n < 2) {
        throw Error(ErrorKind::kUsage, "--n must be at least 2");
    }
    if (!(args.h > 0)) {
        throw Error(ErrorKind::kUsage, "--h must be positive");
    }
    auto u = parse_vector(read_text_file(args.vector));
    if (u.size() != args.n) {
        throw Error(ErrorKind::kDimension,
                    "vector has " + std::to_string(u.size()) + " entries but --n is " + std::to_string(args.n));
    }
    auto accel = acceleration(u, args.h);
    std::vector<std::pair<std::string, std::string>> pending;
    out << "sectors: " << args.n << "\n";
    out << "h: " << full(args.h) << "\n";
    emit_vector(out, args.out, accel, pending);
    flush(pending);
    return kExitOk;
}

int cmd_info(const InfoArgs &args, std::ostream &out) {
    const auto spec = parse_matrix_spec(read_text_file(args.matrix));
    std::optional<ComplexVector> psi;
    if (!args.vector.empty()) {
        psi = parse_vector(read_text_file(args.vector));
        if (psi->size() != dimension(spec)) {
            throw Error(ErrorKind::kDimension, "vector has " + std::to_string(psi->size()) +
                                                   " entries but matrix dimension is " +
                                                   std::to_string(dimension(spec)));
        }
        if (std::holds_alternative<HankelSpec>(spec)) {
            psi = reverse(*psi);
        }
    }
    const auto t = as_toeplitz(spec);
    auto sparsity = sparsity_report(t, args.tau);
    std::optional<std::span<const Complex>> view;
    if (psi) {
        view = std::span<const Complex>(*psi);
    }
    auto resources = resource_report(t, view);
    auto lambdas = circulant_eigenvalues(embed_in_circulant(t));
    double lo = std::abs(lambdas[0]);
    double hi = lo;
    for (const auto &x : lambdas) {
        lo = std::min(lo, std::abs(x));
        hi = std::max(hi, std::abs(x));
    }

    out << "kind: " << kind_name(spec) << "\n";
    out << "dimension: " << dimension(spec) << "\n";
    out << "nnz_time: " << sparsity.nnz_time << "\n";
    out << "nnz_freq: " << sparsity.nnz_freq << "\n";
    out << "tau: " << full(sparsity.tau) << "\n";
    out << "density_time: " << fixed6(sparsity.density_time) << "\n";
    out << "density_freq: " << fixed6(sparsity.density_freq) << "\n";
    out << "spectrum_min_modulus: " << full(lo) << "\n";
    out << "spectrum_max_modulus: " << full(hi) << "\n";
    if (resources.k > 0) {
        report_k(out, resources.k);
    } else {
        out << "k: undefined (zero matrix)\n";
    }
    out << "qubits: " << resources.qubits << "\n";
    out << "qft_size: " << resources.qft_size << "\n";
    out << "qft_gates_each: " << resources.qft_gates_each << "\n";
    out << "qft_gates_total: " << resources.qft_gates_total << "\n";
    if (const auto *c = std::get_if<CirculantSpec>(&spec)) {
        auto own = circulant_eigenvalues(*c);
        double own_lo = std::abs(own[0]);
        double own_hi = own_lo;
        for (const auto &x : own) {
            own_lo = std::min(own_lo, std::abs(x));
            own_hi = std::max(own_hi, std::abs(x));
        }
        out << "circulant_min_modulus: " << full(own_lo) << "\n";
        out << "circulant_singular: " << (own_lo > 1e-12 * own_hi ? "no" : "yes") << "\n";
    }
    if (resources.success_probability) {
        out << "success_probability: " << fixed6(*resources.success_probability) << " ("
            << full(*resources.success_probability) << ")\n";
        out << "expected_repeats: " << full(*resources.expected_repeats) << "\n";
    }
    return kExitOk;
}

int cmd_embed(const EmbedArgs &args, std::ostream &out) {
    const auto spec = parse_matrix_spec(read_text_file(args.matrix));
    const size_t n = dimension(spec);
    if (n > args.cap) {
        throw Error(ErrorKind::kCapExceeded,
                    "dimension " + std::to_string(n) + " exceeds --cap " + std::to_string(args.cap));
    }
    const auto t = as_toeplitz(spec);
    const auto circulant = embed_in_circulant(t);
    DenseMatrix dense;
    if (args.what == "circulant") {
        dense = materialize_dense(circulant, 2 * n);
    } else {
        HermitianEmbedding h{build_dilation(circulant_eigenvalues(circulant))};
        dense = args.what == "dilation" ? materialize_dilation(h.dilation, 2 * n) : materialize_embedding(h, 2 * n);
    }
    auto text = format_dense(dense);
    if (args.out.empty()) {
        out << text;
    } else {
        write_text_file(args.out, text);
        out << "wrote " << args.what << " " << dense.rows() << "x" << dense.cols() << " to " << args.out << "\n";
    }
    return kExitOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::kUsage:
            return kExitUsage;
        case ErrorKind::kIo:
            return kExitIo;
        case ErrorKind::kParse:
            return kExitParse;
        case ErrorKind::kDimension:
            return kExitDimension;
        case ErrorKind::kZeroMatrix:
            return kExitZeroMatrix;
        case ErrorKind::kZeroVector:
            return kExitZeroVector;
        case ErrorKind::kSingular:
            return kExitSingular;
        case ErrorKind::kCapExceeded:
            return kExitCapExceeded;
        case ErrorKind::kNumerics:
            return kExitNumerics;
    }
    return kExitNumerics;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Structured-matrix quantum circuit simulator"};
    app.require_subcommand(1);

    ApplyArgs apply_args;
    auto *apply = app.add_subcommand("apply", "Apply a Toeplitz, Hankel or circulant matrix through the circuit");
    apply->add_option("--matrix", apply_args.matrix, "Matrix spec (JSON)")->required();
    apply->add_option("--vector", apply_args.vector, "Input vector file")->required();
    apply->add_option("--mode", apply_args.mode, "exact or sample")->check(CLI::IsMember({"exact", "sample"}));
    apply->add_option("--shots", apply_args.shots, "Shots in sample mode")->check(CLI::PositiveNumber);
    apply->add_option("--seed", apply_args.seed, "Sampling seed");
    apply->add_flag("--fast", apply_args.fast, "Use the structured O(n log n) path");
    apply->add_option("--out", apply_args.out, "Output vector file");

    SolveArgs solve_args;
    auto *solve = app.add_subcommand("solve-circulant", "Solve C x = b for a circulant C");
    solve->add_option("--matrix", solve_args.matrix, "Circulant spec (JSON)")->required();
    solve->add_option("--rhs", solve_args.rhs, "Right-hand side vector file")->required();
    solve->add_flag("--fast", solve_args.fast, "Use the structured O(m log m) path");
    solve->add_option("--out", solve_args.out, "Solution vector file");

    LaplacianArgs lap_args;
    auto *lap = app.add_subcommand("laplacian", "Sector accelerations -(1/h^2) L2 u");
    // --h is the sector spacing here, so help is long-form only.
    lap->set_help_flag("--help", "Print this help message and exit");
    lap->add_option("--n", lap_args.n, "Number of sectors")->required();
    lap->add_option("--h", lap_args.h, "Sector spacing");
    lap->add_option("--vector", lap_args.vector, "Displacement vector file")->required();
    lap->add_option("--out", lap_args.out, "Acceleration vector file");

    InfoArgs info_args;
    auto *info = app.add_subcommand("info", "Sparsity, spectrum and resource report");
    info->add_option("--matrix", info_args.matrix, "Matrix spec (JSON)")->required();
    info->add_option("--vector", info_args.vector, "Optional input vector file");
    info->add_option("--tau", info_args.tau, "Frequency threshold (default 1e-12 * max modulus)");

    EmbedArgs embed_args;
    auto *embed = app.add_subcommand("embed", "Dump a dense circulant embedding, dilation or Hermitian embedding");
    embed->add_option("what", embed_args.what, "circulant, dilation or embedding")
        ->required()
        ->check(CLI::IsMember({"circulant", "dilation", "embedding"}));
    embed->add_option("--matrix", embed_args.matrix, "Matrix spec (JSON)")->required();
    embed->add_option("--out", embed_args.out, "Output file");
    embed->add_option("--cap", embed_args.cap, "Largest dimension to materialize");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (apply->parsed()) {
            return cmd_apply(apply_args, out);
        }
        if (solve->parsed()) {
            return cmd_solve(solve_args, out);
        }
        if (lap->parsed()) {
            return cmd_laplacian(lap_args, out);
        }
        if (info->parsed()) {
            return cmd_info(info_args, out);
        }
        return cmd_embed(embed_args, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerics;
    }
}

}  // namespace tqc

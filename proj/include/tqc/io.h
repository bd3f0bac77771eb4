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

#ifndef TQC_IO_H
#define TQC_IO_H

#include <string>
#include <string_view>
#include <variant>

#include "tqc/numerics.h"
#include "tqc/structured.h"

namespace tqc {

using MatrixSpec = std::variant<ToeplitzSpec, HankelSpec, CirculantSpec>;

/// JSON matrix spec:
///
///     {"kind": "toeplitz", "n": 4, "entries": {"0": [2, 0], "-1": [-1, 0], "1": [-1, 0]}}
///     {"kind": "hankel",   "n": 2, "entries": {"-1": [1, 0], "0": [2, 0], "1": [3, 0]}}
///     {"kind": "circulant", "m": 4, "entries": [[2, 0], [-1, 0], [0, 0], [-1, 0]]}
///
/// Complex values are [re, im] pairs. Throws Error(kParse) on malformed input.
MatrixSpec parse_matrix_spec(std::string_view text);
std::string format_matrix_spec(const MatrixSpec &spec);
size_t dimension(const MatrixSpec &spec);
const char *kind_name(const MatrixSpec &spec);

/// One `re im` pair per line, optionally preceded by a `# dim N` header.
ComplexVector parse_vector(std::string_view text);
/// Shortest round-trip decimal formatting with a `# dim N` header.
std::string format_vector(std::span<const Complex> v);

/// `# rows R cols C` header, then one line per row of `re im` pairs.
std::string format_dense(const DenseMatrix &m);
DenseMatrix parse_dense(std::string_view text);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view content);

}  // namespace tqc

#endif

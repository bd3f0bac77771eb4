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

#include "tqc/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tqc/error.h"

namespace tqc {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorKind::kParse, what);
}

Complex complex_from_json(const json &value, const std::string &where) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
        parse_fail(where + ": expected [re, im]");
    }
    return {value[0].get<double>(), value[1].get<double>()};
}

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

int64_t parse_offset(const std::string &key) {
    int64_t out = 0;
    const char *end = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(key.data(), end, out);
    if (ec != std::errc() || ptr != end || key.empty()) {
        parse_fail("entry key '" + key + "' is not an integer offset");
    }
    return out;
}

size_t read_dimension(const json &doc, const char *primary, const char *alternate) {
    const json *field = nullptr;
    if (doc.contains(primary)) {
        field = &doc[primary];
    } else if (doc.contains(alternate)) {
        field = &doc[alternate];
    } else {
        parse_fail(std::string("missing dimension field '") + primary + "'");
    }
    if (!field->is_number_integer() || field->get<int64_t>() < 1) {
        parse_fail("dimension must be a positive integer");
    }
    return field->get<size_t>();
}

template <typename Spec>
Spec parse_sparse(const json &doc, const char *label) {
    size_t n = read_dimension(doc, "n", "m");
    const json &entries = doc.at("entries");
    if (!entries.is_object()) {
        parse_fail(std::string(label) + " entries must be an object of offset -> [re, im]");
    }
    Spec spec(n);
    for (const auto &[key, value] : entries.items()) {
        int64_t offset = parse_offset(key);
        Complex z = complex_from_json(value, std::string(label) + " entry " + key);
        try {
            spec.set(offset, z);
        } catch (const Error &e) {
            parse_fail(e.what());
        }
    }
    return spec;
}

template <typename Map>
json sparse_to_json(const Map &entries) {
    json out = json::object();
    for (const auto &[offset, value] : entries) {
        out[std::to_string(offset)] = complex_to_json(value);
    }
    return out;
}

bool parse_double(std::string_view token, double &out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

Complex parse_pair(std::string_view re, std::string_view im, size_t line_no) {
    double a = 0;
    double b = 0;
    if (!parse_double(re, a) || !parse_double(im, b)) {
        parse_fail("line " + std::to_string(line_no) + ": malformed number");
    }
    return {a, b};
}

}  // namespace

MatrixSpec parse_matrix_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        parse_fail("matrix spec needs a string 'kind'");
    }
    if (!doc.contains("entries")) {
        parse_fail("matrix spec needs 'entries'");
    }
    const auto kind = doc["kind"].get<std::string>();
    if (kind == "toeplitz") {
        return parse_sparse<ToeplitzSpec>(doc, "toeplitz");
    }
    if (kind == "hankel") {
        return parse_sparse<HankelSpec>(doc, "hankel");
    }
    if (kind == "circulant") {
        size_t m = read_dimension(doc, "m", "n");
        const json &entries = doc["entries"];
        if (!entries.is_array()) {
            parse_fail("circulant entries must be a list of [re, im]");
        }
        if (entries.size() != m) {
            parse_fail("circulant declares m = " + std::to_string(m) + " but lists " +
                       std::to_string(entries.size()) + " entries");
        }
        ComplexVector row;
        row.reserve(m);
        for (size_t i = 0; i < m; i++) {
            row.push_back(complex_from_json(entries[i], "circulant entry " + std::to_string(i)));
        }
        return CirculantSpec(std::move(row));
    }
    parse_fail("unknown matrix kind '" + kind + "'");
}

std::string format_matrix_spec(const MatrixSpec &spec) {
    json doc;
    if (const auto *t = std::get_if<ToeplitzSpec>(&spec)) {
        doc["kind"] = "toeplitz";
        doc["n"] = t->n();
        doc["entries"] = sparse_to_json(t->diagonals());
    } else if (const auto *h = std::get_if<HankelSpec>(&spec)) {
        doc["kind"] = "hankel";
        doc["n"] = h->n();
        doc["entries"] = sparse_to_json(h->skew_diagonals());
    } else {
        const auto &c = std::get<CirculantSpec>(spec);
        doc["kind"] = "circulant";
        doc["m"] = c.m();
        json row = json::array();
        for (const auto &z : c.first_row()) {
            row.push_back(complex_to_json(z));
        }
        doc["entries"] = std::move(row);
    }
    return doc.dump(2) + "\n";
}

size_t dimension(const MatrixSpec &spec) {
    return std::visit(
        [](const auto &s) -> size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CirculantSpec>) {
                return s.m();
            } else {
                return s.n();
            }
        },
        spec);
}

const char *kind_name(const MatrixSpec &spec) {
    switch (spec.index()) {
        case 0:
            return "toeplitz";
        case 1:
            return "hankel";
        default:
            return "circulant";
    }
}

ComplexVector parse_vector(std::string_view text) {
    ComplexVector out;
    bool header_seen = false;
    bool data_seen = false;
    size_t declared = 0;
    auto lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); i++) {
        auto tokens = split_ws(lines[i]);
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "#") {
            size_t dim = 0;
            if (header_seen || data_seen || tokens.size() != 3 || tokens[1] != "dim") {
                parse_fail("line " + std::to_string(i + 1) + ": only a leading '# dim N' header is allowed");
            }
            auto [ptr, ec] = std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), dim);
            if (ec != std::errc() || ptr != tokens[2].data() + tokens[2].size()) {
                parse_fail("line " + std::to_string(i + 1) + ": malformed dim");
            }
            header_seen = true;
            declared = dim;
            continue;
        }
        if (tokens.size() != 2) {
            parse_fail("line " + std::to_string(i + 1) + ": expected 're im'");
        }
        out.push_back(parse_pair(tokens[0], tokens[1], i + 1));
        data_seen = true;
    }
    if (header_seen && declared != out.size()) {
        parse_fail("header declares dim " + std::to_string(declared) + " but file has " +
                   std::to_string(out.size()) + " entries");
    }
    if (out.empty()) {
        parse_fail("vector file has no entries");
    }
    return out;
}

std::string format_vector(std::span<const Complex> v) {
    std::string out = "# dim " + std::to_string(v.size()) + "\n";
    for (const auto &z : v) {
        out += format_double(z.real());
        out += ' ';
        out += format_double(z.imag());
        out += '\n';
    }
    return out;
}

std::string format_dense(const DenseMatrix &m) {
    std::string out = "# rows " + std::to_string(m.rows()) + " cols " + std::to_string(m.cols()) + "\n";
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (c > 0) {
                out += ' ';
            }
            out += format_double(m(r, c).real());
            out += ' ';
            out += format_double(m(r, c).imag());
        }
        out += '\n';
    }
    return out;
}

DenseMatrix parse_dense(std::string_view text) {
    auto lines = split_lines(text);
    size_t i = 0;
    while (i < lines.size() && split_ws(lines[i]).empty()) {
        i++;
    }
    if (i == lines.size()) {
        parse_fail("dense matrix file is empty");
    }
    auto header = split_ws(lines[i]);
    size_t rows = 0;
    size_t cols = 0;
    if (header.size() != 5 || header[0] != "#" || header[1] != "rows" || header[3] != "cols" ||
        std::from_chars(header[2].data(), header[2].data() + header[2].size(), rows).ec != std::errc() ||
        std::from_chars(header[4].data(), header[4].data() + header[4].size(), cols).ec != std::errc()) {
        parse_fail("expected '# rows R cols C' header");
    }
    DenseMatrix m(rows, cols);
    size_t r = 0;
    for (i++; i < lines.size(); i++) {
        auto tokens = split_ws(lines[i]);
        if (tokens.empty()) {
            continue;
        }
        if (r >= rows || tokens.size() != 2 * cols) {
            parse_fail("line " + std::to_string(i + 1) + ": wrong row shape");
        }
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = parse_pair(tokens[2 * c], tokens[2 * c + 1], i + 1);
        }
        r++;
    }
    if (r != rows) {
        parse_fail("dense matrix has " + std::to_string(r) + " rows, header says " + std::to_string(rows));
    }
    return m;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
    }
}

}  // namespace tqc

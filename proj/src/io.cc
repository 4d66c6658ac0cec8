// Copyright 2026 The stabdisj Authors
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


#include "stabdisj/io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "stabdisj/errors.h"

namespace stabdisj {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(const std::string &s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::istream &in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        number++;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        out.push_back({number, t});
    }
    return out;
}

std::string where(const std::string &source, std::size_t line) {
    return source + ":" + std::to_string(line) + ": ";
}

std::ifstream open(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    return in;
}

std::vector<long long> integers(const Line &line, const std::string &source, std::size_t expected) {
    std::istringstream ss(line.text);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size()) {
            throw ParseError(where(source, line.number) + "expected an integer, got '" + tok + "'", line.number);
        }
        out.push_back(v);
    }
    if (out.size() != expected) {
        throw ParseError(where(source, line.number) + "expected " + std::to_string(expected) + " integers, got " +
                             std::to_string(out.size()),
                         line.number);
    }
    return out;
}

BitVector parse_bits(const std::string &text, const Line &line, const std::string &source) {
    std::string bits;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') {
            continue;
        }
        if (ch != '0' && ch != '1') {
            throw ParseError(where(source, line.number) + "illegal bit '" + std::string(1, ch) + "'", line.number);
        }
        bits.push_back(ch);
    }
    return BitVector::from_string(bits);
}

}  // namespace

StabilizerCode read_code(std::istream &in, const std::string &source) {
    std::vector<Line> lines = content_lines(in);
    if (lines.empty()) {
        throw ParseError(source + ": empty code file", 0);
    }
    std::vector<long long> header = integers(lines[0], source, 2);
    long long n = header[0];
    long long k = header[1];
    if (n < 1 || k < 0 || k > n) {
        throw DimensionError(where(source, lines[0].number) + "invalid parameters n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
    }
    std::size_t rows = lines.size() - 1;
    if (static_cast<long long>(rows) != n - k) {
        throw DimensionError(where(source, lines[0].number) + "header promises " + std::to_string(n - k) +
                             " generators, file has " + std::to_string(rows));
    }
    std::size_t nn = static_cast<std::size_t>(n);
    BitMatrix checks(0, 2 * nn);
    for (std::size_t i = 1; i < lines.size(); i++) {
        const Line &line = lines[i];
        std::size_t bar = line.text.find('|');
        BitVector row;
        if (bar != std::string::npos) {
            BitVector x = parse_bits(line.text.substr(0, bar), line, source);
            BitVector z = parse_bits(line.text.substr(bar + 1), line, source);
            if (x.size() != nn || z.size() != nn) {
                throw DimensionError(where(source, line.number) + "expected " + std::to_string(nn) +
                                     " bits on each side of '|'");
            }
            row = BitVector::concat(x, z);
        } else {
            if (line.text.size() != nn) {
                throw DimensionError(where(source, line.number) + "generator has length " +
                                     std::to_string(line.text.size()) + ", expected " + std::to_string(nn));
            }
            try {
                row = parse_pauli_string(line.text).vec();
            } catch (const ParseError &e) {
                throw ParseError(where(source, line.number) + e.what(), e.position);
            }
        }
        checks.append_row(std::move(row));
    }
    try {
        return validate(std::move(checks));
    } catch (const NonAbelian &e) {
        throw NonAbelian(e.row_a, e.row_b,
                         source + ": lines " + std::to_string(lines[e.row_a + 1].number) + " and " +
                             std::to_string(lines[e.row_b + 1].number) + ": ");
    } catch (const NotFullRank &e) {
        throw NotFullRank(e.rows, e.rank, source + ": ");
    }
}

StabilizerCode read_code_file(const std::string &path) {
    std::ifstream in = open(path);
    return read_code(in, path);
}

void write_code(std::ostream &out, const StabilizerCode &code) {
    out << code.n() << " " << code.k() << "\n";
    for (const auto &g : code.generators()) {
        out << g.str() << "\n";
    }
}

Graph read_graph(std::istream &in, const std::string &source) {
    std::vector<Line> lines = content_lines(in);
    if (lines.empty()) {
        throw ParseError(source + ": empty graph file", 0);
    }
    long long nv = integers(lines[0], source, 1)[0];
    if (nv < 1) {
        throw InvalidGraph(where(source, lines[0].number) + "vertex count must be positive");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < lines.size(); i++) {
        std::vector<long long> e = integers(lines[i], source, 2);
        if (e[0] < 0 || e[1] < 0) {
            throw InvalidGraph(where(source, lines[i].number) + "negative vertex index");
        }
        edges.emplace_back(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]));
    }
    try {
        return Graph(static_cast<std::size_t>(nv), edges);
    } catch (const InvalidGraph &e) {
        throw InvalidGraph(source + ": " + e.what());
    }
}

Graph read_graph_file(const std::string &path) {
    std::ifstream in = open(path);
    return read_graph(in, path);
}

void write_graph(std::ostream &out, const Graph &g) {
    out << g.num_vertices() << "\n";
    for (auto [u, v] : g.edges()) {
        out << u << " " << v << "\n";
    }
}

BitMatrix read_matrix(std::istream &in, const std::string &source) {
    std::vector<Line> lines = content_lines(in);
    if (lines.empty()) {
        throw ParseError(source + ": empty matrix file", 0);
    }
    std::vector<BitVector> rows;
    for (const auto &line : lines) {
        rows.push_back(parse_bits(line.text, line, source));
        if (rows.back().size() != rows.front().size()) {
            throw DimensionError(where(source, line.number) + "row has " + std::to_string(rows.back().size()) +
                                 " entries, expected " + std::to_string(rows.front().size()));
        }
    }
    std::size_t ncols = rows.front().size();
    return BitMatrix(std::move(rows), ncols);
}

BitMatrix read_matrix_file(const std::string &path) {
    std::ifstream in = open(path);
    return read_matrix(in, path);
}

std::vector<PauliOperator> read_paulis(std::istream &in, const std::string &source) {
    std::vector<PauliOperator> out;
    for (const auto &line : content_lines(in)) {
        try {
            out.push_back(parse_pauli_string(line.text));
        } catch (const ParseError &e) {
            throw ParseError(where(source, line.number) + e.what(), e.position);
        }
    }
    return out;
}

std::vector<PauliOperator> read_paulis_file(const std::string &path) {
    std::ifstream in = open(path);
    return read_paulis(in, path);
}

}  // namespace stabdisj

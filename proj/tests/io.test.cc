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

#include <sstream>

#include "gtest/gtest.h"

#include "stabdisj/errors.h"

using namespace stabdisj;

static StabilizerCode parse_code(const std::string &text) {
    std::istringstream in(text);
    return read_code(in, "mem");
}

template <typename E>
static std::string error_of(const std::string &text) {
    try {
        parse_code(text);
    } catch (const E &e) {
        return e.what();
    }
    return "";
}

TEST(io, code_round_trip) {
    StabilizerCode code = parse_code("# steane\n7 1\nIIIXXXX\nIXXIIXX\nXIXIXIX\n\nIIIZZZZ\nIZZIIZZ\nZIZIZIZ\n");
    ASSERT_EQ(code.n(), 7u);
    std::ostringstream out;
    write_code(out, code);
    ASSERT_EQ(parse_code(out.str()), code);
}

TEST(io, bit_rows) {
    StabilizerCode a = parse_code("2 0\n11|00\n00|11\n");
    StabilizerCode b = parse_code("2 0\nXX\nZZ\n");
    ASSERT_EQ(a, b);
}

TEST(io, errors_name_file_and_line) {
    ASSERT_NE(error_of<ParseError>("2 0\nXX\nZQ\n").find("mem:3:"), std::string::npos);
    ASSERT_NE(error_of<DimensionError>("2 0\nXX\nZZZ\n").find("mem:3:"), std::string::npos);
    ASSERT_NE(error_of<DimensionError>("3 0\nXXX\n").find("mem:1:"), std::string::npos);
    ASSERT_NE(error_of<ParseError>("two 0\n").find("mem:1:"), std::string::npos);
    ASSERT_NE(error_of<NonAbelian>("2 0\n# c\nXI\nZI\n").find("lines 3 and 4"), std::string::npos);
    ASSERT_NE(error_of<NotFullRank>("2 0\nXX\nXX\n").find("mem"), std::string::npos);
    ASSERT_NE(error_of<ParseError>("").find("empty"), std::string::npos);
}

TEST(io, graph_round_trip) {
    std::istringstream in("# triangle\n3\n0 1\n1 2\n0 2\n");
    Graph g = read_graph(in, "mem");
    ASSERT_EQ(g.num_vertices(), 3u);
    ASSERT_EQ(g.edges().size(), 3u);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream again(out.str());
    ASSERT_EQ(read_graph(again, "mem").edges(), g.edges());
}

TEST(io, graph_errors) {
    std::istringstream loop("3\n1 1\n");
    ASSERT_THROW(read_graph(loop, "mem"), InvalidGraph);
    std::istringstream range("3\n0 5\n");
    ASSERT_THROW(read_graph(range, "mem"), InvalidGraph);
    std::istringstream neg("3\n0 -1\n");
    ASSERT_THROW(read_graph(neg, "mem"), InvalidGraph);
    std::istringstream three("3\n0 1 2\n");
    ASSERT_THROW(read_graph(three, "mem"), ParseError);
}

TEST(io, matrix) {
    std::istringstream in("110\n0 1 1\n");
    ASSERT_EQ(read_matrix(in, "mem"), BitMatrix::from_strings({"110", "011"}));
    std::istringstream ragged("110\n01\n");
    ASSERT_THROW(read_matrix(ragged, "mem"), DimensionError);
    std::istringstream bad("120\n");
    ASSERT_THROW(read_matrix(bad, "mem"), ParseError);
}

TEST(io, paulis) {
    std::istringstream in("XXI\n# skip\nIZZ\n");
    std::vector<PauliOperator> ps = read_paulis(in, "mem");
    ASSERT_EQ(ps.size(), 2u);
    ASSERT_EQ(ps[1].str(), "IZZ");
    std::istringstream bad("XXI\nXAI\n");
    ASSERT_THROW(read_paulis(bad, "mem"), ParseError);
}

TEST(io, missing_file) {
    ASSERT_THROW(read_code_file("/nonexistent/code.txt"), InputError);
}

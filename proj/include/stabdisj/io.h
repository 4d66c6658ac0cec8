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


#ifndef STABDISJ_IO_H
#define STABDISJ_IO_H

#include <iosfwd>
#include <string>
#include <vector>

#include "stabdisj/gf2.h"
#include "stabdisj/pauli.h"
#include "stabdisj/reduction.h"

namespace stabdisj {

// Text formats. Blank lines and lines starting with '#' are skipped
// everywhere. Errors are ParseError or DimensionError whose message starts
// with "source:line:".

/// Line 1 "n k", then n - k generators, each a Pauli string of length n or
/// "x-bits|z-bits" with n bits on each side.
StabilizerCode read_code(std::istream &in, const std::string &source);
StabilizerCode read_code_file(const std::string &path);
void write_code(std::ostream &out, const StabilizerCode &code);

/// Line 1 the vertex count, then one "u v" edge per line, 0-indexed.
Graph read_graph(std::istream &in, const std::string &source);
Graph read_graph_file(const std::string &path);
void write_graph(std::ostream &out, const Graph &g);

/// One row of '0'/'1' characters per line; spaces inside a row are ignored.
BitMatrix read_matrix(std::istream &in, const std::string &source);
BitMatrix read_matrix_file(const std::string &path);

/// One Pauli string per line.
std::vector<PauliOperator> read_paulis(std::istream &in, const std::string &source);
std::vector<PauliOperator> read_paulis_file(const std::string &path);

}  // namespace stabdisj

#endif

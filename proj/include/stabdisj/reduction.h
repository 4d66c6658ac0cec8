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


#ifndef STABDISJ_REDUCTION_H
#define STABDISJ_REDUCTION_H

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabdisj/disjointness.h"
#include "stabdisj/pauli.h"
#include "stabdisj/rational.h"

namespace stabdisj {

inline constexpr std::size_t kDefaultQubitCap = 100000;
inline constexpr std::size_t kDefaultGraphCap = 64;

/// Simple undirected graph on vertices 0 .. num_vertices - 1. Edges keep
/// their input order, stored with the smaller endpoint first.
class Graph {
   public:
    Graph() = default;
    /// Throws InvalidGraph for out-of-range endpoints, self-loops or
    /// repeated edges.
    Graph(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>> &edges);

    std::size_t num_vertices() const {
        return n_;
    }
    const std::vector<std::pair<std::size_t, std::size_t>> &edges() const {
        return edges_;
    }
    std::size_t degree(std::size_t v) const {
        return adj_[v].size();
    }
    const std::vector<std::size_t> &neighbors(std::size_t v) const {
        return adj_[v];
    }
    bool adjacent(std::size_t u, std::size_t v) const;
    bool has_isolated_vertex() const;
    bool is_independent(const std::vector<std::size_t> &vertices) const;

   private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

struct QubitLabel {
    enum class Kind { kVertexSubset, kEdgeSubset, kVertexExtra };
    Kind kind = Kind::kVertexSubset;
    /// Vertex index, or edge index into Graph::edges().
    std::size_t index = 0;
    /// Sorted subset of c - 1 vertices; empty for extras.
    std::vector<std::size_t> nu;
    /// 1 or 2 for extras, 0 otherwise.
    std::size_t extra = 0;

    std::string str() const;
    bool operator==(const QubitLabel &other) const = default;
};

struct GraphCode {
    Graph graph;
    std::size_t c = 1;
    StabilizerCode code;
    LogicalClass logical;
    /// Qubit index -> label.
    std::vector<QubitLabel> labels;
    /// Support of X(v) for every vertex.
    std::vector<BitVector> vertex_supports;

    /// The X-type operator X(A) = prod_{v in A} X(v).
    PauliOperator x_of(const std::vector<std::size_t> &vertices) const;
};

/// Number of qubits the construction would use, saturating at SIZE_MAX.
std::size_t graph_code_size(const Graph &g, std::size_t c);

/// Throws InvalidC for c < 1 and TooLarge if the qubit count exceeds the cap.
GraphCode build_graph_code(const Graph &g, std::size_t c, std::size_t qubit_cap = kDefaultQubitCap);

struct IndependentSet {
    std::size_t alpha = 0;
    /// A maximum independent set, sorted.
    std::vector<std::size_t> witness;
};

/// Exact alpha(G) by branch and bound with greedy-coloring bounds. Throws
/// TooLarge if the graph has more vertices than the cap (at most 64).
IndependentSet independence_number(const Graph &g, std::size_t vertex_cap = kDefaultGraphCap);

/// Each vertex v becomes 2v and 2v + 1; each edge becomes four.
Graph double_graph(const Graph &g);

/// {X(v) : v in vs}, plus X(vs) when |vs| (c + 1) is odd. Throws
/// NotIndependent if vs is not an independent set.
DisjointCollection collection_from_independent_set(const GraphCode &gc, const std::vector<std::size_t> &vs);

struct Lemma3Options {
    /// Throw HypothesisNotMet instead of reporting non-binding results.
    bool strict = false;
    CDisjointnessOptions ilp;
    std::size_t qubit_cap = kDefaultQubitCap;
    std::size_t vertex_cap = kDefaultGraphCap;
};

struct Lemma3Record {
    std::size_t c = 1;
    std::size_t alpha = 0;
    std::size_t b = 0;
    /// c * Delta_c of the graph class.
    Rational lhs;
    /// alpha + b.
    Rational rhs;
    bool equal = false;
    bool no_isolated_vertices = false;
    bool alpha_large_enough = false;
    bool hypothesis_met = false;
    DisjointCollection collection;
};

/// Compares c * Delta_c(L^G_c) with alpha(G) + (alpha(G) (c + 1) mod 2).
Lemma3Record verify_lemma3(const Graph &g, std::size_t c, const Lemma3Options &options = {});

struct ErrorDetectingResult {
    /// True iff every single-qubit X, Y and Z anticommutes with a generator.
    bool detecting = false;
    /// |V| >= c + 2.
    bool precondition_met = false;
    /// First undetected single-qubit error, if any.
    std::optional<std::pair<std::size_t, char>> undetected;
};

ErrorDetectingResult error_detecting_check(const GraphCode &gc);

}  // namespace stabdisj

#endif

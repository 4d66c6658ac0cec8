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


#include "stabdisj/reduction.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>

#include "stabdisj/errors.h"

namespace stabdisj {

Graph::Graph(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>> &edges)
    : n_(num_vertices), adj_(num_vertices) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < edges.size(); i++) {
        auto [u, v] = edges[i];
        if (u >= n_ || v >= n_) {
            throw InvalidGraph("edge " + std::to_string(i) + " (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
        }
        if (u == v) {
            throw InvalidGraph("edge " + std::to_string(i) + " is a self-loop on vertex " + std::to_string(u));
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            throw InvalidGraph("edge " + std::to_string(i) + " (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") is repeated");
        }
        edges_.emplace_back(key.first, key.second);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
}

bool Graph::has_isolated_vertex() const {
    for (const auto &a : adj_) {
        if (a.empty()) {
            return true;
        }
    }
    return false;
}

bool Graph::is_independent(const std::vector<std::size_t> &vertices) const {
    std::set<std::size_t> seen;
    for (std::size_t v : vertices) {
        if (v >= n_ || !seen.insert(v).second) {
            return false;
        }
    }
    for (std::size_t i = 0; i < vertices.size(); i++) {
        for (std::size_t j = i + 1; j < vertices.size(); j++) {
            if (adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

std::string QubitLabel::str() const {
    std::string s = "(";
    switch (kind) {
        case Kind::kVertexSubset:
        case Kind::kVertexExtra:
            s += "v" + std::to_string(index);
            break;
        case Kind::kEdgeSubset:
            s += "e" + std::to_string(index);
            break;
    }
    if (kind == Kind::kVertexExtra) {
        return s + "," + std::to_string(extra) + ")";
    }
    s += ",{";
    for (std::size_t i = 0; i < nu.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(nu[i]);
    }
    return s + "})";
}

PauliOperator GraphCode::x_of(const std::vector<std::size_t> &vertices) const {
    BitVector x(code.n());
    for (std::size_t v : vertices) {
        x ^= vertex_supports.at(v);
    }
    return PauliOperator::from_xz(x, BitVector(code.n()));
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > kSaturated / a) {
        return kSaturated;
    }
    return a * b;
}

std::size_t binomial(std::size_t n, std::size_t r) {
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    std::size_t acc = 1;
    for (std::size_t i = 1; i <= r; i++) {
        // acc * (n - r + i) / i is exact at every step.
        std::size_t g = std::gcd(acc, i);
        std::size_t num = (n - r + i) / (i / g);
        acc = sat_mul(acc / g, num);
        if (acc == kSaturated) {
            return kSaturated;
        }
    }
    return acc;
}

std::size_t extras_for(std::size_t subsets, std::size_t degree) {
    // Parity of binom * (deg + 1) only needs the low bits.
    return ((subsets & 1) && ((degree + 1) & 1)) ? 1 : 2;
}

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) {
        return out;
    }
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; i++) {
        cur[i] = i;
    }
    while (true) {
        out.push_back(cur);
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + i - 1) {
            i--;
        }
        if (i == 0) {
            return out;
        }
        cur[i - 1]++;
        for (std::size_t j = i; j < r; j++) {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

}  // namespace

std::size_t graph_code_size(const Graph &g, std::size_t c) {
    if (c < 1) {
        throw InvalidC("c must be a positive integer, got " + std::to_string(c));
    }
    std::size_t per = binomial(g.num_vertices(), c - 1);
    std::size_t n = sat_mul(per, sat_add(g.num_vertices(), g.edges().size()));
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        n = sat_add(n, extras_for(per, g.degree(v)));
    }
    return n;
}

GraphCode build_graph_code(const Graph &g, std::size_t c, std::size_t qubit_cap) {
    std::size_t n = graph_code_size(g, c);
    if (g.num_vertices() == 0) {
        throw InvalidGraph("graph has no vertices");
    }
    if (n > qubit_cap) {
        throw TooLarge("graph code would use " + (n == kSaturated ? std::string("too many") : std::to_string(n)) +
                       " qubits, above the cap " + std::to_string(qubit_cap));
    }
    std::size_t nv = g.num_vertices();
    std::vector<std::vector<std::size_t>> nus = subsets(nv, c - 1);
    std::vector<QubitLabel> labels;
    labels.reserve(n);
    std::vector<BitVector> support(nv, BitVector(n));
    for (std::size_t v = 0; v < nv; v++) {
        for (const auto &nu : nus) {
            support[v].set(labels.size());
            labels.push_back({QubitLabel::Kind::kVertexSubset, v, nu, 0});
        }
    }
    for (std::size_t e = 0; e < g.edges().size(); e++) {
        auto [u, v] = g.edges()[e];
        for (const auto &nu : nus) {
            support[u].set(labels.size());
            support[v].set(labels.size());
            labels.push_back({QubitLabel::Kind::kEdgeSubset, e, nu, 0});
        }
    }
    for (std::size_t v = 0; v < nv; v++) {
        std::size_t count = extras_for(nus.size(), g.degree(v));
        for (std::size_t i = 1; i <= count; i++) {
            support[v].set(labels.size());
            labels.push_back({QubitLabel::Kind::kVertexExtra, v, {}, i});
        }
    }

    BitMatrix checks(0, 2 * n);
    BitVector zero(n);
    for (std::size_t j = 1; j < nv; j++) {
        checks.append_row(BitVector::concat(support[0] ^ support[j], zero));
    }
    BitVector ones(n);
    for (std::size_t q = 0; q < n; q++) {
        ones.set(q);
    }
    checks.append_row(BitVector::concat(zero, ones));
    StabilizerCode code = validate(std::move(checks));
    PauliOperator rep = PauliOperator::from_xz(support[0], zero);
    LogicalClass logical(code, rep);
    return GraphCode{g, c, std::move(code), std::move(logical), std::move(labels), std::move(support)};
}

namespace {

class MaxIndependentSet {
   public:
    explicit MaxIndependentSet(const Graph &g) : n_(g.num_vertices()), comp_(n_, 0) {
        uint64_t all = n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
        for (std::size_t v = 0; v < n_; v++) {
            uint64_t adj = 0;
            for (std::size_t u : g.neighbors(v)) {
                adj |= uint64_t{1} << u;
            }
            comp_[v] = all & ~adj & ~(uint64_t{1} << v);
        }
        all_ = all;
    }

    IndependentSet run() {
        expand(0, all_);
        IndependentSet out;
        out.alpha = best_size_;
        for (std::size_t v = 0; v < n_; v++) {
            if ((best_ >> v) & 1) {
                out.witness.push_back(v);
            }
        }
        return out;
    }

   private:
    // Cliques in the complement are independent sets in the graph.
    void expand(uint64_t chosen, uint64_t candidates) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> color;
        color_sort(candidates, order, color);
        std::size_t size = static_cast<std::size_t>(std::popcount(chosen));
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + color[i] <= best_size_) {
                return;
            }
            std::size_t v = order[i];
            uint64_t bit = uint64_t{1} << v;
            uint64_t next = candidates & comp_[v];
            if (next == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = chosen | bit;
                }
            } else {
                expand(chosen | bit, next);
            }
            candidates &= ~bit;
        }
    }

    // Greedy coloring of the candidates in the complement graph; color[i]
    // bounds the clique size among order[0..i].
    void color_sort(uint64_t candidates, std::vector<std::size_t> &order, std::vector<std::size_t> &color) const {
        uint64_t uncolored = candidates;
        std::size_t k = 0;
        while (uncolored) {
            k++;
            uint64_t available = uncolored;
            while (available) {
                std::size_t v = static_cast<std::size_t>(std::countr_zero(available));
                uint64_t bit = uint64_t{1} << v;
                uncolored &= ~bit;
                available &= ~bit & ~comp_[v];
                order.push_back(v);
                color.push_back(k);
            }
        }
    }

    std::size_t n_;
    std::vector<uint64_t> comp_;
    uint64_t all_ = 0;
    std::size_t best_size_ = 0;
    uint64_t best_ = 0;
};

}  // namespace

IndependentSet independence_number(const Graph &g, std::size_t vertex_cap) {
    std::size_t cap = std::min<std::size_t>(vertex_cap, 64);
    if (g.num_vertices() > cap) {
        throw TooLarge("independence number search limited to " + std::to_string(cap) + " vertices, graph has " +
                       std::to_string(g.num_vertices()));
    }
    if (g.num_vertices() == 0) {
        return {};
    }
    MaxIndependentSet search(g);
    return search.run();
}

Graph double_graph(const Graph &g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(4 * g.edges().size());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(2 * u, 2 * v);
        edges.emplace_back(2 * u, 2 * v + 1);
        edges.emplace_back(2 * u + 1, 2 * v);
        edges.emplace_back(2 * u + 1, 2 * v + 1);
    }
    return Graph(2 * g.num_vertices(), edges);
}

DisjointCollection collection_from_independent_set(const GraphCode &gc, const std::vector<std::size_t> &vs) {
    if (!gc.graph.is_independent(vs)) {
        throw NotIndependent("vertex set is not an independent set of the graph");
    }
    DisjointCollection col;
    col.c = gc.c;
    for (std::size_t v : vs) {
        col.members.push_back(gc.x_of({v}));
    }
    if ((vs.size() * (gc.c + 1)) % 2 == 1) {
        col.members.push_back(gc.x_of(vs));
    }
    return col;
}

Lemma3Record verify_lemma3(const Graph &g, std::size_t c, const Lemma3Options &options) {
    if (c < 1) {
        throw InvalidC("c must be a positive integer, got " + std::to_string(c));
    }
    Lemma3Record rec;
    rec.c = c;
    IndependentSet is = independence_number(g, options.vertex_cap);
    rec.alpha = is.alpha;
    rec.b = (rec.alpha * (c + 1)) % 2;
    rec.no_isolated_vertices = !g.has_isolated_vertex();
    // alpha >= 9 c^3 / 2.
    rec.alpha_large_enough = 2 * rec.alpha >= 9 * c * c * c;
    rec.hypothesis_met = rec.no_isolated_vertices && rec.alpha_large_enough;
    if (!rec.hypothesis_met && options.strict) {
        throw HypothesisNotMet(std::string("lemma hypothesis fails: ") +
                               (rec.no_isolated_vertices ? "" : "graph has an isolated vertex; ") + "alpha = " +
                               std::to_string(rec.alpha) + ", need 2 alpha >= 9 c^3 = " + std::to_string(9 * c * c * c));
    }
    GraphCode gc = build_graph_code(g, c, options.qubit_cap);
    CDisjointness cd = c_disjointness_detail(gc.logical, c, options.ilp);
    rec.lhs = cd.value * static_cast<unsigned long>(c);
    rec.rhs = static_cast<unsigned long>(rec.alpha + rec.b);
    rec.equal = rec.lhs == rec.rhs;
    rec.collection = std::move(cd.collection);
    return rec;
}

ErrorDetectingResult error_detecting_check(const GraphCode &gc) {
    ErrorDetectingResult res;
    res.precondition_met = gc.graph.num_vertices() >= gc.c + 2;
    std::size_t n = gc.code.n();
    for (std::size_t q = 0; q < n; q++) {
        for (char p : {'X', 'Y', 'Z'}) {
            PauliOperator e(n);
            e.set(q, p);
            if (gc.code.commutes_with_all(e)) {
                res.undetected = std::make_pair(q, p);
                return res;
            }
        }
    }
    res.detecting = true;
    return res;
}

}  // namespace stabdisj

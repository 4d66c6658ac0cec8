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


#ifndef STABDISJ_TESTS_ORACLES_H
#define STABDISJ_TESTS_ORACLES_H

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stabdisj/gf2.h"
#include "stabdisj/pauli.h"
#include "stabdisj/rational.h"
#include "stabdisj/reduction.h"

// Brute-force reference implementations on machine words. Nothing here calls
// into the library except to convert inputs.
namespace oracle {

using Mask = uint64_t;

inline Mask to_mask(const stabdisj::BitVector &v) {
    Mask m = 0;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (v.get(i)) {
            m |= Mask{1} << i;
        }
    }
    return m;
}

inline Mask to_mask(const stabdisj::PauliOperator &p) {
    return to_mask(p.vec());
}

inline stabdisj::PauliOperator to_pauli(Mask m, std::size_t n) {
    stabdisj::BitVector v(2 * n);
    for (std::size_t i = 0; i < 2 * n; i++) {
        v.set(i, (m >> i) & 1);
    }
    return stabdisj::PauliOperator(v);
}

inline Mask support(Mask p, std::size_t n) {
    Mask low = (Mask{1} << n) - 1;
    return (p & low) | (p >> n);
}

inline bool anticommute(Mask a, Mask b, std::size_t n) {
    Mask low = (Mask{1} << n) - 1;
    return (std::popcount((a & low) & (b >> n)) + std::popcount((a >> n) & (b & low))) & 1;
}

inline std::size_t rank(std::vector<Mask> rows) {
    std::size_t r = 0;
    for (std::size_t bit = 0; bit < 64; bit++) {
        Mask m = Mask{1} << bit;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(), [&](Mask x) { return x & m; });
        if (it == rows.end()) {
            continue;
        }
        std::swap(rows[r], *it);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != r && (rows[i] & m)) {
                rows[i] ^= rows[r];
            }
        }
        r++;
    }
    return r;
}

inline std::vector<Mask> generator_masks(const stabdisj::StabilizerCode &code) {
    std::vector<Mask> out;
    for (const auto &r : code.checks().rows()) {
        out.push_back(to_mask(r));
    }
    return out;
}

/// All 2^r products of the generators, by subset.
inline std::vector<Mask> group(const std::vector<Mask> &gens) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << gens.size()); s++) {
        Mask p = 0;
        for (std::size_t i = 0; i < gens.size(); i++) {
            if ((s >> i) & 1) {
                p ^= gens[i];
            }
        }
        out.push_back(p);
    }
    return out;
}

inline std::vector<Mask> coset_supports(Mask rep, const std::vector<Mask> &gens, std::size_t n) {
    std::vector<Mask> out;
    for (Mask g : group(gens)) {
        out.push_back(support(rep ^ g, n));
    }
    return out;
}

inline std::size_t distance(Mask rep, const std::vector<Mask> &gens, std::size_t n) {
    std::size_t best = n + 1;
    for (Mask s : coset_supports(rep, gens, n)) {
        best = std::min<std::size_t>(best, std::popcount(s));
    }
    return best;
}

/// Distinct supports with no proper subset among the others.
inline std::vector<Mask> minimal_supports(std::vector<Mask> supports) {
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<Mask> out;
    for (Mask s : supports) {
        bool minimal = true;
        for (Mask t : supports) {
            if (t != s && (t & s) == t) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(s);
        }
    }
    return out;
}

/// Largest multiset of the given supports covering each of n qubits at most c times.
inline std::size_t max_packing(const std::vector<Mask> &all_supports, std::size_t n, std::size_t c) {
    std::vector<Mask> sets = minimal_supports(all_supports);
    std::vector<std::size_t> load(n, 0);
    std::size_t best = 0;
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t i, std::size_t count) {
        best = std::max(best, count);
        if (i == sets.size()) {
            return;
        }
        std::size_t spare = 0;
        for (std::size_t q = 0; q < n; q++) {
            spare += c - load[q];
        }
        std::size_t min_size = n;
        for (std::size_t j = i; j < sets.size(); j++) {
            min_size = std::min<std::size_t>(min_size, std::popcount(sets[j]));
        }
        if (min_size == 0 || count + spare / min_size <= best) {
            return;
        }
        std::size_t fit = c;
        for (std::size_t q = 0; q < n; q++) {
            if ((sets[i] >> q) & 1) {
                fit = std::min(fit, c - load[q]);
            }
        }
        for (std::size_t t = fit + 1; t-- > 0;) {
            for (std::size_t q = 0; q < n; q++) {
                if ((sets[i] >> q) & 1) {
                    load[q] += t;
                }
            }
            dfs(i + 1, count + t);
            for (std::size_t q = 0; q < n; q++) {
                if ((sets[i] >> q) & 1) {
                    load[q] -= t;
                }
            }
        }
    };
    dfs(0, 0);
    return best;
}

/// Every qubit carries total weight at most one.
inline bool packing_feasible(
    const std::vector<stabdisj::Rational> &x, const std::vector<Mask> &supports, std::size_t n) {
    if (x.size() != supports.size()) {
        return false;
    }
    for (std::size_t q = 0; q < n; q++) {
        stabdisj::Rational load = 0;
        for (std::size_t i = 0; i < x.size(); i++) {
            if (x[i] < 0) {
                return false;
            }
            if ((supports[i] >> q) & 1) {
                load += x[i];
            }
        }
        if (load > 1) {
            return false;
        }
    }
    return true;
}

/// Every support carries total weight at least one.
inline bool cover_feasible(const std::vector<stabdisj::Rational> &y, const std::vector<Mask> &supports) {
    for (const auto &v : y) {
        if (v < 0) {
            return false;
        }
    }
    for (Mask s : supports) {
        stabdisj::Rational total = 0;
        for (std::size_t q = 0; q < y.size(); q++) {
            if ((s >> q) & 1) {
                total += y[q];
            }
        }
        if (total < 1) {
            return false;
        }
    }
    return true;
}

inline std::size_t brute_alpha(const stabdisj::Graph &g) {
    std::size_t nv = g.num_vertices();
    std::size_t best = 0;
    for (Mask s = 0; s < (Mask{1} << nv); s++) {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (((s >> u) & 1) && ((s >> v) & 1)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            best = std::max<std::size_t>(best, std::popcount(s));
        }
    }
    return best;
}

struct CollectionCheck {
    bool members_ok = true;
    bool loads_ok = true;
    bool valid() const {
        return members_ok && loads_ok;
    }
};

/// Membership by comparing against every element of the coset.
inline CollectionCheck check_collection(
    const std::vector<Mask> &members, Mask rep, const std::vector<Mask> &gens, std::size_t n, std::size_t c) {
    CollectionCheck out;
    std::vector<Mask> coset;
    for (Mask g : group(gens)) {
        coset.push_back(rep ^ g);
    }
    std::vector<std::size_t> load(n, 0);
    for (Mask m : members) {
        if (std::find(coset.begin(), coset.end(), m) == coset.end()) {
            out.members_ok = false;
        }
        Mask s = support(m, n);
        for (std::size_t q = 0; q < n; q++) {
            if ((s >> q) & 1) {
                load[q]++;
            }
        }
    }
    for (std::size_t q = 0; q < n; q++) {
        if (load[q] > c) {
            out.loads_ok = false;
        }
    }
    return out;
}

/// Random full-rank commuting generators on n qubits with n - k rows.
inline std::vector<Mask> random_stabilizer(std::mt19937_64 &rng, std::size_t n, std::size_t k) {
    std::vector<Mask> gens;
    Mask all = (Mask{1} << (2 * n)) - 1;
    while (gens.size() < n - k) {
        Mask v = rng() & all;
        if (v == 0) {
            continue;
        }
        bool ok = true;
        for (Mask g : gens) {
            if (anticommute(v, g, n)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        std::vector<Mask> trial = gens;
        trial.push_back(v);
        if (rank(trial) == trial.size()) {
            gens.push_back(v);
        }
    }
    return gens;
}

inline stabdisj::StabilizerCode to_code(const std::vector<Mask> &gens, std::size_t n) {
    std::vector<stabdisj::PauliOperator> ops;
    for (Mask g : gens) {
        ops.push_back(to_pauli(g, n));
    }
    return stabdisj::validate(ops);
}

inline stabdisj::StabilizerCode random_code(std::mt19937_64 &rng, std::size_t n, std::size_t k) {
    return to_code(random_stabilizer(rng, n, k), n);
}

/// Random graph on nv vertices with no isolated vertex.
inline stabdisj::Graph random_graph(std::mt19937_64 &rng, std::size_t nv, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<bool> touched(nv, false);
    for (std::size_t u = 0; u < nv; u++) {
        for (std::size_t v = u + 1; v < nv; v++) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
                touched[u] = touched[v] = true;
            }
        }
    }
    for (std::size_t u = 0; u < nv; u++) {
        if (!touched[u]) {
            std::size_t v = (u + 1 + rng() % (nv - 1)) % nv;
            auto e = std::minmax(u, v);
            if (std::find(edges.begin(), edges.end(), std::pair<std::size_t, std::size_t>(e.first, e.second)) ==
                edges.end()) {
                edges.emplace_back(e.first, e.second);
            }
            touched[u] = touched[v] = true;
        }
    }
    return stabdisj::Graph(nv, edges);
}

/// Solves the square system a x = b exactly; empty if singular.
inline std::optional<std::vector<stabdisj::Rational>> solve_square(
    std::vector<std::vector<stabdisj::Rational>> a, std::vector<stabdisj::Rational> b) {
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; col++) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) {
            piv++;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; r++) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            stabdisj::Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; j++) {
                a[r][j] -= f * a[col][j];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<stabdisj::Rational> x(n);
    for (std::size_t i = 0; i < n; i++) {
        x[i] = b[i] / a[i][i];
    }
    return x;
}

/// max c.x over {x >= 0, a x <= b} by enumerating basic solutions. Empty when
/// no vertex is feasible. Only for a handful of variables.
inline std::optional<stabdisj::Rational> vertex_max(
    const std::vector<std::vector<stabdisj::Rational>> &a, const std::vector<stabdisj::Rational> &b,
    const std::vector<stabdisj::Rational> &c) {
    std::size_t nv = c.size();
    std::size_t m = a.size();
    std::vector<std::vector<stabdisj::Rational>> rows = a;
    std::vector<stabdisj::Rational> rhs = b;
    for (std::size_t j = 0; j < nv; j++) {
        std::vector<stabdisj::Rational> e(nv);
        e[j] = -1;
        rows.push_back(e);
        rhs.push_back(0);
    }
    std::size_t total = m + nv;
    std::optional<stabdisj::Rational> best;
    for (Mask s = 0; s < (Mask{1} << total); s++) {
        if (static_cast<std::size_t>(std::popcount(s)) != nv) {
            continue;
        }
        std::vector<std::vector<stabdisj::Rational>> sa;
        std::vector<stabdisj::Rational> sb;
        for (std::size_t i = 0; i < total; i++) {
            if ((s >> i) & 1) {
                sa.push_back(rows[i]);
                sb.push_back(rhs[i]);
            }
        }
        auto x = solve_square(sa, sb);
        if (!x) {
            continue;
        }
        bool feasible = true;
        for (std::size_t i = 0; i < total && feasible; i++) {
            stabdisj::Rational lhs = 0;
            for (std::size_t j = 0; j < nv; j++) {
                lhs += rows[i][j] * (*x)[j];
            }
            feasible = lhs <= rhs[i];
        }
        if (!feasible) {
            continue;
        }
        stabdisj::Rational v = 0;
        for (std::size_t j = 0; j < nv; j++) {
            v += c[j] * (*x)[j];
        }
        if (!best || v > *best) {
            best = v;
        }
    }
    return best;
}

}  // namespace oracle

#endif

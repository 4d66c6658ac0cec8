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


#include "stabdisj/hierarchy.h"

#include <algorithm>

#include "stabdisj/disjointness.h"
#include "stabdisj/errors.h"
#include "stabdisj/logical.h"

namespace stabdisj {

LevelBound level_bound(std::size_t d_down, std::size_t d_up, const Rational &delta) {
    if (d_down <= 1) {
        throw BoundInapplicable("level bound needs d_down > 1, got " + std::to_string(d_down));
    }
    if (delta <= 1) {
        throw BoundInapplicable("level bound needs disjointness > 1, got " + pretty(delta));
    }
    if (d_up < d_down) {
        throw BoundInapplicable("d_up " + std::to_string(d_up) + " is below d_down " + std::to_string(d_down));
    }
    Rational ratio(static_cast<unsigned long>(d_up), static_cast<unsigned long>(d_down));
    ratio.canonicalize();
    long t = 0;
    Rational power = delta;
    while (power <= ratio) {
        t++;
        power *= delta;
    }
    return {t + 2, d_down, d_up, delta};
}

namespace {

struct ClassSupports {
    ClassLabel label;
    std::vector<BitVector> supports;
    std::vector<PauliOperator> reps;
    std::size_t distance = 0;
    Rational delta;
};

uint64_t multiset_count(uint64_t n, uint64_t m, uint64_t cap) {
    // binom(n + m - 1, m), saturating just above cap.
    long double acc = 1;
    for (uint64_t i = 1; i <= m; i++) {
        acc = acc * static_cast<long double>(n + m - i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(cap)) {
            return cap + 1;
        }
    }
    return static_cast<uint64_t>(acc + 0.5L);
}

class OmegaSearch {
   public:
    OmegaSearch(std::vector<ClassSupports> classes, std::size_t m, std::size_t n, bool prune)
        : classes_(std::move(classes)), m_(m), n_(n), prune_(prune) {
    }

    OmegaReport run() {
        OmegaReport report;
        report.m = m_;
        if (classes_.empty() || m_ == 0) {
            return report;
        }
        std::vector<std::size_t> tuple(m_, 0);
        while (true) {
            report.tuples++;
            if (prune_ && best_ >= 0 && pair_bound(tuple) <= best_) {
                report.pruned++;
            } else {
                evaluate(tuple);
            }
            // Next non-decreasing tuple.
            std::size_t pos = m_;
            while (pos > 0 && tuple[pos - 1] == classes_.size() - 1) {
                pos--;
            }
            if (pos == 0) {
                break;
            }
            tuple[pos - 1]++;
            for (std::size_t i = pos; i < m_; i++) {
                tuple[i] = tuple[pos - 1];
            }
        }
        report.value = static_cast<std::size_t>(best_);
        for (std::size_t i = 0; i < m_; i++) {
            report.witness_labels.push_back(classes_[best_tuple_[i]].label);
            report.witness_reps.push_back(classes_[best_tuple_[i]].reps[best_choice_[i]]);
        }
        return report;
    }

   private:
    long pair_bound(const std::vector<std::size_t> &tuple) const {
        long ub = static_cast<long>(n_);
        for (std::size_t a = 0; a < m_; a++) {
            for (std::size_t b = 0; b < m_; b++) {
                if (a == b) {
                    continue;
                }
                const ClassSupports &ca = classes_[tuple[a]];
                const ClassSupports &cb = classes_[tuple[b]];
                Rational q = Rational(static_cast<unsigned long>(cb.distance)) / ca.delta;
                ub = std::min(ub, to_long(floor(q)));
            }
        }
        return ub;
    }

    // Exact minimum for the tuple unless it provably cannot exceed best_.
    void evaluate(const std::vector<std::size_t> &tuple) {
        tuple_ = &tuple;
        tuple_min_ = static_cast<long>(n_) + 1;
        choice_.assign(m_, 0);
        stop_ = false;
        BitVector all(n_);
        for (std::size_t q = 0; q < n_; q++) {
            all.set(q);
        }
        dfs(0, all);
        if (!stop_ && tuple_min_ > best_) {
            best_ = tuple_min_;
            best_tuple_ = tuple;
            best_choice_ = tuple_choice_;
        }
    }

    void dfs(std::size_t depth, const BitVector &acc) {
        if (stop_) {
            return;
        }
        if (depth == m_) {
            long size = static_cast<long>(acc.popcount());
            if (size < tuple_min_) {
                tuple_min_ = size;
                tuple_choice_ = choice_;
                stop_ = size <= best_;
            }
            return;
        }
        const ClassSupports &cls = classes_[(*tuple_)[depth]];
        for (std::size_t i = 0; i < cls.supports.size() && !stop_; i++) {
            choice_[depth] = i;
            dfs(depth + 1, acc & cls.supports[i]);
            if (tuple_min_ == 0) {
                return;
            }
        }
    }

    std::vector<ClassSupports> classes_;
    std::size_t m_;
    std::size_t n_;
    bool prune_;
    long best_ = -1;
    std::vector<std::size_t> best_tuple_;
    std::vector<std::size_t> best_choice_;

    const std::vector<std::size_t> *tuple_ = nullptr;
    long tuple_min_ = 0;
    bool stop_ = false;
    std::vector<std::size_t> choice_;
    std::vector<std::size_t> tuple_choice_;
};

}  // namespace

OmegaReport omega(const StabilizerCode &code, const LogicalBasis &basis, std::size_t m, const OmegaOptions &options) {
    if (m < 1) {
        throw DimensionError("omega needs M >= 1");
    }
    check_coset_cap(code, options.coset_cap_log2);
    std::vector<ClassLabel> labels = nontrivial_labels(basis.k());
    if (multiset_count(labels.size(), m, options.max_tuples) > options.max_tuples) {
        throw TooLarge("omega with M = " + std::to_string(m) + " over " + std::to_string(labels.size()) +
                       " classes exceeds the tuple cap " + std::to_string(options.max_tuples));
    }
    std::vector<ClassSupports> classes;
    for (const auto &label : labels) {
        LogicalClass cls = class_from_label(code, basis, label);
        std::vector<PauliOperator> reps = enumerate_class(cls, options.coset_cap_log2);
        std::vector<BitVector> supports;
        supports.reserve(reps.size());
        for (const auto &p : reps) {
            supports.push_back(p.support());
        }
        ClassSupports entry;
        entry.label = label;
        entry.distance = code.n();
        for (std::size_t i : minimal_support_indices(supports)) {
            entry.distance = std::min(entry.distance, supports[i].popcount());
            entry.supports.push_back(supports[i]);
            entry.reps.push_back(reps[i]);
        }
        if (options.prune) {
            DisjointnessOptions dopt;
            dopt.coset_cap_log2 = options.coset_cap_log2;
            dopt.reduce_dominated = true;
            entry.delta = delta_star(cls, dopt).value;
        }
        classes.push_back(std::move(entry));
    }
    OmegaSearch search(std::move(classes), m, code.n(), options.prune);
    return search.run();
}

TransversalCertificate transversal_level_certificate(
    const StabilizerCode &code, const LogicalBasis &basis, std::size_t m, const OmegaOptions &options) {
    TransversalCertificate cert;
    EnumerationOptions eopt;
    eopt.coset_cap_log2 = options.coset_cap_log2;
    cert.d_down = distance_report(code, basis, eopt).d_min;
    cert.report = omega(code, basis, m, options);
    cert.omega = cert.report.value;
    cert.certified = cert.omega < cert.d_down;
    return cert;
}

}  // namespace stabdisj

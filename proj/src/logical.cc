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


#include "stabdisj/logical.h"

#include <algorithm>

#include "stabdisj/errors.h"
#include "stabdisj/parallel.h"

namespace stabdisj {

std::pair<std::size_t, PauliOperator> class_distance_with_witness(
    const LogicalClass &cls, std::size_t coset_cap_log2) {
    if (cls.is_trivial()) {
        throw TrivialClass();
    }
    std::size_t best = cls.code().n() + 1;
    PauliOperator witness;
    for_each_representative(
        cls,
        [&](const PauliOperator &p) {
            std::size_t w = p.weight();
            if (w < best) {
                best = w;
                witness = p;
            }
        },
        coset_cap_log2);
    return {best, witness};
}

std::size_t class_distance(const LogicalClass &cls, std::size_t coset_cap_log2) {
    if (cls.is_trivial()) {
        throw TrivialClass();
    }
    std::size_t best = cls.code().n();
    for (const auto &s : class_supports(cls, coset_cap_log2)) {
        best = std::min(best, s.popcount());
    }
    return best;
}

DistanceReport distance_report(const StabilizerCode &code, const LogicalBasis &basis, const EnumerationOptions &options) {
    check_coset_cap(code, options.coset_cap_log2);
    std::vector<ClassLabel> labels = nontrivial_labels(basis.k());
    DistanceReport report;
    report.per_class.resize(labels.size());
    parallel_for(labels.size(), options.threads, [&](std::size_t i) {
        LogicalClass cls = class_from_label(code, basis, labels[i]);
        auto [d, w] = class_distance_with_witness(cls, options.coset_cap_log2);
        report.per_class[i] = {labels[i], d, std::move(w)};
    });
    if (!report.per_class.empty()) {
        report.d_min = code.n();
        for (const auto &c : report.per_class) {
            report.d_min = std::min(report.d_min, c.distance);
            report.d_max = std::max(report.d_max, c.distance);
        }
    }
    return report;
}

}  // namespace stabdisj

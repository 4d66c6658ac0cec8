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


#ifndef STABDISJ_LOGICAL_H
#define STABDISJ_LOGICAL_H

#include <cstddef>
#include <utility>
#include <vector>

#include "stabdisj/pauli.h"

namespace stabdisj {

struct ClassDistance {
    ClassLabel label;
    std::size_t distance = 0;
    /// A minimum-weight representative.
    PauliOperator witness;
};

struct DistanceReport {
    std::size_t d_min = 0;
    std::size_t d_max = 0;
    /// One entry per non-trivial class, in increasing label order.
    std::vector<ClassDistance> per_class;
};

struct EnumerationOptions {
    std::size_t coset_cap_log2 = kDefaultCosetCapLog2;
    std::size_t threads = 1;
};

/// Smallest support over all representatives. Throws TrivialClass for the
/// identity class.
std::size_t class_distance(const LogicalClass &cls, std::size_t coset_cap_log2 = kDefaultCosetCapLog2);

/// As class_distance, also returning the first minimum-weight representative
/// in enumeration order.
std::pair<std::size_t, PauliOperator> class_distance_with_witness(
    const LogicalClass &cls, std::size_t coset_cap_log2 = kDefaultCosetCapLog2);

/// d(L) for every non-trivial class spanned by the basis, with its min and max.
DistanceReport distance_report(
    const StabilizerCode &code, const LogicalBasis &basis, const EnumerationOptions &options = {});

}  // namespace stabdisj

#endif

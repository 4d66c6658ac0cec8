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


#ifndef STABDISJ_HIERARCHY_H
#define STABDISJ_HIERARCHY_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stabdisj/pauli.h"
#include "stabdisj/rational.h"

namespace stabdisj {

struct LevelBound {
    long m_max = 0;
    std::size_t d_down = 0;
    std::size_t d_up = 0;
    Rational delta;
};

/// floor(log_delta(d_up / d_down)) + 2, computed as the largest t with
/// delta^t <= d_up / d_down, plus 2. Throws BoundInapplicable if d_down <= 1,
/// delta <= 1 or d_up < d_down.
LevelBound level_bound(std::size_t d_down, std::size_t d_up, const Rational &delta);

struct OmegaOptions {
    std::size_t coset_cap_log2 = kDefaultCosetCapLog2;
    /// Skip tuples whose pairwise overlap bound floor(d(b) / delta*(a))
    /// cannot beat the running maximum.
    bool prune = false;
    /// Cap on the number of class multisets examined.
    uint64_t max_tuples = 50'000'000;
};

struct OmegaReport {
    std::size_t m = 0;
    std::size_t value = 0;
    /// The maximizing tuple of classes, non-decreasing labels.
    std::vector<ClassLabel> witness_labels;
    /// Representatives of those classes attaining the minimum intersection.
    std::vector<PauliOperator> witness_reps;
    uint64_t tuples = 0;
    uint64_t pruned = 0;
};

/// Max over M-tuples of non-trivial classes of the min over representative
/// choices of the common support size. Throws TooLarge past the tuple cap.
OmegaReport omega(const StabilizerCode &code, const LogicalBasis &basis, std::size_t m, const OmegaOptions &options = {});

struct TransversalCertificate {
    bool certified = false;
    std::size_t omega = 0;
    std::size_t d_down = 0;
    OmegaReport report;
};

/// Omega_M < d_down. When true, every transversal logical gate lies in level M.
TransversalCertificate transversal_level_certificate(
    const StabilizerCode &code, const LogicalBasis &basis, std::size_t m, const OmegaOptions &options = {});

}  // namespace stabdisj

#endif

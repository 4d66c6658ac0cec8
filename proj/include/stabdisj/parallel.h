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


#ifndef STABDISJ_PARALLEL_H
#define STABDISJ_PARALLEL_H

#include <cstddef>
#include <functional>

namespace stabdisj {

/// Calls body(i) for i in [0, count) on up to `threads` workers. Indices are
/// handed out in increasing order; callers store results by index so the
/// outcome does not depend on scheduling. The first exception is rethrown
/// after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &body);

}  // namespace stabdisj

#endif

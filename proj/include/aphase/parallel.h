// Copyright 2026 The aphase Authors
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

#ifndef APHASE_PARALLEL_H
#define APHASE_PARALLEL_H

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aphase {

/// Worker count for an OpenMP region; 0 picks the runtime default.
inline int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace aphase

#endif

// Copyright (c) the ViT-LSLA authors.
//
// This source code is licensed under the Apache License, Version 2.0
// found in the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <functional>

namespace lsla {

/// Worker cap, initialized once from LSLA_NUM_THREADS (default 1).
int num_threads();
void set_num_threads(int n);

/// Runs fn over contiguous chunks of [0, n). Every index is processed by
/// exactly one invocation and each kernel computes its outputs
/// independently, so results are bit-identical for any thread count.
void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace lsla

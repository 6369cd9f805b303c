// Copyright (c) the ViT-LSLA authors.
//
// This source code is licensed under the Apache License, Version 2.0
// found in the LICENSE file in the root directory of this source tree.

#pragma once

#include <vector>

#include "core/tensor.hpp"

namespace lsla {

// Elementwise with numpy-style broadcasting. Gradients are sum-reduced
// over broadcast axes.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor add_scalar(const Tensor& a, double s);

/// Batched matrix product [..,m,k] @ [..,k,n] -> [..,m,n]; size-1 leading
/// dims broadcast.
Tensor matmul(const Tensor& a, const Tensor& b);

Tensor transpose_last2(const Tensor& a);
Tensor permute(const Tensor& a, const std::vector<int>& dims);
Tensor reshape(const Tensor& a, std::vector<int64_t> shape);

/// Numerically stable softmax over the last axis. Entries at -inf (or at
/// the additive window-mask fill) contribute exactly 0. A row with no
/// finite entry is degenerate and raises NumericError.
Tensor softmax_lastdim(const Tensor& x);

/// Per-position normalization over the last axis, then affine.
Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                  double eps = 1e-5);

/// Exact GELU, x * Phi(x) with the erf-based normal CDF.
Tensor gelu(const Tensor& x);

/// 3x3 cross-correlation, NHWC, padding 1, stride 1 or 2
/// (out = ceil(in / stride)). kernel is [3,3,c_in,c_out].
Tensor conv2d(const Tensor& x, const Tensor& kernel, const Tensor& bias, int stride);

/// Mean over batch of -log softmax(logits)[label].
Tensor cross_entropy(const Tensor& logits, const std::vector<int64_t>& labels);

/// x @ w + b for x [..,d_in], w [d_in,d_out], b [d_out].
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

/// [b,h,w,c] -> [b,c] average over the spatial axes.
Tensor spatial_mean(const Tensor& x);

/// Cyclic shift of the spatial axes of [b,h,w,c]; positive shifts move
/// content toward higher indices (torch.roll semantics).
Tensor roll_hw(const Tensor& x, int64_t shift_y, int64_t shift_x);

}  // namespace lsla

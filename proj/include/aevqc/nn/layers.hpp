// Copyright 2026 The aevqc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Forward and backward passes of the classical layers. Backward functions
 * take the forward inputs plus the upstream gradient and return gradients
 * with respect to every input and parameter of the layer.
 */
#pragma once

#include "aevqc/matrix.hpp"
#include "aevqc/nn/tensor.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace aevqc {
class Rng;
}

namespace aevqc::nn {

/// K x C x k x k kernel bank, row-major.
struct ConvKernels {
    std::size_t out_channels;
    std::size_t in_channels;
    std::size_t size;
    std::vector<double> values;

    ConvKernels(std::size_t out, std::size_t in, std::size_t k, double fill = 0.0)
        : out_channels(out), in_channels(in), size(k), values(out * in * k * k, fill) {}

    double &at(std::size_t o, std::size_t c, std::size_t i, std::size_t j) {
        return values[((o * in_channels + c) * size + i) * size + j];
    }
    [[nodiscard]] double at(std::size_t o, std::size_t c, std::size_t i,
                            std::size_t j) const {
        return values[((o * in_channels + c) * size + i) * size + j];
    }
};

struct ConvGradients {
    FeatureTensor d_input;
    std::vector<double> d_kernels;
};

/// Valid cross-correlation (no kernel flip, no padding, no bias).
FeatureTensor conv2d_forward(const FeatureTensor &input, const ConvKernels &kernels,
                             std::size_t stride);
ConvGradients conv2d_backward(const FeatureTensor &input, const ConvKernels &kernels,
                              std::size_t stride, const FeatureTensor &d_output);

FeatureTensor relu_forward(const FeatureTensor &input);
FeatureTensor relu_backward(const FeatureTensor &input, const FeatureTensor &d_output);

enum class PoolMode { Avg, Max };

/// 2x2 window, stride 2. An odd trailing row/column is dropped.
FeatureTensor pool2d_forward(const FeatureTensor &input, PoolMode mode);
/// Max routes the gradient to the first maximal element of each window.
FeatureTensor pool2d_backward(const FeatureTensor &input, PoolMode mode,
                              const FeatureTensor &d_output);

enum class GlobalPoolMode { Gap, Gmp };

[[nodiscard]] std::string_view global_pool_name(GlobalPoolMode mode);
[[nodiscard]] std::optional<GlobalPoolMode> parse_global_pool(std::string_view name);

/// Per-channel mean (Gap) or max (Gmp) over all spatial positions.
std::vector<double> global_pool(const FeatureTensor &input, GlobalPoolMode mode);
FeatureTensor global_pool_backward(const FeatureTensor &input, GlobalPoolMode mode,
                                   std::span<const double> d_output);

/// Bias-free fully connected layer: y = W x, W is out x in.
struct DenseParams {
    Matrix weights;
};

struct DenseGradients {
    std::vector<double> d_input;
    Matrix d_weights;
};

std::vector<double> dense_forward(std::span<const double> x, const DenseParams &p);
DenseGradients dense_backward(std::span<const double> x, const DenseParams &p,
                              std::span<const double> d_output);

struct SoftmaxCrossEntropy {
    double loss;
    std::vector<double> probabilities;
    std::vector<double> d_logits;
};

/// Max-subtracted softmax followed by -log p[label]; d_logits = p - onehot.
SoftmaxCrossEntropy softmax_ce(std::span<const double> logits, std::size_t label);

/// Glorot/Xavier uniform: U(-a, a) with a = sqrt(6 / (fan_in + fan_out)).
void glorot_uniform(std::span<double> out, std::size_t fan_in, std::size_t fan_out,
                    Rng &rng);

} // namespace aevqc::nn

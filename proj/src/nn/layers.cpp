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

#include "aevqc/nn/layers.hpp"

#include "aevqc/error.hpp"
#include "aevqc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace aevqc::nn {

namespace {

std::size_t conv_out_dim(std::size_t in, std::size_t k, std::size_t stride) {
    return (in - k) / stride + 1;
}

void check_conv(const FeatureTensor &input, const ConvKernels &kernels, std::size_t stride) {
    if (stride < 1) {
        throw ShapeError("conv2d stride must be >= 1");
    }
    if (kernels.in_channels != input.channels()) {
        throw ShapeError("conv2d kernel expects " + std::to_string(kernels.in_channels) +
                         " input channels, got " + std::to_string(input.channels()));
    }
    if (kernels.size < 1 || kernels.size > input.height() || kernels.size > input.width()) {
        throw ShapeError("conv2d kernel of size " + std::to_string(kernels.size) +
                         " does not fit a " + std::to_string(input.height()) + "x" +
                         std::to_string(input.width()) + " input");
    }
    if (kernels.values.size() !=
        kernels.out_channels * kernels.in_channels * kernels.size * kernels.size) {
        throw ShapeError("conv2d kernel bank has the wrong number of values");
    }
}

void check_pool_input(const FeatureTensor &input) {
    if (input.height() < 2 || input.width() < 2) {
        throw ShapeError("pool2d needs spatial dims >= 2, got " +
                         std::to_string(input.height()) + "x" + std::to_string(input.width()));
    }
}

} // namespace

FeatureTensor conv2d_forward(const FeatureTensor &input, const ConvKernels &kernels,
                             std::size_t stride) {
    check_conv(input, kernels, stride);
    const std::size_t k = kernels.size;
    const std::size_t oh = conv_out_dim(input.height(), k, stride);
    const std::size_t ow = conv_out_dim(input.width(), k, stride);
    FeatureTensor out(kernels.out_channels, oh, ow);
    for (std::size_t o = 0; o < kernels.out_channels; ++o) {
        for (std::size_t y = 0; y < oh; ++y) {
            for (std::size_t x = 0; x < ow; ++x) {
                double acc = 0.0;
                for (std::size_t c = 0; c < input.channels(); ++c) {
                    for (std::size_t i = 0; i < k; ++i) {
                        for (std::size_t j = 0; j < k; ++j) {
                            acc += kernels.at(o, c, i, j) *
                                   input.at(c, y * stride + i, x * stride + j);
                        }
                    }
                }
                out.at(o, y, x) = acc;
            }
        }
    }
    return out;
}

ConvGradients conv2d_backward(const FeatureTensor &input, const ConvKernels &kernels,
                              std::size_t stride, const FeatureTensor &d_output) {
    check_conv(input, kernels, stride);
    const std::size_t k = kernels.size;
    const std::size_t oh = conv_out_dim(input.height(), k, stride);
    const std::size_t ow = conv_out_dim(input.width(), k, stride);
    if (d_output.channels() != kernels.out_channels || d_output.height() != oh ||
        d_output.width() != ow) {
        throw ShapeError("conv2d_backward: upstream gradient has the wrong shape");
    }
    ConvGradients g{FeatureTensor(input.channels(), input.height(), input.width()),
                    std::vector<double>(kernels.values.size(), 0.0)};
    ConvKernels d_k(kernels.out_channels, kernels.in_channels, k);
    for (std::size_t o = 0; o < kernels.out_channels; ++o) {
        for (std::size_t y = 0; y < oh; ++y) {
            for (std::size_t x = 0; x < ow; ++x) {
                const double up = d_output.at(o, y, x);
                for (std::size_t c = 0; c < input.channels(); ++c) {
                    for (std::size_t i = 0; i < k; ++i) {
                        for (std::size_t j = 0; j < k; ++j) {
                            const std::size_t iy = y * stride + i;
                            const std::size_t ix = x * stride + j;
                            d_k.at(o, c, i, j) += up * input.at(c, iy, ix);
                            g.d_input.at(c, iy, ix) += up * kernels.at(o, c, i, j);
                        }
                    }
                }
            }
        }
    }
    g.d_kernels = std::move(d_k.values);
    return g;
}

FeatureTensor relu_forward(const FeatureTensor &input) {
    FeatureTensor out = input;
    for (auto &v : out.values()) {
        v = std::max(v, 0.0);
    }
    return out;
}

FeatureTensor relu_backward(const FeatureTensor &input, const FeatureTensor &d_output) {
    if (!input.same_shape(d_output)) {
        throw ShapeError("relu_backward: shape mismatch");
    }
    FeatureTensor out = d_output;
    const auto in = input.values();
    auto d = out.values();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (in[i] <= 0.0) {
            d[i] = 0.0;
        }
    }
    return out;
}

FeatureTensor pool2d_forward(const FeatureTensor &input, PoolMode mode) {
    check_pool_input(input);
    const std::size_t oh = input.height() / 2;
    const std::size_t ow = input.width() / 2;
    FeatureTensor out(input.channels(), oh, ow);
    for (std::size_t c = 0; c < input.channels(); ++c) {
        for (std::size_t y = 0; y < oh; ++y) {
            for (std::size_t x = 0; x < ow; ++x) {
                const double a = input.at(c, 2 * y, 2 * x);
                const double b = input.at(c, 2 * y, 2 * x + 1);
                const double d = input.at(c, 2 * y + 1, 2 * x);
                const double e = input.at(c, 2 * y + 1, 2 * x + 1);
                out.at(c, y, x) = mode == PoolMode::Avg ? (a + b + d + e) / 4.0
                                                        : std::max({a, b, d, e});
            }
        }
    }
    return out;
}

FeatureTensor pool2d_backward(const FeatureTensor &input, PoolMode mode,
                              const FeatureTensor &d_output) {
    check_pool_input(input);
    const std::size_t oh = input.height() / 2;
    const std::size_t ow = input.width() / 2;
    if (d_output.channels() != input.channels() || d_output.height() != oh ||
        d_output.width() != ow) {
        throw ShapeError("pool2d_backward: upstream gradient has the wrong shape");
    }
    FeatureTensor d_in(input.channels(), input.height(), input.width());
    for (std::size_t c = 0; c < input.channels(); ++c) {
        for (std::size_t y = 0; y < oh; ++y) {
            for (std::size_t x = 0; x < ow; ++x) {
                const double up = d_output.at(c, y, x);
                if (mode == PoolMode::Avg) {
                    for (std::size_t i = 0; i < 2; ++i) {
                        for (std::size_t j = 0; j < 2; ++j) {
                            d_in.at(c, 2 * y + i, 2 * x + j) += up / 4.0;
                        }
                    }
                    continue;
                }
                std::size_t bi = 0;
                std::size_t bj = 0;
                for (std::size_t i = 0; i < 2; ++i) {
                    for (std::size_t j = 0; j < 2; ++j) {
                        if (input.at(c, 2 * y + i, 2 * x + j) >
                            input.at(c, 2 * y + bi, 2 * x + bj)) {
                            bi = i;
                            bj = j;
                        }
                    }
                }
                d_in.at(c, 2 * y + bi, 2 * x + bj) += up;
            }
        }
    }
    return d_in;
}

std::string_view global_pool_name(GlobalPoolMode mode) {
    return mode == GlobalPoolMode::Gap ? "gap" : "gmp";
}

std::optional<GlobalPoolMode> parse_global_pool(std::string_view name) {
    if (name == "gap") {
        return GlobalPoolMode::Gap;
    }
    if (name == "gmp") {
        return GlobalPoolMode::Gmp;
    }
    return std::nullopt;
}

std::vector<double> global_pool(const FeatureTensor &input, GlobalPoolMode mode) {
    const std::size_t plane = input.height() * input.width();
    std::vector<double> out(input.channels());
    const auto values = input.values();
    for (std::size_t c = 0; c < input.channels(); ++c) {
        const auto first = values.begin() + static_cast<std::ptrdiff_t>(c * plane);
        const auto last = first + static_cast<std::ptrdiff_t>(plane);
        if (mode == GlobalPoolMode::Gap) {
            double sum = 0.0;
            for (auto it = first; it != last; ++it) {
                sum += *it;
            }
            out[c] = sum / static_cast<double>(plane);
        } else {
            out[c] = *std::max_element(first, last);
        }
    }
    return out;
}

FeatureTensor global_pool_backward(const FeatureTensor &input, GlobalPoolMode mode,
                                   std::span<const double> d_output) {
    if (d_output.size() != input.channels()) {
        throw ShapeError("global_pool_backward: expected " +
                         std::to_string(input.channels()) + " upstream values");
    }
    const std::size_t plane = input.height() * input.width();
    FeatureTensor d_in(input.channels(), input.height(), input.width());
    const auto values = input.values();
    auto d = d_in.values();
    for (std::size_t c = 0; c < input.channels(); ++c) {
        const std::size_t base = c * plane;
        if (mode == GlobalPoolMode::Gap) {
            for (std::size_t i = 0; i < plane; ++i) {
                d[base + i] = d_output[c] / static_cast<double>(plane);
            }
        } else {
            const auto first = values.begin() + static_cast<std::ptrdiff_t>(base);
            const auto arg = static_cast<std::size_t>(
                std::max_element(first, first + static_cast<std::ptrdiff_t>(plane)) - first);
            d[base + arg] = d_output[c];
        }
    }
    return d_in;
}

std::vector<double> dense_forward(std::span<const double> x, const DenseParams &p) {
    if (x.size() != p.weights.cols()) {
        throw ShapeError("dense layer expects " + std::to_string(p.weights.cols()) +
                         " inputs, got " + std::to_string(x.size()));
    }
    std::vector<double> y(p.weights.rows(), 0.0);
    for (std::size_t r = 0; r < p.weights.rows(); ++r) {
        const auto row = p.weights.row(r);
        double acc = 0.0;
        for (std::size_t c = 0; c < x.size(); ++c) {
            acc += row[c] * x[c];
        }
        y[r] = acc;
    }
    return y;
}

DenseGradients dense_backward(std::span<const double> x, const DenseParams &p,
                              std::span<const double> d_output) {
    if (x.size() != p.weights.cols() || d_output.size() != p.weights.rows()) {
        throw ShapeError("dense_backward: shape mismatch");
    }
    DenseGradients g{std::vector<double>(x.size(), 0.0),
                     Matrix(p.weights.rows(), p.weights.cols())};
    for (std::size_t r = 0; r < p.weights.rows(); ++r) {
        const auto row = p.weights.row(r);
        auto d_row = g.d_weights.row(r);
        for (std::size_t c = 0; c < x.size(); ++c) {
            d_row[c] = d_output[r] * x[c];
            g.d_input[c] += row[c] * d_output[r];
        }
    }
    return g;
}

SoftmaxCrossEntropy softmax_ce(std::span<const double> logits, std::size_t label) {
    if (label >= logits.size()) {
        throw IndexError("label " + std::to_string(label) + " out of range for " +
                         std::to_string(logits.size()) + " logits");
    }
    const double top = *std::max_element(logits.begin(), logits.end());
    SoftmaxCrossEntropy out{0.0, std::vector<double>(logits.size()),
                            std::vector<double>(logits.size())};
    double denom = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out.probabilities[i] = std::exp(logits[i] - top);
        denom += out.probabilities[i];
    }
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out.probabilities[i] /= denom;
        out.d_logits[i] = out.probabilities[i] - (i == label ? 1.0 : 0.0);
    }
    out.loss = -(logits[label] - top - std::log(denom));
    return out;
}

void glorot_uniform(std::span<double> out, std::size_t fan_in, std::size_t fan_out,
                    Rng &rng) {
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    for (auto &w : out) {
        w = rng.uniform(-limit, limit);
    }
}

} // namespace aevqc::nn

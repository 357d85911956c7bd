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

#include "aevqc/nn/tensor.hpp"

#include "aevqc/error.hpp"

#include <string>

namespace aevqc::nn {

namespace {
void check_dims(std::size_t c, std::size_t h, std::size_t w) {
    if (c == 0 || h == 0 || w == 0) {
        throw ShapeError("tensor dims must be >= 1, got " + std::to_string(c) + "x" +
                         std::to_string(h) + "x" + std::to_string(w));
    }
}
} // namespace

FeatureTensor::FeatureTensor(std::size_t channels, std::size_t height, std::size_t width,
                             double fill)
    : channels_(channels), height_(height), width_(width) {
    check_dims(channels, height, width);
    values_.assign(channels * height * width, fill);
}

FeatureTensor::FeatureTensor(std::size_t channels, std::size_t height, std::size_t width,
                             std::vector<double> values)
    : channels_(channels), height_(height), width_(width), values_(std::move(values)) {
    check_dims(channels, height, width);
    if (values_.size() != channels * height * width) {
        throw ShapeError("tensor of " + std::to_string(channels) + "x" +
                         std::to_string(height) + "x" + std::to_string(width) +
                         " needs " + std::to_string(channels * height * width) +
                         " values, got " + std::to_string(values_.size()));
    }
}

} // namespace aevqc::nn

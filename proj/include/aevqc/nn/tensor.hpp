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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aevqc::nn {

/// C x H x W activation map stored row-major (channel, then row, then column).
class FeatureTensor {
  public:
    FeatureTensor(std::size_t channels, std::size_t height, std::size_t width,
                  double fill = 0.0);
    FeatureTensor(std::size_t channels, std::size_t height, std::size_t width,
                  std::vector<double> values);

    [[nodiscard]] std::size_t channels() const { return channels_; }
    [[nodiscard]] std::size_t height() const { return height_; }
    [[nodiscard]] std::size_t width() const { return width_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    double &at(std::size_t c, std::size_t h, std::size_t w) {
        return values_[(c * height_ + h) * width_ + w];
    }
    [[nodiscard]] double at(std::size_t c, std::size_t h, std::size_t w) const {
        return values_[(c * height_ + h) * width_ + w];
    }

    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::span<double> values() { return values_; }

    [[nodiscard]] bool same_shape(const FeatureTensor &other) const {
        return channels_ == other.channels_ && height_ == other.height_ &&
               width_ == other.width_;
    }

    bool operator==(const FeatureTensor &) const = default;

  private:
    std::size_t channels_;
    std::size_t height_;
    std::size_t width_;
    std::vector<double> values_;
};

} // namespace aevqc::nn

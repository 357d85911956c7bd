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

#include "aevqc/head/vqc_head.hpp"
#include "aevqc/nn/layers.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace aevqc::pipeline {

/// Stack of [conv 3x3 stride 1 -> ReLU -> 2x2 max pool] blocks.
struct BackboneConfig {
    std::size_t input_channels = 1;
    std::size_t image_side = 8;
    std::vector<std::size_t> channels{16};

    bool operator==(const BackboneConfig &) const = default;
};

struct ClassicalHeadConfig {
    nn::GlobalPoolMode pooling = nn::GlobalPoolMode::Gap;
    bool operator==(const ClassicalHeadConfig &) const = default;
};

struct QuantumHeadConfig {
    head::AnsatzFamily ansatz = head::AnsatzFamily::A1;
    std::size_t depth = 1;
    bool operator==(const QuantumHeadConfig &) const = default;
};

struct ModelConfig {
    BackboneConfig backbone;
    std::variant<ClassicalHeadConfig, QuantumHeadConfig> head;
    std::size_t n_classes = 2;
    std::uint64_t seed = 0;

    [[nodiscard]] bool is_quantum() const {
        return std::holds_alternative<QuantumHeadConfig>(head);
    }

    bool operator==(const ModelConfig &) const = default;
};

struct TrainConfig {
    std::size_t epochs = 200;
    std::size_t batch_size = 32;
    double lr = 1e-3;
    std::uint64_t shuffle_seed = 0;
};

/// Shape of the backbone output; throws ConfigError if a block does not fit.
struct FeatureShape {
    std::size_t channels;
    std::size_t height;
    std::size_t width;

    [[nodiscard]] std::size_t size() const { return channels * height * width; }
};
FeatureShape backbone_output_shape(const BackboneConfig &cfg);

/// Throws ConfigError on any invalid field.
void validate(const ModelConfig &cfg);
void validate(const TrainConfig &cfg);

nlohmann::json to_json(const ModelConfig &cfg);
/// Strict: unknown or missing keys raise FormatError.
ModelConfig model_config_from_json(const nlohmann::json &j);

} // namespace aevqc::pipeline

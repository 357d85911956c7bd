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
 * Flat JSON run configuration shared by the `train`, `eval` and `compare`
 * commands. Every key is optional except where a command needs it; unknown
 * keys are rejected so a typo cannot silently fall back to a default.
 *
 * Keys:
 *   head_kind          "classical" | "quantum"   (train only; absent for compare)
 *   pooling            "gap" | "gmp"             (classical head)
 *   ansatz             "a1" | "a2"               (quantum head)
 *   depth              integer >= 1              (quantum head)
 *   backbone_channels  list of integers
 *   image_side         integer
 *   n_classes          integer >= 2
 *   seed               unsigned integer; feeds every random stream
 *   epochs, batch_size, lr
 *   data_dir           path, relative to the config file
 *   synthetic          true to use the generated dataset, with optional
 *                      per_class_train, per_class_test, noise_sigma
 *   out, metrics       default output paths (flags take precedence)
 */
#pragma once

#include "aevqc/data/dataset.hpp"
#include "aevqc/head/vqc_head.hpp"
#include "aevqc/nn/layers.hpp"
#include "aevqc/pipeline/config.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace aevqc::cli {

enum class HeadKind { Classical, Quantum };

struct RunConfig {
    std::optional<HeadKind> head_kind;
    std::optional<nn::GlobalPoolMode> pooling;
    std::optional<head::AnsatzFamily> ansatz;
    std::optional<std::size_t> depth;
    std::vector<std::size_t> backbone_channels{16};
    std::size_t image_side = 8;
    std::optional<std::size_t> n_classes;
    std::uint64_t seed = 0;
    pipeline::TrainConfig train;

    std::optional<std::filesystem::path> data_dir;
    std::optional<data::SynthSpec> synthetic;

    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> metrics;
};

/// Relative data_dir values are resolved against `base_dir`. Throws ConfigError.
RunConfig parse_run_config(const nlohmann::json &doc, const std::filesystem::path &base_dir = {});
RunConfig load_run_config(const std::filesystem::path &path);

/// Replaces the seed everywhere it is used (model init, shuffle, synthetic data).
void override_seed(RunConfig &cfg, std::uint64_t seed);

/// Loads the configured dataset; ConfigError when no source is configured.
data::DatasetSplit load_dataset(const RunConfig &cfg);

/// Model configuration for one head kind, sized for `split`.
pipeline::ModelConfig model_config_for(const RunConfig &cfg, HeadKind kind,
                                       const data::DatasetSplit &split);

} // namespace aevqc::cli

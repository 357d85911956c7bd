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

#include "aevqc/pipeline/model.hpp"
#include "aevqc/pipeline/trainer.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace aevqc::pipeline {

inline constexpr int kCheckpointFormatVersion = 1;

struct Checkpoint {
    Model model;
    OptimizerState optimizer;
};

/**
 * JSON document:
 *   {"format_version": 1, "config": {...}, "epoch": E,
 *    "params": {"<block>": [...], ...},
 *    "adam": {"<block>": {"step": t, "m": [...], "v": [...]}, ...}}
 * Every float is written with 17 significant digits so reloading is exact.
 * The FC block is a nested list of rows.
 */
std::string serialize_checkpoint(Model &model, const OptimizerState &optimizer);
/// Throws FormatError on malformed content or an unsupported version.
Checkpoint parse_checkpoint(std::string_view text);

void save_checkpoint(Model &model, const OptimizerState &optimizer,
                     const std::filesystem::path &path);
Checkpoint load_checkpoint(const std::filesystem::path &path);

} // namespace aevqc::pipeline

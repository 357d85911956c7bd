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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace aevqc::cli {

struct RunOptions {
    std::filesystem::path config;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> metrics;
    std::optional<std::filesystem::path> checkpoint;
    std::size_t threads = 1;
    std::optional<std::uint64_t> seed;
};

/// Trains the configured head; writes the checkpoint (--out) and metrics CSV.
void cmd_train(const RunOptions &opts, std::ostream &log);

/// Evaluates --checkpoint on the configured test split.
void cmd_eval(const RunOptions &opts, std::ostream &log);

/// Trains both heads on the same backbone seed and data order and writes a
/// `model,params_after_backbone,accuracy,macro_f1` report to --out.
void cmd_compare(const RunOptions &opts, std::ostream &log);

void cmd_circuit(const head::AnsatzSpec &spec, std::ostream &out);

struct ParamsQuery {
    std::optional<head::AnsatzSpec> ansatz;
    std::size_t n_classes = 10;
    std::optional<std::size_t> classical_channels;
};

void cmd_params(const ParamsQuery &query, std::ostream &out);

} // namespace aevqc::cli

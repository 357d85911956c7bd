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

#include "aevqc/data/dataset.hpp"
#include "aevqc/data/metrics.hpp"
#include "aevqc/nn/adam.hpp"
#include "aevqc/pipeline/config.hpp"
#include "aevqc/pipeline/model.hpp"

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace aevqc::pipeline {

struct EpochMetrics {
    std::size_t epoch;
    double loss;      ///< mean per-sample loss over the epoch
    double train_acc; ///< fraction of samples classified correctly during the epoch

    bool operator==(const EpochMetrics &) const = default;
};

/// Adam moments per parameter block plus the number of completed epochs.
struct OptimizerState {
    std::vector<nn::AdamState> blocks;
    std::size_t epoch = 0;

    static OptimizerState fresh(const Model &model);
    bool operator==(const OptimizerState &) const = default;
};

struct TrainOptions {
    /// Worker threads for per-sample work inside a batch. Results do not
    /// depend on this value.
    std::size_t threads = 1;
    std::function<void(const EpochMetrics &)> on_epoch;
};

struct BatchResult {
    double loss_sum = 0.0;
    std::size_t correct = 0;
    ParamGrads mean_grads;
};

/**
 * Mean gradient over `batch`. Per-sample passes may run concurrently; the
 * reduction always sums in ascending batch index.
 */
BatchResult batch_gradient(const Model &model, std::span<const data::Sample *const> batch,
                           std::size_t threads);

/**
 * Seeded-shuffle minibatch training with Adam on every parameter block.
 * Throws DataError for an empty set or bad labels/shapes and
 * DivergenceError when a batch yields a non-finite loss.
 */
std::vector<EpochMetrics> train(Model &model, OptimizerState &optimizer,
                                const std::vector<data::Sample> &train_set,
                                const TrainConfig &cfg, const TrainOptions &options = {});

/// Argmax predictions on `samples` summarized as accuracy/macro-F1/confusion.
data::MetricsReport evaluate(const Model &model, const std::vector<data::Sample> &samples,
                             std::size_t threads = 1);

/// CSV with header `epoch,loss,train_acc`, values printed round-trip exact.
void write_metrics_csv(std::ostream &out, std::span<const EpochMetrics> metrics);
void write_metrics_csv(const std::filesystem::path &path, std::span<const EpochMetrics> metrics);

} // namespace aevqc::pipeline

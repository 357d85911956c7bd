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

#include "aevqc/pipeline/trainer.hpp"

#include "aevqc/error.hpp"
#include "aevqc/parallel.hpp"
#include "aevqc/rng.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>

namespace aevqc::pipeline {

OptimizerState OptimizerState::fresh(const Model &model) {
    OptimizerState s;
    for (const auto n : model.parameter_block_sizes()) {
        s.blocks.emplace_back(n);
    }
    return s;
}

BatchResult batch_gradient(const Model &model, std::span<const data::Sample *const> batch,
                           std::size_t threads) {
    std::vector<SampleGradient> per_sample(batch.size());
    parallel_for(batch.size(), threads, [&](std::size_t i) {
        per_sample[i] = model.forward_backward(batch[i]->image, batch[i]->label);
    });

    BatchResult result;
    const auto sizes = model.parameter_block_sizes();
    result.mean_grads.resize(sizes.size());
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        result.mean_grads[b].assign(sizes[b], 0.0);
    }
    for (std::size_t i = 0; i < per_sample.size(); ++i) {
        const auto &s = per_sample[i];
        result.loss_sum += s.loss;
        if (predict_class(s.logits) == batch[i]->label) {
            ++result.correct;
        }
        for (std::size_t b = 0; b < sizes.size(); ++b) {
            for (std::size_t k = 0; k < sizes[b]; ++k) {
                result.mean_grads[b][k] += s.grads[b][k];
            }
        }
    }
    const auto scale = 1.0 / static_cast<double>(batch.size());
    for (auto &block : result.mean_grads) {
        for (auto &g : block) {
            g *= scale;
        }
    }
    return result;
}

namespace {

void check_train_set(const Model &model, const std::vector<data::Sample> &set) {
    if (set.empty()) {
        throw DataError("training set is empty");
    }
    const auto &cfg = model.config();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto &s = set[i];
        if (s.label >= cfg.n_classes) {
            throw DataError("sample " + std::to_string(i) + " has label " +
                            std::to_string(s.label) + " but the model has " +
                            std::to_string(cfg.n_classes) + " classes");
        }
        if (s.image.channels() != cfg.backbone.input_channels ||
            s.image.height() != cfg.backbone.image_side ||
            s.image.width() != cfg.backbone.image_side) {
            throw DataError("sample " + std::to_string(i) + " does not match the model input shape");
        }
    }
}

} // namespace

std::vector<EpochMetrics> train(Model &model, OptimizerState &optimizer,
                                const std::vector<data::Sample> &train_set,
                                const TrainConfig &cfg, const TrainOptions &options) {
    validate(cfg);
    check_train_set(model, train_set);
    if (optimizer.blocks.size() != model.parameter_block_sizes().size()) {
        throw ShapeError("optimizer state does not match the model's parameter blocks");
    }
    const nn::AdamConfig adam{cfg.lr};
    Rng shuffle_rng = Rng::stream(cfg.shuffle_seed, "shuffle");

    std::vector<std::size_t> order(train_set.size());
    std::vector<const data::Sample *> batch;
    std::vector<EpochMetrics> history;
    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[shuffle_rng.below(i)]);
        }

        double loss_sum = 0.0;
        std::size_t correct = 0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            const std::size_t end = std::min(order.size(), start + cfg.batch_size);
            batch.clear();
            for (std::size_t i = start; i < end; ++i) {
                batch.push_back(&train_set[order[i]]);
            }
            BatchResult result;
            try {
                result = batch_gradient(model, batch, options.threads);
            } catch (const DegenerateInputError &e) {
                // Bias-free ReLU features can be driven to exactly zero, which
                // leaves amplitude encoding undefined; stop rather than guess.
                throw DivergenceError("epoch " + std::to_string(epoch) +
                                      ": backbone features collapsed to zero (" + e.what() + ")");
            }
            if (!std::isfinite(result.loss_sum)) {
                throw DivergenceError("non-finite loss in epoch " + std::to_string(epoch) +
                                      " at batch starting " + std::to_string(start));
            }
            loss_sum += result.loss_sum;
            correct += result.correct;
            auto blocks = model.parameter_blocks();
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                nn::adam_step(blocks[b].values, result.mean_grads[b], optimizer.blocks[b], adam);
            }
        }
        ++optimizer.epoch;
        const auto n = static_cast<double>(train_set.size());
        history.push_back({optimizer.epoch, loss_sum / n, static_cast<double>(correct) / n});
        if (options.on_epoch) {
            options.on_epoch(history.back());
        }
    }
    return history;
}

data::MetricsReport evaluate(const Model &model, const std::vector<data::Sample> &samples,
                             std::size_t threads) {
    if (samples.empty()) {
        throw DataError("evaluation set is empty");
    }
    std::vector<std::size_t> truth(samples.size());
    std::vector<std::size_t> predicted(samples.size());
    parallel_for(samples.size(), threads, [&](std::size_t i) {
        truth[i] = samples[i].label;
        predicted[i] = predict_class(model.forward(samples[i].image));
    });
    return data::compute_metrics(truth, predicted, model.config().n_classes);
}

void write_metrics_csv(std::ostream &out, std::span<const EpochMetrics> metrics) {
    out << "epoch,loss,train_acc\n";
    char buf[96];
    for (const auto &m : metrics) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", m.epoch, m.loss, m.train_acc);
        out << buf;
    }
}

void write_metrics_csv(const std::filesystem::path &path, std::span<const EpochMetrics> metrics) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw DataError(path.string() + ": cannot open for writing");
    }
    write_metrics_csv(out, metrics);
    out.flush();
    if (!out) {
        throw DataError(path.string() + ": write failed");
    }
}

} // namespace aevqc::pipeline

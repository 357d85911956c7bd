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
 * The two competing image classifiers over a shared backbone:
 *
 *   classical: backbone -> global pooling -> FC(C -> K)
 *   quantum:   backbone -> flatten -> amplitude-encoded VQC -> FC(n -> K)
 *
 * Both FC layers are bias-free.
 */
#pragma once

#include "aevqc/head/vqc_head.hpp"
#include "aevqc/nn/layers.hpp"
#include "aevqc/nn/tensor.hpp"
#include "aevqc/pipeline/config.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aevqc::pipeline {

/// Named view of one trainable parameter array.
struct ParamBlock {
    std::string name;
    std::span<double> values;
};

/// Gradients laid out like Model::parameter_blocks().
using ParamGrads = std::vector<std::vector<double>>;

struct SampleGradient {
    double loss;
    std::vector<double> logits;
    ParamGrads grads;
};

class Model {
  public:
    /// Builds and seeds every parameter from cfg.seed.
    explicit Model(ModelConfig cfg);

    [[nodiscard]] const ModelConfig &config() const { return config_; }
    [[nodiscard]] const FeatureShape &feature_shape() const { return feature_shape_; }
    [[nodiscard]] const std::optional<head::QuantumHead> &quantum_head() const {
        return quantum_;
    }
    [[nodiscard]] const nn::DenseParams &fc() const { return fc_; }

    /// Backbone blocks, then "theta" (quantum only), then "fc".
    [[nodiscard]] std::vector<ParamBlock> parameter_blocks();
    [[nodiscard]] std::vector<std::size_t> parameter_block_sizes() const;

    /// Trainable parameters after the backbone.
    [[nodiscard]] std::size_t head_param_count() const;

    [[nodiscard]] nn::FeatureTensor backbone_forward(const nn::FeatureTensor &image) const;
    [[nodiscard]] std::vector<double> forward(const nn::FeatureTensor &image) const;

    /// Loss and full parameter gradient for one labelled image.
    [[nodiscard]] SampleGradient forward_backward(const nn::FeatureTensor &image,
                                                  std::size_t label) const;

  private:
    void check_image(const nn::FeatureTensor &image) const;

    ModelConfig config_;
    FeatureShape feature_shape_;
    std::vector<nn::ConvKernels> backbone_;
    std::optional<head::QuantumHead> quantum_;
    nn::DenseParams fc_;
};

/// Index of the largest logit; ties resolve to the lowest index.
std::size_t predict_class(std::span<const double> logits);

} // namespace aevqc::pipeline

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

#include "aevqc/pipeline/model.hpp"

#include "aevqc/error.hpp"
#include "aevqc/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace aevqc::pipeline {

namespace {

constexpr std::size_t kConvSize = 3;
constexpr std::size_t kConvStride = 1;
constexpr nn::PoolMode kBlockPool = nn::PoolMode::Max;

struct BlockCache {
    nn::FeatureTensor input;
    nn::FeatureTensor pre_activation;
    nn::FeatureTensor activation;
};

} // namespace

Model::Model(ModelConfig cfg) : config_(std::move(cfg)), feature_shape_{0, 0, 0} {
    validate(config_);
    feature_shape_ = backbone_output_shape(config_.backbone);

    Rng backbone_rng = Rng::stream(config_.seed, "init.backbone");
    std::size_t in_ch = config_.backbone.input_channels;
    for (const std::size_t out_ch : config_.backbone.channels) {
        nn::ConvKernels k(out_ch, in_ch, kConvSize);
        nn::glorot_uniform(k.values, in_ch * kConvSize * kConvSize,
                           out_ch * kConvSize * kConvSize, backbone_rng);
        backbone_.push_back(std::move(k));
        in_ch = out_ch;
    }

    std::size_t fc_in = 0;
    if (const auto *q = std::get_if<QuantumHeadConfig>(&config_.head)) {
        quantum_.emplace(q->ansatz, q->depth, feature_shape_.size());
        Rng head_rng = Rng::stream(config_.seed, "init.head");
        quantum_->init_theta(head_rng);
        fc_in = quantum_->num_outputs();
    } else {
        fc_in = feature_shape_.channels;
    }
    fc_.weights = Matrix(config_.n_classes, fc_in);
    Rng fc_rng = Rng::stream(config_.seed, "init.fc");
    nn::glorot_uniform(fc_.weights.data(), fc_in, config_.n_classes, fc_rng);

    const std::size_t expected =
        quantum_ ? head::count_head_params(quantum_->spec(), config_.n_classes).total
                 : head::count_classical_head_params(feature_shape_.channels, config_.n_classes);
    if (head_param_count() != expected) {
        throw std::logic_error("head parameter audit failed: " +
                               std::to_string(head_param_count()) + " != " +
                               std::to_string(expected));
    }
}

std::vector<ParamBlock> Model::parameter_blocks() {
    std::vector<ParamBlock> blocks;
    for (std::size_t b = 0; b < backbone_.size(); ++b) {
        blocks.push_back({"backbone." + std::to_string(b), backbone_[b].values});
    }
    if (quantum_) {
        blocks.push_back({"theta", quantum_->theta()});
    }
    blocks.push_back({"fc", fc_.weights.data()});
    return blocks;
}

std::vector<std::size_t> Model::parameter_block_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto &k : backbone_) {
        sizes.push_back(k.values.size());
    }
    if (quantum_) {
        sizes.push_back(quantum_->theta().size());
    }
    sizes.push_back(fc_.weights.data().size());
    return sizes;
}

std::size_t Model::head_param_count() const {
    const std::size_t fc = fc_.weights.rows() * fc_.weights.cols();
    return fc + (quantum_ ? quantum_->theta().size() : 0);
}

void Model::check_image(const nn::FeatureTensor &image) const {
    const auto &bb = config_.backbone;
    if (image.channels() != bb.input_channels || image.height() != bb.image_side ||
        image.width() != bb.image_side) {
        throw ShapeError("model expects " + std::to_string(bb.input_channels) + "x" +
                         std::to_string(bb.image_side) + "x" + std::to_string(bb.image_side) +
                         " images, got " + std::to_string(image.channels()) + "x" +
                         std::to_string(image.height()) + "x" + std::to_string(image.width()));
    }
}

nn::FeatureTensor Model::backbone_forward(const nn::FeatureTensor &image) const {
    check_image(image);
    nn::FeatureTensor x = image;
    for (const auto &k : backbone_) {
        x = nn::pool2d_forward(nn::relu_forward(nn::conv2d_forward(x, k, kConvStride)),
                               kBlockPool);
    }
    return x;
}

std::vector<double> Model::forward(const nn::FeatureTensor &image) const {
    const auto features = backbone_forward(image);
    if (quantum_) {
        return nn::dense_forward(quantum_->forward(features.values()), fc_);
    }
    const auto pooled =
        nn::global_pool(features, std::get<ClassicalHeadConfig>(config_.head).pooling);
    return nn::dense_forward(pooled, fc_);
}

SampleGradient Model::forward_backward(const nn::FeatureTensor &image,
                                       std::size_t label) const {
    check_image(image);
    std::vector<BlockCache> caches;
    caches.reserve(backbone_.size());
    nn::FeatureTensor x = image;
    for (const auto &k : backbone_) {
        auto pre = nn::conv2d_forward(x, k, kConvStride);
        auto act = nn::relu_forward(pre);
        auto next = nn::pool2d_forward(act, kBlockPool);
        caches.push_back({std::move(x), std::move(pre), std::move(act)});
        x = std::move(next);
    }
    const nn::FeatureTensor &features = x;

    SampleGradient out;
    out.grads.resize(parameter_block_sizes().size());
    const std::size_t fc_index = out.grads.size() - 1;
    std::vector<double> head_out;
    std::optional<nn::GlobalPoolMode> pool_mode;
    if (quantum_) {
        head_out = quantum_->forward(features.values());
    } else {
        pool_mode = std::get<ClassicalHeadConfig>(config_.head).pooling;
        head_out = nn::global_pool(features, *pool_mode);
    }
    out.logits = nn::dense_forward(head_out, fc_);
    auto ce = nn::softmax_ce(out.logits, label);
    out.loss = ce.loss;

    auto fc_grad = nn::dense_backward(head_out, fc_, ce.d_logits);
    const auto fc_data = fc_grad.d_weights.data();
    out.grads[fc_index].assign(fc_data.begin(), fc_data.end());

    nn::FeatureTensor d_features(features.channels(), features.height(), features.width());
    if (quantum_) {
        auto vjp = quantum_->backward(features.values(), fc_grad.d_input);
        out.grads[backbone_.size()] = std::move(vjp.d_params);
        std::copy(vjp.d_input.begin(), vjp.d_input.end(), d_features.values().begin());
    } else {
        d_features = nn::global_pool_backward(features, *pool_mode, fc_grad.d_input);
    }

    nn::FeatureTensor d = std::move(d_features);
    for (std::size_t b = backbone_.size(); b-- > 0;) {
        const auto &cache = caches[b];
        const auto d_act = nn::pool2d_backward(cache.activation, kBlockPool, d);
        const auto d_pre = nn::relu_backward(cache.pre_activation, d_act);
        auto conv = nn::conv2d_backward(cache.input, backbone_[b], kConvStride, d_pre);
        out.grads[b] = std::move(conv.d_kernels);
        d = std::move(conv.d_input);
    }
    return out;
}

std::size_t predict_class(std::span<const double> logits) {
    return static_cast<std::size_t>(std::max_element(logits.begin(), logits.end()) -
                                    logits.begin());
}

} // namespace aevqc::pipeline

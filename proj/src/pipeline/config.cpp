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

#include "aevqc/pipeline/config.hpp"

#include "aevqc/error.hpp"
#include "aevqc/head/encoding.hpp"

#include <set>
#include <string>

namespace aevqc::pipeline {

FeatureShape backbone_output_shape(const BackboneConfig &cfg) {
    if (cfg.input_channels != 1 && cfg.input_channels != 3) {
        throw ConfigError("input_channels must be 1 or 3, got " +
                          std::to_string(cfg.input_channels));
    }
    if (cfg.channels.empty()) {
        throw ConfigError("backbone needs at least one block");
    }
    std::size_t side = cfg.image_side;
    for (std::size_t b = 0; b < cfg.channels.size(); ++b) {
        if (cfg.channels[b] == 0) {
            throw ConfigError("backbone block " + std::to_string(b) + " has zero channels");
        }
        // conv 3x3 valid then 2x2 pool
        if (side < 4) {
            throw ConfigError("backbone block " + std::to_string(b) + " receives " +
                              std::to_string(side) + "x" + std::to_string(side) +
                              " maps; need at least 4x4 (increase image_side or drop a block)");
        }
        side = (side - 2) / 2;
    }
    return {cfg.channels.back(), side, side};
}

void validate(const ModelConfig &cfg) {
    if (cfg.n_classes < 2) {
        throw ConfigError("n_classes must be at least 2, got " + std::to_string(cfg.n_classes));
    }
    const auto shape = backbone_output_shape(cfg.backbone);
    if (const auto *q = std::get_if<QuantumHeadConfig>(&cfg.head)) {
        if (q->depth < 1) {
            throw ConfigError("depth must be at least 1");
        }
        if (head::qubits_needed(shape.size()) > quantum::kMaxQubits) {
            throw ConfigError("backbone emits " + std::to_string(shape.size()) +
                              " features, more than the simulator can encode");
        }
    }
}

void validate(const TrainConfig &cfg) {
    if (cfg.epochs < 1) {
        throw ConfigError("epochs must be at least 1");
    }
    if (cfg.batch_size < 1) {
        throw ConfigError("batch_size must be at least 1");
    }
    if (!(cfg.lr >= 0.0)) {
        throw ConfigError("lr must be non-negative");
    }
}

nlohmann::json to_json(const ModelConfig &cfg) {
    nlohmann::json j;
    j["backbone_channels"] = cfg.backbone.channels;
    j["image_side"] = cfg.backbone.image_side;
    j["input_channels"] = cfg.backbone.input_channels;
    j["n_classes"] = cfg.n_classes;
    j["seed"] = cfg.seed;
    if (const auto *q = std::get_if<QuantumHeadConfig>(&cfg.head)) {
        j["head_kind"] = "quantum";
        j["ansatz"] = std::string{head::family_name(q->ansatz)};
        j["depth"] = q->depth;
    } else {
        j["head_kind"] = "classical";
        j["pooling"] =
            std::string{nn::global_pool_name(std::get<ClassicalHeadConfig>(cfg.head).pooling)};
    }
    return j;
}

ModelConfig model_config_from_json(const nlohmann::json &j) {
    try {
        ModelConfig cfg;
        std::set<std::string> allowed{"backbone_channels", "image_side", "input_channels",
                                      "n_classes", "seed", "head_kind"};
        cfg.backbone.channels = j.at("backbone_channels").get<std::vector<std::size_t>>();
        cfg.backbone.image_side = j.at("image_side").get<std::size_t>();
        cfg.backbone.input_channels = j.at("input_channels").get<std::size_t>();
        cfg.n_classes = j.at("n_classes").get<std::size_t>();
        cfg.seed = j.at("seed").get<std::uint64_t>();
        const auto kind = j.at("head_kind").get<std::string>();
        if (kind == "quantum") {
            allowed.insert({"ansatz", "depth"});
            const auto family = head::parse_family(j.at("ansatz").get<std::string>());
            if (!family) {
                throw FormatError("unknown ansatz in model config");
            }
            cfg.head = QuantumHeadConfig{*family, j.at("depth").get<std::size_t>()};
        } else if (kind == "classical") {
            allowed.insert("pooling");
            const auto pool = nn::parse_global_pool(j.at("pooling").get<std::string>());
            if (!pool) {
                throw FormatError("unknown pooling in model config");
            }
            cfg.head = ClassicalHeadConfig{*pool};
        } else {
            throw FormatError("unknown head_kind '" + kind + "' in model config");
        }
        for (const auto &[key, value] : j.items()) {
            if (!allowed.contains(key)) {
                throw FormatError("unexpected key '" + key + "' in model config");
            }
        }
        validate(cfg);
        return cfg;
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string{"malformed model config: "} + e.what());
    } catch (const ConfigError &e) {
        throw FormatError(std::string{"invalid model config: "} + e.what());
    }
}

} // namespace aevqc::pipeline

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

#include "aevqc/cli/run_config.hpp"

#include "aevqc/error.hpp"

#include <fstream>
#include <set>
#include <string>

namespace aevqc::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys = {
    "head_kind", "pooling",  "ansatz",    "depth",           "backbone_channels",
    "image_side", "n_classes", "seed",    "epochs",          "batch_size",
    "lr",         "data_dir",  "synthetic", "per_class_train", "per_class_test",
    "noise_sigma", "out",      "metrics"};

std::size_t get_count(const json &doc, const std::string &key) {
    const auto &v = doc.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw ConfigError("\"" + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::string get_string(const json &doc, const std::string &key) {
    const auto &v = doc.at(key);
    if (!v.is_string()) {
        throw ConfigError("\"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

double get_real(const json &doc, const std::string &key) {
    const auto &v = doc.at(key);
    if (!v.is_number()) {
        throw ConfigError("\"" + key + "\" must be a number");
    }
    return v.get<double>();
}

} // namespace

RunConfig parse_run_config(const json &doc, const std::filesystem::path &base_dir) {
    if (!doc.is_object()) {
        throw ConfigError("run config must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (!kKnownKeys.contains(key)) {
            throw ConfigError("unknown config key \"" + key + "\"");
        }
    }

    RunConfig cfg;
    if (doc.contains("head_kind")) {
        const auto kind = get_string(doc, "head_kind");
        if (kind == "classical") {
            cfg.head_kind = HeadKind::Classical;
        } else if (kind == "quantum") {
            cfg.head_kind = HeadKind::Quantum;
        } else {
            throw ConfigError("\"head_kind\" must be \"classical\" or \"quantum\", got \"" + kind +
                              "\"");
        }
    }
    if (doc.contains("pooling")) {
        const auto name = get_string(doc, "pooling");
        cfg.pooling = nn::parse_global_pool(name);
        if (!cfg.pooling) {
            throw ConfigError("\"pooling\" must be \"gap\" or \"gmp\", got \"" + name + "\"");
        }
    }
    if (doc.contains("ansatz")) {
        const auto name = get_string(doc, "ansatz");
        cfg.ansatz = head::parse_family(name);
        if (!cfg.ansatz) {
            throw ConfigError("\"ansatz\" must be \"a1\" or \"a2\", got \"" + name + "\"");
        }
    }
    if (doc.contains("depth")) {
        cfg.depth = get_count(doc, "depth");
    }
    if (cfg.head_kind == HeadKind::Classical && (cfg.ansatz || cfg.depth)) {
        throw ConfigError("\"ansatz\"/\"depth\" only apply to head_kind \"quantum\"");
    }
    if (cfg.head_kind == HeadKind::Quantum && cfg.pooling) {
        throw ConfigError("\"pooling\" only applies to head_kind \"classical\"");
    }

    if (doc.contains("backbone_channels")) {
        const auto &list = doc.at("backbone_channels");
        if (!list.is_array()) {
            throw ConfigError("\"backbone_channels\" must be a list of integers");
        }
        cfg.backbone_channels.clear();
        for (const auto &c : list) {
            if (!c.is_number_unsigned()) {
                throw ConfigError("\"backbone_channels\" must be a list of integers");
            }
            cfg.backbone_channels.push_back(c.get<std::size_t>());
        }
    }
    if (doc.contains("image_side")) {
        cfg.image_side = get_count(doc, "image_side");
    }
    if (doc.contains("n_classes")) {
        cfg.n_classes = get_count(doc, "n_classes");
    }
    if (doc.contains("seed")) {
        const auto &v = doc.at("seed");
        if (!v.is_number_unsigned()) {
            throw ConfigError("\"seed\" must be a non-negative integer");
        }
        cfg.seed = v.get<std::uint64_t>();
    }
    if (doc.contains("epochs")) {
        cfg.train.epochs = get_count(doc, "epochs");
    }
    if (doc.contains("batch_size")) {
        cfg.train.batch_size = get_count(doc, "batch_size");
    }
    if (doc.contains("lr")) {
        cfg.train.lr = get_real(doc, "lr");
    }
    cfg.train.shuffle_seed = cfg.seed;

    if (doc.contains("data_dir")) {
        const std::filesystem::path dir = get_string(doc, "data_dir");
        cfg.data_dir = dir.is_absolute() ? dir : base_dir / dir;
    }
    const bool synthetic = doc.contains("synthetic") && [&] {
        const auto &v = doc.at("synthetic");
        if (!v.is_boolean()) {
            throw ConfigError("\"synthetic\" must be true or false");
        }
        return v.get<bool>();
    }();
    for (const char *key : {"per_class_train", "per_class_test", "noise_sigma"}) {
        if (doc.contains(key) && !synthetic) {
            throw ConfigError(std::string("\"") + key + "\" requires \"synthetic\": true");
        }
    }
    if (synthetic) {
        if (cfg.data_dir) {
            throw ConfigError("\"data_dir\" and \"synthetic\" are mutually exclusive");
        }
        data::SynthSpec spec;
        spec.n_classes = cfg.n_classes.value_or(spec.n_classes);
        spec.image_side = cfg.image_side;
        spec.seed = cfg.seed;
        if (doc.contains("per_class_train")) {
            spec.per_class_train = get_count(doc, "per_class_train");
        }
        if (doc.contains("per_class_test")) {
            spec.per_class_test = get_count(doc, "per_class_test");
        }
        if (doc.contains("noise_sigma")) {
            spec.noise_sigma = get_real(doc, "noise_sigma");
            if (!(spec.noise_sigma >= 0.0)) {
                throw ConfigError("\"noise_sigma\" must be >= 0");
            }
        }
        cfg.synthetic = spec;
    }

    if (doc.contains("out")) {
        cfg.out = get_string(doc, "out");
    }
    if (doc.contains("metrics")) {
        cfg.metrics = get_string(doc, "metrics");
    }

    pipeline::validate(cfg.train);
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path.string() + ": cannot open config");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        throw ConfigError(path.string() + ": not valid JSON: " + e.what());
    }
    try {
        return parse_run_config(doc, path.parent_path());
    } catch (const ConfigError &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void override_seed(RunConfig &cfg, std::uint64_t seed) {
    cfg.seed = seed;
    cfg.train.shuffle_seed = seed;
    if (cfg.synthetic) {
        cfg.synthetic->seed = seed;
    }
}

data::DatasetSplit load_dataset(const RunConfig &cfg) {
    data::DatasetSplit split;
    if (cfg.synthetic) {
        split = data::synth_dataset(*cfg.synthetic);
    } else if (cfg.data_dir) {
        split = data::load_image_dir(*cfg.data_dir, cfg.image_side);
        if (cfg.n_classes && *cfg.n_classes != split.num_classes()) {
            throw ConfigError("config says n_classes=" + std::to_string(*cfg.n_classes) + " but " +
                              cfg.data_dir->string() + " has " +
                              std::to_string(split.num_classes()) + " classes");
        }
    } else {
        throw ConfigError("no dataset configured: set \"data_dir\" or \"synthetic\": true");
    }
    if (split.train.empty() || split.test.empty()) {
        throw DataError("dataset needs non-empty train and test splits");
    }
    return split;
}

pipeline::ModelConfig model_config_for(const RunConfig &cfg, HeadKind kind,
                                       const data::DatasetSplit &split) {
    pipeline::ModelConfig m;
    m.backbone.input_channels = split.train.front().image.channels();
    m.backbone.image_side = cfg.image_side;
    m.backbone.channels = cfg.backbone_channels;
    m.n_classes = split.num_classes();
    m.seed = cfg.seed;
    if (kind == HeadKind::Quantum) {
        m.head = pipeline::QuantumHeadConfig{cfg.ansatz.value_or(head::AnsatzFamily::A1),
                                             cfg.depth.value_or(1)};
    } else {
        m.head = pipeline::ClassicalHeadConfig{cfg.pooling.value_or(nn::GlobalPoolMode::Gap)};
    }
    pipeline::validate(m);
    return m;
}

} // namespace aevqc::cli

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

#include "aevqc/pipeline/checkpoint.hpp"

#include "aevqc/error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>

namespace aevqc::pipeline {

using nlohmann::json;

namespace {

// nlohmann prints the shortest round-trip form; the file format asks for at
// least 17 significant digits, so arrays are written by hand.
void write_number(std::string &out, double x) {
    if (!std::isfinite(x)) {
        throw FormatError("cannot serialize a non-finite parameter");
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    out += buf;
}

void write_array(std::string &out, std::span<const double> values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        write_number(out, values[i]);
    }
    out += ']';
}

void write_rows(std::string &out, std::span<const double> values, std::size_t cols) {
    out += '[';
    for (std::size_t r = 0; r * cols < values.size(); ++r) {
        out += r == 0 ? "\n   " : ",\n   ";
        write_array(out, values.subspan(r * cols, cols));
    }
    out += "\n  ]";
}

} // namespace

std::string serialize_checkpoint(Model &model, const OptimizerState &optimizer) {
    const auto blocks = model.parameter_blocks();
    if (optimizer.blocks.size() != blocks.size()) {
        throw ShapeError("optimizer state does not match the model's parameter blocks");
    }
    const std::size_t fc_cols = model.fc().weights.cols();

    std::string out = "{\n \"format_version\": " + std::to_string(kCheckpointFormatVersion) +
                      ",\n \"config\": " + to_json(model.config()).dump() +
                      ",\n \"epoch\": " + std::to_string(optimizer.epoch) + ",\n \"params\": {";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        out += b == 0 ? "\n  " : ",\n  ";
        out += json(blocks[b].name).dump() + ": ";
        if (blocks[b].name == "fc") {
            write_rows(out, blocks[b].values, fc_cols);
        } else {
            write_array(out, blocks[b].values);
        }
    }
    out += "\n },\n \"adam\": {";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto &st = optimizer.blocks[b];
        out += b == 0 ? "\n  " : ",\n  ";
        out += json(blocks[b].name).dump() + ": {\"step\": " + std::to_string(st.step) +
               ", \"m\": ";
        write_array(out, st.m);
        out += ", \"v\": ";
        write_array(out, st.v);
        out += '}';
    }
    out += "\n }\n}\n";
    return out;
}

namespace {

std::vector<double> read_numbers(const json &j, std::size_t expected, const std::string &what) {
    if (!j.is_array()) {
        throw FormatError(what + ": expected an array");
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto &v : j) {
        if (v.is_array()) {
            for (const auto &x : v) {
                if (!x.is_number()) {
                    throw FormatError(what + ": non-numeric entry");
                }
                out.push_back(x.get<double>());
            }
        } else if (v.is_number()) {
            out.push_back(v.get<double>());
        } else {
            throw FormatError(what + ": non-numeric entry");
        }
    }
    if (out.size() != expected) {
        throw FormatError(what + ": expected " + std::to_string(expected) + " values, found " +
                          std::to_string(out.size()));
    }
    return out;
}

const json &field(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw FormatError(std::string("checkpoint is missing \"") + key + "\"");
    }
    return obj.at(key);
}

} // namespace

Checkpoint parse_checkpoint(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::exception &e) {
        throw FormatError(std::string("checkpoint is not valid JSON: ") + e.what());
    }
    const auto &version = field(doc, "format_version");
    if (!version.is_number_integer() || version.get<int>() != kCheckpointFormatVersion) {
        throw FormatError("unsupported checkpoint format_version " + version.dump() +
                          " (expected " + std::to_string(kCheckpointFormatVersion) + ")");
    }
    try {
        Model model(model_config_from_json(field(doc, "config")));
        OptimizerState optimizer = OptimizerState::fresh(model);
        optimizer.epoch = field(doc, "epoch").get<std::size_t>();
        const auto &params = field(doc, "params");
        const auto &adam = field(doc, "adam");
        auto blocks = model.parameter_blocks();
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto &name = blocks[b].name;
            const auto n = blocks[b].values.size();
            const auto values = read_numbers(field(params, name.c_str()), n, "params." + name);
            std::copy(values.begin(), values.end(), blocks[b].values.begin());
            const auto &a = field(adam, name.c_str());
            auto &st = optimizer.blocks[b];
            st.step = field(a, "step").get<std::size_t>();
            st.m = read_numbers(field(a, "m"), n, "adam." + name + ".m");
            st.v = read_numbers(field(a, "v"), n, "adam." + name + ".v");
        }
        if (params.size() != blocks.size() || adam.size() != blocks.size()) {
            throw FormatError("checkpoint has parameter blocks the model does not");
        }
        return {std::move(model), std::move(optimizer)};
    } catch (const json::exception &e) {
        throw FormatError(std::string("malformed checkpoint: ") + e.what());
    } catch (const ConfigError &e) {
        throw FormatError(std::string("checkpoint config is invalid: ") + e.what());
    }
}

void save_checkpoint(Model &model, const OptimizerState &optimizer,
                     const std::filesystem::path &path) {
    const auto text = serialize_checkpoint(model, optimizer);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError(path.string() + ": cannot open for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw FormatError(path.string() + ": write failed");
    }
}

Checkpoint load_checkpoint(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError(path.string() + ": cannot open checkpoint");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_checkpoint(buf.str());
    } catch (const FormatError &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

} // namespace aevqc::pipeline

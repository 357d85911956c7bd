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

#include "aevqc/cli/commands.hpp"

#include "aevqc/cli/run_config.hpp"
#include "aevqc/error.hpp"
#include "aevqc/pipeline/checkpoint.hpp"
#include "aevqc/pipeline/model.hpp"
#include "aevqc/pipeline/trainer.hpp"
#include "aevqc/quantum/circuit.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace aevqc::cli {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

RunConfig prepare(const RunOptions &opts) {
    auto cfg = load_run_config(opts.config);
    if (opts.seed) {
        override_seed(cfg, *opts.seed);
    }
    return cfg;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw DataError(path.string() + ": cannot open for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw DataError(path.string() + ": write failed");
    }
}

std::string describe(const data::MetricsReport &report) {
    std::ostringstream s;
    s << "accuracy=" << fmt(report.accuracy) << "\nmacro_f1=" << fmt(report.macro_f1)
      << "\nconfusion:\n";
    for (const auto &row : report.confusion) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            s << (c == 0 ? "" : " ") << row[c];
        }
        s << '\n';
    }
    return s.str();
}

struct TrainedModel {
    pipeline::Model model;
    pipeline::OptimizerState optimizer;
    std::vector<pipeline::EpochMetrics> history;
    data::MetricsReport test;
};

TrainedModel fit(const RunConfig &cfg, HeadKind kind, const data::DatasetSplit &split,
                 std::size_t threads, std::ostream &log, std::string_view tag) {
    pipeline::Model model(model_config_for(cfg, kind, split));
    auto optimizer = pipeline::OptimizerState::fresh(model);
    pipeline::TrainOptions options;
    options.threads = threads;
    options.on_epoch = [&](const pipeline::EpochMetrics &m) {
        log << tag << "epoch " << m.epoch << " loss=" << fmt(m.loss)
            << " train_acc=" << fmt(m.train_acc) << '\n';
    };
    auto history = pipeline::train(model, optimizer, split.train, cfg.train, options);
    auto test = pipeline::evaluate(model, split.test, threads);
    return {std::move(model), std::move(optimizer), std::move(history), std::move(test)};
}

} // namespace

void cmd_train(const RunOptions &opts, std::ostream &log) {
    const auto cfg = prepare(opts);
    if (!cfg.head_kind) {
        throw ConfigError("train needs \"head_kind\" in the config");
    }
    const auto out = opts.out ? opts.out : cfg.out;
    const auto metrics = opts.metrics ? opts.metrics : cfg.metrics;
    const auto split = load_dataset(cfg);

    auto run = fit(cfg, *cfg.head_kind, split, opts.threads, log, "");
    if (out) {
        pipeline::save_checkpoint(run.model, run.optimizer, *out);
    }
    if (metrics) {
        pipeline::write_metrics_csv(*metrics, run.history);
    }
    log << "test_accuracy=" << fmt(run.test.accuracy) << '\n'
        << "test_macro_f1=" << fmt(run.test.macro_f1) << '\n';
}

void cmd_eval(const RunOptions &opts, std::ostream &log) {
    if (!opts.checkpoint) {
        throw ConfigError("eval needs --checkpoint");
    }
    const auto cfg = prepare(opts);
    const auto ckpt = pipeline::load_checkpoint(*opts.checkpoint);
    const auto split = load_dataset(cfg);
    const auto &mc = ckpt.model.config();
    if (split.num_classes() != mc.n_classes) {
        throw DataError("dataset has " + std::to_string(split.num_classes()) +
                        " classes but the checkpoint was trained for " +
                        std::to_string(mc.n_classes));
    }
    const auto report = pipeline::evaluate(ckpt.model, split.test, opts.threads);
    const auto text = describe(report);
    if (opts.out) {
        write_text(*opts.out, text);
    }
    log << text;
}

void cmd_compare(const RunOptions &opts, std::ostream &log) {
    const auto cfg = prepare(opts);
    if (cfg.head_kind) {
        throw ConfigError("compare trains both heads; remove \"head_kind\" from the config");
    }
    const auto out = opts.out ? opts.out : cfg.out;
    const auto split = load_dataset(cfg);

    std::string report = "model,params_after_backbone,accuracy,macro_f1\n";
    for (const auto kind : {HeadKind::Classical, HeadKind::Quantum}) {
        const std::string name = kind == HeadKind::Classical ? "classical" : "quantum";
        const auto run = fit(cfg, kind, split, opts.threads, log, name + " ");
        report += name + "," + std::to_string(run.model.head_param_count()) + "," +
                  fmt(run.test.accuracy) + "," + fmt(run.test.macro_f1) + "\n";
    }
    if (out) {
        write_text(*out, report);
    }
    log << report;
}

void cmd_circuit(const head::AnsatzSpec &spec, std::ostream &out) {
    quantum::write_circuit(out, head::build_ansatz(spec));
}

void cmd_params(const ParamsQuery &query, std::ostream &out) {
    if (!query.ansatz && !query.classical_channels) {
        throw ConfigError("params needs an ansatz spec or --classical-channels");
    }
    if (query.ansatz) {
        const auto counts = head::count_head_params(*query.ansatz, query.n_classes);
        out << "quantum=" << counts.quantum << "\nclassical_fc=" << counts.classical_fc
            << "\ntotal=" << counts.total << '\n';
    }
    if (query.classical_channels) {
        out << "classical_head="
            << head::count_classical_head_params(*query.classical_channels, query.n_classes)
            << '\n';
    }
}

} // namespace aevqc::cli

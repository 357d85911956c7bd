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

#include "CLI11.hpp"

#include "aevqc/cli/commands.hpp"
#include "aevqc/error.hpp"
#include "aevqc/head/vqc_head.hpp"

#include <exception>
#include <iostream>
#include <map>
#include <string>

using namespace aevqc;

namespace {

void add_run_flags(CLI::App &cmd, cli::RunOptions &opts, bool with_metrics) {
    cmd.add_option("--config", opts.config, "Run config (flat JSON)")->required();
    cmd.add_option("--out", opts.out, "Primary output path");
    if (with_metrics) {
        cmd.add_option("--metrics", opts.metrics, "Per-epoch metrics CSV");
    }
    cmd.add_option("--threads", opts.threads, "Worker threads; results do not depend on it")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--seed", opts.seed, "Overrides the config seed");
}

struct AnsatzArgs {
    std::string ansatz;
    std::size_t qubits = 0;
    std::size_t depth = 1;

    [[nodiscard]] head::AnsatzSpec spec() const {
        const auto family = head::parse_family(ansatz);
        if (!family) {
            throw ConfigError("unknown ansatz '" + ansatz + "' (expected a1 or a2)");
        }
        head::AnsatzSpec s{*family, qubits, depth};
        s.validate();
        return s;
    }
};

void add_ansatz_flags(CLI::App &cmd, AnsatzArgs &args, bool required) {
    auto *a = cmd.add_option("--ansatz", args.ansatz, "a1 or a2");
    auto *q = cmd.add_option("--qubits", args.qubits, "Number of qubits");
    cmd.add_option("--depth", args.depth, "Number of ansatz layers")->capture_default_str();
    if (required) {
        a->required();
        q->required();
    } else {
        q->needs(a);
        a->needs(q);
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hybrid classical / variational-quantum image classifier"};
    app.require_subcommand(1);

    cli::RunOptions train_opts;
    auto *train = app.add_subcommand("train", "Train one model and write checkpoint + metrics");
    add_run_flags(*train, train_opts, true);

    cli::RunOptions eval_opts;
    auto *eval = app.add_subcommand("eval", "Evaluate a checkpoint on the configured test split");
    add_run_flags(*eval, eval_opts, false);
    eval->add_option("--checkpoint", eval_opts.checkpoint, "Checkpoint to evaluate")->required();

    cli::RunOptions compare_opts;
    auto *compare = app.add_subcommand("compare", "Train classical and quantum heads side by side");
    add_run_flags(*compare, compare_opts, false);

    AnsatzArgs circuit_args;
    auto *circuit = app.add_subcommand("circuit", "Print an ansatz circuit");
    add_ansatz_flags(*circuit, circuit_args, true);

    AnsatzArgs params_args;
    cli::ParamsQuery params_query;
    auto *params = app.add_subcommand("params", "Count trainable parameters after the backbone");
    add_ansatz_flags(*params, params_args, false);
    params->add_option("--classes", params_query.n_classes, "Number of classes")->capture_default_str();
    params->add_option("--classical-channels", params_query.classical_channels,
                       "Feature channels of a classical pooling head");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*train) {
            cli::cmd_train(train_opts, std::cout);
        } else if (*eval) {
            cli::cmd_eval(eval_opts, std::cout);
        } else if (*compare) {
            cli::cmd_compare(compare_opts, std::cout);
        } else if (*circuit) {
            cli::cmd_circuit(circuit_args.spec(), std::cout);
        } else if (*params) {
            if (!params_args.ansatz.empty()) {
                params_query.ansatz = params_args.spec();
            }
            cli::cmd_params(params_query, std::cout);
        }
    } catch (const std::exception &e) {
        std::cerr << "aevqc: error: " << e.what() << '\n';
        return 1;
    }
    std::cout.flush();
    return std::cout ? 0 : 1;
}

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

#include "temp_dir.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

using testing_support::read_file;
using testing_support::TempDir;
using testing_support::write_file;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run_cli(const TempDir &dir, const std::string &args) {
    const auto out = dir / "stdout.txt";
    const auto err = dir / "stderr.txt";
    const std::string cmd = std::string("\"") + AEVQC_CLI_PATH + "\" " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    const int raw = std::system(cmd.c_str());
    const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {status, read_file(out), read_file(err)};
}

std::size_t count_lines(const std::string &text, const std::string &prefix = "") {
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) {
        n += line.rfind(prefix, 0) == 0 ? 1 : 0;
    }
    return n;
}

const char *kSmallSynth = R"({"synthetic": true, "per_class_train": 6, "per_class_test": 2,
    "seed": 4, "epochs": 3, "batch_size": 4)";

std::string config(const std::string &extra) {
    return std::string(kSmallSynth) + (extra.empty() ? "" : ", " + extra) + "}";
}

} // namespace

TEST_CASE("cli circuit prints the ansatz dump", "[cli]") {
    TempDir dir;
    auto r = run_cli(dir, "circuit --ansatz a1 --qubits 3 --depth 1");
    REQUIRE(r.status == 0);
    CHECK(r.out == "qubits=3 params=3\nRX 0 slot=0\nRX 1 slot=1\nRX 2 slot=2\n");

    r = run_cli(dir, "circuit --ansatz a2 --qubits 3 --depth 1");
    REQUIRE(r.status == 0);
    CHECK(count_lines(r.out, "qubits=3 params=6") == 1);
    CHECK(count_lines(r.out, "H ") == 3);
    CHECK(count_lines(r.out, "RX ") == 3);
    CHECK(count_lines(r.out, "RZ ") == 3);
    CHECK(count_lines(r.out, "CNOT ") == 2);

    r = run_cli(dir, "circuit --ansatz a2 --qubits 1 --depth 1");
    REQUIRE(r.status == 0);
    CHECK(count_lines(r.out, "CNOT") == 0);

    CHECK(run_cli(dir, "circuit --ansatz a3 --qubits 3").status != 0);
    CHECK(run_cli(dir, "circuit --ansatz a1 --qubits 0").status != 0);
    CHECK(run_cli(dir, "circuit --ansatz a1 --qubits 3 --depth 0").status != 0);
}

TEST_CASE("cli params reproduces head-size arithmetic", "[cli]") {
    TempDir dir;
    auto r = run_cli(dir, "params --ansatz a1 --qubits 15 --depth 1 --classes 10");
    REQUIRE(r.status == 0);
    CHECK(r.out == "quantum=15\nclassical_fc=150\ntotal=165\n");

    r = run_cli(dir, "params --ansatz a2 --qubits 15 --depth 1 --classes 10");
    REQUIRE(r.status == 0);
    CHECK(r.out == "quantum=30\nclassical_fc=150\ntotal=180\n");

    r = run_cli(dir, "params --classical-channels 512 --classes 10");
    REQUIRE(r.status == 0);
    CHECK(r.out == "classical_head=5120\n");

    CHECK(run_cli(dir, "params").status != 0);
    CHECK(run_cli(dir, "params --ansatz a1 --qubits 4 --classes 1").status != 0);
}

TEST_CASE("cli train writes checkpoint and metrics", "[cli]") {
    TempDir dir;
    write_file(dir / "run.json", config(R"("head_kind": "quantum", "ansatz": "a2")"));
    const auto args = "train --config \"" + (dir / "run.json").string() + "\" --out \"" +
                      (dir / "model.json").string() + "\" --metrics \"" +
                      (dir / "metrics.csv").string() + "\"";
    auto r = run_cli(dir, args);
    INFO(r.err);
    REQUIRE(r.status == 0);
    const auto csv = read_file(dir / "metrics.csv");
    CHECK(csv.rfind("epoch,loss,train_acc\n", 0) == 0);
    CHECK(count_lines(csv) == 1 + 3);
    CHECK(count_lines(r.out, "test_accuracy=") == 1);
    CHECK(count_lines(r.out, "test_macro_f1=") == 1);

    // rerun overwrites with identical bytes
    const auto first_ckpt = read_file(dir / "model.json");
    REQUIRE(run_cli(dir, args).status == 0);
    CHECK(read_file(dir / "model.json") == first_ckpt);
    CHECK(read_file(dir / "metrics.csv") == csv);

    // and the checkpoint evaluates
    r = run_cli(dir, "eval --config \"" + (dir / "run.json").string() + "\" --checkpoint \"" +
                         (dir / "model.json").string() + "\"");
    INFO(r.err);
    REQUIRE(r.status == 0);
    CHECK(count_lines(r.out, "accuracy=") == 1);
    CHECK(count_lines(r.out, "macro_f1=") == 1);

    // --seed overrides the config
    REQUIRE(run_cli(dir, args + " --seed 99").status == 0);
    CHECK(read_file(dir / "model.json") != first_ckpt);
}

TEST_CASE("cli config guards", "[cli][errors]") {
    TempDir dir;
    auto train_with = [&](const std::string &body) {
        write_file(dir / "bad.json", body);
        return run_cli(dir, "train --config \"" + (dir / "bad.json").string() + "\"");
    };

    auto r = train_with(config(R"("head_kind": "quantum", "epcohs": 3)"));
    CHECK(r.status != 0);
    CHECK(r.err.find("epcohs") != std::string::npos);

    r = train_with(config(R"("head_kind": "quantum", "epochs": 0)"));
    CHECK(r.status != 0);
    CHECK_FALSE(r.err.empty());

    CHECK(train_with(config(R"("head_kind": "classical", "ansatz": "a1")")).status != 0);
    CHECK(train_with(config(R"("head_kind": "quantum", "pooling": "gap")")).status != 0);
    CHECK(train_with(config(R"("head_kind": "hybrid")")).status != 0);
    CHECK(train_with(config("")).status != 0); // no head_kind
    CHECK(train_with(R"({"head_kind": "quantum", "epochs": 1})").status != 0);
    CHECK(train_with("{not json").status != 0);
    CHECK(train_with(config(R"("head_kind": "quantum", "n_classes": 1)")).status != 0);
    CHECK(run_cli(dir, "train --config /nonexistent/run.json").status != 0);
    CHECK(run_cli(dir, "frobnicate").status != 0);
}

TEST_CASE("cli compare emits both rows", "[cli]") {
    TempDir dir;
    write_file(dir / "cmp.json", config(""));
    const auto args = "compare --config \"" + (dir / "cmp.json").string() + "\" --out \"" +
                      (dir / "report.csv").string() + "\"";
    auto r = run_cli(dir, args);
    INFO(r.err);
    REQUIRE(r.status == 0);
    const auto report = read_file(dir / "report.csv");
    CHECK(report.rfind("model,params_after_backbone,accuracy,macro_f1\n", 0) == 0);
    CHECK(count_lines(report, "classical,32,") == 1);
    CHECK(count_lines(report, "quantum,24,") == 1);

    REQUIRE(run_cli(dir, args).status == 0);
    CHECK(read_file(dir / "report.csv") == report);

    write_file(dir / "bad.json", config(R"("head_kind": "quantum")"));
    CHECK(run_cli(dir, "compare --config \"" + (dir / "bad.json").string() + "\"").status != 0);
    write_file(dir / "nodata.json", R"({"epochs": 1})");
    r = run_cli(dir, "compare --config \"" + (dir / "nodata.json").string() + "\"");
    CHECK(r.status != 0);
    CHECK(r.err.find("dataset") != std::string::npos);
}

TEST_CASE("cli trains from an image directory", "[cli]") {
    TempDir dir;
    auto pgm = [](unsigned char v) {
        return "P5\n8 8\n255\n" + std::string(64, static_cast<char>(v));
    };
    for (const auto *split : {"train", "test"}) {
        for (int i = 0; i < 3; ++i) {
            write_file(dir / (std::string("data/") + split + "/dark/" + std::to_string(i) + ".pgm"),
                       pgm(static_cast<unsigned char>(20 + i)));
            write_file(dir / (std::string("data/") + split + "/light/" + std::to_string(i) + ".pgm"),
                       pgm(static_cast<unsigned char>(220 + i)));
        }
    }
    write_file(dir / "run.json",
               R"({"head_kind": "classical", "data_dir": "data", "epochs": 2, "batch_size": 2})");
    auto r = run_cli(dir, "train --config \"" + (dir / "run.json").string() + "\"");
    INFO(r.err);
    CHECK(r.status == 0);

    write_file(dir / "run.json", R"({"head_kind": "classical", "data_dir": "data", "n_classes": 3})");
    CHECK(run_cli(dir, "train --config \"" + (dir / "run.json").string() + "\"").status != 0);
}

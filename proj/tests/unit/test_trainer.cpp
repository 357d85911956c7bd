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

#include "aevqc/data/dataset.hpp"
#include "aevqc/error.hpp"
#include "aevqc/pipeline/checkpoint.hpp"
#include "aevqc/pipeline/trainer.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace aevqc;
using namespace aevqc::pipeline;

namespace {

ModelConfig quantum_model(std::uint64_t seed) {
    ModelConfig cfg;
    cfg.seed = seed;
    cfg.head = QuantumHeadConfig{head::AnsatzFamily::A1, 1};
    return cfg;
}

data::DatasetSplit small_set(std::uint64_t seed, std::size_t per_class = 10) {
    data::SynthSpec spec;
    spec.per_class_train = per_class;
    spec.per_class_test = 4;
    spec.seed = seed;
    return data::synth_dataset(spec);
}

std::vector<std::vector<double>> snapshot(Model &m) {
    std::vector<std::vector<double>> out;
    for (const auto &b : m.parameter_blocks()) {
        out.emplace_back(b.values.begin(), b.values.end());
    }
    return out;
}

} // namespace

TEST_CASE("lr = 0 leaves every parameter bit-identical", "[trainer]") {
    for (const bool quantum : {false, true}) {
        ModelConfig cfg = quantum ? quantum_model(2) : ModelConfig{};
        Model m(cfg);
        const auto before = snapshot(m);
        auto opt = OptimizerState::fresh(m);
        TrainConfig tc;
        tc.epochs = 3;
        tc.batch_size = 7;
        tc.lr = 0.0;
        const auto hist = train(m, opt, small_set(2).train, tc);
        CHECK(hist.size() == 3);
        CHECK(snapshot(m) == before);
        CHECK(opt.epoch == 3);
        CHECK(opt.blocks.front().step == 3 * 3); // 20 samples / batch 7 -> 3 batches
        // identical parameters give identical per-epoch loss
        CHECK(hist[0].loss == hist[2].loss);
    }
}

TEST_CASE("quantum head descends on a separable set", "[trainer]") {
    Model m(quantum_model(5));
    auto opt = OptimizerState::fresh(m);
    TrainConfig tc;
    tc.epochs = 50;
    const auto split = small_set(5, 20);
    const auto hist = train(m, opt, split.train, tc);
    REQUIRE(hist.size() == 50);
    CHECK(hist.back().loss < hist.front().loss);
    CHECK(hist.back().epoch == 50);
    const auto report = evaluate(m, split.test);
    CHECK(report.accuracy > 0.5);
}

TEST_CASE("training is deterministic and independent of thread count", "[trainer][determinism]") {
    const auto split = small_set(9);
    TrainConfig tc;
    tc.epochs = 4;
    tc.batch_size = 6;
    tc.shuffle_seed = 9;

    auto run = [&](std::size_t threads) {
        Model m(quantum_model(9));
        auto opt = OptimizerState::fresh(m);
        TrainOptions options;
        options.threads = threads;
        auto hist = train(m, opt, split.train, tc, options);
        return std::make_pair(hist, serialize_checkpoint(m, opt));
    };
    const auto a = run(1);
    const auto b = run(1);
    const auto c = run(4);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
    CHECK(a.first == c.first);
    CHECK(a.second == c.second);
}

TEST_CASE("shuffle seed changes the batch order", "[trainer]") {
    const auto split = small_set(1);
    TrainConfig tc;
    tc.epochs = 2;
    tc.batch_size = 4;
    auto losses = [&](std::uint64_t shuffle) {
        Model m(quantum_model(1));
        auto opt = OptimizerState::fresh(m);
        tc.shuffle_seed = shuffle;
        return train(m, opt, split.train, tc).back().loss;
    };
    CHECK(losses(1) != losses(2));
}

TEST_CASE("epoch callback sees every epoch", "[trainer]") {
    Model m(ModelConfig{});
    auto opt = OptimizerState::fresh(m);
    TrainConfig tc;
    tc.epochs = 3;
    std::vector<std::size_t> seen;
    TrainOptions options;
    options.on_epoch = [&](const EpochMetrics &e) { seen.push_back(e.epoch); };
    (void)train(m, opt, small_set(0).train, tc, options);
    CHECK(seen == std::vector<std::size_t>{1, 2, 3});
    // resuming continues the epoch counter
    (void)train(m, opt, small_set(0).train, tc, options);
    CHECK(seen.back() == 6);
}

TEST_CASE("trainer guards", "[trainer][errors]") {
    Model m(ModelConfig{});
    auto opt = OptimizerState::fresh(m);
    TrainConfig tc;
    tc.epochs = 1;
    auto split = small_set(0);

    CHECK_THROWS_AS(train(m, opt, {}, tc), DataError);
    auto bad_label = split.train;
    bad_label[3].label = 2;
    CHECK_THROWS_AS(train(m, opt, bad_label, tc), DataError);
    auto bad_shape = split.train;
    bad_shape[0].image = nn::FeatureTensor(1, 9, 9, 0.0);
    CHECK_THROWS_AS(train(m, opt, bad_shape, tc), DataError);

    TrainConfig zero_epochs = tc;
    zero_epochs.epochs = 0;
    CHECK_THROWS_AS(train(m, opt, split.train, zero_epochs), ConfigError);
    TrainConfig zero_batch = tc;
    zero_batch.batch_size = 0;
    CHECK_THROWS_AS(train(m, opt, split.train, zero_batch), ConfigError);

    OptimizerState wrong;
    CHECK_THROWS_AS(train(m, wrong, split.train, tc), ShapeError);

    ModelConfig one_class;
    one_class.n_classes = 1;
    CHECK_THROWS_AS(Model(one_class), ConfigError);

    CHECK_THROWS_AS(evaluate(m, {}), DataError);
}

TEST_CASE("non-finite loss aborts with a divergence error", "[trainer][errors]") {
    Model m(ModelConfig{});
    auto opt = OptimizerState::fresh(m);
    for (auto &w : m.parameter_blocks().back().values) {
        w = std::numeric_limits<double>::infinity();
    }
    TrainConfig tc;
    tc.epochs = 1;
    CHECK_THROWS_AS(train(m, opt, small_set(0).train, tc), DivergenceError);
}

TEST_CASE("evaluate reports base rate for a constant model", "[trainer]") {
    Model m(ModelConfig{});
    for (auto &w : m.parameter_blocks().back().values) {
        w = 0.0; // all logits zero -> argmax picks class 0
    }
    const auto report = evaluate(m, small_set(0).test);
    CHECK(report.accuracy == 0.5);
    CHECK(report.confusion[1][0] == 4);
}

TEST_CASE("metrics CSV layout", "[trainer]") {
    std::ostringstream out;
    const std::vector<EpochMetrics> rows{{1, 0.5, 0.25}, {2, 0.1, 1.0}};
    write_metrics_csv(out, rows);
    CHECK(out.str() == "epoch,loss,train_acc\n1,0.5,0.25\n2,0.10000000000000001,1\n");
}

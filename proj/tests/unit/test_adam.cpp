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

#include "aevqc/error.hpp"
#include "aevqc/nn/adam.hpp"
#include "aevqc/rng.hpp"

#include <catch_amalgamated.hpp>

using namespace aevqc;
using namespace aevqc::nn;
using Catch::Matchers::WithinAbs;

TEST_CASE("adam with zero gradient leaves parameters unchanged", "[adam]") {
    std::vector<double> p{0.5, -1.0, 3.0};
    const auto before = p;
    AdamState s(3);
    adam_step(p, std::vector<double>(3, 0.0), s, AdamConfig{});
    CHECK(p == before);
    CHECK(s.step == 1);
}

TEST_CASE("adam first step on unit gradient", "[adam]") {
    std::vector<double> p{0.0};
    AdamState s(1);
    adam_step(p, std::vector<double>{1.0}, s, AdamConfig{});
    // m_hat = v_hat = 1 after bias correction at t = 1
    CHECK_THAT(p[0], WithinAbs(-0.001 / (1.0 + 1e-8), 1e-18));
}

TEST_CASE("adam under a constant gradient decreases monotonically", "[adam]") {
    std::vector<double> p{1.0};
    AdamState s(1);
    double prev = p[0];
    for (int i = 0; i < 100; ++i) {
        adam_step(p, std::vector<double>{0.7}, s, AdamConfig{});
        CHECK(p[0] < prev);
        prev = p[0];
    }
}

TEST_CASE("adam with lr = 0 never moves parameters", "[adam][property]") {
    Rng rng{1};
    std::vector<double> p(20);
    for (auto &x : p) {
        x = rng.normal();
    }
    const auto before = p;
    AdamState s(p.size());
    AdamConfig cfg;
    cfg.lr = 0.0;
    for (int step = 0; step < 30; ++step) {
        std::vector<double> g(p.size());
        for (auto &x : g) {
            x = rng.normal() * 10;
        }
        adam_step(p, g, s, cfg);
    }
    CHECK(p == before);
    for (const double v : s.v) {
        CHECK(v >= 0.0);
    }
}

TEST_CASE("adam shape errors", "[adam]") {
    std::vector<double> p(2);
    AdamState s(2);
    CHECK_THROWS_AS(adam_step(p, std::vector<double>(3), s, AdamConfig{}), ShapeError);
    AdamState wrong(1);
    CHECK_THROWS_AS(adam_step(p, std::vector<double>(2), wrong, AdamConfig{}), ShapeError);
}

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
#include "aevqc/head/encoding.hpp"
#include "aevqc/head/vqc_head.hpp"
#include "aevqc/rng.hpp"

#include "random_circuits.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace aevqc;
using namespace aevqc::head;
using aevqc::quantum::Complex;
using aevqc::quantum::GateKind;
using Catch::Matchers::WithinAbs;

TEST_CASE("qubits_needed rounds log2 up", "[head]") {
    CHECK(qubits_needed(25088) == 15);
    CHECK(qubits_needed(8) == 3);
    CHECK(qubits_needed(9) == 4);
    CHECK(qubits_needed(2) == 1);
    CHECK(qubits_needed(1) == 1);
    CHECK_THROWS_AS(qubits_needed(0), DomainError);
}

TEST_CASE("amplitude_encode examples", "[head]") {
    const auto basis = amplitude_encode(std::vector<double>{1, 0, 0, 0});
    CHECK(basis.num_qubits() == 2);
    CHECK(basis[0] == Complex{1.0, 0.0});

    const auto pair = amplitude_encode(std::vector<double>{3, 4});
    CHECK(pair.num_qubits() == 1);
    CHECK_THAT(pair[0].real(), WithinAbs(0.6, 1e-15));
    CHECK_THAT(pair[1].real(), WithinAbs(0.8, 1e-15));

    const auto padded = amplitude_encode(std::vector<double>{1, 1, 1});
    const double r = 1.0 / std::sqrt(3.0);
    CHECK(padded.num_qubits() == 2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK_THAT(padded[i].real(), WithinAbs(r, 1e-15));
        CHECK(padded[i].imag() == 0.0);
    }
    CHECK(padded[3] == Complex{});

    const auto negative = amplitude_encode(std::vector<double>{-3, 4});
    CHECK_THAT(negative[0].real(), WithinAbs(-0.6, 1e-15));

    CHECK_THROWS_AS(amplitude_encode(std::vector<double>{0, 0, 0}), DegenerateInputError);
    CHECK_THROWS_AS(amplitude_encode(std::vector<double>{1e-14, 0}), DegenerateInputError);
}

TEST_CASE("amplitude_encode is scale invariant and zero-pads", "[head][property]") {
    Rng rng{4};
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = testing_support::random_normal(rng, 1 + rng.below(100));
        const double scale = std::exp(rng.uniform(-10, 10));
        std::vector<double> scaled(x);
        for (auto &v : scaled) {
            v *= scale;
        }
        const auto a = amplitude_encode(x);
        const auto b = amplitude_encode(scaled);
        CHECK(testing_support::max_abs_diff(a.amplitudes(), b.amplitudes()) < 1e-12);
        CHECK(std::abs(a.norm_squared() - 1.0) < 1e-12);
        for (std::size_t i = x.size(); i < a.size(); ++i) {
            CHECK(a[i] == Complex{});
        }
    }
}

TEST_CASE("build_ansatz gate layout", "[head]") {
    SECTION("A1, n=3, D=1") {
        const auto c = build_ansatz({AnsatzFamily::A1, 3, 1});
        REQUIRE(c.gates().size() == 3);
        CHECK(c.num_params() == 3);
        for (std::size_t q = 0; q < 3; ++q) {
            CHECK(c.gates()[q].kind == GateKind::RX);
            CHECK(c.gates()[q].wires[0] == q);
            CHECK(*c.gates()[q].param_slot == q);
        }
    }
    SECTION("A2, n=3, D=1") {
        const auto c = build_ansatz({AnsatzFamily::A2, 3, 1});
        CHECK(c.num_params() == 6);
        CHECK(quantum::dump_circuit(c) ==
              "qubits=3 params=6\n"
              "H 0\nH 1\nH 2\n"
              "RX 0 slot=0\nRX 1 slot=1\nRX 2 slot=2\n"
              "RZ 0 slot=3\nRZ 1 slot=4\nRZ 2 slot=5\n"
              "CNOT 0,1\nCNOT 1,2\n");
    }
    SECTION("A2 repeats only the rotation/CNOT block") {
        const auto c = build_ansatz({AnsatzFamily::A2, 4, 3});
        std::size_t h = 0;
        std::size_t cnot = 0;
        for (const auto &g : c.gates()) {
            h += g.kind == GateKind::H;
            cnot += g.kind == GateKind::CNOT;
        }
        CHECK(h == 4);
        CHECK(cnot == 9);
        CHECK(c.num_params() == 24);
    }
    SECTION("A1, n=15, D=1") {
        CHECK(build_ansatz({AnsatzFamily::A1, 15, 1}).num_params() == 15);
    }
    SECTION("A2 with one qubit has no CNOT") {
        const auto c = build_ansatz({AnsatzFamily::A2, 1, 1});
        CHECK(c.gates().size() == 3);
    }
    SECTION("invalid specs") {
        CHECK_THROWS_AS(build_ansatz({AnsatzFamily::A1, 3, 0}), DomainError);
        CHECK_THROWS_AS(build_ansatz({AnsatzFamily::A1, 0, 1}), CapacityError);
    }
}

TEST_CASE("AnsatzSpec parameter counts", "[head][property]") {
    for (std::size_t n = 1; n <= 15; ++n) {
        for (std::size_t d = 1; d <= 5; ++d) {
            const AnsatzSpec a1{AnsatzFamily::A1, n, d};
            const AnsatzSpec a2{AnsatzFamily::A2, n, d};
            CHECK(a1.num_params() == n * d);
            CHECK(a2.num_params() == 2 * n * d);
            CHECK(build_ansatz(a1).num_params() == a1.num_params());
            CHECK(build_ansatz(a2).num_params() == a2.num_params());
        }
    }
}

TEST_CASE("count_head_params", "[head]") {
    CHECK(count_head_params({AnsatzFamily::A1, 15, 1}, 10) == HeadParamCount{15, 150, 165});
    CHECK(count_head_params({AnsatzFamily::A1, 15, 10}, 10) == HeadParamCount{150, 150, 300});
    CHECK(count_head_params({AnsatzFamily::A2, 3, 2}, 2) == HeadParamCount{12, 6, 18});
    for (std::size_t d = 1; d <= 10; ++d) {
        CHECK(count_head_params({AnsatzFamily::A1, 15, d}, 10).total == 15 * (d + 10));
    }
    CHECK(count_classical_head_params(512, 10) == 5120);
    CHECK_THROWS_AS(count_head_params({AnsatzFamily::A1, 3, 1}, 1), DomainError);
}

TEST_CASE("head_forward closed-form values", "[head]") {
    QuantumHead a1(AnsatzFamily::A1, 1, 2);
    CHECK(a1.spec().n_qubits == 1);
    a1.set_theta({0.0});
    CHECK_THAT(head_forward(a1, std::vector<double>{1, 0})[0], WithinAbs(1.0, 1e-15));
    a1.set_theta({std::numbers::pi / 3});
    CHECK_THAT(head_forward(a1, std::vector<double>{1, 0})[0], WithinAbs(0.5, 1e-15));

    // H layer -> uniform state; zero rotations; CNOT permutes equal amplitudes.
    QuantumHead a2(AnsatzFamily::A2, 1, 4);
    const auto out = head_forward(a2, std::vector<double>{1, 0, 0, 0});
    REQUIRE(out.size() == 2);
    CHECK_THAT(out[0], WithinAbs(0.0, 1e-15));
    CHECK_THAT(out[1], WithinAbs(0.0, 1e-15));

    CHECK_THROWS_AS(a1.forward(std::vector<double>{1, 0, 0}), ShapeError);
    CHECK_THROWS_AS(a1.set_theta({0.1, 0.2}), ShapeError);
}

TEST_CASE("A1 depth layers compose by angle addition", "[head][property]") {
    Rng rng{21};
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t len = 2 + rng.below(60);
        const auto x = testing_support::random_normal(rng, len);
        QuantumHead deep(AnsatzFamily::A1, 2, len);
        QuantumHead shallow(AnsatzFamily::A1, 1, len);
        const std::size_t n = deep.spec().n_qubits;
        std::vector<double> two(2 * n);
        std::vector<double> one(n);
        for (std::size_t q = 0; q < n; ++q) {
            two[q] = rng.uniform(0, 6.28);
            two[n + q] = rng.uniform(0, 6.28);
            one[q] = two[q] + two[n + q];
        }
        deep.set_theta(two);
        shallow.set_theta(one);
        const auto a = deep.forward(x);
        const auto b = shallow.forward(x);
        for (std::size_t q = 0; q < n; ++q) {
            CHECK_THAT(a[q], WithinAbs(b[q], 1e-12));
        }
    }
}

TEST_CASE("head outputs are bounded and invariant to positive rescaling", "[head][property]") {
    Rng rng{22};
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t len = 1 + rng.below(200);
        const auto family = rng.below(2) ? AnsatzFamily::A1 : AnsatzFamily::A2;
        QuantumHead head(family, 1 + rng.below(3), len);
        head.init_theta(rng);
        for (const double t : head.theta()) {
            CHECK(t >= 0.0);
            CHECK(t < 2 * std::numbers::pi);
        }
        auto x = testing_support::random_normal(rng, len);
        const auto a = head.forward(x);
        for (auto &v : x) {
            v *= 37.5;
        }
        const auto b = head.forward(x);
        for (std::size_t q = 0; q < a.size(); ++q) {
            CHECK(a[q] >= -1.0);
            CHECK(a[q] <= 1.0);
            CHECK_THAT(a[q], WithinAbs(b[q], 1e-12));
        }
    }
}

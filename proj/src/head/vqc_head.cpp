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

#include "aevqc/head/vqc_head.hpp"

#include "aevqc/error.hpp"
#include "aevqc/head/encoding.hpp"
#include "aevqc/rng.hpp"

#include <cctype>
#include <numbers>
#include <string>

namespace aevqc::head {

using quantum::Gate;
using quantum::GateKind;

std::string_view family_name(AnsatzFamily family) {
    return family == AnsatzFamily::A1 ? "a1" : "a2";
}

std::optional<AnsatzFamily> parse_family(std::string_view name) {
    std::string lower;
    for (const char c : name) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (lower == "a1") {
        return AnsatzFamily::A1;
    }
    if (lower == "a2") {
        return AnsatzFamily::A2;
    }
    return std::nullopt;
}

std::size_t AnsatzSpec::num_params() const {
    const std::size_t per_layer = family == AnsatzFamily::A1 ? n_qubits : 2 * n_qubits;
    return per_layer * depth;
}

void AnsatzSpec::validate() const {
    quantum::check_qubit_count(n_qubits);
    if (depth < 1) {
        throw DomainError("ansatz depth must be at least 1");
    }
}

quantum::Circuit build_ansatz(const AnsatzSpec &spec) {
    spec.validate();
    const std::size_t n = spec.n_qubits;
    std::vector<Gate> gates;
    std::size_t slot = 0;
    if (spec.family == AnsatzFamily::A2) {
        for (std::size_t q = 0; q < n; ++q) {
            gates.push_back(Gate::fixed(GateKind::H, q));
        }
    }
    for (std::size_t layer = 0; layer < spec.depth; ++layer) {
        for (std::size_t q = 0; q < n; ++q) {
            gates.push_back(Gate::rotation(GateKind::RX, q, slot++));
        }
        if (spec.family == AnsatzFamily::A1) {
            continue;
        }
        for (std::size_t q = 0; q < n; ++q) {
            gates.push_back(Gate::rotation(GateKind::RZ, q, slot++));
        }
        for (std::size_t q = 0; q + 1 < n; ++q) {
            gates.push_back(Gate::cnot(q, q + 1));
        }
    }
    return quantum::Circuit{n, std::move(gates)};
}

HeadParamCount count_head_params(const AnsatzSpec &spec, std::size_t n_classes) {
    if (n_classes < 2) {
        throw DomainError("at least two classes are required");
    }
    const std::size_t q = spec.num_params();
    const std::size_t fc = spec.n_qubits * n_classes;
    return {q, fc, q + fc};
}

std::size_t count_classical_head_params(std::size_t channels, std::size_t n_classes) {
    if (n_classes < 2) {
        throw DomainError("at least two classes are required");
    }
    return channels * n_classes;
}

QuantumHead::QuantumHead(AnsatzFamily family, std::size_t depth, std::size_t input_len)
    : spec_{family, qubits_needed(input_len), depth}, circuit_(build_ansatz(spec_)),
      input_len_(input_len), theta_(spec_.num_params(), 0.0) {}

void QuantumHead::set_theta(std::vector<double> theta) {
    if (theta.size() != spec_.num_params()) {
        throw ShapeError("theta has length " + std::to_string(theta.size()) +
                         ", expected " + std::to_string(spec_.num_params()));
    }
    theta_ = std::move(theta);
}

void QuantumHead::init_theta(Rng &rng) {
    for (auto &t : theta_) {
        t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
}

void QuantumHead::check_input(std::span<const double> raw) const {
    if (raw.size() != input_len_) {
        throw ShapeError("head expects " + std::to_string(input_len_) +
                         " features, got " + std::to_string(raw.size()));
    }
}

std::vector<double> QuantumHead::forward(std::span<const double> raw) const {
    check_input(raw);
    return quantum::z_expectations(
        quantum::run_circuit(circuit_, amplitude_encode(raw), theta_));
}

quantum::HeadVjp QuantumHead::backward(std::span<const double> raw,
                                       std::span<const double> upstream) const {
    check_input(raw);
    return quantum::head_vjp(circuit_, raw, theta_, upstream);
}

std::vector<double> head_forward(const QuantumHead &head, std::span<const double> raw) {
    return head.forward(raw);
}

} // namespace aevqc::head

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

#include "aevqc/quantum/gate.hpp"

#include "aevqc/error.hpp"

#include <array>
#include <string>
#include <utility>

namespace aevqc::quantum {

namespace {
constexpr std::array<std::pair<GateKind, std::string_view>, 8> kNames{{
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::CNOT, "CNOT"},
}};
} // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (const auto &[k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

Gate Gate::fixed(GateKind kind, std::size_t qubit) {
    return Gate{kind, {qubit}, std::nullopt};
}

Gate Gate::rotation(GateKind kind, std::size_t qubit, std::size_t slot) {
    return Gate{kind, {qubit}, slot};
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
    return Gate{GateKind::CNOT, {control, target}, std::nullopt};
}

void validate_gate(const Gate &gate, std::size_t n_qubits) {
    const std::string name{gate_name(gate.kind)};
    if (gate.wires.size() != wire_count(gate.kind)) {
        throw IndexError(name + " expects " + std::to_string(wire_count(gate.kind)) +
                         " wire(s), got " + std::to_string(gate.wires.size()));
    }
    for (const auto w : gate.wires) {
        if (w >= n_qubits) {
            throw IndexError(name + " wire " + std::to_string(w) +
                             " out of range for " + std::to_string(n_qubits) +
                             " qubit(s)");
        }
    }
    if (gate.kind == GateKind::CNOT && gate.wires[0] == gate.wires[1]) {
        throw IndexError("CNOT control and target must differ");
    }
    if (is_rotation(gate.kind) != gate.param_slot.has_value()) {
        throw ParameterError(name + (is_rotation(gate.kind)
                                         ? " requires a parameter slot"
                                         : " does not take a parameter slot"));
    }
}

} // namespace aevqc::quantum

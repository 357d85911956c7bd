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

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace aevqc::quantum {

enum class GateKind { X, Y, Z, H, RX, RY, RZ, CNOT };

[[nodiscard]] std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; nullopt for unknown names.
[[nodiscard]] std::optional<GateKind> parse_gate_kind(std::string_view name);

[[nodiscard]] constexpr bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

[[nodiscard]] constexpr std::size_t wire_count(GateKind kind) {
    return kind == GateKind::CNOT ? 2 : 1;
}

/**
 * One gate of a circuit. `wires` holds the target qubit, or
 * (control, target) for CNOT. Rotations read their angle from
 * `params[*param_slot]` at execution time.
 */
struct Gate {
    GateKind kind;
    std::vector<std::size_t> wires;
    std::optional<std::size_t> param_slot;

    static Gate fixed(GateKind kind, std::size_t qubit);
    static Gate rotation(GateKind kind, std::size_t qubit, std::size_t slot);
    static Gate cnot(std::size_t control, std::size_t target);

    bool operator==(const Gate &) const = default;
};

/// Throws IndexError/ParameterError if the gate is ill-formed for `n_qubits`.
void validate_gate(const Gate &gate, std::size_t n_qubits);

} // namespace aevqc::quantum

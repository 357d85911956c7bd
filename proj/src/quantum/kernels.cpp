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

#include "aevqc/quantum/kernels.hpp"

#include "aevqc/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace aevqc::quantum::kernels {

namespace {
constexpr Complex kI{0.0, 1.0};
} // namespace

Mat2 single_qubit_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
        return {0.0, -kI, kI, 0.0};
    case GateKind::Z:
        return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: {
        const double r = 1.0 / std::numbers::sqrt2;
        return {r, r, r, -r};
    }
    case GateKind::RX:
        return {c, -kI * s, -kI * s, c};
    case GateKind::RY:
        return {c, -s, s, c};
    case GateKind::RZ:
        return {std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0)};
    case GateKind::CNOT:
        break;
    }
    throw ShapeError("CNOT is not a single-qubit gate");
}

void apply_single(std::span<Complex> amps, std::size_t n_qubits, std::size_t qubit,
                  const Mat2 &m) {
    const std::size_t stride = qubit_mask(n_qubits, qubit);
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = m[0] * a0 + m[1] * a1;
            amps[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_cnot(std::span<Complex> amps, std::size_t n_qubits, std::size_t control,
                std::size_t target) {
    const std::size_t cmask = qubit_mask(n_qubits, control);
    const std::size_t tmask = qubit_mask(n_qubits, target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

void apply(std::span<Complex> amps, std::size_t n_qubits, const Gate &gate,
           double angle, bool adjoint) {
    if (gate.kind == GateKind::CNOT) {
        apply_cnot(amps, n_qubits, gate.wires[0], gate.wires[1]);
        return;
    }
    // Rotations invert by negating the angle; the fixed gates are involutions.
    const double a = adjoint ? -angle : angle;
    apply_single(amps, n_qubits, gate.wires[0], single_qubit_matrix(gate.kind, a));
}

void apply_generator(std::span<Complex> amps, std::size_t n_qubits, const Gate &gate) {
    switch (gate.kind) {
    case GateKind::RX:
        apply_single(amps, n_qubits, gate.wires[0], single_qubit_matrix(GateKind::X, 0));
        return;
    case GateKind::RY:
        apply_single(amps, n_qubits, gate.wires[0], single_qubit_matrix(GateKind::Y, 0));
        return;
    case GateKind::RZ:
        apply_single(amps, n_qubits, gate.wires[0], single_qubit_matrix(GateKind::Z, 0));
        return;
    default:
        throw UnsupportedGradientError("no generator for gate " +
                                       std::string{gate_name(gate.kind)});
    }
}

double gate_angle(const Gate &gate, std::span<const double> params) {
    if (!gate.param_slot) {
        return 0.0;
    }
    const std::size_t slot = *gate.param_slot;
    if (slot >= params.size()) {
        throw ParameterError("parameter slot " + std::to_string(slot) +
                             " missing (have " + std::to_string(params.size()) + ")");
    }
    return params[slot];
}

} // namespace aevqc::quantum::kernels

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

/**
 * @file
 * In-place gate kernels over raw amplitude spans. These do not enforce
 * normalization, so the differentiators can reuse them on intermediate
 * (non-normalized) vectors.
 */
#pragma once

#include "aevqc/quantum/gate.hpp"
#include "aevqc/quantum/state_vector.hpp"

#include <array>
#include <cstddef>
#include <span>

namespace aevqc::quantum::kernels {

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

/// Single-qubit unitary of `kind` at `angle` (angle ignored for fixed gates).
Mat2 single_qubit_matrix(GateKind kind, double angle);

void apply_single(std::span<Complex> amps, std::size_t n_qubits, std::size_t qubit,
                  const Mat2 &m);
void apply_cnot(std::span<Complex> amps, std::size_t n_qubits, std::size_t control,
                std::size_t target);

/// Applies `gate` (or its inverse when `adjoint`) with the resolved angle.
void apply(std::span<Complex> amps, std::size_t n_qubits, const Gate &gate,
           double angle, bool adjoint = false);

/**
 * Applies the Pauli generator G of a rotation gate R(t) = exp(-i t G / 2).
 * Throws UnsupportedGradientError for non-rotation kinds.
 */
void apply_generator(std::span<Complex> amps, std::size_t n_qubits, const Gate &gate);

/// Resolves the rotation angle of `gate` from `params`, 0 for fixed gates.
double gate_angle(const Gate &gate, std::span<const double> params);

} // namespace aevqc::quantum::kernels

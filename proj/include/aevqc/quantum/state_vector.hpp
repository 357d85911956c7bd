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
 * Dense n-qubit pure states.
 *
 * Basis index convention: qubit 0 is the most significant bit of the
 * amplitude index, qubit n-1 the least significant. For n = 2, index 2
 * is the bitstring "10" (qubit 0 in |1>, qubit 1 in |0>).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace aevqc::quantum {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;
/// Allowed deviation of the squared norm from 1 when adopting amplitudes.
inline constexpr double kNormTolerance = 1e-9;

/// Throws CapacityError unless 1 <= n_qubits <= kMaxQubits.
void check_qubit_count(std::size_t n_qubits);

/// Bit mask selecting `qubit` inside a basis index of an n-qubit register.
constexpr std::size_t qubit_mask(std::size_t n_qubits, std::size_t qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

class StateVector {
  public:
    /// Adopts `amplitudes`; length must be a power of two and the norm 1.
    explicit StateVector(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t size() const { return amplitudes_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const { return amplitudes_; }
    /// Mutable access for gate kernels. Callers must keep the state unitary.
    [[nodiscard]] std::span<Complex> mutable_amplitudes() { return amplitudes_; }

    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    [[nodiscard]] double norm_squared() const;

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// |0...0> on `n_qubits` qubits.
StateVector zero_state(std::size_t n_qubits);

/// Per-qubit Pauli-Z expectation values, ordered by qubit index.
std::vector<double> z_expectations(const StateVector &state);
std::vector<double> z_expectations(std::span<const Complex> amplitudes,
                                   std::size_t n_qubits);

} // namespace aevqc::quantum

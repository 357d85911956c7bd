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

#include "aevqc/quantum/state_vector.hpp"

#include "aevqc/error.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace aevqc::quantum {

void check_qubit_count(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(n_qubits) +
                            " outside supported range [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : n_qubits_(0), amplitudes_(std::move(amplitudes)) {
    const std::size_t len = amplitudes_.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw ShapeError("state vector length " + std::to_string(len) +
                         " is not a power of two >= 2");
    }
    n_qubits_ = static_cast<std::size_t>(std::countr_zero(len));
    check_qubit_count(n_qubits_);
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("state vector contains a non-finite amplitude");
        }
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw DomainError("state vector is not normalized");
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

StateVector zero_state(std::size_t n_qubits) {
    check_qubit_count(n_qubits);
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    amps[0] = 1.0;
    return StateVector{std::move(amps)};
}

std::vector<double> z_expectations(std::span<const Complex> amplitudes,
                                   std::size_t n_qubits) {
    std::vector<double> out(n_qubits, 0.0);
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        const double p = std::norm(amplitudes[i]);
        for (std::size_t q = 0; q < n_qubits; ++q) {
            out[q] += (i & qubit_mask(n_qubits, q)) ? -p : p;
        }
    }
    return out;
}

std::vector<double> z_expectations(const StateVector &state) {
    return z_expectations(state.amplitudes(), state.num_qubits());
}

} // namespace aevqc::quantum

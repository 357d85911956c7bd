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

#include "aevqc/quantum/gate.hpp"
#include "aevqc/quantum/state_vector.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace aevqc::quantum {

/// Ordered gate list over a fixed register with parameter slots [0, P).
class Circuit {
  public:
    /// Validates every gate and that each slot in [0, P) is used.
    Circuit(std::size_t n_qubits, std::vector<Gate> gates);

    [[nodiscard]] std::size_t num_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t num_params() const { return n_params_; }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }

    bool operator==(const Circuit &) const = default;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::size_t n_params_ = 0;
};

/// Applies one gate in place. Rotation angles come from `params`.
void apply_gate(StateVector &state, const Gate &gate, std::span<const double> params);

/// Runs all gates in list order on `input`.
StateVector run_circuit(const Circuit &circuit, StateVector input,
                        std::span<const double> params);

/**
 * Text dump: header `qubits=<n> params=<P>` followed by one line per gate,
 * `KIND target[,target2] [slot=k]`.
 */
void write_circuit(std::ostream &out, const Circuit &circuit);
[[nodiscard]] std::string dump_circuit(const Circuit &circuit);
/// Parses the dump format; throws FormatError on malformed text.
[[nodiscard]] Circuit parse_circuit(std::string_view text);

} // namespace aevqc::quantum

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
 * Amplitude-encoded variational classification head: flattened features
 * are amplitude-encoded, evolved by a parameterized ansatz, and read out
 * as per-qubit Pauli-Z expectations.
 */
#pragma once

#include "aevqc/quantum/circuit.hpp"
#include "aevqc/quantum/gradients.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace aevqc {
class Rng;
}

namespace aevqc::head {

enum class AnsatzFamily {
    /// D layers of RX on every qubit.
    A1,
    /// H on every qubit, then D layers of RX and RZ on every qubit
    /// followed by a CNOT chain 0->1->...->n-1.
    A2,
};

[[nodiscard]] std::string_view family_name(AnsatzFamily family);
/// Accepts "a1"/"a2" (case-insensitive).
[[nodiscard]] std::optional<AnsatzFamily> parse_family(std::string_view name);

struct AnsatzSpec {
    AnsatzFamily family = AnsatzFamily::A1;
    std::size_t n_qubits = 1;
    std::size_t depth = 1;

    /// n*D for A1, 2*n*D for A2.
    [[nodiscard]] std::size_t num_params() const;
    /// Throws DomainError/CapacityError on zero depth or bad qubit count.
    void validate() const;

    bool operator==(const AnsatzSpec &) const = default;
};

/// Parameter slots are numbered in gate order starting at 0.
quantum::Circuit build_ansatz(const AnsatzSpec &spec);

struct HeadParamCount {
    std::size_t quantum;
    std::size_t classical_fc;
    std::size_t total;

    bool operator==(const HeadParamCount &) const = default;
};

/// Trainable parameters after the backbone, with a bias-free FC n -> classes.
HeadParamCount count_head_params(const AnsatzSpec &spec, std::size_t n_classes);

/// Parameter count of the classical head: global pooling then FC C -> classes.
std::size_t count_classical_head_params(std::size_t channels, std::size_t n_classes);

class QuantumHead {
  public:
    /// Head over raw feature vectors of length `input_len`. The qubit count
    /// is derived as qubits_needed(input_len); theta starts at zero.
    QuantumHead(AnsatzFamily family, std::size_t depth, std::size_t input_len);

    [[nodiscard]] const AnsatzSpec &spec() const { return spec_; }
    [[nodiscard]] const quantum::Circuit &circuit() const { return circuit_; }
    [[nodiscard]] std::size_t input_len() const { return input_len_; }
    [[nodiscard]] std::size_t num_outputs() const { return spec_.n_qubits; }

    [[nodiscard]] std::span<const double> theta() const { return theta_; }
    [[nodiscard]] std::span<double> theta() { return theta_; }
    void set_theta(std::vector<double> theta);

    /// Independent uniform draws from [0, 2 pi).
    void init_theta(Rng &rng);

    /// Z expectations of the evolved encoded features; each in [-1, 1].
    [[nodiscard]] std::vector<double> forward(std::span<const double> raw) const;

    [[nodiscard]] quantum::HeadVjp backward(std::span<const double> raw,
                                            std::span<const double> upstream) const;

  private:
    void check_input(std::span<const double> raw) const;

    AnsatzSpec spec_;
    quantum::Circuit circuit_;
    std::size_t input_len_;
    std::vector<double> theta_;
};

/// Free-function form of QuantumHead::forward.
std::vector<double> head_forward(const QuantumHead &head, std::span<const double> raw);

} // namespace aevqc::head

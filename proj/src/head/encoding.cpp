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

#include "aevqc/head/encoding.hpp"

#include "aevqc/error.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

namespace aevqc::head {

std::size_t qubits_needed(std::size_t feature_len) {
    if (feature_len == 0) {
        throw DomainError("feature length must be at least 1");
    }
    const auto n = static_cast<std::size_t>(std::bit_width(feature_len - 1));
    return n == 0 ? 1 : n;
}

double checked_norm(std::span<const double> raw) {
    double sq = 0.0;
    for (const double v : raw) {
        sq += v * v;
    }
    const double norm = std::sqrt(sq);
    if (!(norm >= kMinInputNorm) || !std::isfinite(norm)) {
        throw DegenerateInputError("input norm " + std::to_string(norm) +
                                   " too small (or non-finite) to amplitude-encode");
    }
    return norm;
}

quantum::StateVector amplitude_encode(std::span<const double> raw) {
    const std::size_t n_qubits = qubits_needed(raw.size());
    quantum::check_qubit_count(n_qubits);
    const double norm = checked_norm(raw);
    std::vector<quantum::Complex> amps(std::size_t{1} << n_qubits);
    for (std::size_t j = 0; j < raw.size(); ++j) {
        amps[j] = raw[j] / norm;
    }
    return quantum::StateVector{std::move(amps)};
}

} // namespace aevqc::head

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

#include "aevqc/quantum/state_vector.hpp"

#include <cstddef>
#include <span>

namespace aevqc::head {

/// Inputs with L2 norm below this are rejected as degenerate.
inline constexpr double kMinInputNorm = 1e-12;

/// ceil(log2 N), at least 1. Throws DomainError for N = 0.
std::size_t qubits_needed(std::size_t feature_len);

/// L2 norm of `raw`; throws DegenerateInputError below kMinInputNorm.
double checked_norm(std::span<const double> raw);

/**
 * Amplitude-encodes `raw`: zero-pads to 2^qubits_needed(N) and divides by
 * the L2 norm of `raw`. Amplitude j holds raw[j] / |raw| for j < N, the
 * rest are exactly zero. Sign is preserved.
 */
quantum::StateVector amplitude_encode(std::span<const double> raw);

} // namespace aevqc::head

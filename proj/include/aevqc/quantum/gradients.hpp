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
 * Derivatives of the per-qubit Pauli-Z expectations of a circuit output.
 *
 * grad_params_adjoint is the production path. grad_params_shift evaluates
 * the parameter-shift rule and exists mainly as an independent check.
 */
#pragma once

#include "aevqc/matrix.hpp"
#include "aevqc/quantum/circuit.hpp"
#include "aevqc/quantum/state_vector.hpp"

#include <span>
#include <vector>

namespace aevqc::quantum {

/// Full head Jacobians: d_params is m x P, d_input is m x N.
struct HeadGradients {
    Matrix d_params;
    Matrix d_input;
};

/// Contraction of HeadGradients with an upstream gradient of length m.
struct HeadVjp {
    std::vector<double> d_params;
    std::vector<double> d_input;
};

/**
 * @brief Jacobian d<Z_q>/d(theta_k) by a single reverse sweep.
 *
 * Runs the circuit forward once, seeds one co-state Z_q|psi> per qubit and
 * walks the gate list backwards, un-applying each gate from the state and
 * the co-states. A rotation R(t) = exp(-i t G / 2) on slot k contributes
 * Im<Z_q psi_after | G psi_after> to entry (q, k). Slots shared by several
 * gates accumulate. Cost is O(m * |gates| * 2^n); no unitary is formed.
 */
Matrix grad_params_adjoint(const Circuit &circuit, const StateVector &input,
                           std::span<const double> params);

/**
 * Parameter-shift Jacobian: for every gate on slot k, adds
 * [f(t + pi/2) - f(t - pi/2)] / 2 with only that gate's angle shifted.
 */
Matrix grad_params_shift(const Circuit &circuit, const StateVector &input,
                         std::span<const double> params);

/**
 * d<Z_q>/d(raw_input) through amplitude encoding. With M = U^dag Z_q U and
 * the normalized input x_hat, the gradient in normalized coordinates is
 * 2 Re(M x_hat); the L2-normalization Jacobian (I - x_hat x_hat^T) / |x|
 * maps it back onto the unpadded raw coordinates.
 */
Matrix grad_input(const Circuit &circuit, std::span<const double> raw_input,
                  std::span<const double> params);

/// Both Jacobians from one adjoint sweep.
HeadGradients head_jacobians(const Circuit &circuit, std::span<const double> raw_input,
                             std::span<const double> params);

/**
 * upstream^T times each Jacobian, computed with one sweep of the weighted
 * observable sum_q upstream[q] Z_q rather than by forming the Jacobians.
 */
HeadVjp head_vjp(const Circuit &circuit, std::span<const double> raw_input,
                 std::span<const double> params, std::span<const double> upstream);

} // namespace aevqc::quantum

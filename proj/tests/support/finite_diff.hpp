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

// Central finite-difference oracles for the gradient tests.
#pragma once

#include "aevqc/head/encoding.hpp"
#include "aevqc/matrix.hpp"
#include "aevqc/quantum/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace testing_support {

/// Z expectations of circuit(encode(raw)) computed through the public API.
inline std::vector<double> expectations_of_raw(const aevqc::quantum::Circuit &c,
                                               std::span<const double> raw,
                                               std::span<const double> params) {
    return aevqc::quantum::z_expectations(
        aevqc::quantum::run_circuit(c, aevqc::head::amplitude_encode(raw), params));
}

/// d<Z_q>/d(theta_k) by central differences with step h on each slot.
inline aevqc::Matrix fd_params(const aevqc::quantum::Circuit &c,
                               const aevqc::quantum::StateVector &input,
                               std::vector<double> params, double h) {
    aevqc::Matrix jac(c.num_qubits(), params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        const double saved = params[k];
        params[k] = saved + h;
        const auto plus = aevqc::quantum::z_expectations(
            aevqc::quantum::run_circuit(c, input, params));
        params[k] = saved - h;
        const auto minus = aevqc::quantum::z_expectations(
            aevqc::quantum::run_circuit(c, input, params));
        params[k] = saved;
        for (std::size_t q = 0; q < c.num_qubits(); ++q) {
            jac(q, k) = (plus[q] - minus[q]) / (2.0 * h);
        }
    }
    return jac;
}

/// d<Z_q>/d(raw_j) by central differences through the encoder.
inline aevqc::Matrix fd_input(const aevqc::quantum::Circuit &c, std::vector<double> raw,
                              std::span<const double> params, double h) {
    aevqc::Matrix jac(c.num_qubits(), raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        const double saved = raw[j];
        raw[j] = saved + h;
        const auto plus = expectations_of_raw(c, raw, params);
        raw[j] = saved - h;
        const auto minus = expectations_of_raw(c, raw, params);
        raw[j] = saved;
        for (std::size_t q = 0; q < c.num_qubits(); ++q) {
            jac(q, j) = (plus[q] - minus[q]) / (2.0 * h);
        }
    }
    return jac;
}

/// Passes if |a - b| < abs_floor or |a - b| / max(|a|, |b|) < rel_tol.
inline bool close_rel(double a, double b, double rel_tol, double abs_floor) {
    const double diff = std::abs(a - b);
    if (diff < abs_floor) {
        return true;
    }
    return diff / std::max(std::abs(a), std::abs(b)) < rel_tol;
}

inline double max_abs_diff(const aevqc::Matrix &a, const aevqc::Matrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

} // namespace testing_support

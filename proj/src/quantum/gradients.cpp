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

#include "aevqc/quantum/gradients.hpp"

#include "aevqc/error.hpp"
#include "aevqc/head/encoding.hpp"
#include "aevqc/quantum/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace aevqc::quantum {

namespace {

using Amplitudes = std::vector<Complex>;

void check_shapes(const Circuit &circuit, std::size_t n_qubits,
                  std::span<const double> params) {
    if (n_qubits != circuit.num_qubits()) {
        throw ShapeError("circuit has " + std::to_string(circuit.num_qubits()) +
                         " qubits but input has " + std::to_string(n_qubits));
    }
    if (params.size() != circuit.num_params()) {
        throw ShapeError("circuit expects " + std::to_string(circuit.num_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    for (const auto &g : circuit.gates()) {
        if (g.param_slot && !is_rotation(g.kind)) {
            throw UnsupportedGradientError("cannot differentiate parameterized " +
                                           std::string{gate_name(g.kind)});
        }
    }
}

double z_sign(std::size_t n_qubits, std::size_t qubit, std::size_t index) {
    return (index & qubit_mask(n_qubits, qubit)) ? -1.0 : 1.0;
}

struct SweepResult {
    Matrix d_params;             // observables x params
    std::vector<Amplitudes> back; // U^dag O U |input>, one per observable
};

/**
 * Reverse sweep for observables O_o = sum_q weights(o, q) Z_q.
 */
SweepResult adjoint_sweep(const Circuit &circuit, std::span<const Complex> input,
                          std::span<const double> params, const Matrix &weights) {
    const std::size_t n = circuit.num_qubits();
    const auto &gates = circuit.gates();

    Amplitudes lambda(input.begin(), input.end());
    for (const auto &g : gates) {
        kernels::apply(lambda, n, g, kernels::gate_angle(g, params));
    }

    const std::size_t n_obs = weights.rows();
    std::vector<Amplitudes> co_states(n_obs, Amplitudes(lambda.size()));
    for (std::size_t o = 0; o < n_obs; ++o) {
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            double diag = 0.0;
            for (std::size_t q = 0; q < n; ++q) {
                diag += weights(o, q) * z_sign(n, q, i);
            }
            co_states[o][i] = diag * lambda[i];
        }
    }

    Matrix d_params(n_obs, circuit.num_params());
    Amplitudes mu(lambda.size());
    for (std::size_t k = gates.size(); k-- > 0;) {
        const Gate &g = gates[k];
        const double angle = kernels::gate_angle(g, params);
        if (g.param_slot) {
            mu = lambda;
            kernels::apply_generator(mu, n, g);
            for (std::size_t o = 0; o < n_obs; ++o) {
                Complex inner{};
                for (std::size_t i = 0; i < mu.size(); ++i) {
                    inner += std::conj(co_states[o][i]) * mu[i];
                }
                d_params(o, *g.param_slot) += inner.imag();
            }
        }
        kernels::apply(lambda, n, g, angle, /*adjoint=*/true);
        for (auto &h : co_states) {
            kernels::apply(h, n, g, angle, /*adjoint=*/true);
        }
    }
    return {std::move(d_params), std::move(co_states)};
}

/// One observable per qubit: Z_0, ..., Z_{n-1}.
Matrix z_observables(std::size_t n_qubits) {
    Matrix w(n_qubits, n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        w(q, q) = 1.0;
    }
    return w;
}

/// Z expectations with one gate's angle offset by `shift`.
std::vector<double> shifted_expectations(const Circuit &circuit,
                                         std::span<const Complex> input,
                                         std::span<const double> params,
                                         std::size_t shifted_gate, double shift) {
    const std::size_t n = circuit.num_qubits();
    Amplitudes amps(input.begin(), input.end());
    const auto &gates = circuit.gates();
    for (std::size_t k = 0; k < gates.size(); ++k) {
        double angle = kernels::gate_angle(gates[k], params);
        if (k == shifted_gate) {
            angle += shift;
        }
        kernels::apply(amps, n, gates[k], angle);
    }
    return z_expectations(amps, n);
}

struct EncodedInput {
    StateVector state;
    double norm;
};

EncodedInput encode_for(const Circuit &circuit, std::span<const double> raw) {
    auto state = head::amplitude_encode(raw);
    if (state.num_qubits() != circuit.num_qubits()) {
        throw ShapeError("input of length " + std::to_string(raw.size()) + " encodes to " +
                         std::to_string(state.num_qubits()) + " qubits; circuit has " +
                         std::to_string(circuit.num_qubits()));
    }
    return {std::move(state), head::checked_norm(raw)};
}

/// Maps 2 Re(back) through the normalization Jacobian onto raw coordinates.
void input_gradient_row(std::span<const Complex> back, const StateVector &encoded,
                        double norm, std::span<double> out) {
    const std::size_t len = out.size();
    double dot = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        dot += encoded[j].real() * 2.0 * back[j].real();
    }
    for (std::size_t j = 0; j < len; ++j) {
        out[j] = (2.0 * back[j].real() - encoded[j].real() * dot) / norm;
    }
}

} // namespace

Matrix grad_params_adjoint(const Circuit &circuit, const StateVector &input,
                           std::span<const double> params) {
    check_shapes(circuit, input.num_qubits(), params);
    return adjoint_sweep(circuit, input.amplitudes(), params,
                         z_observables(circuit.num_qubits()))
        .d_params;
}

Matrix grad_params_shift(const Circuit &circuit, const StateVector &input,
                         std::span<const double> params) {
    check_shapes(circuit, input.num_qubits(), params);
    const std::size_t m = circuit.num_qubits();
    Matrix jac(m, circuit.num_params());
    constexpr double kShift = std::numbers::pi / 2.0;
    const auto &gates = circuit.gates();
    for (std::size_t k = 0; k < gates.size(); ++k) {
        if (!gates[k].param_slot) {
            continue;
        }
        const auto plus = shifted_expectations(circuit, input.amplitudes(), params, k, kShift);
        const auto minus =
            shifted_expectations(circuit, input.amplitudes(), params, k, -kShift);
        for (std::size_t q = 0; q < m; ++q) {
            jac(q, *gates[k].param_slot) += (plus[q] - minus[q]) / 2.0;
        }
    }
    return jac;
}

HeadGradients head_jacobians(const Circuit &circuit, std::span<const double> raw_input,
                             std::span<const double> params) {
    const auto enc = encode_for(circuit, raw_input);
    check_shapes(circuit, enc.state.num_qubits(), params);
    auto sweep = adjoint_sweep(circuit, enc.state.amplitudes(), params,
                               z_observables(circuit.num_qubits()));
    Matrix d_input(circuit.num_qubits(), raw_input.size());
    for (std::size_t q = 0; q < circuit.num_qubits(); ++q) {
        input_gradient_row(sweep.back[q], enc.state, enc.norm, d_input.row(q));
    }
    return {std::move(sweep.d_params), std::move(d_input)};
}

Matrix grad_input(const Circuit &circuit, std::span<const double> raw_input,
                  std::span<const double> params) {
    return head_jacobians(circuit, raw_input, params).d_input;
}

HeadVjp head_vjp(const Circuit &circuit, std::span<const double> raw_input,
                 std::span<const double> params, std::span<const double> upstream) {
    const std::size_t n = circuit.num_qubits();
    if (upstream.size() != n) {
        throw ShapeError("upstream gradient has length " + std::to_string(upstream.size()) +
                         ", expected " + std::to_string(n));
    }
    for (const double u : upstream) {
        if (!std::isfinite(u)) {
            throw DomainError("upstream gradient is not finite");
        }
    }
    const auto enc = encode_for(circuit, raw_input);
    check_shapes(circuit, enc.state.num_qubits(), params);

    Matrix weighted(1, n);
    std::copy(upstream.begin(), upstream.end(), weighted.row(0).begin());
    auto sweep = adjoint_sweep(circuit, enc.state.amplitudes(), params, weighted);

    HeadVjp out;
    const auto row = sweep.d_params.row(0);
    out.d_params.assign(row.begin(), row.end());
    out.d_input.resize(raw_input.size());
    input_gradient_row(sweep.back[0], enc.state, enc.norm, out.d_input);
    return out;
}

} // namespace aevqc::quantum

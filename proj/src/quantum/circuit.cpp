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

#include "aevqc/quantum/circuit.hpp"

#include "aevqc/error.hpp"
#include "aevqc/quantum/kernels.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace aevqc::quantum {

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates)
    : n_qubits_(n_qubits), gates_(std::move(gates)) {
    check_qubit_count(n_qubits_);
    for (const auto &g : gates_) {
        validate_gate(g, n_qubits_);
        if (g.param_slot) {
            n_params_ = std::max(n_params_, *g.param_slot + 1);
        }
    }
    std::vector<bool> used(n_params_, false);
    for (const auto &g : gates_) {
        if (g.param_slot) {
            used[*g.param_slot] = true;
        }
    }
    const auto gap = std::find(used.begin(), used.end(), false);
    if (gap != used.end()) {
        throw ParameterError("parameter slot " +
                             std::to_string(gap - used.begin()) +
                             " is not referenced by any gate");
    }
}

void apply_gate(StateVector &state, const Gate &gate, std::span<const double> params) {
    validate_gate(gate, state.num_qubits());
    kernels::apply(state.mutable_amplitudes(), state.num_qubits(), gate,
                   kernels::gate_angle(gate, params));
}

StateVector run_circuit(const Circuit &circuit, StateVector input,
                        std::span<const double> params) {
    if (input.num_qubits() != circuit.num_qubits()) {
        throw ShapeError("circuit has " + std::to_string(circuit.num_qubits()) +
                         " qubits but input state has " +
                         std::to_string(input.num_qubits()));
    }
    if (params.size() != circuit.num_params()) {
        throw ShapeError("circuit expects " + std::to_string(circuit.num_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    auto amps = input.mutable_amplitudes();
    for (const auto &g : circuit.gates()) {
        kernels::apply(amps, circuit.num_qubits(), g, kernels::gate_angle(g, params));
    }
    return input;
}

void write_circuit(std::ostream &out, const Circuit &circuit) {
    out << "qubits=" << circuit.num_qubits() << " params=" << circuit.num_params()
        << '\n';
    for (const auto &g : circuit.gates()) {
        out << gate_name(g.kind) << ' ' << g.wires[0];
        if (g.wires.size() > 1) {
            out << ',' << g.wires[1];
        }
        if (g.param_slot) {
            out << " slot=" << *g.param_slot;
        }
        out << '\n';
    }
}

std::string dump_circuit(const Circuit &circuit) {
    std::ostringstream os;
    write_circuit(os, circuit);
    return os.str();
}

namespace {

std::size_t parse_index(std::string_view token, std::string_view what) {
    std::size_t value = 0;
    const auto *end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || token.empty()) {
        throw FormatError("bad " + std::string{what} + " '" + std::string{token} + "'");
    }
    return value;
}

std::string_view strip_prefix(std::string_view token, std::string_view prefix) {
    if (!token.starts_with(prefix)) {
        throw FormatError("expected '" + std::string{prefix} + "' in '" +
                          std::string{token} + "'");
    }
    return token.substr(prefix.size());
}

} // namespace

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string{text}};
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("empty circuit dump");
    }
    std::istringstream header{line};
    std::string q_tok;
    std::string p_tok;
    header >> q_tok >> p_tok;
    const std::size_t n_qubits = parse_index(strip_prefix(q_tok, "qubits="), "qubit count");
    const std::size_t n_params = parse_index(strip_prefix(p_tok, "params="), "param count");

    std::vector<Gate> gates;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls{line};
        std::string kind_tok;
        std::string wires_tok;
        std::string slot_tok;
        ls >> kind_tok >> wires_tok >> slot_tok;
        const auto kind = parse_gate_kind(kind_tok);
        if (!kind) {
            throw FormatError("unknown gate kind '" + kind_tok + "'");
        }
        Gate g{*kind, {}, std::nullopt};
        std::string_view wires{wires_tok};
        const auto comma = wires.find(',');
        g.wires.push_back(parse_index(wires.substr(0, comma), "wire"));
        if (comma != std::string_view::npos) {
            g.wires.push_back(parse_index(wires.substr(comma + 1), "wire"));
        }
        if (!slot_tok.empty()) {
            g.param_slot = parse_index(strip_prefix(slot_tok, "slot="), "slot");
        }
        gates.push_back(std::move(g));
    }
    try {
        Circuit c{n_qubits, std::move(gates)};
        if (c.num_params() != n_params) {
            throw FormatError("header declares " + std::to_string(n_params) +
                              " params but gates use " + std::to_string(c.num_params()));
        }
        return c;
    } catch (const FormatError &) {
        throw;
    } catch (const Error &e) {
        throw FormatError(std::string{"invalid circuit: "} + e.what());
    }
}

} // namespace aevqc::quantum

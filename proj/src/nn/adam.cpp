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

#include "aevqc/nn/adam.hpp"

#include "aevqc/error.hpp"

#include <cmath>
#include <string>

namespace aevqc::nn {

void adam_step(std::span<double> params, std::span<const double> grads, AdamState &state,
               const AdamConfig &config) {
    if (grads.size() != params.size() || state.m.size() != params.size() ||
        state.v.size() != params.size()) {
        throw ShapeError("adam: params, grads and moments must have equal length (" +
                         std::to_string(params.size()) + ", " +
                         std::to_string(grads.size()) + ", " +
                         std::to_string(state.m.size()) + ")");
    }
    ++state.step;
    const auto t = static_cast<double>(state.step);
    const double correction1 = 1.0 - std::pow(config.beta1, t);
    const double correction2 = 1.0 - std::pow(config.beta2, t);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grads[i];
        state.m[i] = config.beta1 * state.m[i] + (1.0 - config.beta1) * g;
        state.v[i] = config.beta2 * state.v[i] + (1.0 - config.beta2) * g * g;
        const double m_hat = state.m[i] / correction1;
        const double v_hat = state.v[i] / correction2;
        params[i] -= config.lr * m_hat / (std::sqrt(v_hat) + config.eps);
    }
}

} // namespace aevqc::nn

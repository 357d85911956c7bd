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

#include <cstddef>
#include <span>
#include <vector>

namespace aevqc::data {

struct MetricsReport {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    /// confusion[true][predicted]
    std::vector<std::vector<std::size_t>> confusion;
};

/**
 * Accuracy, macro-F1 and confusion matrix. Precision, recall and F1 use
 * 0/0 = 0; macro-F1 averages over all classes including absent ones.
 */
MetricsReport compute_metrics(std::span<const std::size_t> true_labels,
                              std::span<const std::size_t> predicted_labels,
                              std::size_t n_classes);

/// Same quantities from an existing confusion matrix.
MetricsReport metrics_from_confusion(std::vector<std::vector<std::size_t>> confusion);

} // namespace aevqc::data

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

#include "aevqc/data/metrics.hpp"

#include "aevqc/error.hpp"

#include <string>

namespace aevqc::data {

namespace {
double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }
} // namespace

MetricsReport metrics_from_confusion(std::vector<std::vector<std::size_t>> confusion) {
    const std::size_t k = confusion.size();
    MetricsReport report;
    std::size_t total = 0;
    std::size_t correct = 0;
    std::vector<double> col_sum(k, 0.0);
    std::vector<double> row_sum(k, 0.0);
    for (std::size_t t = 0; t < k; ++t) {
        if (confusion[t].size() != k) {
            throw ShapeError("confusion matrix must be square");
        }
        for (std::size_t p = 0; p < k; ++p) {
            total += confusion[t][p];
            row_sum[t] += static_cast<double>(confusion[t][p]);
            col_sum[p] += static_cast<double>(confusion[t][p]);
        }
        correct += confusion[t][t];
    }
    report.accuracy = safe_ratio(static_cast<double>(correct), static_cast<double>(total));
    double f1_sum = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        const auto tp = static_cast<double>(confusion[c][c]);
        const double precision = safe_ratio(tp, col_sum[c]);
        const double recall = safe_ratio(tp, row_sum[c]);
        f1_sum += safe_ratio(2.0 * precision * recall, precision + recall);
    }
    report.macro_f1 = k == 0 ? 0.0 : f1_sum / static_cast<double>(k);
    report.confusion = std::move(confusion);
    return report;
}

MetricsReport compute_metrics(std::span<const std::size_t> true_labels,
                              std::span<const std::size_t> predicted_labels,
                              std::size_t n_classes) {
    if (true_labels.size() != predicted_labels.size() || true_labels.empty()) {
        throw ShapeError("label arrays must be non-empty and of equal length");
    }
    std::vector<std::vector<std::size_t>> confusion(n_classes,
                                                    std::vector<std::size_t>(n_classes, 0));
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        const std::size_t t = true_labels[i];
        const std::size_t p = predicted_labels[i];
        if (t >= n_classes || p >= n_classes) {
            throw IndexError("label " + std::to_string(t >= n_classes ? t : p) +
                             " out of range for " + std::to_string(n_classes) + " classes");
        }
        ++confusion[t][p];
    }
    return metrics_from_confusion(std::move(confusion));
}

} // namespace aevqc::data

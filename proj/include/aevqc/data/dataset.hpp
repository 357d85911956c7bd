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

#include "aevqc/nn/tensor.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace aevqc::data {

struct Sample {
    nn::FeatureTensor image; // values in [0, 1]
    std::size_t label;
};

struct DatasetSplit {
    std::vector<Sample> train;
    std::vector<Sample> test;
    std::vector<std::string> class_names;

    [[nodiscard]] std::size_t num_classes() const { return class_names.size(); }
};

/**
 * Loads .pgm/.ppm files from `root/{train,test}/<class>/`. Classes are indexed in
 * lexicographic order and must match across splits; files are read in
 * sorted path order. All images must share a channel count.
 */
DatasetSplit load_image_dir(const std::filesystem::path &root, std::size_t image_side);

struct SynthSpec {
    std::size_t n_classes = 2;
    std::size_t per_class_train = 40;
    std::size_t per_class_test = 10;
    std::size_t image_side = 8;
    double noise_sigma = 0.05;
    std::uint64_t seed = 0;
};

/**
 * One uniform-[0,1] template per class; every sample is its class template
 * plus N(0, sigma^2) noise, clamped to [0, 1]. Grayscale. Samples are
 * ordered class by class.
 */
DatasetSplit synth_dataset(const SynthSpec &spec);

} // namespace aevqc::data

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

#include "aevqc/data/dataset.hpp"

#include "aevqc/data/pnm.hpp"
#include "aevqc/error.hpp"
#include "aevqc/rng.hpp"

#include <algorithm>

namespace aevqc::data {

namespace fs = std::filesystem;

namespace {

bool is_image(const fs::path &p) {
    const auto ext = p.extension().string();
    return ext == ".pgm" || ext == ".ppm";
}

std::vector<std::string> class_dirs(const fs::path &split) {
    if (!fs::is_directory(split)) {
        throw DataError(split.string() + ": missing split directory");
    }
    std::vector<std::string> names;
    for (const auto &entry : fs::directory_iterator(split)) {
        if (entry.is_directory()) {
            names.push_back(entry.path().filename().string());
        }
    }
    std::sort(names.begin(), names.end());
    if (names.empty()) {
        throw DataError(split.string() + ": no class directories");
    }
    return names;
}

std::vector<Sample> load_split(const fs::path &split, const std::vector<std::string> &classes,
                               std::size_t side, std::size_t &channels) {
    std::vector<Sample> out;
    for (std::size_t label = 0; label < classes.size(); ++label) {
        std::vector<fs::path> files;
        for (const auto &entry : fs::directory_iterator(split / classes[label])) {
            if (entry.is_regular_file() && is_image(entry.path())) {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto &f : files) {
            const auto img = read_pnm(f);
            if (channels == 0) {
                channels = img.channels;
            } else if (channels != img.channels) {
                throw DataError(f.string() + ": has " + std::to_string(img.channels) +
                                " channel(s), expected " + std::to_string(channels));
            }
            out.push_back({to_tensor(img, side), label});
        }
    }
    return out;
}

} // namespace

DatasetSplit load_image_dir(const fs::path &root, std::size_t image_side) {
    const auto train_classes = class_dirs(root / "train");
    const auto test_classes = class_dirs(root / "test");
    if (train_classes != test_classes) {
        for (const auto &c : train_classes) {
            if (!std::binary_search(test_classes.begin(), test_classes.end(), c)) {
                throw DataError(root.string() + ": class '" + c + "' missing from test split");
            }
        }
        for (const auto &c : test_classes) {
            if (!std::binary_search(train_classes.begin(), train_classes.end(), c)) {
                throw DataError(root.string() + ": class '" + c + "' missing from train split");
            }
        }
    }
    DatasetSplit split;
    split.class_names = train_classes;
    std::size_t channels = 0;
    split.train = load_split(root / "train", train_classes, image_side, channels);
    split.test = load_split(root / "test", train_classes, image_side, channels);
    return split;
}

DatasetSplit synth_dataset(const SynthSpec &spec) {
    if (spec.n_classes < 2) {
        throw DomainError("synthetic dataset needs at least two classes");
    }
    if (spec.image_side == 0) {
        throw DomainError("image side must be at least 1");
    }
    Rng rng = Rng::stream(spec.seed, "synth");
    const std::size_t pixels = spec.image_side * spec.image_side;

    std::vector<std::vector<double>> templates(spec.n_classes, std::vector<double>(pixels));
    for (auto &t : templates) {
        for (auto &p : t) {
            p = rng.uniform();
        }
    }
    auto draw = [&](std::size_t label) {
        std::vector<double> v = templates[label];
        if (spec.noise_sigma > 0.0) {
            for (auto &p : v) {
                p = std::clamp(p + spec.noise_sigma * rng.normal(), 0.0, 1.0);
            }
        }
        return Sample{nn::FeatureTensor(1, spec.image_side, spec.image_side, std::move(v)), label};
    };

    DatasetSplit split;
    for (std::size_t c = 0; c < spec.n_classes; ++c) {
        split.class_names.push_back("class" + std::to_string(c));
    }
    for (std::size_t c = 0; c < spec.n_classes; ++c) {
        for (std::size_t i = 0; i < spec.per_class_train; ++i) {
            split.train.push_back(draw(c));
        }
    }
    for (std::size_t c = 0; c < spec.n_classes; ++c) {
        for (std::size_t i = 0; i < spec.per_class_test; ++i) {
            split.test.push_back(draw(c));
        }
    }
    return split;
}

} // namespace aevqc::data

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

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace aevqc::data {

/// Decoded 8-bit binary PGM ("P5", 1 channel) or PPM ("P6", 3 channels).
struct PnmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 0;
    std::vector<std::uint8_t> pixels; // row-major, channels interleaved
};

/// Throws DataError naming `origin` on malformed input or maxval != 255.
PnmImage decode_pnm(std::string_view bytes, std::string_view origin);
PnmImage read_pnm(const std::filesystem::path &path);

/// Encodes to P5/P6; used by tests and tooling.
std::string encode_pnm(const PnmImage &image);

/**
 * Center-crops to a square, resizes to side x side by nearest neighbour and
 * scales to [0, 1]. Result is channels x side x side, planar.
 */
nn::FeatureTensor to_tensor(const PnmImage &image, std::size_t side);

} // namespace aevqc::data

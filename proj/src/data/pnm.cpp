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

#include "aevqc/data/pnm.hpp"

#include "aevqc/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

namespace aevqc::data {

namespace {

class HeaderReader {
  public:
    HeaderReader(std::string_view bytes, std::string_view origin)
        : bytes_(bytes), origin_(origin) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    std::size_t number(std::string_view what) {
        skip_space_and_comments();
        std::size_t value = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() &&
               std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
            ++pos_;
            if (++digits > 9) {
                fail(std::string{what} + " is too large");
            }
        }
        if (digits == 0) {
            fail("missing " + std::string{what});
        }
        return value;
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw DataError(std::string{origin_} + ": " + msg);
    }

    std::size_t pos_ = 0;
    std::string_view bytes_;
    std::string_view origin_;
};

} // namespace

PnmImage decode_pnm(std::string_view bytes, std::string_view origin) {
    HeaderReader r{bytes, origin};
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
        r.fail("not a binary PGM (P5) or PPM (P6) file");
    }
    r.pos_ = 2;
    PnmImage img;
    img.channels = bytes[1] == '5' ? 1 : 3;
    img.width = r.number("width");
    img.height = r.number("height");
    const std::size_t maxval = r.number("maxval");
    if (img.width == 0 || img.height == 0) {
        r.fail("image has zero size");
    }
    if (maxval != 255) {
        r.fail("unsupported maxval " + std::to_string(maxval) + " (only 8-bit, maxval 255)");
    }
    if (r.pos_ >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[r.pos_]))) {
        r.fail("missing whitespace after header");
    }
    ++r.pos_;
    const std::size_t count = img.width * img.height * img.channels;
    if (bytes.size() - r.pos_ < count) {
        r.fail("truncated pixel data (" + std::to_string(bytes.size() - r.pos_) + " of " +
               std::to_string(count) + " bytes)");
    }
    img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(r.pos_),
                      bytes.begin() + static_cast<std::ptrdiff_t>(r.pos_ + count));
    return img;
}

PnmImage read_pnm(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(path.string() + ": cannot open file");
    }
    const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return decode_pnm(bytes, path.string());
}

std::string encode_pnm(const PnmImage &image) {
    std::ostringstream os;
    os << (image.channels == 1 ? "P5" : "P6") << '\n'
       << image.width << ' ' << image.height << "\n255\n";
    os.write(reinterpret_cast<const char *>(image.pixels.data()),
             static_cast<std::streamsize>(image.pixels.size()));
    return os.str();
}

nn::FeatureTensor to_tensor(const PnmImage &image, std::size_t side) {
    if (side == 0) {
        throw DataError("image side must be at least 1");
    }
    const std::size_t crop = std::min(image.width, image.height);
    const std::size_t off_x = (image.width - crop) / 2;
    const std::size_t off_y = (image.height - crop) / 2;
    nn::FeatureTensor out(image.channels, side, side);
    for (std::size_t y = 0; y < side; ++y) {
        // sample at the centre of each destination pixel
        const std::size_t sy = off_y + ((2 * y + 1) * crop) / (2 * side);
        for (std::size_t x = 0; x < side; ++x) {
            const std::size_t sx = off_x + ((2 * x + 1) * crop) / (2 * side);
            for (std::size_t c = 0; c < image.channels; ++c) {
                const auto px = image.pixels[(sy * image.width + sx) * image.channels + c];
                out.at(c, y, x) = static_cast<double>(px) / 255.0;
            }
        }
    }
    return out;
}

} // namespace aevqc::data

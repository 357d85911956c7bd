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

#include "temp_dir.hpp"

#include <catch_amalgamated.hpp>

#include <limits>
#include <string>

using namespace aevqc;
using namespace aevqc::data;
using testing_support::TempDir;
using testing_support::write_file;

namespace {

std::string pgm(std::size_t w, std::size_t h, const std::vector<std::uint8_t> &px) {
    return encode_pnm(PnmImage{w, h, 1, px});
}

std::string ppm(std::size_t w, std::size_t h, const std::vector<std::uint8_t> &px) {
    return encode_pnm(PnmImage{w, h, 3, px});
}

double sq_dist(const nn::FeatureTensor &a, const nn::FeatureTensor &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        const double t = a.values()[i] - b.values()[i];
        d += t * t;
    }
    return d;
}

} // namespace

TEST_CASE("2x2 P5 scales bytes by 1/255", "[pnm]") {
    const std::string bytes = std::string("P5\n2 2\n255\n") + '\x00' + '\xff' + '\x00' + '\xff';
    const auto img = decode_pnm(bytes, "mem");
    CHECK(img.width == 2);
    CHECK(img.channels == 1);
    const auto t = to_tensor(img, 2);
    CHECK(std::vector<double>(t.values().begin(), t.values().end()) ==
          std::vector<double>{0.0, 1.0, 0.0, 1.0});
}

TEST_CASE("PNM header comments and whitespace are skipped", "[pnm]") {
    const std::string bytes = std::string("P5 # magic\n# size next\n 1\t1 \n255\n") + '\x80';
    const auto img = decode_pnm(bytes, "mem");
    CHECK(img.pixels == std::vector<std::uint8_t>{0x80});
}

TEST_CASE("PNM encode/decode round trip", "[pnm]") {
    const PnmImage color{2, 1, 3, {1, 2, 3, 250, 251, 252}};
    const auto back = decode_pnm(encode_pnm(color), "mem");
    CHECK(back.pixels == color.pixels);
    CHECK(back.channels == 3);
    const auto t = to_tensor(back, 1); // centre crop keeps the left pixel
    CHECK(t.channels() == 3);
    CHECK(t.values()[0] == 1.0 / 255.0);
    CHECK(t.values()[2] == 3.0 / 255.0);
}

TEST_CASE("PNM errors name the origin", "[pnm][errors]") {
    auto expect_error = [](const std::string &bytes) {
        try {
            (void)decode_pnm(bytes, "bad.pgm");
            FAIL("expected DataError");
        } catch (const DataError &e) {
            CHECK(std::string(e.what()).find("bad.pgm") != std::string::npos);
        }
    };
    expect_error("P2\n1 1\n255\n0");                         // ASCII variant
    expect_error("P5\n1 1\n65535\n\x00\x00");                // 16-bit depth
    expect_error("P5\n2 2\n255\n\x01");                      // truncated raster
    expect_error("P5\n0 2\n255\n");                          // empty image
    expect_error("P5\n2");                                   // truncated header
    CHECK_THROWS_AS(read_pnm("/nonexistent/file.pgm"), DataError);
}

TEST_CASE("to_tensor centre-crops then resizes by nearest neighbour", "[pnm]") {
    // 4 wide x 2 high: the centre 2x2 crop is columns 1..2
    const auto img = decode_pnm(pgm(4, 2, {0, 10, 20, 30, 40, 50, 60, 70}), "mem");
    const auto t = to_tensor(img, 2);
    CHECK(std::vector<double>(t.values().begin(), t.values().end()) ==
          std::vector<double>{10 / 255.0, 20 / 255.0, 50 / 255.0, 60 / 255.0});

    // upsampling a 2x2 image to 4x4 replicates each pixel into a 2x2 block
    const auto up = to_tensor(decode_pnm(pgm(2, 2, {0, 51, 102, 255}), "mem"), 4);
    CHECK(up.at(0, 0, 0) == 0.0);
    CHECK(up.at(0, 1, 1) == 0.0);
    CHECK(up.at(0, 0, 3) == 51 / 255.0);
    CHECK(up.at(0, 3, 0) == 102 / 255.0);
    CHECK(up.at(0, 3, 3) == 1.0);
    CHECK_THROWS_AS(to_tensor(img, 0), DataError);
}

TEST_CASE("load_image_dir assigns lexicographic class indices", "[dataset]") {
    TempDir dir;
    const auto px = pgm(3, 3, std::vector<std::uint8_t>(9, 255));
    for (const auto *split : {"train", "test"}) {
        for (const auto *cls : {"b", "a", "c"}) {
            write_file(dir / (std::string(split) + "/" + cls + "/img1.pgm"), px);
        }
    }
    write_file(dir / "train/a/img0.pgm", pgm(3, 3, std::vector<std::uint8_t>(9, 0)));
    write_file(dir / "train/a/notes.txt", "ignored");

    const auto split = load_image_dir(dir.path(), 2);
    CHECK(split.class_names == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(split.train.size() == 4);
    REQUIRE(split.test.size() == 3);
    // files within a class are visited in sorted order
    CHECK(split.train[0].label == 0);
    CHECK(split.train[0].image.values()[0] == 0.0);
    CHECK(split.train[1].label == 0);
    CHECK(split.train[1].image.values()[0] == 1.0);
    CHECK(split.train[2].label == 1);
    CHECK(split.train[3].label == 2);
    CHECK(split.train[0].image.height() == 2);
}

TEST_CASE("load_image_dir rejects inconsistent inputs", "[dataset][errors]") {
    const auto px = pgm(2, 2, {0, 1, 2, 3});

    SECTION("class missing from test") {
        TempDir dir;
        write_file(dir / "train/a/x.pgm", px);
        write_file(dir / "train/c/x.pgm", px);
        write_file(dir / "test/a/x.pgm", px);
        try {
            (void)load_image_dir(dir.path(), 2);
            FAIL("expected DataError");
        } catch (const DataError &e) {
            CHECK(std::string(e.what()).find("'c'") != std::string::npos);
        }
    }
    SECTION("mixed grayscale and colour") {
        TempDir dir;
        write_file(dir / "train/a/x.pgm", px);
        write_file(dir / "train/a/y.ppm", ppm(1, 1, {1, 2, 3}));
        write_file(dir / "test/a/x.pgm", px);
        CHECK_THROWS_AS(load_image_dir(dir.path(), 2), DataError);
    }
    SECTION("corrupt file names the file") {
        TempDir dir;
        write_file(dir / "train/a/x.pgm", px);
        write_file(dir / "test/a/broken.pgm", "P5\n9 9\n255\n");
        try {
            (void)load_image_dir(dir.path(), 2);
            FAIL("expected DataError");
        } catch (const DataError &e) {
            CHECK(std::string(e.what()).find("broken.pgm") != std::string::npos);
        }
    }
    SECTION("missing root") {
        CHECK_THROWS_AS(load_image_dir("/nonexistent/aevqc", 2), DataError);
    }
}

TEST_CASE("synth_dataset shapes and ordering", "[dataset][synth]") {
    SynthSpec spec;
    spec.n_classes = 3;
    spec.per_class_train = 4;
    spec.per_class_test = 2;
    spec.image_side = 5;
    spec.seed = 11;
    const auto split = synth_dataset(spec);
    CHECK(split.num_classes() == 3);
    REQUIRE(split.train.size() == 12);
    REQUIRE(split.test.size() == 6);
    for (std::size_t i = 0; i < split.train.size(); ++i) {
        CHECK(split.train[i].label == i / 4);
        CHECK(split.train[i].image.channels() == 1);
        CHECK(split.train[i].image.height() == 5);
        for (const double v : split.train[i].image.values()) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    SynthSpec bad = spec;
    bad.n_classes = 1;
    CHECK_THROWS_AS(synth_dataset(bad), DomainError);
}

TEST_CASE("synth_dataset is deterministic under its seed", "[dataset][synth]") {
    SynthSpec spec;
    spec.seed = 5;
    const auto a = synth_dataset(spec);
    const auto b = synth_dataset(spec);
    REQUIRE(a.train.size() == b.train.size());
    for (std::size_t i = 0; i < a.train.size(); ++i) {
        CHECK(a.train[i].image == b.train[i].image);
    }
    spec.seed = 6;
    const auto c = synth_dataset(spec);
    CHECK_FALSE(a.train[0].image == c.train[0].image);
}

TEST_CASE("zero noise reproduces each class template exactly", "[dataset][synth]") {
    SynthSpec spec;
    spec.noise_sigma = 0.0;
    spec.seed = 3;
    const auto split = synth_dataset(spec);
    for (const auto *set : {&split.train, &split.test}) {
        for (const auto &s : *set) {
            CHECK(s.image == split.train[s.label * spec.per_class_train].image);
        }
    }
    CHECK_FALSE(split.train.front().image == split.train.back().image);
}

TEST_CASE("nearest-template classifier separates the default synthetic set", "[dataset][synth]") {
    for (const std::uint64_t seed : {0ULL, 1ULL, 2ULL, 99ULL}) {
        SynthSpec spec;
        spec.seed = seed;
        const auto split = synth_dataset(spec);
        SynthSpec clean = spec;
        clean.noise_sigma = 0.0;
        const auto templates = synth_dataset(clean);

        std::size_t correct = 0;
        for (const auto &s : split.test) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < spec.n_classes; ++k) {
                const double d = sq_dist(s.image, templates.train[k * spec.per_class_train].image);
                if (d < best_d) {
                    best_d = d;
                    best = k;
                }
            }
            correct += best == s.label ? 1 : 0;
        }
        CHECK(correct == split.test.size());
    }
}

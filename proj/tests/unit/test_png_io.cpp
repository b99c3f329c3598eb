#include <gtest/gtest.h>

#include <random>

#include "moiredb/error.hpp"
#include "moiredb/hash.hpp"
#include "moiredb/moire.hpp"
#include "moiredb/png_io.hpp"
#include "support/temp_dir.hpp"

using namespace moiredb;

TEST(Png, GrayRoundTrip) {
    MoireImageSpec spec = sample_spec(ParamRanges{}, 97, 41, 3);
    const GrayImage image = generate_moire(spec);
    EXPECT_EQ(decode_png_gray(encode_png(image)), image);
}

TEST(Png, RgbRoundTripOfNoise) {
    std::mt19937 gen(1);
    RgbImage image(33, 17);
    for (auto& v : image.pixels()) {
        v = static_cast<std::uint8_t>(gen());
    }
    EXPECT_EQ(decode_png_rgb(encode_png(image)), image);
}

TEST(Png, EncodingIsStable) {
    const GrayImage image = generate_moire(sample_spec(ParamRanges{}, 64, 64, 8));
    EXPECT_EQ(encode_png(image), encode_png(image));
}

TEST(Png, ColourTypeMismatchIsRejected) {
    const GrayImage gray(4, 4, 10);
    EXPECT_THROW(decode_png_rgb(encode_png(gray)), FormatError);
    const RgbImage rgb(4, 4, 10);
    EXPECT_THROW(decode_png_gray(encode_png(rgb)), FormatError);
}

TEST(Png, GarbageIsRejected) {
    const std::vector<std::uint8_t> junk{1, 2, 3, 4, 5, 6, 7, 8, 9};
    EXPECT_THROW(decode_png_gray(junk), FormatError);
}

TEST(Png, FileErrorsCarryPath) {
    test::TempDir dir;
    const auto missing = dir / "nope.png";
    try {
        read_png_gray(missing);
        FAIL();
    } catch (const IoError& e) {
        EXPECT_EQ(e.path(), missing);
    }
    EXPECT_THROW(write_png(dir / "no/such/dir/x.png", GrayImage(2, 2)), IoError);
}

TEST(Hash, Fnv1aReferenceValues) {
    // Published FNV-1a 64 test vectors.
    EXPECT_EQ(fnv1a64(std::string_view("")), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64(std::string_view("a")), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64(std::string_view("foobar")), 0x85944171f73967e8ULL);
}

TEST(Hash, HexRoundTrip) {
    for (std::uint64_t v : {0ULL, 1ULL, 0xdeadbeefcafef00dULL, ~0ULL}) {
        EXPECT_EQ(from_hex(to_hex(v)), v);
        EXPECT_EQ(to_hex(v).size(), 16u);
    }
    EXPECT_THROW(from_hex("xyz"), FormatError);
    EXPECT_THROW(from_hex("00000000000000zz"), FormatError);
}

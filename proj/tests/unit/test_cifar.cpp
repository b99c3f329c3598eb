#include <gtest/gtest.h>

#include "moiredb/cifar.hpp"
#include "moiredb/error.hpp"
#include "moiredb/png_io.hpp"
#include "support/temp_dir.hpp"

using namespace moiredb;

TEST(Cifar, ZeroFileDecodesToBlackImages) {
    const std::vector<std::uint8_t> bytes(10 * 3073, 0);
    const auto records = decode_cifar_batch(bytes, 10);
    ASSERT_EQ(records.size(), 10u);
    for (const auto& r : records) {
        EXPECT_EQ(r.label, 0);
        EXPECT_EQ(r.image, RgbImage(32, 32, 0));
    }
}

TEST(Cifar, PlanesBecomeInterleavedPixels) {
    std::vector<std::uint8_t> bytes;
    bytes.push_back(7);
    bytes.insert(bytes.end(), 1024, 1);
    bytes.insert(bytes.end(), 1024, 2);
    bytes.insert(bytes.end(), 1024, 3);
    const auto records = decode_cifar_batch(bytes, 10);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].label, 7);
    for (std::size_t y = 0; y < 32; ++y) {
        for (std::size_t x = 0; x < 32; ++x) {
            ASSERT_EQ(records[0].image.at(x, y, 0), 1);
            ASSERT_EQ(records[0].image.at(x, y, 1), 2);
            ASSERT_EQ(records[0].image.at(x, y, 2), 3);
        }
    }
}

TEST(Cifar, PlaneOrderIsRowMajor) {
    std::vector<std::uint8_t> bytes(3073, 0);
    bytes[1 + 5 * 32 + 9] = 200;            // red, x=9 y=5
    bytes[1 + 2048 + 31 * 32 + 0] = 100;    // blue, x=0 y=31
    const auto r = decode_cifar_batch(bytes, 10).at(0);
    EXPECT_EQ(r.image.at(9, 5, 0), 200);
    EXPECT_EQ(r.image.at(0, 31, 2), 100);
}

TEST(Cifar, Cifar100UsesFineLabel) {
    std::vector<std::uint8_t> bytes(2 * 3074, 0);
    bytes[0] = 19;
    bytes[1] = 87;
    bytes[3074] = 3;
    bytes[3075] = 99;
    const auto records = decode_cifar_batch(bytes, 100);
    ASSERT_EQ(records.size(), 2u);
    EXPECT_EQ(records[0].label, 87);
    EXPECT_EQ(records[1].label, 99);
}

TEST(Cifar, TruncatedFileIsAFormatError) {
    const std::vector<std::uint8_t> bytes(3073 * 2 - 1, 0);
    EXPECT_THROW(decode_cifar_batch(bytes, 10), FormatError);
    const std::vector<std::uint8_t> cifar10_sized(3073 * 2, 0);
    EXPECT_THROW(decode_cifar_batch(cifar10_sized, 100), FormatError);
}

TEST(Cifar, LabelOutOfRange) {
    std::vector<std::uint8_t> bytes(3073, 0);
    bytes[0] = 10;
    EXPECT_THROW(decode_cifar_batch(bytes, 10), FormatError);
}

TEST(Cifar, BadClassCount) {
    EXPECT_THROW(decode_cifar_batch({}, 20), std::invalid_argument);
}

TEST(Cifar, EncodeDecodeAgree) {
    std::vector<LabeledImage> records;
    for (int i = 0; i < 3; ++i) {
        RgbImage img(32, 32);
        for (std::size_t k = 0; k < img.pixels().size(); ++k) {
            img.pixels()[k] = static_cast<std::uint8_t>(k * (i + 1));
        }
        records.push_back({img, i * 30});
    }
    EXPECT_EQ(decode_cifar_batch(encode_cifar_batch(records, 100), 100), records);
}

TEST(Cifar, ReadFromFile) {
    test::TempDir dir;
    std::vector<std::uint8_t> bytes(3 * 3073, 5);
    write_file(dir / "batch.bin", bytes);
    EXPECT_EQ(read_cifar_batch(dir / "batch.bin", 10).size(), 3u);
    EXPECT_THROW(read_cifar_batch(dir / "missing.bin", 10), IoError);
}

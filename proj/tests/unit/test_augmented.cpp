#include <gtest/gtest.h>

#include <json.hpp>

#include "moiredb/augmented.hpp"
#include "moiredb/hash.hpp"
#include "moiredb/mixing_set.hpp"
#include "moiredb/png_io.hpp"
#include "support/temp_dir.hpp"

using namespace moiredb;
namespace fs = std::filesystem;

namespace {

std::vector<LabeledImage> fixture_records(std::size_t n) {
    std::vector<LabeledImage> out;
    for (std::size_t i = 0; i < n; ++i) {
        RgbImage img(32, 32);
        for (std::size_t k = 0; k < img.pixels().size(); ++k) {
            img.pixels()[k] = static_cast<std::uint8_t>((k * 7 + i * 31) & 0xFF);
        }
        out.push_back({img, static_cast<int>(i % 10)});
    }
    return out;
}

VectorImageSource<1> fixture_mixing() {
    std::vector<GrayImage> images;
    for (std::uint64_t i = 0; i < 5; ++i) {
        images.push_back(generate_moire(sample_spec(ParamRanges{}, 64, 64, i)));
    }
    return VectorImageSource<1>(std::move(images));
}

std::string slurp(const fs::path& p) {
    const auto bytes = read_file(p);
    return std::string(bytes.begin(), bytes.end());
}

}  // namespace

TEST(AugmentRecords, KMaxZeroReturnsInputs) {
    const auto records = fixture_records(4);
    MixConfig config;
    config.k_max = 0;
    const auto out = augment_records(records, fixture_mixing(), 9, config);
    EXPECT_EQ(out, records);
}

TEST(AugmentRecords, IndependentOfThreadCount) {
    const auto records = fixture_records(12);
    const auto mixing = fixture_mixing();
    const auto one = augment_records(records, mixing, 5, MixConfig{}, 1);
    const auto four = augment_records(records, mixing, 5, MixConfig{}, 4);
    EXPECT_EQ(one, four);
    EXPECT_NE(one, records);
}

TEST(AugmentRecords, RecordUsesDerivedSeed) {
    const auto records = fixture_records(3);
    const auto mixing = fixture_mixing();
    const auto out = augment_records(records, mixing, 77, MixConfig{});
    std::vector<RgbImage> originals;
    for (const auto& r : records) originals.push_back(r.image);
    const VectorImageSource<3> train(originals);
    Xoshiro256pp rng(derive_seed(77, 2));
    const auto expected = pixmix_augment(to_unit(records[2].image), train, mixing, rng, MixConfig{});
    EXPECT_EQ(out[2].image, to_rgb8(expected.image));
    EXPECT_EQ(out[2].label, records[2].label);
}

TEST(WriteAugmented, EmptyInputWritesHeaderOnly) {
    test::TempDir dir;
    const auto summary = write_augmented_dataset({}, dir.path(), 3, MixConfig{});
    EXPECT_EQ(summary.count, 0u);
    EXPECT_TRUE(fs::exists(dir / "header.json"));
    EXPECT_EQ(slurp(dir / "labels.txt"), "");
    EXPECT_FALSE(fs::exists(dir / "img_000000.png"));
}

TEST(WriteAugmented, OneRecord) {
    test::TempDir dir;
    const auto records = fixture_records(1);
    write_augmented_dataset(records, dir.path(), 3, MixConfig{});
    EXPECT_EQ(read_png_rgb(dir / "img_000000.png"), records[0].image);
    EXPECT_EQ(slurp(dir / "labels.txt"), "img_000000.png 0\n");
}

TEST(WriteAugmented, HeaderRecordsProvenance) {
    test::TempDir dir;
    MixConfig config;
    config.k_max = 4;
    config.beta_shape = 2.5;
    write_augmented_dataset(fixture_records(2), dir.path(), 1234, config, "00000000000000ff");
    const auto header = nlohmann::json::parse(slurp(dir / "header.json"));
    EXPECT_EQ(header.at("seed").get<std::uint64_t>(), 1234u);
    EXPECT_EQ(header.at("count").get<int>(), 2);
    EXPECT_EQ(header.at("mix_config").at("k_max").get<int>(), 4);
    EXPECT_EQ(header.at("mix_config").at("beta_shape").get<double>(), 2.5);
    EXPECT_EQ(header.at("mixing_set_hash").get<std::string>(), "00000000000000ff");
}

TEST(WriteAugmented, RerunIsByteIdentical) {
    test::TempDir a;
    test::TempDir b;
    const auto records = fixture_records(5);
    const auto mixing = fixture_mixing();
    write_augmented_dataset(augment_records(records, mixing, 8, MixConfig{}), a.path(), 8, MixConfig{});
    write_augmented_dataset(augment_records(records, mixing, 8, MixConfig{}), b.path(), 8, MixConfig{});
    EXPECT_EQ(test::tree_hashes(a.path()), test::tree_hashes(b.path()));
}

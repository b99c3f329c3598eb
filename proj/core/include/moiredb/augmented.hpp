#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "moiredb/cifar.hpp"
#include "moiredb/pixmix.hpp"

namespace moiredb {

inline constexpr std::string_view kAugmentedHeaderName = "header.json";
inline constexpr std::string_view kAugmentedLabelsName = "labels.txt";

/// "img_000042.png"
std::string augmented_image_name(std::size_t index);

/// Runs pixmix_augment once per record. Record i draws from a stream seeded with
/// derive_seed(seed, i); training-set partners come from the un-augmented `records`.
/// Results do not depend on `threads`.
std::vector<LabeledImage> augment_records(std::span<const LabeledImage> records,
                                          const ImageSource& mixing_source, std::uint64_t seed,
                                          const MixConfig& config, std::size_t threads = 0);

struct AugmentSummary {
    std::size_t count = 0;
    std::filesystem::path header_path;
    std::uint64_t labels_hash = 0;  ///< FNV-1a 64 over labels.txt
};

/// Writes header.json (seed and MixConfig provenance), labels.txt ("img_000000.png 3" per line)
/// and one RGB PNG per record. An empty record list yields the header and an empty labels file.
AugmentSummary write_augmented_dataset(std::span<const LabeledImage> records,
                                       const std::filesystem::path& out_dir, std::uint64_t seed,
                                       const MixConfig& config,
                                       const std::string& mixing_set_hash = {});

}  // namespace moiredb

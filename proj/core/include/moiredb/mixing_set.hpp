#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moiredb/image.hpp"
#include "moiredb/moire.hpp"
#include "moiredb/pixmix.hpp"

namespace moiredb {

/// Size of the published MoireDB mixing set (matches the Fractal-art set used by PixMix).
inline constexpr std::size_t kDefaultMixingSetCount = 14230;

inline constexpr std::string_view kManifestFileName = "manifest.json";

struct ManifestEntry {
    std::size_t index = 0;
    std::uint64_t image_seed = 0;
    MoireImageSpec spec;
    std::uint64_t content_hash = 0;  ///< FNV-1a 64 over the raw 8-bit pixels

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Ordered record of every generated image. Serialized as UTF-8 JSON with sorted keys.
struct DatasetManifest {
    std::uint64_t master_seed = 0;
    std::size_t count = 0;
    std::size_t width = kDefaultImageSize;
    std::size_t height = kDefaultImageSize;
    ParamRanges param_ranges;
    std::vector<ManifestEntry> entries;

    /// Throws FormatError when entries are not exactly 0..count-1 in order or the sizes disagree.
    void validate() const;

    std::string to_json() const;
    static DatasetManifest from_json(std::string_view text);

    friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

/// "moire_000042.png"
std::string mixing_image_name(std::size_t index);

/// FNV-1a 64 of the serialized manifest; covers every spec and content hash.
std::uint64_t dataset_hash(const DatasetManifest& manifest);

struct BuildOptions {
    std::size_t threads = 0;  ///< 0 selects hardware concurrency
};

/// Renders `count` images (image i uses seed derive_seed(master_seed, i)) into `out_dir` and
/// writes manifest.json last. A stale manifest is removed before any image is written, so an
/// interrupted build never leaves a manifest behind. Output bytes do not depend on thread count.
DatasetManifest build_mixing_set(std::uint64_t master_seed, std::size_t count,
                                 const ParamRanges& ranges, std::size_t width, std::size_t height,
                                 const std::filesystem::path& out_dir, BuildOptions options = {});

DatasetManifest read_manifest(const std::filesystem::path& dir);

struct LoadOptions {
    /// Downscale every image (nearest neighbour) to this square size after its hash is checked.
    std::optional<std::size_t> resize_to;
    std::size_t threads = 0;
};

/// Verified, read-only image collection backed by a mixing-set directory.
class MixingSet final : public ImageSource {
public:
    MixingSet(DatasetManifest manifest, std::vector<GrayImage> images);

    std::size_t size() const override { return images_.size(); }
    UnitImage image(std::size_t index, std::size_t width, std::size_t height) const override;

    const GrayImage& operator[](std::size_t index) const { return images_.at(index); }
    const DatasetManifest& manifest() const noexcept { return manifest_; }

private:
    DatasetManifest manifest_;
    std::vector<GrayImage> images_;
};

/// Loads every image and checks it against the manifest hash.
/// Throws IoError (missing manifest or image), FormatError, or IntegrityError naming the entry.
MixingSet load_mixing_set(const std::filesystem::path& dir, LoadOptions options = {});

struct VerifyIssue {
    std::size_t index = 0;
    std::string message;
};

struct VerifyReport {
    std::size_t checked = 0;
    std::vector<VerifyIssue> issues;  ///< sorted by index

    bool ok() const noexcept { return issues.empty(); }
};

/// Re-derives every entry from (master_seed, index, ranges), re-renders it, and compares the
/// result with both the manifest hash and the stored PNG. Throws only when the manifest itself
/// is missing or malformed.
VerifyReport verify_mixing_set(const std::filesystem::path& dir, std::size_t threads = 0);

}  // namespace moiredb

#include "moiredb/augmented.hpp"

#include <iomanip>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "moiredb/error.hpp"
#include "moiredb/hash.hpp"
#include "moiredb/png_io.hpp"
#include "moiredb/rng.hpp"
#include "parallel.hpp"

namespace moiredb {

namespace fs = std::filesystem;

std::string augmented_image_name(std::size_t index) {
    std::ostringstream os;
    os << "img_" << std::setw(6) << std::setfill('0') << index << ".png";
    return os.str();
}

std::vector<LabeledImage> augment_records(std::span<const LabeledImage> records,
                                          const ImageSource& mixing_source, std::uint64_t seed,
                                          const MixConfig& config, std::size_t threads) {
    config.validate();
    std::vector<RgbImage> originals;
    originals.reserve(records.size());
    for (const auto& r : records) {
        originals.push_back(r.image);
    }
    const VectorImageSource<3> train_source(std::move(originals));

    std::vector<LabeledImage> out(records.size());
    detail::parallel_for(records.size(), threads, [&](std::size_t i) {
        Xoshiro256pp rng(derive_seed(seed, i));
        const auto result =
            pixmix_augment(to_unit(records[i].image), train_source, mixing_source, rng, config);
        out[i] = LabeledImage{to_rgb8(result.image), records[i].label};
    });
    return out;
}

AugmentSummary write_augmented_dataset(std::span<const LabeledImage> records,
                                       const fs::path& out_dir, std::uint64_t seed,
                                       const MixConfig& config, const std::string& mixing_set_hash) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError(out_dir, "cannot create directory: " + ec.message());
    }

    std::string labels;
    for (std::size_t i = 0; i < records.size(); ++i) {
        write_png(out_dir / augmented_image_name(i), records[i].image);
        labels += augmented_image_name(i) + " " + std::to_string(records[i].label) + "\n";
    }
    write_file(out_dir / kAugmentedLabelsName, labels);

    nlohmann::json header{
        {"format", "moiredb-augmented-v1"},
        {"count", records.size()},
        {"seed", seed},
        {"mix_config",
         {{"k_max", config.k_max},
          {"beta_shape", config.beta_shape},
          {"p_mixer_from_set", config.p_mixer_from_set},
          {"p_additive", config.p_additive},
          {"epsilon", config.epsilon}}},
        {"labels_file", std::string(kAugmentedLabelsName)},
    };
    if (!mixing_set_hash.empty()) {
        header["mixing_set_hash"] = mixing_set_hash;
    }
    const fs::path header_path = out_dir / kAugmentedHeaderName;
    write_file(header_path, header.dump(2) + "\n");

    return AugmentSummary{records.size(), header_path, fnv1a64(labels)};
}

}  // namespace moiredb

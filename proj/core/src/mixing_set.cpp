#include "moiredb/mixing_set.hpp"

#include <algorithm>
#include <iomanip>
#include <mutex>
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
using nlohmann::json;

namespace {

constexpr std::string_view kManifestFormat = "moiredb-mixing-set-v1";

json ranges_to_json(const ParamRanges& r) {
    return json{{"nu_min", r.nu_min},         {"nu_max", r.nu_max},
                {"center_min", r.center_min}, {"center_max", r.center_max},
                {"q_n_choices", r.q_n_choices}, {"amplitude", r.amplitude}};
}

ParamRanges ranges_from_json(const json& j) {
    ParamRanges r;
    r.nu_min = j.at("nu_min").get<double>();
    r.nu_max = j.at("nu_max").get<double>();
    r.center_min = j.at("center_min").get<double>();
    r.center_max = j.at("center_max").get<double>();
    r.q_n_choices = j.at("q_n_choices").get<std::vector<int>>();
    r.amplitude = j.at("amplitude").get<double>();
    return r;
}

json pattern_to_json(const ConcentricPatternSpec& p) {
    return json{{"nu", p.nu}, {"center_x", p.center_x}, {"center_y", p.center_y},
                {"amplitude", p.amplitude}};
}

ConcentricPatternSpec pattern_from_json(const json& j) {
    ConcentricPatternSpec p;
    p.nu = j.at("nu").get<double>();
    p.center_x = j.at("center_x").get<double>();
    p.center_y = j.at("center_y").get<double>();
    p.amplitude = j.at("amplitude").get<double>();
    return p;
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError(dir, "cannot create directory: " + ec.message());
    }
}

}  // namespace

void DatasetManifest::validate() const {
    if (entries.size() != count) {
        throw FormatError("manifest lists " + std::to_string(entries.size()) +
                          " entries but count is " + std::to_string(count));
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.index != i) {
            throw FormatError("manifest entry " + std::to_string(i) + " carries index " +
                              std::to_string(e.index));
        }
        if (e.spec.width != width || e.spec.height != height || e.spec.image_seed != e.image_seed) {
            throw FormatError("manifest entry " + std::to_string(i) +
                              " disagrees with the dataset geometry or its seed");
        }
    }
}

std::string DatasetManifest::to_json() const {
    json j;
    j["format"] = std::string(kManifestFormat);
    j["master_seed"] = master_seed;
    j["count"] = count;
    j["width"] = width;
    j["height"] = height;
    j["param_ranges"] = ranges_to_json(param_ranges);
    json list = json::array();
    for (const auto& e : entries) {
        json patterns = json::array();
        for (const auto& p : e.spec.patterns) {
            patterns.push_back(pattern_to_json(p));
        }
        list.push_back(json{{"index", e.index},
                            {"file", mixing_image_name(e.index)},
                            {"image_seed", e.image_seed},
                            {"content_hash", to_hex(e.content_hash)},
                            {"spec", json{{"q_n", e.spec.q_n()}, {"patterns", patterns}}}});
    }
    j["entries"] = std::move(list);
    return j.dump(1) + "\n";
}

DatasetManifest DatasetManifest::from_json(std::string_view text) {
    DatasetManifest m;
    try {
        const json j = json::parse(text);
        if (j.at("format").get<std::string>() != kManifestFormat) {
            throw FormatError("unsupported manifest format '" + j.at("format").get<std::string>() + "'");
        }
        m.master_seed = j.at("master_seed").get<std::uint64_t>();
        m.count = j.at("count").get<std::size_t>();
        m.width = j.at("width").get<std::size_t>();
        m.height = j.at("height").get<std::size_t>();
        m.param_ranges = ranges_from_json(j.at("param_ranges"));
        for (const auto& je : j.at("entries")) {
            ManifestEntry e;
            e.index = je.at("index").get<std::size_t>();
            e.image_seed = je.at("image_seed").get<std::uint64_t>();
            e.content_hash = from_hex(je.at("content_hash").get<std::string>());
            const auto& js = je.at("spec");
            for (const auto& jp : js.at("patterns")) {
                e.spec.patterns.push_back(pattern_from_json(jp));
            }
            if (js.at("q_n").get<std::size_t>() != e.spec.patterns.size()) {
                throw FormatError("manifest entry " + std::to_string(e.index) +
                                  ": q_n does not match the pattern list");
            }
            e.spec.width = m.width;
            e.spec.height = m.height;
            e.spec.image_seed = e.image_seed;
            m.entries.push_back(std::move(e));
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("manifest: ") + e.what());
    }
    m.validate();
    return m;
}

std::string mixing_image_name(std::size_t index) {
    std::ostringstream os;
    os << "moire_" << std::setw(6) << std::setfill('0') << index << ".png";
    return os.str();
}

std::uint64_t dataset_hash(const DatasetManifest& manifest) {
    return fnv1a64(manifest.to_json());
}

DatasetManifest build_mixing_set(std::uint64_t master_seed, std::size_t count,
                                 const ParamRanges& ranges, std::size_t width, std::size_t height,
                                 const fs::path& out_dir, BuildOptions options) {
    if (count == 0) {
        throw std::invalid_argument("mixing set count must be >= 1");
    }
    if (width == 0 || height == 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    ranges.validate();

    ensure_directory(out_dir);
    const fs::path manifest_path = out_dir / kManifestFileName;
    std::error_code ec;
    fs::remove(manifest_path, ec);
    if (ec) {
        throw IoError(manifest_path, "cannot remove stale manifest: " + ec.message());
    }

    DatasetManifest manifest;
    manifest.master_seed = master_seed;
    manifest.count = count;
    manifest.width = width;
    manifest.height = height;
    manifest.param_ranges = ranges;
    manifest.entries.resize(count);

    detail::parallel_for(count, options.threads, [&](std::size_t i) {
        ManifestEntry& e = manifest.entries[i];
        e.index = i;
        e.image_seed = derive_seed(master_seed, i);
        e.spec = sample_spec(ranges, width, height, e.image_seed);
        const GrayImage image = generate_moire(e.spec);
        e.content_hash = fnv1a64(image.pixels());
        write_png(out_dir / mixing_image_name(i), image);
    });

    const fs::path tmp = out_dir / "manifest.json.tmp";
    write_file(tmp, manifest.to_json());
    fs::rename(tmp, manifest_path, ec);
    if (ec) {
        throw IoError(manifest_path, "cannot finalize manifest: " + ec.message());
    }
    return manifest;
}

DatasetManifest read_manifest(const fs::path& dir) {
    const fs::path path = dir / kManifestFileName;
    if (!fs::exists(path)) {
        throw IoError(path, "missing manifest");
    }
    const auto bytes = read_file(path);
    try {
        return DatasetManifest::from_json(
            std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

MixingSet::MixingSet(DatasetManifest manifest, std::vector<GrayImage> images)
    : manifest_(std::move(manifest)), images_(std::move(images)) {
    if (images_.size() != manifest_.count) {
        throw std::invalid_argument("mixing set image count does not match its manifest");
    }
}

UnitImage MixingSet::image(std::size_t index, std::size_t width, std::size_t height) const {
    return to_unit(resize_nearest(images_.at(index), width, height));
}

MixingSet load_mixing_set(const fs::path& dir, LoadOptions options) {
    DatasetManifest manifest = read_manifest(dir);
    std::vector<GrayImage> images(manifest.count);
    detail::parallel_for(manifest.count, options.threads, [&](std::size_t i) {
        const auto& e = manifest.entries[i];
        GrayImage image = read_png_gray(dir / mixing_image_name(i));
        if (image.width() != manifest.width || image.height() != manifest.height) {
            throw IntegrityError(i, "image is " + std::to_string(image.width()) + "x" +
                                        std::to_string(image.height()) + ", manifest says " +
                                        std::to_string(manifest.width) + "x" +
                                        std::to_string(manifest.height));
        }
        if (fnv1a64(image.pixels()) != e.content_hash) {
            throw IntegrityError(i, "content hash mismatch in " + mixing_image_name(i));
        }
        if (options.resize_to) {
            image = resize_nearest(image, *options.resize_to, *options.resize_to);
        }
        images[i] = std::move(image);
    });
    return MixingSet(std::move(manifest), std::move(images));
}

VerifyReport verify_mixing_set(const fs::path& dir, std::size_t threads) {
    const DatasetManifest manifest = read_manifest(dir);
    VerifyReport report;
    report.checked = manifest.count;
    std::mutex issues_mutex;
    auto flag = [&](std::size_t index, std::string message) {
        std::lock_guard lock(issues_mutex);
        report.issues.push_back({index, std::move(message)});
    };

    detail::parallel_for(manifest.count, threads, [&](std::size_t i) {
        const auto& e = manifest.entries[i];
        if (e.image_seed != derive_seed(manifest.master_seed, i)) {
            flag(i, "image seed does not derive from the master seed");
            return;
        }
        const MoireImageSpec expected =
            sample_spec(manifest.param_ranges, manifest.width, manifest.height, e.image_seed);
        if (expected != e.spec) {
            flag(i, "recorded spec differs from the spec re-sampled from its seed");
            return;
        }
        const std::uint64_t rendered = fnv1a64(generate_moire(e.spec).pixels());
        if (rendered != e.content_hash) {
            flag(i, "re-rendered image hash " + to_hex(rendered) + " differs from manifest hash " +
                        to_hex(e.content_hash));
            return;
        }
        try {
            const GrayImage stored = read_png_gray(dir / mixing_image_name(i));
            const std::uint64_t stored_hash = fnv1a64(stored.pixels());
            if (stored.width() != manifest.width || stored.height() != manifest.height ||
                stored_hash != e.content_hash) {
                flag(i, "stored image " + mixing_image_name(i) + " does not match its manifest hash");
            }
        } catch (const Error& err) {
            flag(i, err.what());
        }
    });

    std::sort(report.issues.begin(), report.issues.end(),
              [](const VerifyIssue& a, const VerifyIssue& b) { return a.index < b.index; });
    return report;
}

}  // namespace moiredb

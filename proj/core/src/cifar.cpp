#include "moiredb/cifar.hpp"

#include <stdexcept>
#include <string>

#include "moiredb/error.hpp"
#include "moiredb/png_io.hpp"

namespace moiredb {

namespace {

constexpr std::size_t kPlane = kCifarSide * kCifarSide;

std::size_t label_bytes(int class_count) {
    switch (class_count) {
        case 10: return 1;
        case 100: return 2;
        default:
            throw std::invalid_argument("CIFAR class count must be 10 or 100, got " +
                                        std::to_string(class_count));
    }
}

}  // namespace

std::size_t cifar_record_size(int class_count) { return label_bytes(class_count) + kCifarImageBytes; }

std::vector<LabeledImage> decode_cifar_batch(std::span<const std::uint8_t> bytes, int class_count) {
    const std::size_t header = label_bytes(class_count);
    const std::size_t record = header + kCifarImageBytes;
    if (bytes.size() % record != 0) {
        throw FormatError("CIFAR batch of " + std::to_string(bytes.size()) +
                          " bytes is not a multiple of the " + std::to_string(record) +
                          "-byte record");
    }
    std::vector<LabeledImage> out;
    out.reserve(bytes.size() / record);
    for (std::size_t offset = 0; offset < bytes.size(); offset += record) {
        const auto rec = bytes.subspan(offset, record);
        const int label = rec[header - 1];
        if (label >= class_count) {
            throw FormatError("CIFAR record " + std::to_string(offset / record) + " has label " +
                              std::to_string(label) + " outside [0, " +
                              std::to_string(class_count) + ")");
        }
        const auto planes = rec.subspan(header);
        RgbImage image(kCifarSide, kCifarSide);
        auto px = image.pixels();
        for (std::size_t i = 0; i < kPlane; ++i) {
            px[3 * i + 0] = planes[i];
            px[3 * i + 1] = planes[kPlane + i];
            px[3 * i + 2] = planes[2 * kPlane + i];
        }
        out.push_back({std::move(image), label});
    }
    return out;
}

std::vector<LabeledImage> read_cifar_batch(const std::filesystem::path& path, int class_count) {
    const auto bytes = read_file(path);
    try {
        return decode_cifar_batch(bytes, class_count);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> encode_cifar_batch(std::span<const LabeledImage> records, int class_count) {
    const std::size_t header = label_bytes(class_count);
    std::vector<std::uint8_t> out;
    out.reserve(records.size() * (header + kCifarImageBytes));
    for (const auto& r : records) {
        if (r.image.width() != kCifarSide || r.image.height() != kCifarSide) {
            throw std::invalid_argument("CIFAR records are 32x32");
        }
        if (r.label < 0 || r.label >= class_count) {
            throw std::invalid_argument("label out of range");
        }
        if (header == 2) {
            out.push_back(0);
        }
        out.push_back(static_cast<std::uint8_t>(r.label));
        const auto px = r.image.pixels();
        for (std::size_t c = 0; c < 3; ++c) {
            for (std::size_t i = 0; i < kPlane; ++i) {
                out.push_back(px[3 * i + c]);
            }
        }
    }
    return out;
}

}  // namespace moiredb

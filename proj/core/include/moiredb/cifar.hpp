#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "moiredb/image.hpp"

namespace moiredb {

inline constexpr std::size_t kCifarSide = 32;
inline constexpr std::size_t kCifarImageBytes = kCifarSide * kCifarSide * 3;

struct LabeledImage {
    RgbImage image;
    int label = 0;

    friend bool operator==(const LabeledImage&, const LabeledImage&) = default;
};

/// Bytes per record: 1 label byte (CIFAR-10) or coarse + fine label bytes (CIFAR-100),
/// followed by 1024 red, 1024 green and 1024 blue bytes.
std::size_t cifar_record_size(int class_count);

/// Decodes a CIFAR binary batch. CIFAR-100 keeps the fine label.
/// Throws FormatError when the size is not a whole number of records or a label is out of range.
std::vector<LabeledImage> decode_cifar_batch(std::span<const std::uint8_t> bytes, int class_count);

std::vector<LabeledImage> read_cifar_batch(const std::filesystem::path& path, int class_count);

/// Inverse of decode_cifar_batch (coarse label written as 0 for CIFAR-100).
std::vector<std::uint8_t> encode_cifar_batch(std::span<const LabeledImage> records, int class_count);

}  // namespace moiredb

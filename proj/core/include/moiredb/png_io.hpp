#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "moiredb/image.hpp"

namespace moiredb {

/// Fixed zlib level for every PNG written; together with fixed filters this
/// keeps encodes byte-stable for a given libpng/zlib build.
inline constexpr int kPngCompressionLevel = 1;

std::vector<std::uint8_t> encode_png(const GrayImage& image);
std::vector<std::uint8_t> encode_png(const RgbImage& image);

/// Decoders reject files whose colour type does not match (no silent conversion).
GrayImage decode_png_gray(std::span<const std::uint8_t> bytes);
RgbImage decode_png_rgb(std::span<const std::uint8_t> bytes);

void write_png(const std::filesystem::path& path, const GrayImage& image);
void write_png(const std::filesystem::path& path, const RgbImage& image);
GrayImage read_png_gray(const std::filesystem::path& path);
RgbImage read_png_rgb(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace moiredb

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace moiredb {

/// Dense 8-bit image, row-major, channels interleaved.
template <std::size_t Channels>
class BasicImage {
public:
    static constexpr std::size_t kChannels = Channels;

    BasicImage() = default;

    BasicImage(std::size_t width, std::size_t height, std::uint8_t fill = 0)
        : width_(width), height_(height), pixels_(width * height * Channels, fill) {
        if (width == 0 || height == 0) {
            throw std::invalid_argument("image dimensions must be positive");
        }
    }

    BasicImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (width == 0 || height == 0) {
            throw std::invalid_argument("image dimensions must be positive");
        }
        if (pixels_.size() != width * height * Channels) {
            throw std::invalid_argument("pixel buffer holds " + std::to_string(pixels_.size()) +
                                        " bytes, expected " +
                                        std::to_string(width * height * Channels));
        }
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    bool empty() const noexcept { return pixels_.empty(); }

    std::uint8_t& at(std::size_t x, std::size_t y, std::size_t c = 0) noexcept {
        return pixels_[(y * width_ + x) * Channels + c];
    }
    std::uint8_t at(std::size_t x, std::size_t y, std::size_t c = 0) const noexcept {
        return pixels_[(y * width_ + x) * Channels + c];
    }

    std::span<std::uint8_t> pixels() noexcept { return pixels_; }
    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

    friend bool operator==(const BasicImage&, const BasicImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

using GrayImage = BasicImage<1>;
using RgbImage = BasicImage<3>;

/// Real-valued working image in [0, 1] with 1 or 3 interleaved channels.
class UnitImage {
public:
    UnitImage() = default;
    UnitImage(std::size_t width, std::size_t height, std::size_t channels, double fill = 0.0);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t channels() const noexcept { return channels_; }

    double& at(std::size_t x, std::size_t y, std::size_t c = 0) noexcept {
        return values_[(y * width_ + x) * channels_ + c];
    }
    double at(std::size_t x, std::size_t y, std::size_t c = 0) const noexcept {
        return values_[(y * width_ + x) * channels_ + c];
    }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const UnitImage&, const UnitImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::size_t channels_ = 0;
    std::vector<double> values_;
};

/// Rounds half away from zero and clamps into [0, 255].
std::uint8_t quantize_u8(double value) noexcept;

UnitImage to_unit(const GrayImage& image);
UnitImage to_unit(const RgbImage& image);

/// v -> round_half_away(v * 255); requires a 3-channel image.
RgbImage to_rgb8(const UnitImage& image);
/// v -> round_half_away(v * 255); requires a 1-channel image.
GrayImage to_gray8(const UnitImage& image);

/// Nearest-neighbour resize with floor scaling: source index = floor(dst * src_extent / dst_extent),
/// evaluated in integer arithmetic.
template <std::size_t Channels>
BasicImage<Channels> resize_nearest(const BasicImage<Channels>& src, std::size_t width,
                                    std::size_t height) {
    if (src.width() == width && src.height() == height) {
        return src;
    }
    BasicImage<Channels> out(width, height);
    for (std::size_t y = 0; y < height; ++y) {
        const std::size_t sy = y * src.height() / height;
        for (std::size_t x = 0; x < width; ++x) {
            const std::size_t sx = x * src.width() / width;
            for (std::size_t c = 0; c < Channels; ++c) {
                out.at(x, y, c) = src.at(sx, sy, c);
            }
        }
    }
    return out;
}

}  // namespace moiredb

#include "moiredb/image.hpp"

#include <cmath>

namespace moiredb {

namespace {

template <std::size_t Channels>
UnitImage to_unit_impl(const BasicImage<Channels>& image) {
    UnitImage out(image.width(), image.height(), Channels);
    const auto src = image.pixels();
    auto dst = out.values();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = static_cast<double>(src[i]) / 255.0;
    }
    return out;
}

template <std::size_t Channels>
BasicImage<Channels> to_u8_impl(const UnitImage& image) {
    if (image.channels() != Channels) {
        throw std::invalid_argument("expected a " + std::to_string(Channels) +
                                    "-channel image, got " + std::to_string(image.channels()));
    }
    BasicImage<Channels> out(image.width(), image.height());
    const auto src = image.values();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = quantize_u8(src[i] * 255.0);
    }
    return out;
}

}  // namespace

UnitImage::UnitImage(std::size_t width, std::size_t height, std::size_t channels, double fill)
    : width_(width), height_(height), channels_(channels), values_(width * height * channels, fill) {
    if (width == 0 || height == 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    if (channels != 1 && channels != 3) {
        throw std::invalid_argument("unit images have 1 or 3 channels");
    }
}

std::uint8_t quantize_u8(double value) noexcept {
    if (!(value > 0.0)) {
        return 0;
    }
    if (value >= 255.0) {
        return 255;
    }
    return static_cast<std::uint8_t>(std::round(value));
}

UnitImage to_unit(const GrayImage& image) { return to_unit_impl(image); }
UnitImage to_unit(const RgbImage& image) { return to_unit_impl(image); }

RgbImage to_rgb8(const UnitImage& image) { return to_u8_impl<3>(image); }
GrayImage to_gray8(const UnitImage& image) { return to_u8_impl<1>(image); }

}  // namespace moiredb

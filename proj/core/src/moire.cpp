#include "moiredb/moire.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace moiredb {

namespace {

bool finite(double v) noexcept { return std::isfinite(v); }

// Quantized pattern values accumulated into `sums`, one entry per pixel.
void accumulate_pattern(const ConcentricPatternSpec& spec, std::size_t width, std::size_t height,
                        std::span<std::uint32_t> sums) {
    std::vector<double> dx2(width);
    for (std::size_t x = 0; x < width; ++x) {
        const double dx = (static_cast<double>(x) + 0.5) - spec.center_x;
        dx2[x] = dx * dx;
    }
    for (std::size_t y = 0; y < height; ++y) {
        const double dy = (static_cast<double>(y) + 0.5) - spec.center_y;
        const double dy2 = dy * dy;
        std::uint32_t* row = sums.data() + y * width;
        for (std::size_t x = 0; x < width; ++x) {
            const double r = std::sqrt(dx2[x] + dy2);
            row[x] += quantize_u8(radial_brightness(r, spec.nu, spec.amplitude));
        }
    }
}

// round_half_away(sum / count) for non-negative integers.
std::uint8_t rounded_mean(std::uint32_t sum, std::uint32_t count) noexcept {
    return static_cast<std::uint8_t>((2 * static_cast<std::uint64_t>(sum) + count) / (2 * count));
}

}  // namespace

void ConcentricPatternSpec::validate() const {
    if (!finite(nu) || !(nu > 0.0)) {
        throw std::invalid_argument("nu must be finite and > 0");
    }
    if (!finite(center_x) || !finite(center_y)) {
        throw std::invalid_argument("pattern center must be finite");
    }
    if (!finite(amplitude) || !(amplitude > 0.0) || amplitude > 1.0) {
        throw std::invalid_argument("amplitude must lie in (0, 1]");
    }
}

void ParamRanges::validate() const {
    if (!finite(nu_min) || !finite(nu_max) || !(nu_min > 0.0) || !(nu_min < nu_max)) {
        throw std::invalid_argument("nu range must satisfy 0 < nu_min < nu_max");
    }
    if (!finite(center_min) || !finite(center_max) || !(center_min < center_max)) {
        throw std::invalid_argument("center range must satisfy center_min < center_max");
    }
    if (q_n_choices.empty()) {
        throw std::invalid_argument("q_n choices must not be empty");
    }
    for (int q : q_n_choices) {
        if (q < 1) {
            throw std::invalid_argument("q_n choices must be >= 1");
        }
    }
    if (!finite(amplitude) || !(amplitude > 0.0) || amplitude > 1.0) {
        throw std::invalid_argument("amplitude must lie in (0, 1]");
    }
}

void MoireImageSpec::validate() const {
    if (width == 0 || height == 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    if (patterns.empty()) {
        throw std::invalid_argument("a Moire image needs at least one pattern");
    }
    for (const auto& p : patterns) {
        p.validate();
    }
}

double radial_brightness(double r, double nu, double amplitude) noexcept {
    return (amplitude * std::cos(nu * std::numbers::pi * r) + 1.0) * 255.0 / 2.0;
}

GrayImage render_pattern(const ConcentricPatternSpec& spec, std::size_t width, std::size_t height) {
    spec.validate();
    GrayImage out(width, height);
    std::vector<std::uint32_t> sums(width * height, 0);
    accumulate_pattern(spec, width, height, sums);
    std::copy(sums.begin(), sums.end(), out.pixels().begin());
    return out;
}

GrayImage superpose(std::span<const GrayImage> patterns) {
    if (patterns.empty()) {
        throw std::invalid_argument("superpose: no patterns given");
    }
    const std::size_t width = patterns.front().width();
    const std::size_t height = patterns.front().height();
    for (std::size_t i = 1; i < patterns.size(); ++i) {
        if (patterns[i].width() != width || patterns[i].height() != height) {
            throw std::invalid_argument(
                "superpose: pattern " + std::to_string(i) + " is " +
                std::to_string(patterns[i].width()) + "x" + std::to_string(patterns[i].height()) +
                ", expected " + std::to_string(width) + "x" + std::to_string(height));
        }
    }
    std::vector<std::uint32_t> sums(width * height, 0);
    for (const auto& p : patterns) {
        const auto px = p.pixels();
        for (std::size_t i = 0; i < sums.size(); ++i) {
            sums[i] += px[i];
        }
    }
    GrayImage out(width, height);
    const auto count = static_cast<std::uint32_t>(patterns.size());
    std::transform(sums.begin(), sums.end(), out.pixels().begin(),
                   [count](std::uint32_t s) { return rounded_mean(s, count); });
    return out;
}

MoireImageSpec sample_spec(Xoshiro256pp& rng, const ParamRanges& ranges, std::size_t width,
                           std::size_t height, std::uint64_t image_seed) {
    ranges.validate();
    MoireImageSpec spec;
    spec.width = width;
    spec.height = height;
    spec.image_seed = image_seed;

    const auto pick = uniform_index(rng, ranges.q_n_choices.size());
    const int q_n = ranges.q_n_choices[pick];
    spec.patterns.reserve(static_cast<std::size_t>(q_n));
    for (int k = 0; k < q_n; ++k) {
        ConcentricPatternSpec p;
        p.nu = uniform(rng, ranges.nu_min, ranges.nu_max);
        p.center_x = uniform(rng, ranges.center_min, ranges.center_max);
        p.center_y = uniform(rng, ranges.center_min, ranges.center_max);
        p.amplitude = ranges.amplitude;
        spec.patterns.push_back(p);
    }
    return spec;
}

MoireImageSpec sample_spec(const ParamRanges& ranges, std::size_t width, std::size_t height,
                           std::uint64_t image_seed) {
    Xoshiro256pp rng(image_seed);
    return sample_spec(rng, ranges, width, height, image_seed);
}

GrayImage generate_moire(const MoireImageSpec& spec) {
    spec.validate();
    std::vector<std::uint32_t> sums(spec.width * spec.height, 0);
    for (const auto& p : spec.patterns) {
        accumulate_pattern(p, spec.width, spec.height, sums);
    }
    GrayImage out(spec.width, spec.height);
    const auto count = static_cast<std::uint32_t>(spec.patterns.size());
    std::transform(sums.begin(), sums.end(), out.pixels().begin(),
                   [count](std::uint32_t s) { return rounded_mean(s, count); });
    return out;
}

std::int64_t fringe_count(const ConcentricPatternSpec& spec, std::size_t width, std::size_t height) {
    spec.validate();
    if (width == 0 || height == 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    // The farthest pixel centre is always one of the four corner pixels.
    const double xs[] = {0.5, static_cast<double>(width) - 0.5};
    const double ys[] = {0.5, static_cast<double>(height) - 0.5};
    double r_max = 0.0;
    for (double x : xs) {
        for (double y : ys) {
            r_max = std::max(r_max, std::hypot(x - spec.center_x, y - spec.center_y));
        }
    }
    const auto m = static_cast<std::int64_t>(std::ceil(r_max * spec.nu / 2.0));
    return std::max<std::int64_t>(m, 1);
}

}  // namespace moiredb

#pragma once

// Test-only reference implementations. They follow the closed-form definitions
// directly and share no code with the library's rendering path.

#include <cmath>
#include <cstdint>
#include <vector>

#include "moiredb/moire.hpp"

namespace moiredb::test {

inline constexpr double kPi = 3.14159265358979323846;

/// Brightness of one pattern at a pixel centre, before quantization.
inline double oracle_brightness(const ConcentricPatternSpec& p, std::size_t x, std::size_t y) {
    const double px = static_cast<double>(x) + 0.5;
    const double py = static_cast<double>(y) + 0.5;
    const double dx = px - p.center_x;
    const double dy = py - p.center_y;
    const double r = std::sqrt(dx * dx + dy * dy);
    return (p.amplitude * std::cos(p.nu * kPi * r) + 1.0) * 255.0 / 2.0;
}

/// Naive double loop: quantize each pattern, average in floating point, round.
inline std::vector<std::uint8_t> oracle_moire(const MoireImageSpec& spec) {
    std::vector<std::uint8_t> out(spec.width * spec.height);
    for (std::size_t y = 0; y < spec.height; ++y) {
        for (std::size_t x = 0; x < spec.width; ++x) {
            double sum = 0.0;
            for (const auto& p : spec.patterns) {
                double v = std::round(oracle_brightness(p, x, y));
                v = std::fmin(255.0, std::fmax(0.0, v));
                sum += v;
            }
            const double mean = sum / static_cast<double>(spec.patterns.size());
            out[y * spec.width + x] = static_cast<std::uint8_t>(std::round(mean));
        }
    }
    return out;
}

}  // namespace moiredb::test

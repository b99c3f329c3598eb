#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "moiredb/image.hpp"
#include "moiredb/rng.hpp"

namespace moiredb {

/// One concentric-circle brightness field.
struct ConcentricPatternSpec {
    double nu = 0.02;        ///< interval frequency; fringe period is 2 / nu pixels
    double center_x = 0.0;   ///< pixels, may lie outside the frame
    double center_y = 0.0;
    double amplitude = 1.0;  ///< sinusoid amplitude, in (0, 1]

    /// Throws std::invalid_argument unless nu > 0, 0 < amplitude <= 1 and all fields are finite.
    void validate() const;

    friend bool operator==(const ConcentricPatternSpec&, const ConcentricPatternSpec&) = default;
};

/// Sampling ranges for random specs. Defaults are the published MoireDB ranges.
struct ParamRanges {
    double nu_min = 0.01;
    double nu_max = 0.05;
    double center_min = 0.0;
    double center_max = 600.0;
    std::vector<int> q_n_choices{1, 2, 3};
    double amplitude = 1.0;

    void validate() const;

    friend bool operator==(const ParamRanges&, const ParamRanges&) = default;
};

inline constexpr std::size_t kDefaultImageSize = 512;

/// Full recipe for one Moire image.
struct MoireImageSpec {
    std::vector<ConcentricPatternSpec> patterns;
    std::size_t width = kDefaultImageSize;
    std::size_t height = kDefaultImageSize;
    std::uint64_t image_seed = 0;

    std::size_t q_n() const noexcept { return patterns.size(); }

    void validate() const;

    friend bool operator==(const MoireImageSpec&, const MoireImageSpec&) = default;
};

/// (amplitude * cos(nu * pi * r) + 1) * 255 / 2, a value in [0, 255].
double radial_brightness(double r, double nu, double amplitude) noexcept;

/// Evaluates the radial field at every pixel centre (x + 0.5, y + 0.5).
GrayImage render_pattern(const ConcentricPatternSpec& spec, std::size_t width, std::size_t height);

/// Pixelwise mean of equally sized images, rounded half away from zero.
/// Throws std::invalid_argument on an empty list or a size mismatch (naming the index).
GrayImage superpose(std::span<const GrayImage> patterns);

/// Draws q_n, then (nu, center_x, center_y) for each pattern, in that order.
MoireImageSpec sample_spec(Xoshiro256pp& rng, const ParamRanges& ranges, std::size_t width,
                           std::size_t height, std::uint64_t image_seed);

/// sample_spec with a stream seeded from `image_seed`.
MoireImageSpec sample_spec(const ParamRanges& ranges, std::size_t width, std::size_t height,
                           std::uint64_t image_seed);

GrayImage generate_moire(const MoireImageSpec& spec);

/// Number of full brightness periods within the farthest visible radius,
/// ceil(r_max * nu / 2), at least 1. r_max is measured to the farthest pixel centre.
std::int64_t fringe_count(const ConcentricPatternSpec& spec, std::size_t width, std::size_t height);

}  // namespace moiredb

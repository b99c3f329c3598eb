#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moiredb/image.hpp"
#include "moiredb/rng.hpp"

namespace moiredb {

struct MixConfig {
    int k_max = 5;
    double beta_shape = 3.0;
    double p_mixer_from_set = 0.5;  ///< partner comes from the Moire set with this probability
    double p_additive = 0.5;
    double epsilon = 1e-3;          ///< floor of the multiplicative working space

    void validate() const;

    friend bool operator==(const MixConfig&, const MixConfig&) = default;
};

struct MixCoefficients {
    double a = 1.0;
    double b = 0.0;
};

/// Coin, then a, then b. Heads (probability 1/2): a ~ Beta(beta, 1), b ~ Beta(1, beta).
/// Tails: a = 1 + Beta(1, beta), b = -Beta(1, beta).
MixCoefficients sample_coefficients(Xoshiro256pp& rng, double beta_shape);

/// Mixing in [-1, 1] space: ((a (2 base - 1) + b (2 mixer - 1)) + 1) / 2, clamped to [0, 1].
/// A 1-channel mixer is broadcast across the base's channels.
UnitImage mix_additive(const UnitImage& base, const UnitImage& mixer, double a, double b);

/// Mixing in [eps, 2] space: (max(2 base, eps)^a * max(2 mixer, eps)^b) / 2, clamped to [0, 1].
UnitImage mix_multiplicative(const UnitImage& base, const UnitImage& mixer, double a, double b,
                             double epsilon = 1e-3);

/// Read-only indexable image collection used as a mixing partner pool.
/// Implementations must be safe to share across threads.
class ImageSource {
public:
    virtual ~ImageSource() = default;

    virtual std::size_t size() const = 0;

    /// Image `index` resized to width x height.
    virtual UnitImage image(std::size_t index, std::size_t width, std::size_t height) const = 0;
};

/// In-memory source over 8-bit images, resized by nearest neighbour on access.
template <std::size_t Channels>
class VectorImageSource final : public ImageSource {
public:
    explicit VectorImageSource(std::vector<BasicImage<Channels>> images)
        : images_(std::move(images)) {}

    std::size_t size() const override { return images_.size(); }

    UnitImage image(std::size_t index, std::size_t width, std::size_t height) const override {
        return to_unit(resize_nearest(images_.at(index), width, height));
    }

private:
    std::vector<BasicImage<Channels>> images_;
};

enum class MixPartner : std::uint8_t { MixingSet, TrainingSet };
enum class MixOperation : std::uint8_t { Additive, Multiplicative };

struct MixStep {
    MixPartner partner = MixPartner::MixingSet;
    std::size_t partner_index = 0;
    MixOperation operation = MixOperation::Additive;
    MixCoefficients coefficients;
};

struct AugmentResult {
    UnitImage image;
    std::vector<MixStep> steps;
};

/// Draws k in {0, ..., k_max}; each step then draws, in order: partner coin, partner index,
/// operation coin, coefficients. Throws std::invalid_argument when a chosen source is empty.
AugmentResult pixmix_augment(const UnitImage& input, const ImageSource& train_source,
                             const ImageSource& mixing_source, Xoshiro256pp& rng,
                             const MixConfig& config);

}  // namespace moiredb

#include "moiredb/pixmix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace moiredb {

namespace {

void check_compatible(const UnitImage& base, const UnitImage& mixer) {
    if (base.width() != mixer.width() || base.height() != mixer.height()) {
        throw std::invalid_argument(
            "mix: mixer is " + std::to_string(mixer.width()) + "x" +
            std::to_string(mixer.height()) + ", base is " + std::to_string(base.width()) + "x" +
            std::to_string(base.height()));
    }
    if (mixer.channels() != base.channels() && mixer.channels() != 1) {
        throw std::invalid_argument("mix: cannot broadcast a " +
                                    std::to_string(mixer.channels()) + "-channel mixer onto a " +
                                    std::to_string(base.channels()) + "-channel base");
    }
}

// Applies `op(base_value, mixer_value)` pixelwise with grayscale broadcast, clamping to [0, 1].
template <typename Op>
UnitImage mix_pixels(const UnitImage& base, const UnitImage& mixer, Op op) {
    check_compatible(base, mixer);
    UnitImage out(base.width(), base.height(), base.channels());
    const std::size_t channels = base.channels();
    const bool broadcast = mixer.channels() == 1 && channels != 1;
    const auto bv = base.values();
    const auto mv = mixer.values();
    auto ov = out.values();
    for (std::size_t i = 0; i < bv.size(); ++i) {
        const double m = broadcast ? mv[i / channels] : mv[i];
        ov[i] = std::clamp(op(bv[i], m), 0.0, 1.0);
    }
    return out;
}

}  // namespace

void MixConfig::validate() const {
    if (k_max < 0) {
        throw std::invalid_argument("k_max must be >= 0");
    }
    if (!std::isfinite(beta_shape) || !(beta_shape > 0.0)) {
        throw std::invalid_argument("beta shape must be finite and > 0");
    }
    if (!(p_mixer_from_set >= 0.0 && p_mixer_from_set <= 1.0)) {
        throw std::invalid_argument("mixing-set probability must lie in [0, 1]");
    }
    if (!(p_additive >= 0.0 && p_additive <= 1.0)) {
        throw std::invalid_argument("additive probability must lie in [0, 1]");
    }
    if (!std::isfinite(epsilon) || !(epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be finite and > 0");
    }
}

MixCoefficients sample_coefficients(Xoshiro256pp& rng, double beta_shape) {
    MixCoefficients c;
    if (bernoulli(rng, 0.5)) {
        c.a = beta_johnk(rng, beta_shape, 1.0);
        c.b = beta_johnk(rng, 1.0, beta_shape);
    } else {
        c.a = 1.0 + beta_johnk(rng, 1.0, beta_shape);
        c.b = -beta_johnk(rng, 1.0, beta_shape);
    }
    return c;
}

UnitImage mix_additive(const UnitImage& base, const UnitImage& mixer, double a, double b) {
    return mix_pixels(base, mixer, [a, b](double x, double m) {
        const double out = a * (2.0 * x - 1.0) + b * (2.0 * m - 1.0);
        return (out + 1.0) / 2.0;
    });
}

UnitImage mix_multiplicative(const UnitImage& base, const UnitImage& mixer, double a, double b,
                             double epsilon) {
    return mix_pixels(base, mixer, [a, b, epsilon](double x, double m) {
        const double xs = std::max(2.0 * x, epsilon);
        const double ms = std::max(2.0 * m, epsilon);
        return std::pow(xs, a) * std::pow(ms, b) / 2.0;
    });
}

AugmentResult pixmix_augment(const UnitImage& input, const ImageSource& train_source,
                             const ImageSource& mixing_source, Xoshiro256pp& rng,
                             const MixConfig& config) {
    config.validate();
    if (config.k_max > 0) {
        if (config.p_mixer_from_set > 0.0 && mixing_source.size() == 0) {
            throw std::invalid_argument("pixmix: mixing set is empty");
        }
        if (config.p_mixer_from_set < 1.0 && train_source.size() == 0) {
            throw std::invalid_argument("pixmix: training set is empty");
        }
    }

    AugmentResult result{input, {}};
    const auto k = uniform_index(rng, static_cast<std::uint64_t>(config.k_max) + 1);
    result.steps.reserve(k);
    for (std::uint64_t step = 0; step < k; ++step) {
        MixStep s;
        s.partner = bernoulli(rng, config.p_mixer_from_set) ? MixPartner::MixingSet
                                                            : MixPartner::TrainingSet;
        const ImageSource& source =
            s.partner == MixPartner::MixingSet ? mixing_source : train_source;
        s.partner_index = uniform_index(rng, source.size());
        s.operation = bernoulli(rng, config.p_additive) ? MixOperation::Additive
                                                        : MixOperation::Multiplicative;
        s.coefficients = sample_coefficients(rng, config.beta_shape);

        const UnitImage partner = source.image(s.partner_index, input.width(), input.height());
        if (s.operation == MixOperation::Additive) {
            result.image = mix_additive(result.image, partner, s.coefficients.a, s.coefficients.b);
        } else {
            result.image = mix_multiplicative(result.image, partner, s.coefficients.a,
                                              s.coefficients.b, config.epsilon);
        }
        result.steps.push_back(s);
    }
    return result;
}

}  // namespace moiredb

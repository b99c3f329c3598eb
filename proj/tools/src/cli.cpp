#include "moiredb_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "moiredb/augmented.hpp"
#include "moiredb/cifar.hpp"
#include "moiredb/error.hpp"
#include "moiredb/hash.hpp"
#include "moiredb/mixing_set.hpp"
#include "moiredb/moire.hpp"
#include "moiredb/pixmix.hpp"
#include "moiredb/png_io.hpp"
#include "moiredb/rng.hpp"

namespace moiredb::cli {

namespace fs = std::filesystem;

namespace {

/// Raised for flag values that parse but violate a domain invariant.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RangeFlags {
    double nu_min = 0.01;
    double nu_max = 0.05;
    double center_min = 0.0;
    double center_max = 600.0;
    std::vector<int> qn{1, 2, 3};
    double amplitude = 1.0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--nu-min", nu_min, "Lower bound of the interval frequency")->capture_default_str();
        cmd.add_option("--nu-max", nu_max, "Upper bound (exclusive) of the interval frequency")
            ->capture_default_str();
        cmd.add_option("--center-min", center_min, "Lower bound of the center coordinates [px]")
            ->capture_default_str();
        cmd.add_option("--center-max", center_max,
                       "Upper bound (exclusive) of the center coordinates [px]")
            ->capture_default_str();
        cmd.add_option("--qn", qn, "Allowed numbers of superposed patterns")
            ->capture_default_str()
            ->delimiter(',');
        cmd.add_option("--amplitude", amplitude, "Sinusoid amplitude V_M in (0, 1]")->capture_default_str();
    }

    ParamRanges to_ranges() const {
        ParamRanges r;
        r.nu_min = nu_min;
        r.nu_max = nu_max;
        r.center_min = center_min;
        r.center_max = center_max;
        r.q_n_choices = qn;
        r.amplitude = amplitude;
        try {
            r.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return r;
    }
};

struct GenerateArgs {
    fs::path out;
    std::uint64_t seed = 0;
    std::size_t count = kDefaultMixingSetCount;
    std::size_t size = kDefaultImageSize;
    std::size_t threads = 0;
    RangeFlags ranges;
};

struct MixArgs {
    fs::path cifar;
    int classes = 10;
    fs::path mixing_set;
    fs::path out;
    std::uint64_t seed = 0;
    MixConfig config;
    std::size_t threads = 0;
};

struct PreviewArgs {
    fs::path out;
    std::vector<double> nu;
    std::vector<double> cx;
    std::vector<double> cy;
    std::optional<int> qn;
    std::uint64_t seed = 0;
    std::size_t size = kDefaultImageSize;
    double amplitude = 1.0;
};

struct VerifyArgs {
    fs::path dir;
    std::size_t threads = 0;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
    const ParamRanges ranges = args.ranges.to_ranges();
    const auto start = std::chrono::steady_clock::now();
    const DatasetManifest manifest = build_mixing_set(args.seed, args.count, ranges, args.size,
                                                      args.size, args.out, {args.threads});
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out << "generated " << manifest.count << " images (" << manifest.width << "x"
        << manifest.height << ") in " << elapsed.count() << " s\n";
    out << "manifest: " << (args.out / kManifestFileName).string() << "\n";
    out << "dataset hash: " << to_hex(dataset_hash(manifest)) << "\n";
    return kSuccess;
}

int cmd_mix(const MixArgs& args, std::ostream& out) {
    try {
        args.config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto records = read_cifar_batch(args.cifar, args.classes);
    LoadOptions load;
    load.resize_to = kCifarSide;
    load.threads = args.threads;
    const MixingSet mixing = load_mixing_set(args.mixing_set, load);
    const auto augmented = augment_records(records, mixing, args.seed, args.config, args.threads);
    const auto summary = write_augmented_dataset(augmented, args.out, args.seed, args.config,
                                                 to_hex(dataset_hash(mixing.manifest())));
    out << "augmented " << summary.count << " records with " << mixing.size()
        << " mixing images\n";
    out << "header: " << summary.header_path.string() << "\n";
    out << "labels hash: " << to_hex(summary.labels_hash) << "\n";
    return kSuccess;
}

int cmd_preview(const PreviewArgs& args, std::ostream& out) {
    const std::size_t given = std::max({args.nu.size(), args.cx.size(), args.cy.size()});
    const int qn = args.qn.value_or(static_cast<int>(std::max<std::size_t>(given, 1)));
    if (qn < 1) {
        throw UsageError("--qn must be >= 1");
    }
    if (given > static_cast<std::size_t>(qn)) {
        throw UsageError("more --nu/--cx/--cy values than --qn patterns");
    }

    // Patterns without explicit values are drawn from the default ranges, one
    // (nu, cx, cy) triple per pattern in order, whether or not it is overridden.
    ParamRanges ranges;
    ranges.amplitude = args.amplitude;
    ranges.q_n_choices = {qn};
    try {
        ranges.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    MoireImageSpec spec = sample_spec(ranges, args.size, args.size, args.seed);
    for (std::size_t i = 0; i < spec.patterns.size(); ++i) {
        auto& p = spec.patterns[i];
        if (i < args.nu.size()) p.nu = args.nu[i];
        if (i < args.cx.size()) p.center_x = args.cx[i];
        if (i < args.cy.size()) p.center_y = args.cy[i];
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const GrayImage image = generate_moire(spec);
    write_png(args.out, image);
    out << "wrote " << args.out.string() << " (" << spec.width << "x" << spec.height
        << ", q_n=" << spec.q_n() << ")\n";
    for (const auto& p : spec.patterns) {
        out << "  nu=" << p.nu << " cx=" << p.center_x << " cy=" << p.center_y
            << " amplitude=" << p.amplitude << " fringes=" << fringe_count(p, spec.width, spec.height)
            << "\n";
    }
    out << "content hash: " << to_hex(fnv1a64(image.pixels())) << "\n";
    return kSuccess;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const VerifyReport report = verify_mixing_set(args.dir, args.threads);
    for (const auto& issue : report.issues) {
        err << "mismatch at index " << issue.index << ": " << issue.message << "\n";
    }
    if (!report.ok()) {
        err << report.issues.size() << " of " << report.checked << " images failed verification\n";
        return kRuntimeError;
    }
    out << "verified " << report.checked << " images\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"moiredb: Moire interference-fringe mixing sets and PixMix-style augmentation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand(
        "generate",
        "Render a Moire mixing set. Defaults reproduce MoireDB: 14,230 images of 512x512 px, "
        "nu in [0.01, 0.05), centers in [0, 600), Q_n in {1, 2, 3}.");
    generate->add_option("--out", gen.out, "Output directory")->required();
    generate->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
    generate->add_option("--count", gen.count, "Number of images")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate->add_option("--size", gen.size, "Image side length [px]")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate->add_option("--threads", gen.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    gen.ranges.add_to(*generate);

    MixArgs mix;
    auto* mixcmd = app.add_subcommand(
        "mix", "Augment every record of a CIFAR binary batch once with PixMix-style mixing");
    mixcmd->add_option("--cifar", mix.cifar, "CIFAR binary batch file")->required();
    mixcmd->add_option("--classes", mix.classes, "10 or 100")
        ->capture_default_str()
        ->check(CLI::IsMember({10, 100}));
    mixcmd->add_option("--mixing-set", mix.mixing_set, "Directory written by 'generate'")->required();
    mixcmd->add_option("--out", mix.out, "Output directory")->required();
    mixcmd->add_option("--seed", mix.seed, "Augmentation seed")->required();
    mixcmd->add_option("--k-max", mix.config.k_max, "Maximum mixing steps (at most 5 in PixMix)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    mixcmd->add_option("--beta", mix.config.beta_shape, "Coefficient Beta shape")->capture_default_str();
    mixcmd->add_option("--p-mixing-set", mix.config.p_mixer_from_set,
                       "Probability a partner comes from the mixing set")
        ->capture_default_str();
    mixcmd->add_option("--p-additive", mix.config.p_additive, "Probability a step is additive")
        ->capture_default_str();
    mixcmd->add_option("--threads", mix.threads, "Worker threads (0 = all cores)")->capture_default_str();

    PreviewArgs prev;
    auto* preview = app.add_subcommand("preview", "Render a single Moire image to a PNG");
    preview->add_option("--out", prev.out, "Output PNG path")->required();
    preview->add_option("--nu", prev.nu, "Interval frequency per pattern (repeatable)");
    preview->add_option("--cx", prev.cx, "Center x per pattern [px] (repeatable)");
    preview->add_option("--cy", prev.cy, "Center y per pattern [px] (repeatable)");
    preview->add_option("--qn", prev.qn, "Number of superposed patterns");
    preview->add_option("--seed", prev.seed, "Seed for patterns not given explicitly")
        ->capture_default_str();
    preview->add_option("--size", prev.size, "Image side length [px]")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    preview->add_option("--amplitude", prev.amplitude, "Sinusoid amplitude V_M in (0, 1]")
        ->capture_default_str();

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Re-derive every image of a mixing set and compare hashes");
    verify->add_option("--dir,dir", ver.dir, "Mixing-set directory")->required();
    verify->add_option("--threads", ver.threads, "Worker threads (0 = all cores)")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen, out);
        if (mixcmd->parsed()) return cmd_mix(mix, out);
        if (preview->parsed()) return cmd_preview(prev, out);
        if (verify->parsed()) return cmd_verify(ver, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kUsageError;
}

}  // namespace moiredb::cli

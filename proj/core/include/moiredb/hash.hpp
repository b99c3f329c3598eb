#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace moiredb {

/// 64-bit FNV-1a. Content fingerprint only, not collision resistant against adversaries.
class Fnv1a64 {
public:
    static constexpr std::uint64_t kOffsetBasis = 0xcbf29ce484222325ULL;
    static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

    constexpr void update(std::span<const std::uint8_t> bytes) noexcept {
        for (std::uint8_t b : bytes) {
            state_ ^= b;
            state_ *= kPrime;
        }
    }

    void update(std::string_view text) noexcept;

    constexpr std::uint64_t digest() const noexcept { return state_; }

private:
    std::uint64_t state_ = kOffsetBasis;
};

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Lower-case, zero-padded 16 digit hex.
std::string to_hex(std::uint64_t value);
/// Inverse of to_hex; throws FormatError on anything but exactly 16 hex digits.
std::uint64_t from_hex(std::string_view text);

}  // namespace moiredb

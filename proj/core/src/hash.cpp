#include "moiredb/hash.hpp"

#include <charconv>

#include "moiredb/error.hpp"

namespace moiredb {

void Fnv1a64::update(std::string_view text) noexcept {
    for (char ch : text) {
        state_ ^= static_cast<std::uint8_t>(ch);
        state_ *= kPrime;
    }
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
    Fnv1a64 h;
    h.update(bytes);
    return h.digest();
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
    Fnv1a64 h;
    h.update(text);
    return h.digest();
}

std::string to_hex(std::uint64_t value) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
        value >>= 4;
    }
    return out;
}

std::uint64_t from_hex(std::string_view text) {
    std::uint64_t value = 0;
    if (text.size() != 16) {
        throw FormatError("hash '" + std::string(text) + "' is not 16 hex digits");
    }
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw FormatError("hash '" + std::string(text) + "' is not 16 hex digits");
    }
    return value;
}

}  // namespace moiredb

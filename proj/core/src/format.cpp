#include "slisim/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slisim {

SliFormat::SliFormat(int level_bits, int index_bits, bool is_signed)
    : level_bits_(level_bits), index_bits_(index_bits), signed_(is_signed) {
    if (level_bits < 1 || level_bits > kMaxLevelBits) {
        throw std::invalid_argument("level bits must be in [1, 6], got " + std::to_string(level_bits));
    }
    if (index_bits < 1 || index_bits > kMaxIndexBits) {
        throw std::invalid_argument("index bits must be in [1, 52], got " + std::to_string(index_bits));
    }
}

namespace {

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) {
        return false;
    }
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

SliFormat SliFormat::parse(std::string_view text) {
    const std::string original(text);
    if (!text.starts_with("sli")) {
        throw std::invalid_argument("not an SLI format name: '" + original + "'");
    }
    text.remove_prefix(3);
    bool is_signed = true;
    if (text.ends_with('u')) {
        is_signed = false;
        text.remove_suffix(1);
    }
    const auto dot = text.find('.');
    int level_bits = 0;
    int index_bits = 0;
    if (dot == std::string_view::npos || !parse_int(text.substr(0, dot), level_bits) ||
        !parse_int(text.substr(dot + 1), index_bits)) {
        throw std::invalid_argument("malformed SLI format '" + original + "', expected sli<p_l>.<p_i>[u]");
    }
    return SliFormat(level_bits, index_bits, is_signed);
}

double SliFormat::epsilon() const noexcept { return std::ldexp(1.0, -index_bits_); }

double SliFormat::max_zeta() const noexcept {
    return static_cast<double>(max_level()) + static_cast<double>(max_index_units()) * epsilon();
}

std::string SliFormat::name() const {
    return "sli" + std::to_string(level_bits_) + "." + std::to_string(index_bits_) + (signed_ ? "" : "u");
}

}  // namespace slisim

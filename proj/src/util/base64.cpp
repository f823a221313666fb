#include "oaifs/util/base64.hpp"

#include <array>
#include <cctype>

namespace oaifs::util {

namespace {

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<int, 256> build_reverse() {
    std::array<int, 256> rev{};
    rev.fill(-1);
    for (int i = 0; i < 64; ++i) rev[static_cast<unsigned char>(kAlphabet[i])] = i;
    return rev;
}

const std::array<int, 256> kReverse = build_reverse();

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 3 <= data.size()) {
        std::uint32_t n = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out += kAlphabet[(n >> 18) & 63];
        out += kAlphabet[(n >> 12) & 63];
        out += kAlphabet[(n >> 6) & 63];
        out += kAlphabet[n & 63];
        i += 3;
    }
    std::size_t rest = data.size() - i;
    if (rest == 1) {
        std::uint32_t n = data[i] << 16;
        out += kAlphabet[(n >> 18) & 63];
        out += kAlphabet[(n >> 12) & 63];
        out += "==";
    } else if (rest == 2) {
        std::uint32_t n = (data[i] << 16) | (data[i + 1] << 8);
        out += kAlphabet[(n >> 18) & 63];
        out += kAlphabet[(n >> 12) & 63];
        out += kAlphabet[(n >> 6) & 63];
        out += '=';
    }
    return out;
}

std::optional<std::vector<std::uint8_t>> base64_decode(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
        compact += c;
    }
    if (compact.size() % 4 != 0) return std::nullopt;

    std::vector<std::uint8_t> out;
    out.reserve(compact.size() / 4 * 3);
    for (std::size_t i = 0; i < compact.size(); i += 4) {
        int pad = 0;
        int v[4];
        for (int k = 0; k < 4; ++k) {
            char c = compact[i + k];
            if (c == '=') {
                // '=' only in the last quantum, last two positions
                if (i + 4 != compact.size() || k < 2) return std::nullopt;
                ++pad;
                v[k] = 0;
            } else {
                if (pad > 0) return std::nullopt;  // data after padding
                int d = kReverse[static_cast<unsigned char>(c)];
                if (d < 0) return std::nullopt;
                v[k] = d;
            }
        }
        std::uint32_t n = (v[0] << 18) | (v[1] << 12) | (v[2] << 6) | v[3];
        if (pad == 0) {
            out.push_back(static_cast<std::uint8_t>(n >> 16));
            out.push_back(static_cast<std::uint8_t>(n >> 8));
            out.push_back(static_cast<std::uint8_t>(n));
        } else if (pad == 1) {
            if ((n & 0xFF) != 0) return std::nullopt;  // non-canonical trailing bits
            out.push_back(static_cast<std::uint8_t>(n >> 16));
            out.push_back(static_cast<std::uint8_t>(n >> 8));
        } else if (pad == 2) {
            if ((n & 0xFFFF) != 0) return std::nullopt;
            out.push_back(static_cast<std::uint8_t>(n >> 16));
        } else {
            return std::nullopt;  // "====" quantum
        }
    }
    return out;
}

}  // namespace oaifs::util

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace iecsim {

struct MacAddress {
    std::array<std::uint8_t, 6> octets{};

    // Least-significant bit of the first octet marks a group address.
    bool is_multicast() const noexcept { return (octets[0] & 0x01) != 0; }

    bool operator==(const MacAddress&) const noexcept = default;
    auto operator<=>(const MacAddress&) const noexcept = default;

    std::string to_string() const {
        static const char* hex = "0123456789abcdef";
        std::string s;
        s.reserve(17);
        for (std::size_t i = 0; i < 6; ++i) {
            if (i) s.push_back(':');
            s.push_back(hex[octets[i] >> 4]);
            s.push_back(hex[octets[i] & 0x0F]);
        }
        return s;
    }

    // Accepts aa:bb:cc:dd:ee:ff or aa-bb-cc-dd-ee-ff.
    static std::optional<MacAddress> parse(const std::string& text) {
        MacAddress mac;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < 6; ++i) {
            if (i) {
                if (pos >= text.size() || (text[pos] != ':' && text[pos] != '-'))
                    return std::nullopt;
                ++pos;
            }
            if (pos + 2 > text.size()) return std::nullopt;
            int hi = hex_digit(text[pos]);
            int lo = hex_digit(text[pos + 1]);
            if (hi < 0 || lo < 0) return std::nullopt;
            mac.octets[i] = static_cast<std::uint8_t>(hi << 4 | lo);
            pos += 2;
        }
        return pos == text.size() ? std::optional<MacAddress>(mac) : std::nullopt;
    }

private:
    static int hex_digit(char c) noexcept {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    }
};

}  // namespace iecsim

template <>
struct std::hash<iecsim::MacAddress> {
    std::size_t operator()(const iecsim::MacAddress& m) const noexcept {
        std::uint64_t v = 0;
        for (auto o : m.octets) v = v << 8 | o;
        return std::hash<std::uint64_t>{}(v);
    }
};

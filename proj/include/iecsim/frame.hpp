#pragma once

// Ethernet II frames with optional 802.1p/q tagging.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "iecsim/mac.hpp"

namespace iecsim::codec {

constexpr std::uint16_t kEtherTypeGoose = 0x88B8;
constexpr std::uint16_t kEtherTypeSv = 0x88BA;
constexpr std::uint16_t kTpidVlan = 0x8100;

// Maximum frame sizes: 1822 is the toolkit default for tagged station-bus
// frames; 1522 is the strict IEEE 802.1Q limit, selectable where tighter
// validation is wanted.
constexpr std::size_t kMaxFrameDefault = 1822;
constexpr std::size_t kMaxFrameStrict = 1522;

struct VlanTag {
    std::uint8_t pcp = 0;   // priority code point, 0..7
    bool dei = false;
    std::uint16_t vid = 0;  // 0..4095

    bool operator==(const VlanTag&) const = default;
};

struct EthernetFrame {
    MacAddress dst;
    MacAddress src;
    std::optional<VlanTag> vlan;
    std::uint16_t ethertype = 0;
    std::vector<std::uint8_t> payload;

    bool is_goose() const noexcept { return ethertype == kEtherTypeGoose; }

    bool operator==(const EthernetFrame&) const = default;
};

// Bytes the frame occupies on the wire: 14 + 4 (if tagged) + payload.
std::size_t wire_size(const EthernetFrame& frame);

// Big-endian wire encoding. Throws SizeError when the result would exceed
// `max_frame`, CodecError on invalid VLAN field ranges.
std::vector<std::uint8_t> encode_frame(const EthernetFrame& frame,
                                       std::size_t max_frame = kMaxFrameDefault);

// Inverse of encode_frame; detects the 0x8100 TPID. Throws CodecError with
// a byte offset on truncated input.
EthernetFrame decode_frame(std::span<const std::uint8_t> bytes);

}  // namespace iecsim::codec

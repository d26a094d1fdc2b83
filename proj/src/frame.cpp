#include "iecsim/frame.hpp"

#include "iecsim/errors.hpp"

namespace iecsim::codec {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t pos) {
    return static_cast<std::uint16_t>(b[pos] << 8 | b[pos + 1]);
}

}  // namespace

std::size_t wire_size(const EthernetFrame& frame) {
    return 14 + (frame.vlan ? 4 : 0) + frame.payload.size();
}

std::vector<std::uint8_t> encode_frame(const EthernetFrame& frame, std::size_t max_frame) {
    if (frame.vlan) {
        if (frame.vlan->pcp > 7)
            throw CodecError("VLAN pcp out of range (0..7)", "vlan.pcp");
        if (frame.vlan->vid > 4095)
            throw CodecError("VLAN vid out of range (0..4095)", "vlan.vid");
    }
    const std::size_t total = wire_size(frame);
    if (total > max_frame)
        throw SizeError("frame of " + std::to_string(total) +
                        " bytes exceeds max frame size " + std::to_string(max_frame));

    std::vector<std::uint8_t> out;
    out.reserve(total);
    out.insert(out.end(), frame.dst.octets.begin(), frame.dst.octets.end());
    out.insert(out.end(), frame.src.octets.begin(), frame.src.octets.end());
    if (frame.vlan) {
        put_u16(out, kTpidVlan);
        std::uint16_t tci = static_cast<std::uint16_t>(frame.vlan->pcp) << 13 |
                            (frame.vlan->dei ? 0x1000 : 0) | frame.vlan->vid;
        put_u16(out, tci);
    }
    put_u16(out, frame.ethertype);
    out.insert(out.end(), frame.payload.begin(), frame.payload.end());
    return out;
}

EthernetFrame decode_frame(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 14)
        throw CodecError("truncated frame: " + std::to_string(bytes.size()) +
                             " bytes, need at least 14",
                         "header", bytes.size());

    EthernetFrame frame;
    std::copy_n(bytes.begin(), 6, frame.dst.octets.begin());
    std::copy_n(bytes.begin() + 6, 6, frame.src.octets.begin());

    std::size_t pos = 12;
    std::uint16_t type = get_u16(bytes, pos);
    if (type == kTpidVlan) {
        if (bytes.size() < 18)
            throw CodecError("truncated frame: VLAN tag present but only " +
                                 std::to_string(bytes.size()) + " bytes",
                             "vlan", bytes.size());
        std::uint16_t tci = get_u16(bytes, 14);
        frame.vlan = VlanTag{
            .pcp = static_cast<std::uint8_t>(tci >> 13),
            .dei = (tci & 0x1000) != 0,
            .vid = static_cast<std::uint16_t>(tci & 0x0FFF),
        };
        pos = 16;
    }
    frame.ethertype = get_u16(bytes, pos);
    pos += 2;
    frame.payload.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
    return frame;
}

}  // namespace iecsim::codec

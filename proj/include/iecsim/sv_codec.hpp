#pragma once

// Sampled-Value APDU codec. Layout: APPID(2) Length(2) noASDU(2) followed
// by one TLV 0x30 per ASDU and an optional zero-filled padding TLV 0x8F
// used to reach a fixed frame size. ASDU content: svID 0x80, smpCnt 0x82
// (2 bytes), confRev 0x83 (4 bytes), sample block 0x87 (8 value/quality
// pairs, 64 bytes).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace iecsim::codec {

struct SvSample {
    std::int32_t value = 0;
    std::uint32_t quality = 0;

    bool operator==(const SvSample&) const = default;
};

struct SvAsdu {
    std::string sv_id;
    std::uint16_t smp_cnt = 0;   // wraps at the stream's samples-per-second
    std::uint32_t conf_rev = 0;
    std::array<SvSample, 8> samples{};  // 4 currents + 4 voltages, 3 phases + neutral

    bool operator==(const SvAsdu&) const = default;
};

struct SvApdu {
    std::uint16_t appid = 0;
    std::vector<SvAsdu> asdus;  // noAsdu == asdus.size(), at least 1

    bool operator==(const SvApdu&) const = default;
};

// Unpadded wire encoding. Throws CodecError when the APDU has no ASDUs or
// an svID violates the string-field limits.
std::vector<std::uint8_t> encode_sv(const SvApdu& apdu);

// Encoding padded with a trailing 0x8F TLV so the result is exactly
// `payload_target` bytes. Throws SizeError when the target is unreachable
// (too small, or smaller than unpadded+2).
std::vector<std::uint8_t> encode_sv_padded(const SvApdu& apdu, std::size_t payload_target);

std::size_t sv_wire_size(const SvApdu& apdu);

// Inverse of both encoders; padding is consumed and discarded. Verifies the
// Length field against the actual payload size.
SvApdu decode_sv(std::span<const std::uint8_t> bytes);

}  // namespace iecsim::codec

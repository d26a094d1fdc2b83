#pragma once

// GOOSE session header + BER-encoded PDU.
//
// Wire profile: the PDU is an application-tagged TLV 0x61 whose content is
// the twelve fields in on-wire order, context tags [0]..[10] for the fixed
// fields and constructed [11] (0xAB) for allData. Dataset members use
// context tags 0x83 boolean, 0x84 bit-string, 0x85 integer, 0x8A
// visible-string. Lengths are minimal definite BER, integers minimal
// two's-complement.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace iecsim::codec {

// String fields longer than this are rejected on encode; it keeps every
// field length encodable in at most two octets.
constexpr std::size_t kMaxStringField = 129;

// UTC timestamp: 4-byte seconds, 3-byte binary fraction of a second
// (units of 2^-24 s), 1-byte quality.
struct GooseTimestamp {
    std::uint32_t seconds = 0;
    std::uint32_t fraction = 0;  // 0 .. 2^24-1
    std::uint8_t quality = 0;

    static GooseTimestamp from_ns(std::int64_t epoch_ns, std::uint8_t quality = 0);
    std::int64_t to_ns() const;
    std::uint32_t fraction_ns() const;  // rounded to nanoseconds, for display

    bool operator==(const GooseTimestamp&) const = default;
};

struct BitString {
    std::uint32_t bit_count = 0;
    std::vector<std::uint8_t> bytes;  // ceil(bit_count/8) octets, pad bits zero

    bool operator==(const BitString&) const = default;
};

using DataValue = std::variant<bool, std::int64_t, BitString, std::string>;

struct GoosePdu {
    std::string gocb_ref;
    std::uint32_t time_allowed_to_live_ms = 0;
    std::string data_set;
    std::string go_id;
    GooseTimestamp timestamp;
    std::uint32_t st_num = 0;
    std::uint32_t sq_num = 0;
    bool test = false;
    std::uint32_t conf_rev = 0;
    bool nds_com = false;
    std::vector<DataValue> all_data;  // numDataSetEntries == all_data.size()

    bool operator==(const GoosePdu&) const = default;
};

struct GooseSessionHeader {
    std::uint16_t appid = 0;
    std::uint16_t length = 0;  // 8 + encoded PDU TLV size
    std::uint16_t reserved1 = 0;
    std::uint16_t reserved2 = 0;

    bool operator==(const GooseSessionHeader&) const = default;
};

// Session header + PDU as frame payload bytes. header.length is recomputed
// and reserved words are forced to zero; the input header only contributes
// the APPID. Throws CodecError on invariant violations (empty strings,
// strings over kMaxStringField, zero TATL, bit-string pad bits set).
std::vector<std::uint8_t> encode_goose(const GooseSessionHeader& header,
                                       const GoosePdu& pdu);

// Encoded byte count of the PDU TLV alone, without encoding.
std::size_t goose_pdu_wire_size(const GoosePdu& pdu);

// Inverse of encode_goose. Verifies header.length == 8 + PDU TLV size and
// numDataSetEntries == allData arity. Errors name the offending field.
std::pair<GooseSessionHeader, GoosePdu> decode_goose(std::span<const std::uint8_t> bytes);

}  // namespace iecsim::codec

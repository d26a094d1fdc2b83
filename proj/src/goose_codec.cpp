#include "iecsim/goose_codec.hpp"

#include "iecsim/ber.hpp"
#include "iecsim/errors.hpp"

namespace iecsim::codec {

namespace {

// Context tags of the PDU fields, in wire order.
constexpr std::uint8_t kTagPdu = 0x61;
constexpr std::uint8_t kTagGocbRef = 0x80;
constexpr std::uint8_t kTagTatl = 0x81;
constexpr std::uint8_t kTagDataSet = 0x82;
constexpr std::uint8_t kTagGoId = 0x83;
constexpr std::uint8_t kTagTimestamp = 0x84;
constexpr std::uint8_t kTagStNum = 0x85;
constexpr std::uint8_t kTagSqNum = 0x86;
constexpr std::uint8_t kTagTest = 0x87;
constexpr std::uint8_t kTagConfRev = 0x88;
constexpr std::uint8_t kTagNdsCom = 0x89;
constexpr std::uint8_t kTagNumEntries = 0x8A;
constexpr std::uint8_t kTagAllData = 0xAB;

// Dataset member tags.
constexpr std::uint8_t kTagDataBoolean = 0x83;
constexpr std::uint8_t kTagDataBitString = 0x84;
constexpr std::uint8_t kTagDataInteger = 0x85;
constexpr std::uint8_t kTagDataString = 0x8A;

std::span<const std::uint8_t> as_span(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

void put_string(std::vector<std::uint8_t>& out, std::uint8_t tag,
                const std::string& value, const std::string& field) {
    if (value.empty())
        throw CodecError("empty string not allowed for " + field, field);
    if (value.size() > kMaxStringField)
        throw SizeError(field + " exceeds " + std::to_string(kMaxStringField) + " bytes",
                        field);
    ber::put_tlv(out, tag, as_span(value));
}

void put_unsigned(std::vector<std::uint8_t>& out, std::uint8_t tag, std::uint64_t v) {
    auto content = ber::encode_unsigned(v);
    ber::put_tlv(out, tag, content);
}

void put_boolean(std::vector<std::uint8_t>& out, std::uint8_t tag, bool v) {
    const std::uint8_t byte = v ? 0xFF : 0x00;
    ber::put_tlv(out, tag, {&byte, 1});
}

void check_bit_string(const BitString& bs, const std::string& field) {
    const std::size_t need = (bs.bit_count + 7) / 8;
    if (bs.bytes.size() != need)
        throw CodecError("bit-string byte count does not match bit count for " + field, field);
    const unsigned pad = static_cast<unsigned>(need * 8 - bs.bit_count);
    if (pad > 0 && !bs.bytes.empty() &&
        (bs.bytes.back() & ((1u << pad) - 1)) != 0)
        throw CodecError("bit-string padding bits must be zero in " + field, field);
}

std::vector<std::uint8_t> encode_data_value(const DataValue& value, std::size_t index) {
    const std::string field = "allData[" + std::to_string(index) + "]";
    std::vector<std::uint8_t> out;
    if (const bool* b = std::get_if<bool>(&value)) {
        put_boolean(out, kTagDataBoolean, *b);
    } else if (const std::int64_t* i = std::get_if<std::int64_t>(&value)) {
        auto content = ber::encode_integer(*i);
        ber::put_tlv(out, kTagDataInteger, content);
    } else if (const BitString* bs = std::get_if<BitString>(&value)) {
        check_bit_string(*bs, field);
        std::vector<std::uint8_t> content;
        content.push_back(static_cast<std::uint8_t>(bs->bytes.size() * 8 - bs->bit_count));
        content.insert(content.end(), bs->bytes.begin(), bs->bytes.end());
        ber::put_tlv(out, kTagDataBitString, content);
    } else {
        const auto& s = std::get<std::string>(value);
        put_string(out, kTagDataString, s, field);
    }
    return out;
}

std::vector<std::uint8_t> encode_pdu_content(const GoosePdu& pdu) {
    if (pdu.time_allowed_to_live_ms == 0)
        throw CodecError("timeAllowedToLive must be positive", "timeAllowedToLive");

    std::vector<std::uint8_t> body;
    body.reserve(160);
    put_string(body, kTagGocbRef, pdu.gocb_ref, "gocbRef");
    put_unsigned(body, kTagTatl, pdu.time_allowed_to_live_ms);
    put_string(body, kTagDataSet, pdu.data_set, "dataSet");
    put_string(body, kTagGoId, pdu.go_id, "goId");

    std::uint8_t ts[8];
    ts[0] = static_cast<std::uint8_t>(pdu.timestamp.seconds >> 24);
    ts[1] = static_cast<std::uint8_t>(pdu.timestamp.seconds >> 16);
    ts[2] = static_cast<std::uint8_t>(pdu.timestamp.seconds >> 8);
    ts[3] = static_cast<std::uint8_t>(pdu.timestamp.seconds);
    ts[4] = static_cast<std::uint8_t>(pdu.timestamp.fraction >> 16);
    ts[5] = static_cast<std::uint8_t>(pdu.timestamp.fraction >> 8);
    ts[6] = static_cast<std::uint8_t>(pdu.timestamp.fraction);
    ts[7] = pdu.timestamp.quality;
    if (pdu.timestamp.fraction >= (1u << 24))
        throw CodecError("timestamp fraction exceeds 24 bits", "t");
    ber::put_tlv(body, kTagTimestamp, ts);

    put_unsigned(body, kTagStNum, pdu.st_num);
    put_unsigned(body, kTagSqNum, pdu.sq_num);
    put_boolean(body, kTagTest, pdu.test);
    put_unsigned(body, kTagConfRev, pdu.conf_rev);
    put_boolean(body, kTagNdsCom, pdu.nds_com);
    put_unsigned(body, kTagNumEntries, pdu.all_data.size());

    std::vector<std::uint8_t> all_data;
    for (std::size_t i = 0; i < pdu.all_data.size(); ++i) {
        auto member = encode_data_value(pdu.all_data[i], i);
        all_data.insert(all_data.end(), member.begin(), member.end());
    }
    ber::put_tlv(body, kTagAllData, all_data);
    return body;
}

DataValue decode_data_value(ber::Reader& reader, std::size_t index) {
    const std::string field = "allData[" + std::to_string(index) + "]";
    const std::uint8_t tag = reader.peek_tag(field);
    switch (tag) {
        case kTagDataBoolean: {
            auto c = reader.read_tlv(tag, field);
            if (c.size() != 1)
                throw CodecError("boolean content must be one byte in " + field, field);
            return c[0] != 0;
        }
        case kTagDataInteger: {
            auto c = reader.read_tlv(tag, field);
            return ber::decode_integer(c, field);
        }
        case kTagDataBitString: {
            auto c = reader.read_tlv(tag, field);
            if (c.empty())
                throw CodecError("bit-string missing pad octet in " + field, field);
            const unsigned pad = c[0];
            if (pad > 7 || (c.size() == 1 && pad != 0))
                throw CodecError("invalid bit-string pad count in " + field, field);
            BitString bs;
            bs.bytes.assign(c.begin() + 1, c.end());
            bs.bit_count = static_cast<std::uint32_t>(bs.bytes.size() * 8 - pad);
            check_bit_string(bs, field);
            return bs;
        }
        case kTagDataString: {
            auto c = reader.read_tlv(tag, field);
            if (c.empty())
                throw CodecError("empty string not allowed in " + field, field);
            return std::string(c.begin(), c.end());
        }
        default:
            throw CodecError("unknown dataset member tag in " + field, field, reader.offset());
    }
}

std::uint32_t to_u32(std::uint64_t v, const std::string& field) {
    if (v > 0xFFFFFFFFull)
        throw CodecError(field + " exceeds 32 bits", field);
    return static_cast<std::uint32_t>(v);
}

bool read_boolean(ber::Reader& reader, std::uint8_t tag, const std::string& field) {
    auto c = reader.read_tlv(tag, field);
    if (c.size() != 1)
        throw CodecError("boolean content must be one byte for " + field, field);
    return c[0] != 0;
}

std::string read_string(ber::Reader& reader, std::uint8_t tag, const std::string& field) {
    auto c = reader.read_tlv(tag, field);
    if (c.empty())
        throw CodecError("empty string not allowed for " + field, field);
    return std::string(c.begin(), c.end());
}

}  // namespace

GooseTimestamp GooseTimestamp::from_ns(std::int64_t epoch_ns, std::uint8_t quality) {
    GooseTimestamp t;
    t.seconds = static_cast<std::uint32_t>(epoch_ns / 1'000'000'000);
    const std::int64_t ns = epoch_ns % 1'000'000'000;
    // Round to the nearest 2^-24 s tick.
    t.fraction = static_cast<std::uint32_t>((ns * (1ll << 24) + 500'000'000) / 1'000'000'000);
    if (t.fraction >= (1u << 24)) {
        t.fraction = 0;
        ++t.seconds;
    }
    t.quality = quality;
    return t;
}

std::int64_t GooseTimestamp::to_ns() const {
    return static_cast<std::int64_t>(seconds) * 1'000'000'000 + fraction_ns();
}

std::uint32_t GooseTimestamp::fraction_ns() const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(fraction) * 1'000'000'000 + (1u << 23)) >> 24);
}

std::size_t goose_pdu_wire_size(const GoosePdu& pdu) {
    auto content = encode_pdu_content(pdu);
    return ber::header_size(content.size()) + content.size();
}

std::vector<std::uint8_t> encode_goose(const GooseSessionHeader& header, const GoosePdu& pdu) {
    auto content = encode_pdu_content(pdu);
    const std::size_t pdu_size = ber::header_size(content.size()) + content.size();
    const std::size_t total = 8 + pdu_size;
    if (total > 0xFFFF)
        throw SizeError("GOOSE payload exceeds 65535 bytes");

    std::vector<std::uint8_t> out;
    out.reserve(total);
    out.push_back(static_cast<std::uint8_t>(header.appid >> 8));
    out.push_back(static_cast<std::uint8_t>(header.appid));
    out.push_back(static_cast<std::uint8_t>(total >> 8));
    out.push_back(static_cast<std::uint8_t>(total));
    out.insert(out.end(), 4, 0x00);  // reserved1, reserved2
    ber::put_tlv(out, kTagPdu, content);
    return out;
}

std::pair<GooseSessionHeader, GoosePdu> decode_goose(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8)
        throw CodecError("truncated GOOSE session header", "header", bytes.size());

    GooseSessionHeader header;
    header.appid = static_cast<std::uint16_t>(bytes[0] << 8 | bytes[1]);
    header.length = static_cast<std::uint16_t>(bytes[2] << 8 | bytes[3]);
    header.reserved1 = static_cast<std::uint16_t>(bytes[4] << 8 | bytes[5]);
    header.reserved2 = static_cast<std::uint16_t>(bytes[6] << 8 | bytes[7]);

    ber::Reader outer(bytes.subspan(8), 8);
    auto content = outer.read_tlv(kTagPdu, "goosePdu");
    outer.expect_done("goosePdu");

    const std::size_t pdu_size = bytes.size() - 8;
    if (header.length != 8 + pdu_size)
        throw CodecError("session header length " + std::to_string(header.length) +
                             " inconsistent with PDU size " + std::to_string(pdu_size),
                         "length", 2);

    ber::Reader r(content, 8 + (bytes.size() - 8 - content.size()));
    GoosePdu pdu;
    pdu.gocb_ref = read_string(r, kTagGocbRef, "gocbRef");
    pdu.time_allowed_to_live_ms =
        to_u32(ber::decode_unsigned(r.read_tlv(kTagTatl, "timeAllowedToLive"),
                                    "timeAllowedToLive"),
               "timeAllowedToLive");
    if (pdu.time_allowed_to_live_ms == 0)
        throw CodecError("timeAllowedToLive must be positive", "timeAllowedToLive");
    pdu.data_set = read_string(r, kTagDataSet, "dataSet");
    pdu.go_id = read_string(r, kTagGoId, "goId");

    auto ts = r.read_tlv(kTagTimestamp, "t");
    if (ts.size() != 8)
        throw CodecError("timestamp content must be 8 bytes", "t");
    pdu.timestamp.seconds = static_cast<std::uint32_t>(ts[0]) << 24 |
                            static_cast<std::uint32_t>(ts[1]) << 16 |
                            static_cast<std::uint32_t>(ts[2]) << 8 | ts[3];
    pdu.timestamp.fraction = static_cast<std::uint32_t>(ts[4]) << 16 |
                             static_cast<std::uint32_t>(ts[5]) << 8 | ts[6];
    pdu.timestamp.quality = ts[7];

    pdu.st_num = to_u32(ber::decode_unsigned(r.read_tlv(kTagStNum, "stNum"), "stNum"), "stNum");
    pdu.sq_num = to_u32(ber::decode_unsigned(r.read_tlv(kTagSqNum, "sqNum"), "sqNum"), "sqNum");
    pdu.test = read_boolean(r, kTagTest, "test");
    pdu.conf_rev =
        to_u32(ber::decode_unsigned(r.read_tlv(kTagConfRev, "confRev"), "confRev"), "confRev");
    pdu.nds_com = read_boolean(r, kTagNdsCom, "ndsCom");
    const std::uint64_t declared_entries = ber::decode_unsigned(
        r.read_tlv(kTagNumEntries, "numDataSetEntries"), "numDataSetEntries");

    auto all_data = r.read_tlv(kTagAllData, "allData");
    r.expect_done("goosePdu fields");

    ber::Reader members(all_data);
    while (!members.done())
        pdu.all_data.push_back(decode_data_value(members, pdu.all_data.size()));

    if (declared_entries != pdu.all_data.size())
        throw CodecError("numDataSetEntries " + std::to_string(declared_entries) +
                             " does not match allData arity " +
                             std::to_string(pdu.all_data.size()),
                         "numDataSetEntries");

    return {header, pdu};
}

}  // namespace iecsim::codec

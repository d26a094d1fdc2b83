#include "iecsim/sv_codec.hpp"

#include "iecsim/ber.hpp"
#include "iecsim/errors.hpp"
#include "iecsim/goose_codec.hpp"  // kMaxStringField

namespace iecsim::codec {

namespace {

constexpr std::uint8_t kTagAsdu = 0x30;
constexpr std::uint8_t kTagSvId = 0x80;
constexpr std::uint8_t kTagSmpCnt = 0x82;
constexpr std::uint8_t kTagConfRev = 0x83;
constexpr std::uint8_t kTagSamples = 0x87;
constexpr std::uint8_t kTagPadding = 0x8F;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::vector<std::uint8_t> encode_asdu(const SvAsdu& asdu, std::size_t index) {
    const std::string field = "asdu[" + std::to_string(index) + "].svId";
    if (asdu.sv_id.empty())
        throw CodecError("empty svId not allowed", field);
    if (asdu.sv_id.size() > kMaxStringField)
        throw SizeError("svId exceeds " + std::to_string(kMaxStringField) + " bytes", field);

    std::vector<std::uint8_t> content;
    content.reserve(asdu.sv_id.size() + 80);
    ber::put_tlv(content, kTagSvId,
                 {reinterpret_cast<const std::uint8_t*>(asdu.sv_id.data()), asdu.sv_id.size()});

    std::vector<std::uint8_t> tmp;
    put_u16(tmp, asdu.smp_cnt);
    ber::put_tlv(content, kTagSmpCnt, tmp);

    tmp.clear();
    put_u32(tmp, asdu.conf_rev);
    ber::put_tlv(content, kTagConfRev, tmp);

    tmp.clear();
    for (const auto& s : asdu.samples) {
        put_u32(tmp, static_cast<std::uint32_t>(s.value));
        put_u32(tmp, s.quality);
    }
    ber::put_tlv(content, kTagSamples, tmp);

    std::vector<std::uint8_t> out;
    ber::put_tlv(out, kTagAsdu, content);
    return out;
}

std::vector<std::uint8_t> encode_body(const SvApdu& apdu) {
    if (apdu.asdus.empty())
        throw CodecError("SV APDU must carry at least one ASDU", "noAsdu");
    std::vector<std::uint8_t> body;
    for (std::size_t i = 0; i < apdu.asdus.size(); ++i) {
        auto a = encode_asdu(apdu.asdus[i], i);
        body.insert(body.end(), a.begin(), a.end());
    }
    return body;
}

std::vector<std::uint8_t> finish(const SvApdu& apdu, std::vector<std::uint8_t> body) {
    const std::size_t total = 6 + body.size();
    if (total > 0xFFFF)
        throw SizeError("SV APDU exceeds 65535 bytes");
    std::vector<std::uint8_t> out;
    out.reserve(total);
    put_u16(out, apdu.appid);
    put_u16(out, static_cast<std::uint16_t>(total));
    put_u16(out, static_cast<std::uint16_t>(apdu.asdus.size()));
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

}  // namespace

std::vector<std::uint8_t> encode_sv(const SvApdu& apdu) {
    return finish(apdu, encode_body(apdu));
}

std::size_t sv_wire_size(const SvApdu& apdu) {
    return 6 + encode_body(apdu).size();
}

std::vector<std::uint8_t> encode_sv_padded(const SvApdu& apdu, std::size_t payload_target) {
    auto body = encode_body(apdu);
    const std::size_t unpadded = 6 + body.size();
    if (payload_target < unpadded)
        throw SizeError("SV padding target " + std::to_string(payload_target) +
                        " smaller than unpadded APDU of " + std::to_string(unpadded) + " bytes");
    if (payload_target == unpadded)
        return finish(apdu, std::move(body));

    // The padding TLV needs tag + length octets; solve for the content
    // size that lands exactly on the target.
    for (std::size_t pad = 0; pad <= payload_target - unpadded; ++pad) {
        if (unpadded + ber::header_size(pad) + pad == payload_target) {
            std::vector<std::uint8_t> zeros(pad, 0x00);
            ber::put_tlv(body, kTagPadding, zeros);
            return finish(apdu, std::move(body));
        }
    }
    throw SizeError("SV padding target " + std::to_string(payload_target) +
                    " unreachable from " + std::to_string(unpadded) + " bytes");
}

SvApdu decode_sv(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 6)
        throw CodecError("truncated SV APDU header", "header", bytes.size());
    SvApdu apdu;
    apdu.appid = static_cast<std::uint16_t>(bytes[0] << 8 | bytes[1]);
    const std::uint16_t length = static_cast<std::uint16_t>(bytes[2] << 8 | bytes[3]);
    const std::uint16_t no_asdu = static_cast<std::uint16_t>(bytes[4] << 8 | bytes[5]);
    if (length != bytes.size())
        throw CodecError("SV length field " + std::to_string(length) +
                             " inconsistent with payload size " + std::to_string(bytes.size()),
                         "length", 2);
    if (no_asdu == 0)
        throw CodecError("SV APDU must carry at least one ASDU", "noAsdu", 4);

    ber::Reader r(bytes.subspan(6), 6);
    for (std::uint16_t i = 0; i < no_asdu; ++i) {
        const std::string field = "asdu[" + std::to_string(i) + "]";
        auto content = r.read_tlv(kTagAsdu, field);
        ber::Reader a(content);
        SvAsdu asdu;
        auto sv_id = a.read_tlv(kTagSvId, field + ".svId");
        if (sv_id.empty())
            throw CodecError("empty svId not allowed", field + ".svId");
        asdu.sv_id.assign(sv_id.begin(), sv_id.end());
        auto cnt = a.read_tlv(kTagSmpCnt, field + ".smpCnt");
        if (cnt.size() != 2)
            throw CodecError("smpCnt content must be 2 bytes", field + ".smpCnt");
        asdu.smp_cnt = static_cast<std::uint16_t>(cnt[0] << 8 | cnt[1]);
        auto rev = a.read_tlv(kTagConfRev, field + ".confRev");
        if (rev.size() != 4)
            throw CodecError("confRev content must be 4 bytes", field + ".confRev");
        asdu.conf_rev = static_cast<std::uint32_t>(rev[0]) << 24 |
                        static_cast<std::uint32_t>(rev[1]) << 16 |
                        static_cast<std::uint32_t>(rev[2]) << 8 | rev[3];
        auto block = a.read_tlv(kTagSamples, field + ".samples");
        if (block.size() != 64)
            throw CodecError("sample block must be 64 bytes (8 value/quality pairs)",
                             field + ".samples");
        for (std::size_t s = 0; s < 8; ++s) {
            const std::size_t off = s * 8;
            std::uint32_t v = static_cast<std::uint32_t>(block[off]) << 24 |
                              static_cast<std::uint32_t>(block[off + 1]) << 16 |
                              static_cast<std::uint32_t>(block[off + 2]) << 8 | block[off + 3];
            std::uint32_t q = static_cast<std::uint32_t>(block[off + 4]) << 24 |
                              static_cast<std::uint32_t>(block[off + 5]) << 16 |
                              static_cast<std::uint32_t>(block[off + 6]) << 8 | block[off + 7];
            asdu.samples[s] = SvSample{static_cast<std::int32_t>(v), q};
        }
        a.expect_done(field);
        apdu.asdus.push_back(std::move(asdu));
    }
    if (!r.done()) {
        auto pad = r.read_tlv(kTagPadding, "padding");
        for (auto b : pad)
            if (b != 0) throw CodecError("SV padding bytes must be zero", "padding");
        r.expect_done("SV APDU");
    }
    return apdu;
}

}  // namespace iecsim::codec

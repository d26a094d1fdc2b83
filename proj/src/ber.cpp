#include "iecsim/ber.hpp"

namespace iecsim::ber {

namespace {

void put_length(std::vector<std::uint8_t>& out, std::size_t len) {
    if (len < 0x80) {
        out.push_back(static_cast<std::uint8_t>(len));
    } else if (len <= 0xFF) {
        out.push_back(0x81);
        out.push_back(static_cast<std::uint8_t>(len));
    } else if (len <= 0xFFFF) {
        out.push_back(0x82);
        out.push_back(static_cast<std::uint8_t>(len >> 8));
        out.push_back(static_cast<std::uint8_t>(len));
    } else {
        throw SizeError("BER content longer than 65535 bytes");
    }
}

}  // namespace

std::size_t header_size(std::size_t len) {
    if (len < 0x80) return 2;
    if (len <= 0xFF) return 3;
    if (len <= 0xFFFF) return 4;
    throw SizeError("BER content longer than 65535 bytes");
}

void put_tlv(std::vector<std::uint8_t>& out, std::uint8_t tag,
             std::span<const std::uint8_t> content) {
    out.push_back(tag);
    put_length(out, content.size());
    out.insert(out.end(), content.begin(), content.end());
}

std::vector<std::uint8_t> encode_integer(std::int64_t value) {
    std::vector<std::uint8_t> bytes;
    // Emit big-endian, then trim redundant leading octets (a leading byte
    // is redundant when it equals the sign extension of the next one).
    for (int shift = 56; shift >= 0; shift -= 8)
        bytes.push_back(static_cast<std::uint8_t>(value >> shift));
    std::size_t start = 0;
    while (start + 1 < bytes.size()) {
        bool same_sign = (bytes[start + 1] & 0x80) == (bytes[start] == 0xFF ? 0x80 : 0x00);
        if ((bytes[start] == 0x00 || bytes[start] == 0xFF) && same_sign)
            ++start;
        else
            break;
    }
    return {bytes.begin() + static_cast<std::ptrdiff_t>(start), bytes.end()};
}

std::vector<std::uint8_t> encode_unsigned(std::uint64_t value) {
    int n = 1;
    while (n < 8 && (value >> (8 * n)) != 0) ++n;
    std::vector<std::uint8_t> bytes;
    bytes.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = n - 1; i >= 0; --i)
        bytes.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
    if (bytes.front() & 0x80) bytes.insert(bytes.begin(), 0x00);  // keep sign bit clear
    return bytes;
}

std::uint8_t Reader::peek_tag(const std::string& field) const {
    if (done())
        throw CodecError("truncated input while reading tag of " + field, field, offset());
    return data_[pos_];
}

std::span<const std::uint8_t> Reader::read_tlv(std::uint8_t tag, const std::string& field) {
    if (done())
        throw CodecError("truncated input: missing " + field, field, offset());
    if (data_[pos_] != tag)
        throw CodecError("unexpected BER tag for " + field, field, offset());
    std::size_t p = pos_ + 1;
    if (p >= data_.size())
        throw CodecError("truncated length of " + field, field, base_ + p);
    std::size_t len = 0;
    std::uint8_t first = data_[p++];
    if (first < 0x80) {
        len = first;
    } else if (first == 0x80) {
        throw CodecError("indefinite BER length not allowed for " + field, field, base_ + p - 1);
    } else {
        std::size_t n = first & 0x7F;
        if (n > 2)
            throw CodecError("BER length of " + field + " wider than 2 bytes", field, base_ + p - 1);
        if (p + n > data_.size())
            throw CodecError("truncated length of " + field, field, base_ + p);
        for (std::size_t i = 0; i < n; ++i) len = len << 8 | data_[p++];
        // Reject non-minimal long forms.
        if ((n == 1 && len < 0x80) || (n == 2 && len <= 0xFF))
            throw CodecError("non-minimal BER length for " + field, field, base_ + pos_ + 1);
    }
    if (p + len > data_.size())
        throw CodecError("truncated content of " + field, field, base_ + p);
    auto content = data_.subspan(p, len);
    pos_ = p + len;
    return content;
}

void Reader::expect_done(const std::string& context) const {
    if (!done())
        throw CodecError("trailing bytes after " + context, context, offset());
}

std::int64_t decode_integer(std::span<const std::uint8_t> content, const std::string& field) {
    if (content.empty())
        throw CodecError("empty integer content for " + field, field);
    if (content.size() > 8)
        throw CodecError("integer " + field + " wider than 64 bits", field);
    if (content.size() > 1) {
        // Non-minimal: first 9 bits all zeros or all ones.
        bool pad0 = content[0] == 0x00 && (content[1] & 0x80) == 0;
        bool pad1 = content[0] == 0xFF && (content[1] & 0x80) != 0;
        if (pad0 || pad1)
            throw CodecError("non-minimal integer encoding for " + field, field);
    }
    std::int64_t v = (content[0] & 0x80) ? -1 : 0;
    for (auto b : content) v = v << 8 | b;
    return v;
}

std::uint64_t decode_unsigned(std::span<const std::uint8_t> content, const std::string& field) {
    if (content.empty())
        throw CodecError("empty integer content for " + field, field);
    if (content[0] & 0x80)
        throw CodecError("negative value for unsigned field " + field, field);
    if (content.size() > 1 && content[0] == 0x00 && (content[1] & 0x80) == 0)
        throw CodecError("non-minimal integer encoding for " + field, field);
    if (content.size() > 9 || (content.size() == 9 && content[0] != 0x00))
        throw CodecError("unsigned " + field + " wider than 64 bits", field);
    std::uint64_t v = 0;
    for (auto b : content) v = v << 8 | b;
    return v;
}

}  // namespace iecsim::ber

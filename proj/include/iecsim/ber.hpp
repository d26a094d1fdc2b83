#pragma once

// Minimal BER tag-length-value layer used by the GOOSE and SV codecs.
// Definite lengths only, and only the minimal encoding of each length is
// accepted on decode so that encode/decode is a bijection.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iecsim/errors.hpp"

namespace iecsim::ber {

// Appends tag + minimal definite length + content.
void put_tlv(std::vector<std::uint8_t>& out, std::uint8_t tag,
             std::span<const std::uint8_t> content);

// Size of tag + length octets for a content of `len` bytes.
std::size_t header_size(std::size_t len);

// Minimal two's-complement content octets of a signed integer.
std::vector<std::uint8_t> encode_integer(std::int64_t value);

// Minimal two's-complement content octets of an unsigned integer (a
// leading 0x00 is added when the top bit would otherwise be set).
std::vector<std::uint8_t> encode_unsigned(std::uint64_t value);

// Sequential TLV reader over a byte span. Offsets in errors are relative
// to the start of the span handed to the constructor.
class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> data, std::size_t base_offset = 0)
        : data_(data), base_(base_offset) {}

    bool done() const noexcept { return pos_ >= data_.size(); }
    std::size_t offset() const noexcept { return base_ + pos_; }

    // Peeks the tag of the next TLV without consuming it.
    std::uint8_t peek_tag(const std::string& field) const;

    // Reads one TLV; the tag must equal `tag`.
    std::span<const std::uint8_t> read_tlv(std::uint8_t tag, const std::string& field);

    // Fails unless the whole span has been consumed.
    void expect_done(const std::string& context) const;

private:
    std::span<const std::uint8_t> data_;
    std::size_t base_ = 0;
    std::size_t pos_ = 0;
};

// Content decoders; `field` names the value in error messages.
std::int64_t decode_integer(std::span<const std::uint8_t> content,
                            const std::string& field);
std::uint64_t decode_unsigned(std::span<const std::uint8_t> content,
                              const std::string& field);

}  // namespace iecsim::ber

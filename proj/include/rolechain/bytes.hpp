#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rolechain/result.hpp"

namespace rolechain {

using Hash256 = std::array<uint8_t, 32>;

inline std::string hex_encode(std::span<const uint8_t> data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

inline std::string hex_encode(const Hash256& h) {
    return hex_encode(std::span<const uint8_t>(h.data(), h.size()));
}

inline Result<std::vector<uint8_t>> hex_decode(std::string_view text) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (text.size() % 2 != 0) return Error{Errc::truncated_input, "odd hex length"};
    std::vector<uint8_t> out;
    out.reserve(text.size() / 2);
    for (size_t i = 0; i < text.size(); i += 2) {
        int hi = nibble(text[i]);
        int lo = nibble(text[i + 1]);
        if (hi < 0 || lo < 0) return Error{Errc::malformed_payload, "invalid hex digit"};
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

/// Append-only byte sink for the canonical little-endian wire layouts.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }

    void u16le(uint16_t v) {
        buf_.push_back(static_cast<uint8_t>(v));
        buf_.push_back(static_cast<uint8_t>(v >> 8));
    }

    void u32le(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void u64le(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void bytes(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

    template <size_t N>
    void bytes(const std::array<uint8_t, N>& data) {
        buf_.insert(buf_.end(), data.begin(), data.end());
    }

    // Bitcoin CompactSize.
    void varint(uint64_t v) {
        if (v < 0xfd) {
            u8(static_cast<uint8_t>(v));
        } else if (v <= 0xffff) {
            u8(0xfd);
            u16le(static_cast<uint16_t>(v));
        } else if (v <= 0xffffffff) {
            u8(0xfe);
            u32le(static_cast<uint32_t>(v));
        } else {
            u8(0xff);
            u64le(v);
        }
    }

    const std::vector<uint8_t>& data() const { return buf_; }
    std::vector<uint8_t> take() { return std::move(buf_); }

private:
    std::vector<uint8_t> buf_;
};

/// Cursor over immutable bytes; every read reports truncation instead of walking off the end.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    size_t remaining() const { return data_.size() - pos_; }
    size_t position() const { return pos_; }
    bool done() const { return pos_ == data_.size(); }

    Result<uint8_t> u8() {
        if (remaining() < 1) return truncated();
        return data_[pos_++];
    }

    Result<uint16_t> u16le() {
        if (remaining() < 2) return truncated();
        uint16_t v = static_cast<uint16_t>(data_[pos_]) | static_cast<uint16_t>(data_[pos_ + 1]) << 8;
        pos_ += 2;
        return v;
    }

    Result<uint32_t> u32le() {
        if (remaining() < 4) return truncated();
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }

    Result<uint64_t> u64le() {
        if (remaining() < 8) return truncated();
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    template <size_t N>
    Result<std::array<uint8_t, N>> bytes() {
        if (remaining() < N) return truncated();
        std::array<uint8_t, N> out;
        std::memcpy(out.data(), data_.data() + pos_, N);
        pos_ += N;
        return out;
    }

    Result<uint64_t> varint() {
        auto tag = u8();
        if (!tag) return tag.error();
        switch (tag.value()) {
            case 0xfd: {
                auto v = u16le();
                if (!v) return v.error();
                return static_cast<uint64_t>(v.value());
            }
            case 0xfe: {
                auto v = u32le();
                if (!v) return v.error();
                return static_cast<uint64_t>(v.value());
            }
            case 0xff:
                return u64le();
            default:
                return static_cast<uint64_t>(tag.value());
        }
    }

private:
    Error truncated() const { return Error{Errc::truncated_input, "unexpected end of input"}; }

    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

}  // namespace rolechain

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "examchain/bytes.hpp"

namespace examchain {

// Canonical wire rules used for everything that gets hashed or signed:
// fields in declaration order, integers big-endian fixed-width, variable
// byte-strings prefixed with a 4-byte big-endian length, fixed-width
// fields (digests, addresses, keys, signatures) written raw.

struct DecodeError : std::runtime_error {
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

class Encoder {
 public:
  void put_u8(uint8_t v) { buf_.push_back(v); }
  void put_u32(uint32_t v);
  void put_u64(uint64_t v);
  void put_i64(int64_t v);  // two's complement, big-endian
  void put_raw(ByteView data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
  template <size_t N>
  void put_fixed(const FixedBytes<N>& f) {
    put_raw(f.view());
  }
  void put_bytes(ByteView data);  // 4-byte length prefix
  void put_string(std::string_view s);

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

class Decoder {
 public:
  explicit Decoder(ByteView data) : data_(data) {}

  uint8_t get_u8();
  uint32_t get_u32();
  uint64_t get_u64();
  int64_t get_i64();
  Bytes get_raw(size_t n);
  template <size_t N>
  FixedBytes<N> get_fixed() {
    return FixedBytes<N>::from(take(N));
  }
  Bytes get_bytes();        // 4-byte length prefix
  std::string get_string();

  size_t remaining() const { return data_.size() - pos_; }
  // Every decoder must end with finish(): trailing bytes are an error, so
  // decode(encode(x)) == x is the only way a buffer parses.
  void finish() const {
    if (pos_ != data_.size()) throw DecodeError("trailing bytes");
  }

 private:
  ByteView take(size_t n);
  ByteView data_;
  size_t pos_ = 0;
};

}  // namespace examchain

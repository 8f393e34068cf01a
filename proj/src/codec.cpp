#include "examchain/codec.hpp"

#include <limits>

namespace examchain {

void Encoder::put_u32(uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8)
    buf_.push_back(static_cast<uint8_t>(v >> shift));
}

void Encoder::put_u64(uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8)
    buf_.push_back(static_cast<uint8_t>(v >> shift));
}

void Encoder::put_i64(int64_t v) {
  put_u64(static_cast<uint64_t>(v));
}

void Encoder::put_bytes(ByteView data) {
  if (data.size() > std::numeric_limits<uint32_t>::max())
    throw std::length_error("Encoder::put_bytes: too long");
  put_u32(static_cast<uint32_t>(data.size()));
  put_raw(data);
}

void Encoder::put_string(std::string_view s) {
  put_bytes(ByteView(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

ByteView Decoder::take(size_t n) {
  if (n > remaining()) throw DecodeError("buffer underrun");
  ByteView out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

uint8_t Decoder::get_u8() {
  return take(1)[0];
}

uint32_t Decoder::get_u32() {
  ByteView b = take(4);
  uint32_t v = 0;
  for (uint8_t byte : b) v = (v << 8) | byte;
  return v;
}

uint64_t Decoder::get_u64() {
  ByteView b = take(8);
  uint64_t v = 0;
  for (uint8_t byte : b) v = (v << 8) | byte;
  return v;
}

int64_t Decoder::get_i64() {
  return static_cast<int64_t>(get_u64());
}

Bytes Decoder::get_raw(size_t n) {
  ByteView b = take(n);
  return Bytes(b.begin(), b.end());
}

Bytes Decoder::get_bytes() {
  uint32_t len = get_u32();
  return get_raw(len);
}

std::string Decoder::get_string() {
  Bytes b = get_bytes();
  return std::string(b.begin(), b.end());
}

}  // namespace examchain

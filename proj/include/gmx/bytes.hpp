// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#ifndef GMX_BYTES_H_
#define GMX_BYTES_H_

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "gmx/errors.hpp"

namespace gmx {

// FNV-1a, 64-bit. Used for weight binding and container integrity.
inline uint64_t Fnv1a64(const uint8_t* data, size_t n,
                        uint64_t state = UINT64_C(0xCBF29CE484222325)) {
  for (size_t i = 0; i < n; ++i) {
    state ^= data[i];
    state *= UINT64_C(0x100000001B3);
  }
  return state;
}

inline uint64_t Fnv1a64(const std::vector<uint8_t>& v,
                        uint64_t state = UINT64_C(0xCBF29CE484222325)) {
  return Fnv1a64(v.data(), v.size(), state);
}

// Little-endian append-only byte sink.
class ByteWriter {
 public:
  void U8(uint8_t v) { b_.push_back(v); }
  void U16(uint16_t v) {
    for (int i = 0; i < 2; ++i) b_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void U32(uint32_t v) {
    for (int i = 0; i < 4; ++i) b_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) b_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void F32(float v) {
    uint32_t u;
    std::memcpy(&u, &v, 4);
    U32(u);
  }
  void F64(double v) {
    uint64_t u;
    std::memcpy(&u, &v, 8);
    U64(u);
  }
  void Bytes(const uint8_t* p, size_t n) { b_.insert(b_.end(), p, p + n); }
  void Bytes(const std::vector<uint8_t>& v) { Bytes(v.data(), v.size()); }
  void Tag(const char tag[4]) { Bytes(reinterpret_cast<const uint8_t*>(tag), 4); }

  size_t size() const { return b_.size(); }
  const std::vector<uint8_t>& bytes() const { return b_; }
  std::vector<uint8_t> Take() { return std::move(b_); }

 private:
  std::vector<uint8_t> b_;
};

// Little-endian bounded reader. Throws FormatError on over-read.
class ByteReader {
 public:
  ByteReader(const uint8_t* p, size_t n) : p_(p), end_(p + n) {}
  explicit ByteReader(const std::vector<uint8_t>& v) : ByteReader(v.data(), v.size()) {}

  uint8_t U8() { return *Need(1); }
  uint16_t U16() {
    const uint8_t* p = Need(2);
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
  }
  uint32_t U32() {
    const uint8_t* p = Need(4);
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
  }
  uint64_t U64() {
    uint64_t lo = U32();
    uint64_t hi = U32();
    return lo | (hi << 32);
  }
  float F32() {
    uint32_t u = U32();
    float v;
    std::memcpy(&v, &u, 4);
    return v;
  }
  double F64() {
    uint64_t u = U64();
    double v;
    std::memcpy(&v, &u, 8);
    return v;
  }
  std::vector<uint8_t> Bytes(size_t n) {
    const uint8_t* p = Need(n);
    return std::vector<uint8_t>(p, p + n);
  }
  void ExpectTag(const char tag[4], const char* what) {
    const uint8_t* p = Need(4);
    if (std::memcmp(p, tag, 4) != 0) {
      throw FormatError(std::string("bad magic for ") + what);
    }
  }

  size_t remaining() const { return static_cast<size_t>(end_ - p_); }
  const uint8_t* cursor() const { return p_; }

 private:
  const uint8_t* Need(size_t n) {
    if (remaining() < n) throw FormatError("truncated input");
    const uint8_t* p = p_;
    p_ += n;
    return p;
  }

  const uint8_t* p_;
  const uint8_t* end_;
};

}  // namespace gmx

#endif  // GMX_BYTES_H_

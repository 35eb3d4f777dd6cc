// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#ifndef GMX_SYMBOLS_H_
#define GMX_SYMBOLS_H_

#include <cstdint>
#include <utility>

#include "gmx/errors.hpp"
#include "gmx/tensor.hpp"

namespace gmx {

// The coding alphabet shared by the main latent and the hyper latent.
constexpr int kSymbolMin = -255;
constexpr int kSymbolMax = 256;
constexpr int kAlphabetSize = kSymbolMax - kSymbolMin + 1;  // 512

constexpr bool InAlphabet(int64_t s) { return s >= kSymbolMin && s <= kSymbolMax; }
constexpr int SymbolToIndex(int s) { return s - kSymbolMin; }
constexpr int IndexToSymbol(int i) { return i + kSymbolMin; }

// Integer latent tensor whose every value is known to lie in the alphabet.
class SymbolTensor {
 public:
  SymbolTensor() = default;

  static SymbolTensor FromTensor(Tensori values) {
    for (int64_t i = 0; i < values.size(); ++i) {
      if (!InAlphabet(values.data()[i])) {
        throw AlphabetRangeError("symbol " + std::to_string(values.data()[i]) +
                                 " outside [-255, 256]");
      }
    }
    SymbolTensor t;
    t.v_ = std::move(values);
    return t;
  }

  const Tensori& values() const { return v_; }
  int channels() const { return v_.channels(); }
  int height() const { return v_.height(); }
  int width() const { return v_.width(); }
  int64_t size() const { return v_.size(); }
  int32_t at(int c, int y, int x) const { return v_.at(c, y, x); }

  bool operator==(const SymbolTensor& o) const {
    if (!v_.SameShape(o.v_)) return false;
    for (int64_t i = 0; i < v_.size(); ++i) {
      if (v_.data()[i] != o.v_.data()[i]) return false;
    }
    return true;
  }

 private:
  Tensori v_;
};

}  // namespace gmx

#endif  // GMX_SYMBOLS_H_

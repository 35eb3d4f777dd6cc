// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#ifndef GMX_TENSOR_H_
#define GMX_TENSOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gmx/errors.hpp"

namespace gmx {

// Dense row-major [C x H x W] tensor.
template <typename T>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int c, int h, int w, T fill = T{}) : c_(c), h_(h), w_(w) {
    if (c < 0 || h < 0 || w < 0) {
      throw GeometryError("negative tensor dimension");
    }
    v_.assign(static_cast<size_t>(c) * h * w, fill);
  }

  int channels() const { return c_; }
  int height() const { return h_; }
  int width() const { return w_; }
  int64_t size() const { return static_cast<int64_t>(v_.size()); }
  bool empty() const { return v_.empty(); }

  T* Row(int c, int y) { return v_.data() + (static_cast<size_t>(c) * h_ + y) * w_; }
  const T* Row(int c, int y) const {
    return v_.data() + (static_cast<size_t>(c) * h_ + y) * w_;
  }

  T& at(int c, int y, int x) { return Row(c, y)[x]; }
  const T& at(int c, int y, int x) const { return Row(c, y)[x]; }

  T* data() { return v_.data(); }
  const T* data() const { return v_.data(); }

  bool SameShape(const Tensor3& o) const {
    return c_ == o.c_ && h_ == o.h_ && w_ == o.w_;
  }

  std::string ShapeString() const {
    return std::to_string(c_) + "x" + std::to_string(h_) + "x" + std::to_string(w_);
  }

 private:
  int c_ = 0, h_ = 0, w_ = 0;
  std::vector<T> v_;
};

using Tensorf = Tensor3<float>;
using Tensord = Tensor3<double>;
using Tensori = Tensor3<int32_t>;

template <typename T>
Tensord ToDouble(const Tensor3<T>& t) {
  Tensord out(t.channels(), t.height(), t.width());
  for (int64_t i = 0; i < t.size(); ++i) out.data()[i] = static_cast<double>(t.data()[i]);
  return out;
}

template <typename T>
Tensorf ToFloat(const Tensor3<T>& t) {
  Tensorf out(t.channels(), t.height(), t.width());
  for (int64_t i = 0; i < t.size(); ++i) out.data()[i] = static_cast<float>(t.data()[i]);
  return out;
}

}  // namespace gmx

#endif  // GMX_TENSOR_H_

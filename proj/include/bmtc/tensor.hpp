#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bmtc/errors.hpp"

namespace bmtc {

// Dense row-major buffer used for frames, perturbations and model
// parameters. Video data is laid out [t][y][x][c].
template <typename T>
struct Tensor {
  std::vector<int> dims;
  std::vector<T> data;

  Tensor() = default;
  Tensor(std::vector<int> d, T fill = T(0)) : dims(std::move(d)) {
    data.assign(size_from(dims), fill);
  }

  static size_t size_from(const std::vector<int>& d) {
    size_t n = 1;
    for (int v : d) n *= static_cast<size_t>(v);
    return n;
  }

  size_t size() const { return data.size(); }
  T* begin() { return data.data(); }
  T* end() { return data.data() + data.size(); }
  const T* begin() const { return data.data(); }
  const T* end() const { return data.data() + data.size(); }
  T& operator[](size_t i) { return data[i]; }
  const T& operator[](size_t i) const { return data[i]; }

  bool same_shape(const Tensor& o) const { return dims == o.dims; }

  bool all_finite() const {
    for (T v : data)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.dims = dims;
    out.data.resize(data.size());
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }
};

template <typename T>
double max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  require(a.same_shape(b), "max_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i])));
  }
  return m;
}

// A T x H x W x C pixel block in [0,1] with its action label.
template <typename T>
struct VideoClip {
  Tensor<T> frames;  // dims = {t, h, w, 3}
  int label = 0;
  std::string clip_id;

  int t() const { return frames.dims[0]; }
  int h() const { return frames.dims[1]; }
  int w() const { return frames.dims[2]; }
  int c() const { return frames.dims[3]; }
  size_t frame_size() const { return static_cast<size_t>(h()) * w() * c(); }

  const T* frame(int i) const { return frames.data.data() + frame_size() * i; }
  T* frame(int i) { return frames.data.data() + frame_size() * i; }

  void validate(int k_categories) const {
    require(frames.dims.size() == 4, "clip: frames must be t*h*w*c");
    require(t() >= 1, "clip: needs at least one frame");
    require(c() == 3, "clip: channel count must be 3");
    require(label >= 0 && label < k_categories, "clip: label out of range");
    for (T v : frames.data) {
      require_numeric(std::isfinite(static_cast<double>(v)), "clip: non-finite pixel");
      require(v >= T(0) && v <= T(1), "clip: pixel outside [0,1]");
    }
  }
};

// Additive perturbation, same shape as the clip it belongs to.
template <typename T>
struct Perturbation {
  Tensor<T> delta;
};

template <typename T>
double linf_norm(const Tensor<T>& x) {
  double m = 0.0;
  for (T v : x.data) m = std::max(m, std::abs(static_cast<double>(v)));
  return m;
}

}  // namespace bmtc

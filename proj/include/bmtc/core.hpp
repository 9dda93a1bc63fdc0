#pragma once

#include <cmath>
#include <cstdint>

#include "bmtc/errors.hpp"
#include "bmtc/tensor.hpp"

namespace bmtc {

// Every scalar of the attack in one place. Values are on the [0,1] pixel
// scale, so the usual 8-bit budgets appear as n/255.
struct AttackConfig {
  double epsilon = 16.0 / 255.0;  // max l_inf perturbation
  double eta = 1.6 / 255.0;       // step size
  int n_iter = 10;
  double gamma = 0.2;    // mixup weight
  double beta = 0.1;     // temporal gradient consistency weight
  double alpha1 = 0.3;   // transfer reward weight
  double alpha2 = 0.1;   // background consistency reward weight
  double lambda_ft = 0.2;  // fine-tune background loss weight
  int m_models = 3;        // auxiliary models for the transfer reward
  uint64_t seed = 0;

  static AttackConfig video_defaults() { return AttackConfig{}; }

  static AttackConfig image_defaults() {
    AttackConfig c;
    c.epsilon = 8.0 / 255.0;
    c.eta = 0.8 / 255.0;
    return c;
  }

  void validate() const {
    require(epsilon > 0.0, "config: epsilon must be > 0");
    require(eta > 0.0, "config: eta must be > 0");
    require(n_iter >= 0, "config: n_iter must be >= 0");
    require(gamma >= 0.0 && gamma <= 1.0, "config: gamma outside [0,1]");
    require(beta >= 0.0 && beta <= 1.0, "config: beta outside [0,1]");
    require(alpha1 > 0.0, "config: alpha1 must be > 0");
    require(alpha2 > 0.0, "config: alpha2 must be > 0");
  }
};

// Clips `candidate` into the l_inf ball of radius epsilon around `anchor`,
// then into the pixel range [0,1].
template <typename T>
Tensor<T> project_linf(const Tensor<T>& candidate, const Tensor<T>& anchor, double epsilon) {
  require(candidate.same_shape(anchor), "project_linf: shape mismatch");
  require(epsilon >= 0.0, "project_linf: epsilon must be >= 0");
  Tensor<T> out = candidate;
  const T eps = static_cast<T>(epsilon);
  for (size_t i = 0; i < out.size(); ++i) {
    require_numeric(std::isfinite(static_cast<double>(candidate[i])),
                    "project_linf: non-finite candidate");
    T lo = anchor[i] - eps;
    T hi = anchor[i] + eps;
    T v = out[i];
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    if (v < T(0)) v = T(0);
    if (v > T(1)) v = T(1);
    out[i] = v;
  }
  return out;
}

// x + eta * sign(grad), with sign(0) = 0.
template <typename T>
Tensor<T> sign_step(const Tensor<T>& x, const Tensor<T>& grad, double eta) {
  require(x.same_shape(grad), "sign_step: shape mismatch");
  Tensor<T> out = x;
  const T step = static_cast<T>(eta);
  for (size_t i = 0; i < out.size(); ++i) {
    require_numeric(std::isfinite(static_cast<double>(grad[i])), "sign_step: non-finite gradient");
    if (grad[i] > T(0)) {
      out[i] = x[i] + step;
    } else if (grad[i] < T(0)) {
      out[i] = x[i] - step;
    }
  }
  return out;
}

}  // namespace bmtc

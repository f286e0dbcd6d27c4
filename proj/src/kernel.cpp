#include "rkhspg/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rkhspg {

KernelSpec make_kernel(Vec bandwidths) {
  if (bandwidths.size() == 0) {
    throw std::invalid_argument("kernel: empty bandwidth vector");
  }
  for (Eigen::Index i = 0; i < bandwidths.size(); ++i) {
    if (!(bandwidths[i] > 0.0) || !std::isfinite(bandwidths[i])) {
      throw std::invalid_argument("kernel: bandwidths must be positive and finite");
    }
  }
  return KernelSpec{std::move(bandwidths)};
}

double kernel_eval(const KernelSpec& spec, const Vec& x, const Vec& y) {
  if (x.size() != spec.bandwidths.size() || y.size() != spec.bandwidths.size()) {
    throw std::invalid_argument("kernel_eval: dimension mismatch");
  }
  double q = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    q += d * d / spec.bandwidths[i];
  }
  return std::exp(-0.5 * q);
}

Mat gram_matrix(const KernelSpec& spec, const std::vector<Vec>& d1,
                const std::vector<Vec>& d2) {
  Mat g(static_cast<Eigen::Index>(d1.size()), static_cast<Eigen::Index>(d2.size()));
  for (std::size_t l = 0; l < d1.size(); ++l) {
    for (std::size_t m = 0; m < d2.size(); ++m) {
      g(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) =
          kernel_eval(spec, d1[l], d2[m]);
    }
  }
  return g;
}

RkhsFunction::RkhsFunction(KernelSpec kernel, int action_dim)
    : kernel_(std::move(kernel)), action_dim_(action_dim) {
  if (action_dim_ <= 0) {
    throw std::invalid_argument("RkhsFunction: action dimension must be positive");
  }
}

RkhsFunction::RkhsFunction(KernelSpec kernel, std::vector<Vec> centers,
                           std::vector<Vec> weights)
    : kernel_(std::move(kernel)),
      action_dim_(0),
      centers_(std::move(centers)),
      weights_(std::move(weights)) {
  if (centers_.size() != weights_.size()) {
    throw std::invalid_argument("RkhsFunction: centers/weights size mismatch");
  }
  if (weights_.empty()) {
    throw std::invalid_argument(
        "RkhsFunction: empty dictionary needs the explicit action-dim constructor");
  }
  action_dim_ = static_cast<int>(weights_.front().size());
  for (const Vec& c : centers_) {
    if (c.size() != kernel_.bandwidths.size()) {
      throw std::invalid_argument("RkhsFunction: center dimension mismatch");
    }
  }
  for (const Vec& w : weights_) {
    if (static_cast<int>(w.size()) != action_dim_) {
      throw std::invalid_argument("RkhsFunction: weight dimension mismatch");
    }
  }
}

Vec RkhsFunction::evaluate(const Vec& s) const {
  if (s.size() != kernel_.bandwidths.size()) {
    throw std::invalid_argument("evaluate: state dimension mismatch");
  }
  Vec out = Vec::Zero(action_dim_);
  for (std::size_t j = 0; j < centers_.size(); ++j) {
    out += kernel_eval(kernel_, centers_[j], s) * weights_[j];
  }
  return out;
}

double inner_product(const RkhsFunction& h1, const RkhsFunction& h2) {
  if (!(h1.kernel() == h2.kernel())) {
    throw std::invalid_argument("inner_product: kernel spec mismatch");
  }
  if (h1.action_dim() != h2.action_dim()) {
    throw std::invalid_argument("inner_product: action dimension mismatch");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < h1.centers().size(); ++j) {
    for (std::size_t l = 0; l < h2.centers().size(); ++l) {
      acc += kernel_eval(h1.kernel(), h1.centers()[j], h2.centers()[l]) *
             h1.weights()[j].dot(h2.weights()[l]);
    }
  }
  return acc;
}

double hilbert_norm_sq(const RkhsFunction& h) {
  const double raw = inner_product(h, h);
  if (raw >= 0.0) return raw;
  double scale = 1.0;
  for (const Vec& w : h.weights()) scale += w.squaredNorm();
  // Quadratic forms can go slightly negative in floating point; anything
  // beyond the rounding-noise tolerance indicates a real bug.
  const double tol = 1e-9 * static_cast<double>(h.order() + 1) * scale;
  if (raw < -tol) {
    throw std::runtime_error("hilbert_norm_sq: quadratic form negative beyond tolerance");
  }
  return 0.0;
}

double hilbert_norm(const RkhsFunction& h) { return std::sqrt(hilbert_norm_sq(h)); }

RkhsFunction add_scaled_kernel(const RkhsFunction& h, const Vec& center, const Vec& coeff) {
  if (center.size() != h.kernel().bandwidths.size()) {
    throw std::invalid_argument("add_scaled_kernel: center dimension mismatch");
  }
  if (static_cast<int>(coeff.size()) != h.action_dim()) {
    throw std::invalid_argument("add_scaled_kernel: coefficient dimension mismatch");
  }
  std::vector<Vec> centers = h.centers();
  std::vector<Vec> weights = h.weights();
  centers.push_back(center);
  weights.push_back(coeff);
  return RkhsFunction(h.kernel(), std::move(centers), std::move(weights));
}

RkhsFunction scaled(const RkhsFunction& h, double alpha) {
  if (h.order() == 0) return h;
  std::vector<Vec> weights = h.weights();
  for (Vec& w : weights) w *= alpha;
  return RkhsFunction(h.kernel(), h.centers(), std::move(weights));
}

RkhsFunction difference(const RkhsFunction& h1, const RkhsFunction& h2) {
  if (!(h1.kernel() == h2.kernel()) || h1.action_dim() != h2.action_dim()) {
    throw std::invalid_argument("difference: incompatible functions");
  }
  std::vector<Vec> centers = h1.centers();
  std::vector<Vec> weights = h1.weights();
  for (std::size_t j = 0; j < h2.centers().size(); ++j) {
    centers.push_back(h2.centers()[j]);
    weights.push_back(-h2.weights()[j]);
  }
  if (centers.empty()) return RkhsFunction(h1.kernel(), h1.action_dim());
  return RkhsFunction(h1.kernel(), std::move(centers), std::move(weights));
}

}  // namespace rkhspg

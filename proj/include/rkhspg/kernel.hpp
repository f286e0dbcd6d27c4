#pragma once

#include <Eigen/Core>
#include <vector>

namespace rkhspg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Diagonal (ARD) Gaussian kernel k(x, y) = exp(-1/2 sum_i (x_i - y_i)^2 / b_i).
// Every kernel section has unit Hilbert norm: k(x, x) = 1.
struct KernelSpec {
  Vec bandwidths;  // per-coordinate squared length scales, all > 0

  int dim() const { return static_cast<int>(bandwidths.size()); }
  bool operator==(const KernelSpec& o) const { return bandwidths == o.bandwidths; }
};

KernelSpec make_kernel(Vec bandwidths);

double kernel_eval(const KernelSpec& spec, const Vec& x, const Vec& y);

// Entry (l, m) = k(d1[l], d2[m]).
Mat gram_matrix(const KernelSpec& spec, const std::vector<Vec>& d1,
                const std::vector<Vec>& d2);

// Sparse kernel expansion h(s) = sum_j k(c_j, s) w_j, a map R^n -> R^p held
// as a dictionary of M centers with one weight vector per center.
class RkhsFunction {
 public:
  RkhsFunction(KernelSpec kernel, int action_dim);
  RkhsFunction(KernelSpec kernel, std::vector<Vec> centers, std::vector<Vec> weights);

  int state_dim() const { return kernel_.dim(); }
  int action_dim() const { return action_dim_; }
  int order() const { return static_cast<int>(centers_.size()); }

  const KernelSpec& kernel() const { return kernel_; }
  const std::vector<Vec>& centers() const { return centers_; }
  const std::vector<Vec>& weights() const { return weights_; }

  Vec evaluate(const Vec& s) const;

 private:
  KernelSpec kernel_;
  int action_dim_;
  std::vector<Vec> centers_;
  std::vector<Vec> weights_;
};

// <h1, h2> = sum_{j,l} k(c_j, c'_l) <w_j, w'_l>; requires matching kernels.
double inner_product(const RkhsFunction& h1, const RkhsFunction& h2);

// ||h||^2 as a quadratic form, clamped at zero when slightly negative.
double hilbert_norm_sq(const RkhsFunction& h);
double hilbert_norm(const RkhsFunction& h);

// h + k(center, .) * coeff: appends one dictionary element.
RkhsFunction add_scaled_kernel(const RkhsFunction& h, const Vec& center, const Vec& coeff);

RkhsFunction scaled(const RkhsFunction& h, double alpha);

// h1 - h2 by dictionary concatenation with negated weights (no deduplication).
RkhsFunction difference(const RkhsFunction& h1, const RkhsFunction& h2);

}  // namespace rkhspg

#include "rkhspg/policy.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rkhspg {

GaussianPolicy make_policy(RkhsFunction mean, Vec sigma) {
  if (sigma.size() != mean.action_dim()) {
    throw std::invalid_argument("policy: sigma length must equal the action dimension");
  }
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (!(sigma[i] > 0.0) || !std::isfinite(sigma[i])) {
      throw std::invalid_argument("policy: sigma entries must be positive and finite");
    }
  }
  return GaussianPolicy{std::move(mean), std::move(sigma)};
}

Vec sample_action(const GaussianPolicy& policy, const Vec& s, RandomStream& rng) {
  Vec a = policy.mean.evaluate(s);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    a[i] += std::sqrt(policy.sigma[i]) * rng.normal();
  }
  return a;
}

Vec symmetric_action(const GaussianPolicy& policy, const Vec& s, const Vec& a) {
  const Vec h = policy.mean.evaluate(s);
  if (a.size() != h.size()) {
    throw std::invalid_argument("symmetric_action: action dimension mismatch");
  }
  return 2.0 * h - a;
}

Vec score_direction(const GaussianPolicy& policy, const Vec& s, const Vec& a) {
  const Vec h = policy.mean.evaluate(s);
  if (a.size() != h.size()) {
    throw std::invalid_argument("score_direction: action dimension mismatch");
  }
  Vec zeta(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    zeta[i] = (a[i] - h[i]) / policy.sigma[i];
  }
  return zeta;
}

}  // namespace rkhspg

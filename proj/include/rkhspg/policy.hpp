#pragma once

#include "rkhspg/kernel.hpp"
#include "rkhspg/rng.hpp"

namespace rkhspg {

// Gaussian exploration policy around an RKHS mean: a ~ N(h(s), diag(sigma)).
// sigma holds the per-coordinate variances of the exploration covariance.
struct GaussianPolicy {
  RkhsFunction mean;
  Vec sigma;
};

GaussianPolicy make_policy(RkhsFunction mean, Vec sigma);

// a = h(s) + sigma^{1/2} z with z standard normal from the stream. Actions are
// not clipped here; any clipping is the environment's business, while the
// score direction always sees the raw sample.
Vec sample_action(const GaussianPolicy& policy, const Vec& s, RandomStream& rng);

// Reflection of a about the policy mean: 2 h(s) - a.
Vec symmetric_action(const GaussianPolicy& policy, const Vec& s, const Vec& a);

// zeta = Sigma^{-1} (a - h(s)), the Gaussian score factor of the policy gradient.
Vec score_direction(const GaussianPolicy& policy, const Vec& s, const Vec& a);

}  // namespace rkhspg

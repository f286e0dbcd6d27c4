#include "rkhspg/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace rkhspg {

long sample_geometric(double gamma, long cap, RandomStream& rng, bool* capped) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("sample_geometric: gamma must lie in [0, 1)");
  }
  if (cap <= 0) throw std::invalid_argument("sample_geometric: cap must be positive");
  return rng.geometric(gamma, cap, capped);
}

QEstimate estimate_q(const Environment& env, const GaussianPolicy& policy, const Vec& s,
                     const Vec& a, double gamma, RandomStream& rng, bool legacy_scaling) {
  QEstimate est;
  est.steps = sample_geometric(gamma, env.spec().max_horizon, rng, &est.capped);
  Vec state = s;
  Vec action = a;
  for (long t = 0; t <= est.steps; ++t) {
    if (t > 0) action = sample_action(policy, state, rng);
    const StepResult res = env.step(state, action, rng);
    est.raw_sum += res.reward;
    if (t == est.steps) break;  // end state is s_{T_Q}, where the last reward fell
    state = res.next_state;
    if (res.terminal) break;  // absorbing: every later reward is zero
  }
  est.end_state = state;
  est.value = legacy_scaling ? (1.0 - gamma) * est.raw_sum : est.raw_sum;
  return est;
}

GradientEstimate stochastic_gradient(const Environment& env, const GaussianPolicy& policy,
                                     double gamma, RandomStream& rng, const Vec& start_state,
                                     bool legacy_scaling) {
  GradientEstimate grad;
  bool capped = false;
  const long horizon = sample_geometric(gamma, env.spec().max_horizon, rng, &capped);
  if (capped) ++grad.horizon_caps;

  // Occupancy phase: (s_T, a_T) is a sample from the discounted distribution.
  Vec state = start_state;
  Vec action = sample_action(policy, state, rng);
  for (long t = 0; t < horizon; ++t) {
    const StepResult res = env.step(state, action, rng);
    grad.rollout_return += res.reward;
    state = res.next_state;
    action = sample_action(policy, state, rng);
    if (res.terminal) break;  // the state is absorbing from here on
  }

  const QEstimate q_plus = estimate_q(env, policy, state, action, gamma, rng, legacy_scaling);
  const Vec mirrored = symmetric_action(policy, state, action);
  const QEstimate q_minus = estimate_q(env, policy, state, mirrored, gamma, rng, legacy_scaling);

  grad.center = state;
  grad.q_plus = q_plus.value;
  grad.q_minus = q_minus.value;
  grad.coeff = (q_plus.value - q_minus.value) / (2.0 * (1.0 - gamma)) *
               score_direction(policy, state, action);
  grad.steps_total = horizon + q_plus.steps + q_minus.steps;
  grad.horizon_caps += (q_plus.capped ? 1 : 0) + (q_minus.capped ? 1 : 0);
  grad.rollout_return += q_plus.raw_sum;  // the Q+ branch continues the real trajectory
  return grad;
}

MonteCarloStat estimate_u(const Environment& env, const GaussianPolicy& policy, double gamma,
                          RandomStream& rng, long num_rollouts, long horizon,
                          double tail_tol) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("estimate_u: gamma must lie in [0, 1)");
  }
  if (num_rollouts < 1) throw std::invalid_argument("estimate_u: needs at least one rollout");
  const double tail = std::pow(gamma, static_cast<double>(horizon)) *
                      env.spec().reward_bound / (1.0 - gamma);
  if (!(tail <= tail_tol)) {
    throw std::invalid_argument("estimate_u: horizon too short for the requested tolerance");
  }

  double sum = 0.0;
  double sum_sq = 0.0;
  for (long i = 0; i < num_rollouts; ++i) {
    Vec state = env.reset(rng);
    double ret = 0.0;
    double discount = 1.0;
    for (long t = 0; t < horizon; ++t) {
      const Vec action = sample_action(policy, state, rng);
      const StepResult res = env.step(state, action, rng);
      ret += discount * res.reward;
      if (res.terminal) break;
      discount *= gamma;
      state = res.next_state;
    }
    sum += ret;
    sum_sq += ret * ret;
  }
  MonteCarloStat stat;
  stat.samples = num_rollouts;
  stat.mean = sum / static_cast<double>(num_rollouts);
  if (num_rollouts > 1) {
    const double var =
        (sum_sq - sum * sum / static_cast<double>(num_rollouts)) /
        static_cast<double>(num_rollouts - 1);
    stat.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(num_rollouts));
  }
  return stat;
}

}  // namespace rkhspg

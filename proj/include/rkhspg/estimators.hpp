#pragma once

#include "rkhspg/env.hpp"
#include "rkhspg/policy.hpp"

namespace rkhspg {

// Validated geometric draw with P(T = t) = (1 - gamma) * gamma^t, capped at
// the environment horizon. Cap events are surfaced so the (analytically
// gamma^cap-bounded) truncation bias stays observable.
long sample_geometric(double gamma, long cap, RandomStream& rng, bool* capped = nullptr);

struct QEstimate {
  double value = 0.0;    // the estimate itself (scaled only in legacy mode)
  double raw_sum = 0.0;  // plain undiscounted reward sum over the rollout
  long steps = 0;        // the drawn T_Q
  Vec end_state;         // s_{T_Q}
  bool capped = false;
};

// Unbiased Q(s, a; h) estimate: roll out T_Q ~ Geom(gamma) steps from (s, a)
// following the policy afterwards and sum the rewards. The raw sum already has
// expectation Q(s, a; h); legacy_scaling multiplies it by (1 - gamma), which
// makes the expectation (1 - gamma) Q instead and is kept only to reproduce
// the originally printed form of the procedure.
QEstimate estimate_q(const Environment& env, const GaussianPolicy& policy, const Vec& s,
                     const Vec& a, double gamma, RandomStream& rng,
                     bool legacy_scaling = false);

struct GradientEstimate {
  Vec center;            // the visited s_T; the estimate is coeff * k(center, .)
  Vec coeff;             // (Q+ - Q-) / (2 (1 - gamma)) * zeta
  double q_plus = 0.0;
  double q_minus = 0.0;
  long steps_total = 0;  // T + T_Q + T'_Q
  int horizon_caps = 0;
  double rollout_return = 0.0;  // undiscounted rewards along the realized
                                // trajectory (occupancy phase + the Q+ branch)
};

// One symmetric two-sample estimate of the functional policy gradient: run the
// system T ~ Geom(gamma) steps, probe Q at (s_T, a_T) and at the reflected
// action, and weight the kernel section at s_T by the finite difference times
// the score direction. The Q probes use independent geometric draws and
// trajectories.
GradientEstimate stochastic_gradient(const Environment& env, const GaussianPolicy& policy,
                                     double gamma, RandomStream& rng, const Vec& start_state,
                                     bool legacy_scaling = false);

struct MonteCarloStat {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

// Truncated Monte Carlo estimate of U(h) from fresh resets. Requires the
// truncation tail gamma^horizon * B_r / (1 - gamma) to be below tail_tol.
MonteCarloStat estimate_u(const Environment& env, const GaussianPolicy& policy, double gamma,
                          RandomStream& rng, long num_rollouts, long horizon,
                          double tail_tol = 1e-3);

}  // namespace rkhspg

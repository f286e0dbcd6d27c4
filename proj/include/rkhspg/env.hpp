#pragma once

#include "rkhspg/kernel.hpp"
#include "rkhspg/rng.hpp"

namespace rkhspg {

struct EnvSpec {
  int state_dim = 0;          // n
  int action_dim = 0;         // p
  double reward_bound = 0.0;  // B_r, every emitted reward satisfies |r| <= B_r
  long max_horizon = 10000;   // cap on geometric draws and evaluation episodes
};

struct StepResult {
  Vec next_state;
  double reward = 0.0;
  bool terminal = false;
};

// Pure transition function over explicit state. Terminal states are absorbing:
// stepping one returns (same state, 0, true), so infinite-horizon sums stay
// well defined.
class Environment {
 public:
  virtual ~Environment() = default;

  const EnvSpec& spec() const { return spec_; }
  virtual Vec reset(RandomStream& rng) const = 0;
  virtual StepResult step(const Vec& s, const Vec& a, RandomStream& rng) const = 0;

 protected:
  explicit Environment(EnvSpec spec) : spec_(spec) {}

  // Asserts the declared reward bound on every emitted reward.
  StepResult emit(Vec next, double reward, bool terminal) const;
  void check_action(const Vec& a) const;

  EnvSpec spec_;
};

// Continuous mountain car. Position/velocity bounded in [-1.2, 0.6] x
// [-0.07, 0.07]; reaching the goal position pays +100 and every step subtracts
// 0.1 * clip(a, -1, 1)^2.
class MountainCar final : public Environment {
 public:
  explicit MountainCar(double goal_position = 0.45, long max_horizon = 10000);

  Vec reset(RandomStream& rng) const override;
  StepResult step(const Vec& s, const Vec& a, RandomStream& rng) const override;

  double goal_position() const { return goal_; }

 private:
  bool at_goal(double position) const { return position >= goal_; }
  double goal_;
};

// Cart-pole balancing with a scalar policy output mapped to a fixed force of
// +10 N when a >= 0 and -10 N otherwise. State is (x, x_dot, theta, theta_dot),
// Euler integration with dt = 0.02, +1 reward per surviving step, failure when
// |x| > 2.4 or |theta| > 12 degrees.
class Cartpole final : public Environment {
 public:
  explicit Cartpole(long max_horizon = 200);

  Vec reset(RandomStream& rng) const override;
  StepResult step(const Vec& s, const Vec& a, RandomStream& rng) const override;

 private:
  bool failed(const Vec& s) const;
};

}  // namespace rkhspg

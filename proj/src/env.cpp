#include "rkhspg/env.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rkhspg {

StepResult Environment::emit(Vec next, double reward, bool terminal) const {
  if (std::abs(reward) > spec_.reward_bound) {
    throw std::logic_error("environment emitted a reward above its declared bound");
  }
  return StepResult{std::move(next), reward, terminal};
}

void Environment::check_action(const Vec& a) const {
  if (static_cast<int>(a.size()) != spec_.action_dim || !a.allFinite()) {
    throw std::invalid_argument("step: action must be finite and of the declared dimension");
  }
}

namespace {
constexpr double kMcForce = 0.0015;
constexpr double kMcGravity = 0.0025;
constexpr double kMcMinPos = -1.2;
constexpr double kMcMaxPos = 0.6;
constexpr double kMcMaxVel = 0.07;
}  // namespace

MountainCar::MountainCar(double goal_position, long max_horizon)
    : Environment(EnvSpec{2, 1, 100.0, max_horizon}), goal_(goal_position) {
  if (!(goal_position > kMcMinPos)) {
    throw std::invalid_argument("mountain car: goal must exceed the left bound");
  }
}

Vec MountainCar::reset(RandomStream& rng) const {
  Vec s(2);
  s[0] = rng.uniform(-0.6, -0.4);
  s[1] = 0.0;
  return s;
}

StepResult MountainCar::step(const Vec& s, const Vec& a, RandomStream&) const {
  check_action(a);
  if (s.size() != 2) throw std::invalid_argument("mountain car: bad state");
  if (at_goal(s[0])) return emit(s, 0.0, true);

  const double force = std::clamp(a[0], -1.0, 1.0);
  double v = s[1] + kMcForce * force - kMcGravity * std::cos(3.0 * s[0]);
  v = std::clamp(v, -kMcMaxVel, kMcMaxVel);
  const double x = std::clamp(s[0] + v, kMcMinPos, kMcMaxPos);

  Vec next(2);
  next[0] = x;
  next[1] = v;
  const bool done = at_goal(x);
  const double reward = -0.1 * force * force + (done ? 100.0 : 0.0);
  return emit(std::move(next), reward, done);
}

namespace {
constexpr double kCpGravity = 9.8;
constexpr double kCpMassCart = 1.0;
constexpr double kCpMassPole = 0.1;
constexpr double kCpTotalMass = kCpMassCart + kCpMassPole;
constexpr double kCpHalfLength = 0.5;
constexpr double kCpPoleMassLength = kCpMassPole * kCpHalfLength;
constexpr double kCpForceMag = 10.0;
constexpr double kCpTau = 0.02;
constexpr double kCpMaxX = 2.4;
const double kCpMaxTheta = 12.0 * M_PI / 180.0;
}  // namespace

Cartpole::Cartpole(long max_horizon) : Environment(EnvSpec{4, 1, 1.0, max_horizon}) {}

bool Cartpole::failed(const Vec& s) const {
  return std::abs(s[0]) > kCpMaxX || std::abs(s[2]) > kCpMaxTheta;
}

Vec Cartpole::reset(RandomStream& rng) const {
  Vec s(4);
  for (int i = 0; i < 4; ++i) s[i] = rng.uniform(-0.05, 0.05);
  return s;
}

StepResult Cartpole::step(const Vec& s, const Vec& a, RandomStream&) const {
  check_action(a);
  if (s.size() != 4) throw std::invalid_argument("cartpole: bad state");
  if (failed(s)) return emit(s, 0.0, true);

  const double force = a[0] >= 0.0 ? kCpForceMag : -kCpForceMag;
  const double cos_t = std::cos(s[2]);
  const double sin_t = std::sin(s[2]);
  const double temp = (force + kCpPoleMassLength * s[3] * s[3] * sin_t) / kCpTotalMass;
  const double theta_acc =
      (kCpGravity * sin_t - cos_t * temp) /
      (kCpHalfLength * (4.0 / 3.0 - kCpMassPole * cos_t * cos_t / kCpTotalMass));
  const double x_acc = temp - kCpPoleMassLength * theta_acc * cos_t / kCpTotalMass;

  Vec next(4);
  next[0] = s[0] + kCpTau * s[1];
  next[1] = s[1] + kCpTau * x_acc;
  next[2] = s[2] + kCpTau * s[3];
  next[3] = s[3] + kCpTau * theta_acc;

  const bool done = failed(next);
  return emit(std::move(next), done ? 0.0 : 1.0, done);
}

}  // namespace rkhspg

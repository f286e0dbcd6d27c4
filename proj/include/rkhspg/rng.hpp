#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rkhspg {

// Seeded random stream with portable output. std::mt19937_64 is fully
// specified by the standard; the distributions are hand-rolled on top of it
// because the std:: distribution algorithms are implementation-defined and
// would break bitwise reproducibility of seeded runs across platforms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  // Derives an independent child stream from this stream's seed (not from its
  // current state), so a substream is identified by (seed, label, index) alone.
  RandomStream substream(std::string_view label, std::uint64_t index = 0) const;

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01();
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller (one value per pair of uniforms).
  double normal();

  // Geometric draw with P(T = t) = (1 - gamma) * gamma^t, t = 0, 1, ...,
  // truncated at cap. *capped is set when the raw draw exceeded cap.
  long geometric(double gamma, long cap, bool* capped = nullptr);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rkhspg

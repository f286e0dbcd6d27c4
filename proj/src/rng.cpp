#include "rkhspg/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rkhspg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomStream RandomStream::substream(std::string_view label, std::uint64_t index) const {
  return RandomStream(splitmix64(splitmix64(seed_ ^ fnv1a(label)) + index));
}

double RandomStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double RandomStream::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

long RandomStream::geometric(double gamma, long cap, bool* capped) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("geometric: gamma must lie in [0, 1)");
  }
  if (capped != nullptr) *capped = false;
  if (gamma == 0.0) return 0;
  const double u = uniform01();
  // Inversion: P(T >= t) = gamma^t, so T = floor(log(1 - u) / log(gamma)).
  const double t = std::floor(std::log1p(-u) / std::log(gamma));
  if (!(t < static_cast<double>(cap) + 0.5)) {
    if (capped != nullptr) *capped = true;
    return cap;
  }
  return static_cast<long>(t);
}

}  // namespace rkhspg

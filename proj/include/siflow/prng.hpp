#pragma once

// Deterministic, platform-independent pseudo-random generation for the
// property sweeps.  splitmix64 keeps seeded reports byte-identical across
// toolchains (std:: distributions are implementation-defined).

#include <cstdint>
#include <vector>

#include "siflow/rational.hpp"

namespace siflow {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  bool coin() { return (next() & 1u) != 0; }

  // random rational p/q with |p| <= max_num, 1 <= q <= max_den
  Rational rational(long max_num = 5, long max_den = 3) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
  }
  Rational rational_nonzero(long max_num = 5, long max_den = 3) {
    Rational r = rational(max_num, max_den);
    while (r == 0) r = rational(max_num, max_den);
    return r;
  }
  Rational rational_positive(long max_num = 5, long max_den = 3) {
    return Rational(uniform(1, max_num), uniform(1, max_den));
  }

  // k distinct rationals drawn from {j/d : |j| <= span*d}
  std::vector<Rational> distinct_rationals(int k, long span = 5, long max_den = 2) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < k) {
      const long d = uniform(1, max_den);
      const Rational r(uniform(-span * d, span * d), d);
      bool fresh = true;
      for (const auto& x : out) fresh = fresh && (x != r);
      if (fresh) out.push_back(r);
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace siflow

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "dh/types.hpp"

namespace dh {

// Deterministic sampler. mt19937_64 output is pinned by the standard and the
// uniform mapping is spelled out here, so a seed reproduces the same stream on
// every platform (standard-library distributions do not guarantee that).
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  double unit() { return double(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)

  double range(double a, double b) { return a + (b - a) * unit(); }

  long long integer(long long lo, long long hi) {  // inclusive
    return lo + (long long)(eng_() % (std::uint64_t)(hi - lo + 1));
  }

  Complex box(double r = 2.0) { return Complex(range(-r, r), range(-r, r)); }

  // Radius uniform in [rmin, rmax], angle uniform.
  Complex annulus(double rmin = 0.25, double rmax = 4.0) {
    const double r = range(rmin, rmax);
    const double th = range(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, th);
  }

  Vec cvec(int g, double r = 2.0) {
    Vec out(g);
    for (int k = 0; k < g; ++k) out[k] = box(r);
    return out;
  }

  IVec ivec(int n, long long lo, long long hi) {
    IVec out(n);
    for (int k = 0; k < n; ++k) out[k] = integer(lo, hi);
    return out;
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace dh

#pragma once

#include <numbers>

#include "dh/surface.hpp"
#include "dh/types.hpp"

namespace dhtest {

inline constexpr double kPi = std::numbers::pi;
inline const dh::Complex kI{0.0, 1.0};

inline dh::Surface surface_g1(dh::Complex tau) {
  dh::Mat m(1, 1);
  m(0, 0) = tau;
  return dh::Surface(dh::PeriodMatrix{1, m});
}

// Diagonal period matrices; entries must have positive imaginary part.
inline dh::Surface surface_diag(std::initializer_list<dh::Complex> taus) {
  const int g = int(taus.size());
  dh::Mat m = dh::Mat::Zero(g, g);
  int k = 0;
  for (dh::Complex t : taus) m(k, k) = t, ++k;
  return dh::Surface(dh::PeriodMatrix{g, m});
}

inline double sup(const dh::Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

inline dh::Vec cvec1(dh::Complex a) {
  dh::Vec v(1);
  v[0] = a;
  return v;
}

inline dh::Vec cvec2(dh::Complex a, dh::Complex b) {
  dh::Vec v(2);
  v[0] = a;
  v[1] = b;
  return v;
}

inline dh::IVec ivec(std::initializer_list<long long> xs) {
  dh::IVec v(int(xs.size()));
  int k = 0;
  for (long long x : xs) v[k++] = x;
  return v;
}

inline dh::IMat imat(int n, std::initializer_list<long long> xs) {
  dh::IMat m(n, n);
  int k = 0;
  for (long long x : xs) {
    m(k / n, k % n) = x;
    ++k;
  }
  return m;
}

}  // namespace dhtest

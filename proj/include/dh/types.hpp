#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace dh {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// The two affine charts of the twistor space. Chart X carries lambda-connections
// on X, chart Xbar carries them on the conjugate surface; the holomorphic and
// antiholomorphic roles of the coordinate vectors swap between them.
enum class Chart { X, Xbar };

inline const char* chart_name(Chart c) { return c == Chart::X ? "X" : "Xbar"; }
inline Chart other_chart(Chart c) { return c == Chart::X ? Chart::Xbar : Chart::X; }

// Point of the base CP^1 of the twistor fibration.
class CP1 {
public:
  CP1() = default;
  static CP1 finite(Complex z) { return CP1(z, false); }
  static CP1 infinity() { return CP1(Complex(0.0, 0.0), true); }

  bool is_infinity() const { return inf_; }
  Complex value() const {
    if (inf_) throw std::logic_error("CP1: value() at infinity");
    return z_;
  }

private:
  CP1(Complex z, bool inf) : z_(z), inf_(inf) {}
  Complex z_{0.0, 0.0};
  bool inf_ = false;
};

// |z1 - z2| <= tol * max(1, |z1|, |z2|); infinity only equals infinity.
inline bool cp1_equal(const CP1& a, const CP1& b, double tol) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
  const double s = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
  return std::abs(a.value() - b.value()) <= tol * s;
}

// All domain errors carry a stable name; the CLI prints it on stderr and maps
// it to an exit code.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define DH_DEFINE_ERROR(NAME)                                            \
  struct NAME : Error {                                                  \
    explicit NAME(const std::string& w) : Error(#NAME, w) {}             \
  }

// Surface / period matrix validation.
DH_DEFINE_ERROR(InvalidPeriodMatrix);
DH_DEFINE_ERROR(SymmetryViolation);
DH_DEFINE_ERROR(NotPositiveDefinite);
DH_DEFINE_ERROR(IllConditionedLattice);

// Moduli point operations.
DH_DEFINE_ERROR(ZeroLambda);
DH_DEFINE_ERROR(OnZeroFiber);
DH_DEFINE_ERROR(SameFiber);
DH_DEFINE_ERROR(ChartMismatch);
DH_DEFINE_ERROR(InvalidBettiPoint);
DH_DEFINE_ERROR(DimensionMismatch);

// Automorphisms.
DH_DEFINE_ERROR(IncompatibleMatrix);
DH_DEFINE_ERROR(NotThetaScaling);
DH_DEFINE_ERROR(ZeroScale);

// Interface layer.
DH_DEFINE_ERROR(ParseError);
DH_DEFINE_ERROR(ConfigError);

#undef DH_DEFINE_ERROR

}  // namespace dh

#pragma once

#include <string>
#include <variant>

#include "dh/aut.hpp"
#include "dh/dhspace.hpp"
#include "dh/hodge.hpp"
#include "dh/surface.hpp"
#include "dh/types.hpp"

// JSON wire formats. Complex numbers are two-element arrays [re, im],
// coefficient vectors are arrays of complex numbers, CP^1 points are either a
// complex number or the string "inf". All floats are written with 17
// significant digits and fixed key order, so serialization is byte-
// deterministic. Parsing accepts any key order and is strict about shapes.
namespace dh {

std::string format_double(double x);

std::string to_json(const PeriodMatrix& pm);
std::string to_json(const Point& p);
std::string to_json(const BettiPoint& b);
std::string to_json(const Section& s);
std::string to_json(const CP1& z);
std::string to_json(const Aut0& a);
std::string to_json(const HodgeAut& t);
std::string to_json(const Gamma& t);

using AutElement = std::variant<Aut0, HodgeAut, Gamma>;
std::string to_json(const AutElement& a);

PeriodMatrix parse_period_matrix(const std::string& text);
Point parse_point(const std::string& text, int g);
BettiPoint parse_betti(const std::string& text, int g);
Section parse_section(const std::string& text, int g);
CP1 parse_cp1(const std::string& text);

// Aut elements are validated/normalized against the surface at parse time.
AutElement parse_aut(const std::string& text, const Surface& s);

struct SectionEvalRequest {
  Section section;
  CP1 z;
};
SectionEvalRequest parse_section_eval_request(const std::string& text, int g);

struct PointPairRequest {
  Point a;
  Point b;
};
PointPairRequest parse_point_pair(const std::string& text, int g);

struct AutComposeRequest {
  AutElement a;
  AutElement b;
};
AutComposeRequest parse_aut_compose(const std::string& text, const Surface& s);

struct AutApplyRequest {
  AutElement aut;
  Point point;
};
AutApplyRequest parse_aut_apply(const std::string& text, const Surface& s);

}  // namespace dh

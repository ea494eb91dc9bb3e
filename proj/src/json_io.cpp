#include "dh/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace dh {

namespace {

using njson = nlohmann::json;

njson must_parse(const std::string& text) {
  njson j = njson::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

const njson& field(const njson& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

double get_number(const njson& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
  return x;
}

Complex get_complex(const njson& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(std::string(what) + " must be a [re, im] pair");
  return Complex(get_number(j[0], what), get_number(j[1], what));
}

Vec get_cvec(const njson& j, int g, const char* what) {
  if (!j.is_array() || int(j.size()) != g)
    throw ParseError(std::string(what) + " must be an array of g complex numbers");
  Vec out(g);
  for (int k = 0; k < g; ++k) out[k] = get_complex(j[k], what);
  return out;
}

Chart get_chart(const njson& j) {
  if (j.is_string()) {
    const std::string c = j.get<std::string>();
    if (c == "X") return Chart::X;
    if (c == "Xbar") return Chart::Xbar;
  }
  throw ParseError("chart must be \"X\" or \"Xbar\"");
}

std::string json_complex(Complex z) {
  return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

std::string json_cvec(const Vec& v) {
  std::string out = "[";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += json_complex(v[k]);
  }
  return out + "]";
}

Point parse_point_json(const njson& j, int g) {
  Point p;
  p.chart = get_chart(field(j, "chart"));
  p.lambda = get_complex(field(j, "lambda"), "lambda");
  p.u = get_cvec(field(j, "u"), g, "u");
  p.v = get_cvec(field(j, "v"), g, "v");
  return p;
}

CP1 parse_cp1_json(const njson& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return CP1::infinity();
    throw ParseError("base point must be [re, im] or \"inf\"");
  }
  return CP1::finite(get_complex(j, "base point"));
}

IMat get_imat(const njson& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + " must be a matrix");
  const int n = int(j.size());
  IMat m(n, n);
  for (int i = 0; i < n; ++i) {
    const njson& row = j[i];
    if (!row.is_array() || int(row.size()) != n)
      throw ParseError(std::string(what) + " must be square");
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_number_integer())
        throw ParseError(std::string(what) + " entries must be integers");
      m(i, k) = row[k].get<long long>();
    }
  }
  return m;
}

AutElement parse_aut_json(const njson& j, const Surface& s) {
  const njson& kind_j = field(j, "kind");
  if (!kind_j.is_string()) throw ParseError("kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  const int g = s.genus();
  if (kind == "aut0") {
    const njson& nab = field(j, "nabla");
    DeRhamPoint nabla{get_cvec(field(nab, "u"), g, "nabla.u"),
                      get_cvec(field(nab, "v"), g, "nabla.v")};
    return make_aut0(s, std::move(nabla), get_cvec(field(j, "alpha"), g, "alpha"),
                     get_cvec(field(j, "eta_bar"), g, "eta_bar"),
                     get_complex(field(j, "tau"), "tau"));
  }
  if (kind == "hodge") {
    const njson& sh = field(j, "shear");
    if (!sh.is_array()) throw ParseError("shear must be an array of coefficient vectors");
    VPoly w;
    w.g = g;
    for (const njson& c : sh) w.coeffs.push_back(get_cvec(c, g, "shear coefficient"));
    const njson& ten = field(j, "tensor");
    DeRhamPoint tensor{get_cvec(field(ten, "u"), g, "tensor.u"),
                       get_cvec(field(ten, "v"), g, "tensor.v")};
    return make_hodge_aut(s, std::move(w), std::move(tensor),
                          get_complex(field(j, "scale"), "scale"));
  }
  if (kind == "duality") return make_duality();
  if (kind == "lattice" || kind == "lattice_swap")
    return make_lattice_map(s, get_imat(field(j, "m"), "m"), kind == "lattice_swap");
  throw ParseError("unknown automorphism kind \"" + kind + "\"");
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const PeriodMatrix& pm) {
  std::string out = "{\"g\":" + std::to_string(pm.g) + ",\"tau\":[";
  for (int i = 0; i < pm.g; ++i) {
    if (i) out += ",";
    out += json_cvec(pm.tau.row(i).transpose());
  }
  return out + "]}";
}

std::string to_json(const Point& p) {
  return std::string("{\"chart\":\"") + chart_name(p.chart) + "\",\"lambda\":" +
         json_complex(p.lambda) + ",\"u\":" + json_cvec(p.u) + ",\"v\":" + json_cvec(p.v) + "}";
}

std::string to_json(const BettiPoint& b) { return "{\"rho\":" + json_cvec(b.rho) + "}"; }

std::string to_json(const Section& s) {
  return "{\"alpha\":" + json_cvec(s.alpha) + ",\"beta\":" + json_cvec(s.beta) +
         ",\"omega\":" + json_cvec(s.omega) + ",\"eta\":" + json_cvec(s.eta) + "}";
}

std::string to_json(const CP1& z) {
  if (z.is_infinity()) return "\"inf\"";
  return json_complex(z.value());
}

std::string to_json(const Aut0& a) {
  return "{\"kind\":\"aut0\",\"nabla\":{\"u\":" + json_cvec(a.nabla.u) +
         ",\"v\":" + json_cvec(a.nabla.v) + "},\"alpha\":" + json_cvec(a.alpha) +
         ",\"eta_bar\":" + json_cvec(a.eta_bar) + ",\"tau\":" + json_complex(a.tau) + "}";
}

std::string to_json(const HodgeAut& t) {
  std::string out = "{\"kind\":\"hodge\",\"shear\":[";
  for (size_t k = 0; k < t.w.coeffs.size(); ++k) {
    if (k) out += ",";
    out += json_cvec(t.w.coeffs[k]);
  }
  out += "],\"tensor\":{\"u\":" + json_cvec(t.tensor.u) + ",\"v\":" + json_cvec(t.tensor.v) +
         "},\"scale\":" + json_complex(t.scale) + "}";
  return out;
}

std::string to_json(const Gamma& t) {
  if (t.kind == GammaKind::Duality) return "{\"kind\":\"duality\"}";
  std::string out = "{\"kind\":\"";
  out += (t.kind == GammaKind::Lattice) ? "lattice" : "lattice_swap";
  out += "\",\"m\":[";
  for (Eigen::Index i = 0; i < t.m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (Eigen::Index k = 0; k < t.m.cols(); ++k) {
      if (k) out += ",";
      out += std::to_string(t.m(i, k));
    }
    out += "]";
  }
  return out + "]}";
}

std::string to_json(const AutElement& a) {
  return std::visit([](const auto& x) { return to_json(x); }, a);
}

PeriodMatrix parse_period_matrix(const std::string& text) {
  const njson j = must_parse(text);
  const njson& gj = field(j, "g");
  if (!gj.is_number_integer()) throw ParseError("g must be an integer");
  const int g = gj.get<int>();
  if (g < 1) throw ParseError("g must be >= 1");
  const njson& tj = field(j, "tau");
  if (!tj.is_array() || int(tj.size()) != g) throw ParseError("tau must be a g x g matrix");
  PeriodMatrix pm;
  pm.g = g;
  pm.tau.resize(g, g);
  for (int i = 0; i < g; ++i) pm.tau.row(i) = get_cvec(tj[i], g, "tau row").transpose();
  return pm;
}

Point parse_point(const std::string& text, int g) { return parse_point_json(must_parse(text), g); }

BettiPoint parse_betti(const std::string& text, int g) {
  const njson j = must_parse(text);
  return BettiPoint{get_cvec(field(j, "rho"), 2 * g, "rho")};
}

Section parse_section(const std::string& text, int g) {
  const njson j = must_parse(text);
  Section s;
  s.alpha = get_cvec(field(j, "alpha"), g, "alpha");
  s.beta = get_cvec(field(j, "beta"), g, "beta");
  s.omega = get_cvec(field(j, "omega"), g, "omega");
  s.eta = get_cvec(field(j, "eta"), g, "eta");
  return s;
}

CP1 parse_cp1(const std::string& text) { return parse_cp1_json(must_parse(text)); }

AutElement parse_aut(const std::string& text, const Surface& s) {
  return parse_aut_json(must_parse(text), s);
}

SectionEvalRequest parse_section_eval_request(const std::string& text, int g) {
  const njson j = must_parse(text);
  SectionEvalRequest req;
  const njson& sec = field(j, "section");
  req.section.alpha = get_cvec(field(sec, "alpha"), g, "alpha");
  req.section.beta = get_cvec(field(sec, "beta"), g, "beta");
  req.section.omega = get_cvec(field(sec, "omega"), g, "omega");
  req.section.eta = get_cvec(field(sec, "eta"), g, "eta");
  req.z = parse_cp1_json(field(j, "z"));
  return req;
}

PointPairRequest parse_point_pair(const std::string& text, int g) {
  const njson j = must_parse(text);
  return PointPairRequest{parse_point_json(field(j, "p1"), g),
                          parse_point_json(field(j, "p2"), g)};
}

AutComposeRequest parse_aut_compose(const std::string& text, const Surface& s) {
  const njson j = must_parse(text);
  return AutComposeRequest{parse_aut_json(field(j, "a"), s), parse_aut_json(field(j, "b"), s)};
}

AutApplyRequest parse_aut_apply(const std::string& text, const Surface& s) {
  const njson j = must_parse(text);
  return AutApplyRequest{parse_aut_json(field(j, "aut"), s),
                         parse_point_json(field(j, "point"), s.genus())};
}

}  // namespace dh

#include "cauchybv/geometry.hpp"

#include <cmath>
#include <limits>

namespace cauchybv {

const char* curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::unit_circle: return "unit_circle";
    case CurveKind::ellipse: return "ellipse";
    case CurveKind::kite: return "kite";
    case CurveKind::star: return "star";
  }
  return "?";
}

CurveKind parse_curve_kind(const std::string& name) {
  if (name == "unit_circle" || name == "circle") return CurveKind::unit_circle;
  if (name == "ellipse") return CurveKind::ellipse;
  if (name == "kite") return CurveKind::kite;
  if (name == "star") return CurveKind::star;
  throw ConfigError("unknown curve kind: " + name);
}

CurveParam CurveParam::circle() { return {}; }

CurveParam CurveParam::make_ellipse(double a, double b) {
  CurveParam p;
  p.kind = CurveKind::ellipse;
  p.a = a;
  p.b = b;
  return p;
}

CurveParam CurveParam::make_kite() {
  CurveParam p;
  p.kind = CurveKind::kite;
  return p;
}

CurveParam CurveParam::make_star(int arms, double amplitude) {
  CurveParam p;
  p.kind = CurveKind::star;
  p.arms = arms;
  p.amplitude = amplitude;
  return p;
}

void CurveParam::validate() const {
  switch (kind) {
    case CurveKind::unit_circle:
    case CurveKind::kite:
      break;
    case CurveKind::ellipse:
      if (!(a > 0.0) || !(b > 0.0))
        throw ConfigError("ellipse semi-axes must be positive");
      break;
    case CurveKind::star:
      if (arms < 3) throw ConfigError("star needs at least 3 arms");
      if (!(amplitude >= 0.0) || !(amplitude < 0.5))
        throw ConfigError("star amplitude must lie in [0, 0.5)");
      break;
  }
}

Complex CurveParam::position(double tau) const {
  switch (kind) {
    case CurveKind::unit_circle:
      return {std::cos(tau), std::sin(tau)};
    case CurveKind::ellipse:
      return {a * std::cos(tau), b * std::sin(tau)};
    case CurveKind::kite:
      // Kite-shaped contour, a standard nonconvex test curve.
      return {std::cos(tau) + 0.65 * std::cos(2.0 * tau) - 0.65,
              1.5 * std::sin(tau)};
    case CurveKind::star: {
      double r = 1.0 + amplitude * std::cos(arms * tau);
      return {r * std::cos(tau), r * std::sin(tau)};
    }
  }
  return {};
}

Complex CurveParam::derivative(double tau) const {
  switch (kind) {
    case CurveKind::unit_circle:
      return {-std::sin(tau), std::cos(tau)};
    case CurveKind::ellipse:
      return {-a * std::sin(tau), b * std::cos(tau)};
    case CurveKind::kite:
      return {-std::sin(tau) - 1.3 * std::sin(2.0 * tau), 1.5 * std::cos(tau)};
    case CurveKind::star: {
      double m = static_cast<double>(arms);
      double r = 1.0 + amplitude * std::cos(m * tau);
      double dr = -amplitude * m * std::sin(m * tau);
      return {dr * std::cos(tau) - r * std::sin(tau),
              dr * std::sin(tau) + r * std::cos(tau)};
    }
  }
  return {};
}

CurveGrid::CurveGrid(const CurveParam& param, int n) : param_(param), n_(n) {
  param.validate();
  if (n < 4 || n % 2 != 0)
    throw ConfigError("grid size must be even and at least 4");
  h_ = two_pi / n;
  tau_.resize(n);
  pos_re_.resize(n);
  pos_im_.resize(n);
  deriv_re_.resize(n);
  deriv_im_.resize(n);
  speed_.resize(n);
  normal_re_.resize(n);
  normal_im_.resize(n);
  for (int j = 0; j < n; ++j) {
    // (two_pi * j) / n is bit-stable under grid doubling: j -> 2j, n -> 2n
    // scales numerator and denominator by an exact factor of two.
    double t = (two_pi * j) / n;
    tau_[j] = t;
    Complex s = param.position(t);
    Complex d = param.derivative(t);
    pos_re_[j] = s.real();
    pos_im_[j] = s.imag();
    deriv_re_[j] = d.real();
    deriv_im_[j] = d.imag();
    double m = std::abs(d);
    if (!(m > 0.0)) throw ConfigError("degenerate parametrization: s'(tau) = 0");
    speed_[j] = m;
    normal_re_[j] = d.imag() / m;
    normal_im_[j] = -d.real() / m;
  }
  // Reject clockwise orientation: the enclosed signed area must be positive.
  double area2 = 0.0;
  for (int j = 0; j < n; ++j)
    area2 += pos_re_[j] * deriv_im_[j] - pos_im_[j] * deriv_re_[j];
  if (area2 * h_ <= 0.0)
    throw ConfigError("curve must be traversed counterclockwise");
}

double CurveGrid::min_node_distance(Complex z, int* nearest) const {
  double best = std::numeric_limits<double>::infinity();
  int best_j = 0;
  for (int j = 0; j < n_; ++j) {
    double dr = pos_re_[j] - z.real();
    double di = pos_im_[j] - z.imag();
    double d2 = dr * dr + di * di;
    if (d2 < best) {
      best = d2;
      best_j = j;
    }
  }
  if (nearest) *nearest = best_j;
  return std::sqrt(best);
}

CurveGrid make_curve(const CurveParam& param, int n) {
  return CurveGrid(param, n);
}

Complex outward_normal(const CurveGrid& grid, int j) { return grid.normal(j); }

}  // namespace cauchybv

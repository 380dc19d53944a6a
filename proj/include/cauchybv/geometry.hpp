#pragma once

#include <string>
#include <vector>

#include "cauchybv/common.hpp"

namespace cauchybv {

enum class CurveKind { unit_circle, ellipse, kite, star };

const char* curve_kind_name(CurveKind k);
CurveKind parse_curve_kind(const std::string& name);

// A smooth closed curve s(tau), tau in [0, 2pi), traversed counterclockwise.
struct CurveParam {
  CurveKind kind = CurveKind::unit_circle;
  double a = 1.0;          // ellipse semi-axis (real direction)
  double b = 1.0;          // ellipse semi-axis (imaginary direction)
  int arms = 5;            // star
  double amplitude = 0.3;  // star bump amplitude, in [0, 0.5)

  static CurveParam circle();
  static CurveParam make_ellipse(double a, double b);
  static CurveParam make_kite();
  static CurveParam make_star(int arms, double amplitude);

  void validate() const;  // throws ConfigError
  Complex position(double tau) const;
  Complex derivative(double tau) const;  // s'(tau), exact
};

// Equispaced discretization of a curve: nodes, exact derivatives, outward
// normals, stored split (re/im) so the summation kernels can stream them.
class CurveGrid {
 public:
  CurveGrid(const CurveParam& param, int n);

  int size() const { return n_; }
  double step() const { return h_; }  // 2pi / n
  const CurveParam& param() const { return param_; }

  double tau(int j) const { return tau_[j]; }
  Complex pos(int j) const { return {pos_re_[j], pos_im_[j]}; }
  Complex deriv(int j) const { return {deriv_re_[j], deriv_im_[j]}; }
  double speed(int j) const { return speed_[j]; }  // |s'(tau_j)|
  Complex normal(int j) const { return {normal_re_[j], normal_im_[j]}; }

  const double* pos_re() const { return pos_re_.data(); }
  const double* pos_im() const { return pos_im_.data(); }
  const double* deriv_re() const { return deriv_re_.data(); }
  const double* deriv_im() const { return deriv_im_.data(); }

  // Distance from z to the nearest grid node; optionally reports its index.
  double min_node_distance(Complex z, int* nearest = nullptr) const;

 private:
  CurveParam param_;
  int n_ = 0;
  double h_ = 0.0;
  std::vector<double> tau_, pos_re_, pos_im_, deriv_re_, deriv_im_;
  std::vector<double> speed_, normal_re_, normal_im_;
};

// Builds the grid; n must be even and >= 4.  Clockwise parametrizations are
// rejected rather than silently reoriented.
CurveGrid make_curve(const CurveParam& param, int n);

// Unit outward normal at node j (the curve is counterclockwise, so this is
// -i * s'/|s'|).
Complex outward_normal(const CurveGrid& grid, int j);

}  // namespace cauchybv

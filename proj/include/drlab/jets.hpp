#pragma once

#include <array>
#include <cstddef>

namespace drlab {

inline constexpr int kMaxJet = 12;

/// Derivatives d[0..n] of a scalar function at a fixed point. All combining
/// operations use the general Leibniz rule, so values stay exact to rounding
/// for closed-form inputs.
struct Jet {
  std::array<double, kMaxJet + 1> d{};
  int n = 0;

  static Jet constant(double v, int order);
  static Jet variable(double v, int order);  // identity map at v
};

double binom(int n, int k);

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, double s);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_reciprocal(const Jet& u);  // requires u.d[0] != 0
Jet jet_exp(const Jet& g);

/// Jets of sinh(c*x) and cosh(c*x) at x.
Jet jet_sinh(double x, double c, int order);
Jet jet_cosh(double x, double c, int order);
/// Jet of 1/sinh(c*x) at x (x != 0).
Jet jet_csch(double x, double c, int order);

/// One application of -(1/sinh(c*s)) d/ds to the jet of F at s; the result
/// carries one derivative order less.
Jet apply_inv_sinh_derivative(const Jet& F, double s, double c);

/// Value of (-(1/sinh s) d/ds)^p (-(1/sinh(s/2)) d/ds)^q F at s, given a jet
/// of F there with order >= p+q. The half-argument factors act first,
/// matching the Abel inversion operator ordering.
double hyperbolic_stack_value(Jet F, double s, int p, int q);

}  // namespace drlab

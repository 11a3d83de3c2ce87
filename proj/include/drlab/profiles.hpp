#pragma once

#include <functional>

#include "drlab/cheb.hpp"
#include "drlab/jets.hpp"

namespace drlab {

/// Smooth scalar function with a derivative provider and support metadata;
/// the common currency of the transform layer. Radial profiles live on
/// r >= 0; Abel-side profiles are even functions of t queried via |t|.
///
/// compact = true means the function is exactly zero outside the support
/// interval (pieces cut off by the plateau family); otherwise the interval
/// is a truncation hint and the provider stays valid beyond it.
class SmoothFn {
 public:
  using JetProvider = std::function<void(double x, double* out, int order)>;

  SmoothFn() = default;
  SmoothFn(JetProvider jp, int max_order, double lo, double hi, bool even, bool compact);

  double operator()(double x) const;
  double deriv(double x, int k) const;
  Jet jet(double x, int order) const;

  int max_order() const { return max_order_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }
  bool even() const { return even_; }
  bool compact() const { return compact_; }

  /// exp(-(x/width)^2) with closed-form jets.
  static SmoothFn gaussian(double width = 1.0);
  /// Chebyshev model of f on [lo,hi]; derivatives by series differentiation.
  /// Treated as compact: the fit range must cover everything non-negligible.
  static SmoothFn from_samples(std::function<double(double)> f, double lo, double hi,
                               bool even, const PiecewiseCheb::FitOptions& opt = {});
  static SmoothFn from_cheb(PiecewiseCheb pc);
  /// a*f + b*g with the support hull and the smaller jet order.
  static SmoothFn combine(double a, SmoothFn f, double b, SmoothFn g);

 private:
  JetProvider jet_{};
  int max_order_ = 0;
  double lo_ = 0.0, hi_ = 0.0;
  bool even_ = false;
  bool compact_ = false;
};

}  // namespace drlab

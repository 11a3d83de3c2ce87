#include "drlab/profiles.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace drlab {

SmoothFn::SmoothFn(JetProvider jp, int max_order, double lo, double hi, bool even,
                   bool compact)
    : jet_(std::move(jp)), max_order_(max_order), lo_(lo), hi_(hi), even_(even),
      compact_(compact) {
  if (max_order < 0 || max_order > kMaxJet)
    throw std::invalid_argument("SmoothFn: unsupported jet order");
}

Jet SmoothFn::jet(double x, int order) const {
  if (order > max_order_)
    throw std::out_of_range("SmoothFn::jet: order " + std::to_string(order) +
                            " requested, provider supplies " + std::to_string(max_order_));
  Jet j;
  j.n = order;
  double sign = 1.0;
  if (even_ && x < 0.0) {
    x = -x;
    sign = -1.0;
  }
  const bool outside = even_ ? (x > hi_) : (x < lo_ || x > hi_);
  if (compact_ && outside) return j;  // exact zero jet
  jet_(x, j.d.data(), order);
  if (sign < 0.0)
    for (int k = 1; k <= order; k += 2) j.d[k] = -j.d[k];
  return j;
}

double SmoothFn::operator()(double x) const { return jet(x, 0).d[0]; }

double SmoothFn::deriv(double x, int k) const { return jet(x, k).d[k]; }

SmoothFn SmoothFn::gaussian(double width) {
  if (!(width > 0.0)) throw std::invalid_argument("SmoothFn::gaussian: width must be > 0");
  const double w2 = width * width;
  auto jp = [w2](double x, double* out, int order) {
    Jet g;  // -(x^2)/w2 as a jet in x
    g.n = order;
    g.d[0] = -x * x / w2;
    if (order >= 1) g.d[1] = -2.0 * x / w2;
    if (order >= 2) g.d[2] = -2.0 / w2;
    const Jet e = jet_exp(g);
    for (int k = 0; k <= order; ++k) out[k] = e.d[k];
  };
  // e^{-(x/w)^2} < 1e-18 once |x| > w*sqrt(ln 1e18)
  const double hint = width * std::sqrt(std::log(1e18));
  return SmoothFn(std::move(jp), kMaxJet, 0.0, hint, true, false);
}

SmoothFn SmoothFn::from_samples(std::function<double(double)> f, double lo, double hi,
                                bool even, const PiecewiseCheb::FitOptions& opt) {
  return from_cheb(PiecewiseCheb::fit(f, lo, hi, even, opt));
}

SmoothFn SmoothFn::from_cheb(PiecewiseCheb pc) {
  auto shared = std::make_shared<PiecewiseCheb>(std::move(pc));
  const int mo = shared->max_order();
  const double lo = shared->lo(), hi = shared->hi();
  const bool even = shared->even();
  auto jp = [shared](double x, double* out, int order) { shared->jet(x, out, order); };
  return SmoothFn(std::move(jp), mo, lo, hi, even, true);
}

SmoothFn SmoothFn::combine(double a, SmoothFn f, double b, SmoothFn g) {
  if (f.even() != g.even())
    throw std::invalid_argument("SmoothFn::combine: mixed parity is unsupported");
  const int mo = std::min(f.max_order(), g.max_order());
  const double lo = std::min(f.support_lo(), g.support_lo());
  const double hi = std::max(f.support_hi(), g.support_hi());
  const bool compact = f.compact() && g.compact();
  auto fa = std::make_shared<SmoothFn>(std::move(f));
  auto ga = std::make_shared<SmoothFn>(std::move(g));
  auto jp = [a, b, fa, ga](double x, double* out, int order) {
    const Jet jf = fa->jet(x, order), jg = ga->jet(x, order);
    for (int k = 0; k <= order; ++k) out[k] = a * jf.d[k] + b * jg.d[k];
  };
  return SmoothFn(std::move(jp), mo, lo, hi, fa->even(), compact);
}

}  // namespace drlab

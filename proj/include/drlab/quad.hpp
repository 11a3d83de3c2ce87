#pragma once

#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace drlab {

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

namespace quad_detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (positive half).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace quad_detail

/// One Gauss-Kronrod 7/15 panel; err receives |K15 - G7|.
template <class F>
auto gk15(F&& f, double a, double b, double& err) {
  using R = std::invoke_result_t<F&, double>;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  R fc = f(c);
  R ig = quad_detail::wg[3] * fc;
  R ik = quad_detail::wgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * quad_detail::xgk[j];
    R f1 = f(c - dx), f2 = f(c + dx);
    ik += quad_detail::wgk[j] * (f1 + f2);
    if (j % 2 == 1) ig += quad_detail::wg[j / 2] * (f1 + f2);
  }
  ig *= h;
  ik *= h;
  err = std::abs(ik - ig);
  return ik;
}

/// Globally adaptive quadrature over [a,b]: repeatedly bisects the interval
/// with the largest local error estimate until the summed estimate meets
/// max(abs_tol, rel_tol * |I|). Throws if max_intervals is exhausted while
/// the estimate is still an order above tolerance.
template <class F>
auto integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  using R = std::invoke_result_t<F&, double>;
  struct Seg {
    double err, a, b;
    R val;
    bool operator<(const Seg& o) const { return err < o.err; }
  };
  if (!(b > a)) return R{};
  double e0;
  R total = gk15(f, a, b, e0);
  std::priority_queue<Seg> q;
  q.push({e0, a, b, total});
  double err_sum = e0;
  int n = 1;
  while (err_sum > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
         n < opt.max_intervals) {
    Seg s = q.top();
    q.pop();
    const double mid = 0.5 * (s.a + s.b);
    double e1, e2;
    R v1 = gk15(f, s.a, mid, e1);
    R v2 = gk15(f, mid, s.b, e2);
    total += v1 + v2 - s.val;
    err_sum += e1 + e2 - s.err;
    q.push({e1, s.a, mid, v1});
    q.push({e2, mid, s.b, v2});
    ++n;
  }
  if (err_sum > 10.0 * std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
      err_sum > 1e-300)
    throw std::runtime_error("integrate: no convergence after " + std::to_string(n) +
                             " intervals, err~" + std::to_string(err_sum));
  return total;
}

/// Integral over [a, +inf) of a decaying integrand, summed in blocks of the
/// given width until two consecutive blocks are negligible against the total.
template <class F>
auto integrate_tail(F&& f, double a, double block, const QuadOptions& opt = {},
                    int max_blocks = 400) {
  using R = std::invoke_result_t<F&, double>;
  R total{};
  int quiet = 0;
  for (int kb = 0; kb < max_blocks; ++kb) {
    const double lo = a + kb * block, hi = lo + block;
    R v = integrate(f, lo, hi, opt);
    total += v;
    const double thresh = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    quiet = (std::abs(v) <= thresh) ? quiet + 1 : 0;
    if (quiet >= 2) return total;
  }
  throw std::runtime_error("integrate_tail: integrand did not decay within block budget");
}

}  // namespace drlab

#include "drlab/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drlab {

namespace {

// B_2, B_4, ..., B_12; enough for the degree-6 start and then some.
constexpr double kBernoulli[6] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                                  -1.0 / 30.0, 5.0 / 66.0,  -691.0 / 2730.0};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Odd-order coefficients of A'/A = m/r + sum_j b_{2j-1} r^{2j-1}:
// b_{2j-1} = (m + k (2^{2j} - 1)) B_{2j} / (2j)!.
double series_b(const GroupParams& g, int j) {
  const int m = g.m_v + g.m_z, k = g.m_z;
  const double p = std::exp2(2.0 * j) - 1.0;
  return (m + k * p) * kBernoulli[j - 1] / factorial(2 * j);
}

double sqrt_density(const GroupParams& g, double r) {
  return std::exp(0.5 * log_density_A(g, r));
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

struct State {
  cdouble w, wp;
};

}  // namespace

cdouble SphericalEvaluator::ode_q(double r) const {
  const int m = g_.m_v + g_.m_z, k = g_.m_z;
  const double sh = std::sinh(0.5 * r), ch = std::cosh(0.5 * r);
  const double vt = m * (m - 2) / (16.0 * sh * sh) + k * (2 - k) / (16.0 * ch * ch);
  return vt - lambda_ * lambda_;
}

void SphericalEvaluator::build_taylor() {
  const int m = g_.m_v + g_.m_z;
  taylor_[0] = 1.0;
  // a_{2j+2} = -(E a_{2j} + sum_{i=1..j} b_{2i-1} 2(j-i+1) a_{2(j-i+1)})
  //            / ((2j+2)(2j+1+m))
  for (int j = 0; j <= 2; ++j) {
    cdouble acc = E_ * taylor_[j];
    for (int i = 1; i <= j; ++i)
      acc += series_b(g_, i) * 2.0 * double(j - i + 1) * taylor_[j - i + 1];
    taylor_[j + 1] = -acc / double((2 * j + 2) * (2 * j + 1 + m));
  }
}

cdouble SphericalEvaluator::u_series(double r) const {
  const double r2 = r * r;
  return taylor_[0] + r2 * (taylor_[1] + r2 * (taylor_[2] + r2 * taylor_[3]));
}

cdouble SphericalEvaluator::u_series_deriv(double r) const {
  const double r2 = r * r;
  return r * (2.0 * taylor_[1] + r2 * (4.0 * taylor_[2] + r2 * 6.0 * taylor_[3]));
}

SphericalEvaluator::SphericalEvaluator(const GroupParams& g, cdouble lambda, double r_max,
                                       double rel_tol)
    : g_(g), lambda_(lambda), r_max_(r_max) {
  if (!(r_max > 1.0) || r_max > 400.0)
    throw std::invalid_argument("SphericalEvaluator: r_max must lie in (1, 400]");
  if (std::fabs(lambda.imag()) > 0.5 * g.Q + 5.0)
    throw std::domain_error("SphericalEvaluator: |Im lambda| beyond supported range Q/2 + 5");
  E_ = lambda * lambda + 0.25 * g.Q * g.Q;
  build_taylor();
  integrate(rel_tol);
}

void SphericalEvaluator::integrate(double rel_tol) {
  const double sA = sqrt_density(g_, r0_);
  const double dlog = 0.5 * log_density_A_deriv(g_, r0_);  // (sqrt A)'/sqrt A
  State y{sA * u_series(r0_), sA * (dlog * u_series(r0_) + u_series_deriv(r0_))};
  double r = r0_;
  nodes_.clear();
  nodes_.push_back({r, y.w, y.wp, ode_q(r)});

  auto f = [this](double rr, const State& s) -> State { return {s.wp, ode_q(rr) * s.w}; };

  const double atol = 1e-290;
  double h = 1e-4;
  State k1 = f(r, y);
  int rejected_in_a_row = 0;
  while (r < r_max_) {
    h = std::min({h, 0.5, r_max_ - r});
    const State k2 = f(r + C2 * h, {y.w + h * (A21 * k1.w), y.wp + h * (A21 * k1.wp)});
    const State k3 = f(r + C3 * h, {y.w + h * (A31 * k1.w + A32 * k2.w),
                                    y.wp + h * (A31 * k1.wp + A32 * k2.wp)});
    const State k4 = f(r + C4 * h, {y.w + h * (A41 * k1.w + A42 * k2.w + A43 * k3.w),
                                    y.wp + h * (A41 * k1.wp + A42 * k2.wp + A43 * k3.wp)});
    const State k5 =
        f(r + C5 * h, {y.w + h * (A51 * k1.w + A52 * k2.w + A53 * k3.w + A54 * k4.w),
                       y.wp + h * (A51 * k1.wp + A52 * k2.wp + A53 * k3.wp + A54 * k4.wp)});
    const State k6 = f(
        r + h, {y.w + h * (A61 * k1.w + A62 * k2.w + A63 * k3.w + A64 * k4.w + A65 * k5.w),
                y.wp + h * (A61 * k1.wp + A62 * k2.wp + A63 * k3.wp + A64 * k4.wp +
                            A65 * k5.wp)});
    const State ynew{y.w + h * (B1 * k1.w + B3 * k3.w + B4 * k4.w + B5 * k5.w + B6 * k6.w),
                     y.wp + h * (B1 * k1.wp + B3 * k3.wp + B4 * k4.wp + B5 * k5.wp +
                                 B6 * k6.wp)};
    const State k7 = f(r + h, ynew);
    const cdouble ew =
        h * (E1 * k1.w + E3 * k3.w + E4 * k4.w + E5 * k5.w + E6 * k6.w + E7 * k7.w);
    const cdouble ewp =
        h * (E1 * k1.wp + E3 * k3.wp + E4 * k4.wp + E5 * k5.wp + E6 * k6.wp + E7 * k7.wp);
    const double sc_w = atol + rel_tol * std::max(std::abs(y.w), std::abs(ynew.w));
    const double sc_wp = atol + rel_tol * std::max(std::abs(y.wp), std::abs(ynew.wp));
    const double err =
        std::sqrt(0.5 * (std::norm(ew / sc_w) + std::norm(ewp / sc_wp)));

    if (err <= 1.0) {
      r += h;
      y = ynew;
      k1 = k7;  // first-same-as-last
      nodes_.push_back({r, y.w, y.wp, ode_q(r)});
      rejected_in_a_row = 0;
    } else if (++rejected_in_a_row > 60) {
      throw std::runtime_error("SphericalEvaluator: step control stalled at r = " +
                               std::to_string(r) + ", h = " + std::to_string(h));
    }
    const double fac =
        std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    h *= fac;
    if (h < 1e-12)
      throw std::runtime_error("SphericalEvaluator: step size underflow at r = " +
                               std::to_string(r));
  }
}

cdouble SphericalEvaluator::phi(double r) const {
  if (r < 0.0) throw std::invalid_argument("phi: r must be >= 0");
  if (r > r_max_ * (1.0 + 1e-12))
    throw std::out_of_range("phi: r beyond r_max; construct the evaluator with larger r_max");
  r = std::min(r, r_max_);
  if (r <= r0_) return u_series(r);

  const auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), r,
      [](double v, const Node& nd) { return v < nd.r; });
  const Node& b = (it == nodes_.end()) ? nodes_.back() : *it;
  const Node& a = *(&b - 1);
  const double h = b.r - a.r;
  const double t = (r - a.r) / h;
  // Two-point quintic Hermite in (w, w', w'' = q w).
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  const double H0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
  const double H1 = t - 6 * t3 + 8 * t4 - 3 * t5;
  const double H2 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
  const double H3 = 10 * t3 - 15 * t4 + 6 * t5;
  const double H4 = -4 * t3 + 7 * t4 - 3 * t5;
  const double H5 = 0.5 * (t3 - 2 * t4 + t5);
  const cdouble w = a.w * H0 + h * a.wp * H1 + h * h * (a.q * a.w) * H2 + b.w * H3 +
                    h * b.wp * H4 + h * h * (b.q * b.w) * H5;
  return w / sqrt_density(g_, r);
}

double radial_eigen_residual(const SphericalEvaluator& ev, double r, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("radial_eigen_residual: step must be > 0");
  if (r - 2.0 * step < 1e-3 || r + 2.0 * step > ev.r_max())
    throw std::invalid_argument("radial_eigen_residual: stencil leaves cached range");
  const cdouble fm2 = ev.phi(r - 2 * step), fm1 = ev.phi(r - step), f0 = ev.phi(r),
                fp1 = ev.phi(r + step), fp2 = ev.phi(r + 2 * step);
  const cdouble d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * step);
  const cdouble d2 =
      (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * step * step);
  const double drift = log_density_A_deriv(ev.group(), r);
  return std::abs(d2 + drift * d1 + ev.eigenvalue() * f0);
}

cdouble phi_real_hyp_closed_form(cdouble lambda, double r) {
  if (r == 0.0) return 1.0;
  const double sh = 2.0 * std::sinh(0.5 * r);
  if (std::abs(lambda) < 1e-6) {
    const cdouble x = lambda * r;
    return r * (1.0 - x * x / 6.0 * (1.0 - x * x / 20.0)) / sh;
  }
  return std::sin(lambda * r) / (lambda * sh);
}

}  // namespace drlab

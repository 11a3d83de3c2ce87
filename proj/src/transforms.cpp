#include "drlab/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "drlab/jets.hpp"

namespace drlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Folds an even profile; otherwise integrates across the full support.
cdouble weighted_line_integral(const SmoothFn& g, cdouble s, double angular_sign,
                               const QuadOptions& opt) {
  if (!std::isfinite(g.support_hi()))
    throw std::invalid_argument("line transform needs a finite support hint");
  cdouble re(0.0, 0.0), im(0.0, 0.0);
  if (g.even()) {
    // e^{+-i s t} + e^{-+i s t} = 2 cos(s t), valid for complex s.
    auto f_re = [&](double t) { return (g(t) * std::cos(s * t)).real(); };
    auto f_im = [&](double t) { return (g(t) * std::cos(s * t)).imag(); };
    re = 2.0 * integrate(f_re, 0.0, g.support_hi(), opt);
    im = 2.0 * integrate(f_im, 0.0, g.support_hi(), opt);
  } else {
    cdouble i_s(0.0, angular_sign);
    auto f_re = [&](double t) { return (g(t) * std::exp(i_s * s * t)).real(); };
    auto f_im = [&](double t) { return (g(t) * std::exp(i_s * s * t)).imag(); };
    re = integrate(f_re, g.support_lo(), g.support_hi(), opt);
    im = integrate(f_im, g.support_lo(), g.support_hi(), opt);
  }
  return cdouble(re.real(), im.real());
}

}  // namespace

cdouble fourier_line(const SmoothFn& g, cdouble s, const QuadOptions& opt) {
  return weighted_line_integral(g, s, -1.0, opt);
}

cdouble fourier_line_inverse(const SmoothFn& g, cdouble lambda, const QuadOptions& opt) {
  return weighted_line_integral(g, lambda, +1.0, opt) / (2.0 * kPi);
}

double lebesgue_scale(const GroupParams& g) {
  return std::exp2(double(g.m_z)) * std::tgamma(0.5 * g.n) /
         (2.0 * std::pow(kPi, 0.5 * g.n));
}

double unit_sphere_area(int d) {
  if (d < 1) throw std::invalid_argument("unit_sphere_area: dimension must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

double abel_measure_constant(const GroupParams& g) {
  double c = lebesgue_scale(g) * unit_sphere_area(g.m_v);
  if (g.m_z > 0) c *= unit_sphere_area(g.m_z);
  return c;
}

double abel_inverse_prefactor(const GroupParams& g) {
  double c = std::exp2(1.0 - g.m_v - 1.5 * g.m_z) / std::tgamma(0.5 * g.n);
  if (g.m_z % 2 == 0) c *= std::sqrt(kPi);
  return c;
}

double abel_forward(const GroupParams& g, const SmoothFn& f, double t,
                    const QuadOptions& opt) {
  double r_cut = f.support_hi();
  if (!std::isfinite(r_cut))
    throw std::invalid_argument("abel_forward needs a finite support hint");
  double a = std::exp(t);
  double sa = std::exp(0.5 * t);
  // radius(0, 0, a) = |t| already exceeds the support: everything does.
  if (std::fabs(t) >= r_cut) return 0.0;
  double ch = std::cosh(0.5 * r_cut);
  // The (xi, zeta) region with radius <= r_cut: (1 + a + xi^2/4)^2 + zeta^2
  // <= 4 a cosh^2(r_cut / 2).
  double xi2_max = 4.0 * (2.0 * sa * ch - (1.0 + a));
  if (xi2_max <= 0.0) return 0.0;
  double xi_max = std::sqrt(xi2_max);
  double pref = abel_measure_constant(g) * std::exp(-0.5 * g.Q * t);

  QuadOptions inner = opt;
  inner.rel_tol = 0.1 * opt.rel_tol;

  if (g.m_z == 0) {
    auto integrand = [&](double xi) {
      double r = radius(g, GroupPoint{xi, 0.0, a});
      return f(r) * std::pow(xi, g.m_v - 1);
    };
    return pref * integrate(integrand, 0.0, xi_max, opt);
  }

  auto outer = [&](double xi) {
    double q1 = 1.0 + a + 0.25 * xi * xi;
    double z2 = 4.0 * a * ch * ch - q1 * q1;
    if (z2 <= 0.0) return 0.0;
    double z_max = std::sqrt(z2);
    auto inner_f = [&](double zeta) {
      double r = radius(g, GroupPoint{xi, zeta, a});
      return f(r) * std::pow(zeta, g.m_z - 1);
    };
    return std::pow(xi, g.m_v - 1) * integrate(inner_f, 0.0, z_max, inner);
  };
  return pref * integrate(outer, 0.0, xi_max, opt);
}

SmoothFn abel_forward_profile(const GroupParams& g, const SmoothFn& f, double t_hi,
                              const PiecewiseCheb::FitOptions& fit,
                              const QuadOptions& opt) {
  auto sample = [&, g](double t) { return abel_forward(g, f, std::fabs(t), opt); };
  return SmoothFn::from_samples(sample, 0.0, t_hi, /*even=*/true, fit);
}

double abel_inverse_even(const GroupParams& g, const SmoothFn& F, double r,
                         const QuadOptions&) {
  if (g.m_z % 2 != 0)
    throw std::invalid_argument("abel_inverse_even requires even m_z");
  int p = g.m_z / 2;
  int q = g.m_v / 2;
  // At the origin the stack has a finite even-extension limit; evaluating at
  // a small positive radius realizes it without 0/0 work.
  double r_eval = std::max(r, 1e-3);
  if (F.compact() && r_eval >= F.support_hi()) return 0.0;
  Jet jf = F.jet(r_eval, p + q);
  return abel_inverse_prefactor(g) * hyperbolic_stack_value(jf, r_eval, p, q);
}

double abel_inverse_odd(const GroupParams& g, const SmoothFn& F, double r,
                        const QuadOptions& opt) {
  if (g.m_z % 2 != 1)
    throw std::invalid_argument("abel_inverse_odd requires odd m_z");
  if (r < 0.0) r = -r;
  int p = (g.m_z + 1) / 2;
  int q = g.m_v / 2;
  int depth = p + q;

  auto stack = [&](double s) {
    Jet jf = F.jet(s, depth);
    return hyperbolic_stack_value(jf, s, p, q);
  };

  double s_cut = F.support_hi();
  if (!std::isfinite(s_cut))
    throw std::invalid_argument("abel_inverse_odd needs a finite support hint");
  if (F.compact() && r >= s_cut) return 0.0;

  // The integrand is a ratio of quantities vanishing together as s -> 0, so
  // jet noise is amplified like s^-(p+q+1) there. Keeping s >= 1e-2 caps that
  // amplification near the model's fit noise; the evaluation offset it causes
  // is O(r_eval^2) ~ 1e-4 relative, inside this branch's accuracy budget.
  if (r < 1e-2) r = 1e-2;

  double shr = std::sinh(0.5 * r);
  double sh2 = shr * shr;
  // y^2 = 2 (sinh^2(s/2) - sinh^2(r/2)) turns (cosh s - cosh r)^{-1/2} sinh s ds
  // into the plain 2 dy; split at s1 so the y leg stays short and the rest runs
  // in s where the weight is regular.
  double s1 = std::min(r + 2.0, s_cut);
  auto s_of_y = [&](double y) {
    return 2.0 * std::asinh(std::sqrt(sh2 + 0.5 * y * y));
  };
  double y1_sq = 2.0 * (std::pow(std::sinh(0.5 * s1), 2) - sh2);
  double y1 = std::sqrt(std::max(y1_sq, 0.0));

  // Each leg may cancel internally while its L1 mass stays O(1); anchor the
  // absolute target to a one-panel mass estimate so a vanishing signed value
  // cannot make the relative goal unreachable.
  auto leg = [&](const std::function<double(double)>& f, double a, double b) {
    double e;
    const double mass = gk15([&](double x) { return std::fabs(f(x)); }, a, b, e);
    QuadOptions o = opt;
    o.abs_tol = std::max(o.abs_tol, opt.rel_tol * mass);
    return integrate(f, a, b, o);
  };

  double total = 2.0 * leg([&](double y) { return stack(s_of_y(y)); }, 0.0, y1);

  if (s1 < s_cut) {
    double chr = std::cosh(r);
    total += leg(
        [&](double s) { return stack(s) * std::sinh(s) / std::sqrt(std::cosh(s) - chr); },
        s1, s_cut);
  }
  return abel_inverse_prefactor(g) * total;
}

double abel_inverse(const GroupParams& g, const SmoothFn& F, double r,
                    const QuadOptions& opt) {
  return (g.m_z % 2 == 0) ? abel_inverse_even(g, F, r, opt)
                          : abel_inverse_odd(g, F, r, opt);
}

cdouble spherical_transform(const SmoothFn& f, const SphericalEvaluator& ev,
                            const QuadOptions& opt) {
  double hi = std::min(f.support_hi(), ev.r_max());
  if (!std::isfinite(hi))
    throw std::invalid_argument("spherical_transform needs a finite support hint");
  auto f_re = [&](double r) { return (ev.phi(r) * f(r)).real() * density_A(ev.group(), r); };
  auto f_im = [&](double r) { return (ev.phi(r) * f(r)).imag() * density_A(ev.group(), r); };
  return cdouble(integrate(f_re, 0.0, hi, opt), integrate(f_im, 0.0, hi, opt));
}

cdouble spherical_transform_via_abel(const SmoothFn& abel_profile, cdouble lambda,
                                     const QuadOptions& opt) {
  return fourier_line(abel_profile, lambda, opt);
}

TwoRouteResult spherical_transform_two_route(const SmoothFn& f, const SphericalEvaluator& ev,
                                             const SmoothFn& abel_profile,
                                             const QuadOptions& opt) {
  TwoRouteResult out;
  out.direct = spherical_transform(f, ev, opt);
  out.via_abel = spherical_transform_via_abel(abel_profile, ev.lambda(), opt);
  double scale = std::max(std::abs(out.direct), 1e-300);
  out.rel_dev = std::abs(out.direct - out.via_abel) / scale;
  return out;
}

double spherical_inverse_from_hat(const GroupParams& g, const SmoothFn& m_hat, double r,
                                  const QuadOptions& opt) {
  return abel_inverse(g, m_hat, r, opt) / (2.0 * kPi);
}

}  // namespace drlab

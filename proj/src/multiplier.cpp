#include "drlab/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "drlab/transforms.hpp"

namespace drlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

MultiplierContext::MultiplierContext(const GroupParams& g_, const DriftParam& alpha_,
                                     double p_, int beta_)
    : g(g_), alpha(alpha_), p(p_), beta(beta_) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("MultiplierContext: p must lie in (1, inf)");
  if (p == 2.0)
    throw std::invalid_argument("MultiplierContext: p = 2 has W = 0 and is excluded");
  if (beta < 1) throw std::invalid_argument("MultiplierContext: beta must be >= 1");
  W = std::fabs(alpha.alpha) * std::fabs(1.0 / p - 0.5);
  phi_star = std::asin(std::fabs(2.0 / p - 1.0));
}

bool MultiplierContext::meets_regularity_threshold() const {
  return beta > std::max(2.0, 0.5 * g.n);
}

bool parabolic_region_contains(double x, double y, const MultiplierContext& ctx) {
  const double a2 = ctx.alpha.alpha * ctx.alpha.alpha;
  const double s2 = std::pow(2.0 / ctx.p - 1.0, 2);  // sin^2 phi*
  return x > y * y / (a2 * s2) + 0.25 * a2 * (1.0 - s2);
}

PoleStripResult resolvent_pole_strip_test(cdouble w, const MultiplierContext& ctx,
                                          double boundary_band) {
  PoleStripResult out;
  const double a2 = ctx.alpha.alpha * ctx.alpha.alpha;
  const double s2 = std::pow(2.0 / ctx.p - 1.0, 2);
  const double threshold = w.imag() * w.imag() / (a2 * s2) + 0.25 * a2 * (1.0 - s2);
  if (std::fabs(w.real() - threshold) < boundary_band * (1.0 + std::abs(w))) {
    out.indeterminate = true;
    return out;
  }
  out.in_region = parabolic_region_contains(w.real(), w.imag(), ctx);
  out.pole = std::sqrt(w - 0.25 * a2);
  out.poles_in_strip = std::fabs(out.pole.imag()) < ctx.W;  // +-pole share |Im|
  out.equivalent = (out.in_region == out.poles_in_strip);
  return out;
}

// ---------------------------------------------------------------------------
// CutoffFamily

namespace {

double raw_bump(double x) {
  const double d = 1.0 - 16.0 * x * x;
  return d > 0.0 ? std::exp(-1.0 / d) : 0.0;
}

}  // namespace

CutoffFamily::CutoffFamily() {
  QuadOptions q;
  q.rel_tol = 1e-14;
  bump_norm_ = 2.0 * integrate(raw_bump, 0.0, 0.25, q);
}

double CutoffFamily::tail_mass(double x) const {
  if (x >= 0.25) return 0.0;
  QuadOptions q;
  q.rel_tol = 1e-10;
  return integrate(raw_bump, x, 0.25, q) / bump_norm_;
}

Jet CutoffFamily::bump_jet(double x, int order) const {
  Jet j;
  j.n = order;
  if (std::fabs(x) >= 0.25) return j;
  Jet den;
  den.n = order;
  den.d[0] = 1.0 - 16.0 * x * x;
  if (order >= 1) den.d[1] = -32.0 * x;
  if (order >= 2) den.d[2] = -32.0;
  const Jet e = jet_exp(jet_scale(jet_reciprocal(den), -1.0));
  return jet_scale(e, 1.0 / bump_norm_);
}

double CutoffFamily::omega(double t) const {
  t = std::fabs(t);
  if (t >= 0.75) return 0.0;
  if (t <= 0.25) return 1.0;
  // The decaying tail is the primary branch so its value shrinks with the
  // true one; the rising half is its exact complement, so omega(t) and
  // omega(1 - t) share one tail evaluation and sum to 1 identically.
  if (t > 0.5) return tail_mass(t - 0.5);
  return 1.0 - tail_mass(0.5 - t);
}

Jet CutoffFamily::omega_jet(double t, int order) const {
  Jet j;
  j.n = order;
  j.d[0] = omega(t);
  if (order >= 1) {
    const Jet jp = bump_jet(t + 0.5, order - 1);
    const Jet jm = bump_jet(t - 0.5, order - 1);
    for (int k = 1; k <= order; ++k) j.d[k] = jp.d[k - 1] - jm.d[k - 1];
  }
  return j;
}

Jet CutoffFamily::omega_h_jet(int h, double t, int order) const {
  if (h < 2) throw std::invalid_argument("omega_h requires h >= 2");
  return jet_add(omega_jet(t - h + 1.0, order), omega_jet(t + h - 1.0, order));
}

Jet CutoffFamily::eta_jet(double t, int order) const {
  return jet_add(omega_jet(t, order),
                 jet_add(omega_jet(t - 1.0, order), omega_jet(t + 1.0, order)));
}

SmoothFn CutoffFamily::omega_fn() const {
  auto self = std::make_shared<CutoffFamily>(*this);
  auto jp = [self](double x, double* out, int order) {
    const Jet j = self->omega_jet(x, order);
    for (int k = 0; k <= order; ++k) out[k] = j.d[k];
  };
  return SmoothFn(std::move(jp), kMaxJet, -0.75, 0.75, true, true);
}

SmoothFn CutoffFamily::omega_h_fn(int h) const {
  auto self = std::make_shared<CutoffFamily>(*this);
  auto jp = [self, h](double x, double* out, int order) {
    const Jet j = self->omega_h_jet(h, x, order);
    for (int k = 0; k <= order; ++k) out[k] = j.d[k];
  };
  return SmoothFn(std::move(jp), kMaxJet, -double(h), double(h), true, true);
}

SmoothFn CutoffFamily::eta_fn() const {
  auto self = std::make_shared<CutoffFamily>(*this);
  auto jp = [self](double x, double* out, int order) {
    const Jet j = self->eta_jet(x, order);
    for (int k = 0; k <= order; ++k) out[k] = j.d[k];
  };
  return SmoothFn(std::move(jp), kMaxJet, -1.75, 1.75, true, true);
}

double CutoffFamily::partition_residual(double lo, double hi, int n) const {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * i / (n - 1.0);
    double s = 0.0;
    for (int h = int(std::floor(t)) - 1; h <= int(std::ceil(t)) + 1; ++h)
      s += omega(t - h);
    worst = std::max(worst, std::fabs(s - 1.0));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// SpectralMultiplier

SpectralMultiplier SpectralMultiplier::heat(double time, double alpha) {
  if (!(time > 0.0)) throw std::invalid_argument("heat multiplier: time must be > 0");
  SpectralMultiplier m;
  m.family_ = Family::heat;
  m.alpha_ = alpha;
  m.param_ = time;
  m.integrable_hat_ = true;
  return m;
}

SpectralMultiplier SpectralMultiplier::resolvent_exp(double c, double alpha) {
  if (!(c > 0.0)) throw std::invalid_argument("resolvent multiplier: c must be > 0");
  SpectralMultiplier m;
  m.family_ = Family::resolvent_exp;
  m.alpha_ = alpha;
  m.param_ = c;
  m.integrable_hat_ = true;
  m.singularities_ = {cdouble(0.0, c), cdouble(0.0, -c)};
  return m;
}

SpectralMultiplier SpectralMultiplier::custom(CustomSpec spec) {
  SpectralMultiplier m;
  m.family_ = Family::custom;
  m.alpha_ = spec.alpha;
  m.integrable_hat_ = spec.integrable_hat;
  m.singularities_ = spec.singularities;
  m.spec_ = std::move(spec);
  return m;
}

double SpectralMultiplier::M(double x) const {
  switch (family_) {
    case Family::heat:
      return std::exp(-param_ * x);
    case Family::resolvent_exp:
      return 1.0 / (x - 0.25 * alpha_ * alpha_ + param_ * param_);
    case Family::custom:
      if (!spec_.M) throw std::runtime_error("custom multiplier: M not provided");
      return spec_.M(x);
  }
  return 0.0;
}

cdouble SpectralMultiplier::M_alpha(cdouble z) const {
  switch (family_) {
    case Family::heat:
      return std::exp(-param_ * (z * z + 0.25 * alpha_ * alpha_));
    case Family::resolvent_exp:
      return 1.0 / (z * z + param_ * param_);
    case Family::custom:
      if (!spec_.M_alpha) throw std::runtime_error("custom multiplier: M_alpha not provided");
      return spec_.M_alpha(z);
  }
  return cdouble(0.0, 0.0);
}

double SpectralMultiplier::hat(double t) const {
  switch (family_) {
    case Family::heat:
      return hat_peak() * std::exp(-t * t / (4.0 * param_));
    case Family::resolvent_exp:
      return (kPi / param_) * std::exp(-param_ * std::fabs(t));
    case Family::custom:
      if (!spec_.hat) throw std::runtime_error("custom multiplier: hat not provided");
      return spec_.hat(t);
  }
  return 0.0;
}

Jet SpectralMultiplier::hat_jet(double t, int order) const {
  switch (family_) {
    case Family::heat: {
      Jet g;
      g.n = order;
      const double inv4t = 1.0 / (4.0 * param_);
      g.d[0] = -t * t * inv4t;
      if (order >= 1) g.d[1] = -2.0 * t * inv4t;
      if (order >= 2) g.d[2] = -2.0 * inv4t;
      return jet_scale(jet_exp(g), hat_peak());
    }
    case Family::resolvent_exp: {
      const double s = std::fabs(t);
      const double v = (kPi / param_) * std::exp(-param_ * s);
      Jet j;
      j.n = order;
      double f = 1.0;
      for (int k = 0; k <= order; ++k) {
        j.d[k] = v * f;
        f *= -param_;
      }
      if (t < 0.0)
        for (int k = 1; k <= order; k += 2) j.d[k] = -j.d[k];
      return j;
    }
    case Family::custom:
      if (!spec_.hat_jet) throw std::runtime_error("custom multiplier: hat_jet not provided");
      return spec_.hat_jet(t, order);
  }
  return Jet{};
}

double SpectralMultiplier::hat_peak() const {
  switch (family_) {
    case Family::heat:
      return std::exp(-0.25 * param_ * alpha_ * alpha_) * std::sqrt(kPi / param_);
    case Family::resolvent_exp:
      return kPi / param_;
    case Family::custom:
      return spec_.hat ? std::fabs(spec_.hat(0.0)) : 0.0;
  }
  return 0.0;
}

double SpectralMultiplier::hat_support_hi(double floor_rel) const {
  const double logf = std::log(1.0 / floor_rel);
  switch (family_) {
    case Family::heat:
      return 2.0 * std::sqrt(param_ * logf);
    case Family::resolvent_exp:
      return logf / param_;
    case Family::custom:
      return spec_.hat_support_hi;
  }
  return 0.0;
}

SmoothFn SpectralMultiplier::hat_fn(double floor_rel) const {
  if (!integrable_hat_)
    throw std::invalid_argument("hat_fn: multiplier has no integrable Fourier profile");
  auto self = std::make_shared<SpectralMultiplier>(*this);
  auto jp = [self](double x, double* out, int order) {
    const Jet j = self->hat_jet(x, order);
    for (int k = 0; k <= order; ++k) out[k] = j.d[k];
  };
  const double hi = hat_support_hi(floor_rel);
  return SmoothFn(std::move(jp), kMaxJet, -hi, hi, true, false);
}

double default_heat_time(double h_max) { return h_max * h_max / (4.0 * std::log(1e50)); }

// ---------------------------------------------------------------------------
// Pieces

SmoothFn dyadic_piece(const SpectralMultiplier& M, const CutoffFamily& cut, int h) {
  if (h < 3) throw std::invalid_argument("dyadic_piece requires h >= 3");
  auto m = std::make_shared<SpectralMultiplier>(M);
  auto c = std::make_shared<CutoffFamily>(cut);
  auto jp = [m, c, h](double x, double* out, int order) {
    const Jet j = jet_mul(c->omega_h_jet(h, x, order), m->hat_jet(x, order));
    for (int k = 0; k <= order; ++k) out[k] = j.d[k];
  };
  return SmoothFn(std::move(jp), kMaxJet, -double(h), double(h), true, true);
}

SmoothFn local_profile(const SpectralMultiplier& M, const CutoffFamily& cut) {
  auto m = std::make_shared<SpectralMultiplier>(M);
  auto c = std::make_shared<CutoffFamily>(cut);
  auto jp = [m, c](double x, double* out, int order) {
    const Jet j = jet_mul(c->eta_jet(x, order), m->hat_jet(x, order));
    for (int k = 0; k <= order; ++k) out[k] = j.d[k];
  };
  return SmoothFn(std::move(jp), kMaxJet, -1.75, 1.75, true, true);
}

// ---------------------------------------------------------------------------
// Horm seminorms

HormResult horm_seminorm(const std::function<double(double, int)>& derivs, int s0, int s_inf,
                         double v_min, double v_max, int pts_per_decade) {
  if (s0 < 0 || s_inf < 0) throw std::invalid_argument("horm_seminorm: negative order");
  if (!(v_min > 0.0) || !(v_max > 1.0) || v_min >= 1.0)
    throw std::invalid_argument("horm_seminorm: need v_min < 1 < v_max");
  const double step = std::pow(10.0, 1.0 / pts_per_decade);

  auto term = [&](double v, int j) {
    const double d = derivs(v, j);
    if (!std::isfinite(d))
      throw std::runtime_error("horm_seminorm: derivative evaluation failed at v=" +
                               std::to_string(v));
    return std::pow(v, j) * std::fabs(d);
  };

  HormResult out;
  const double v_lo_inner = std::sqrt(v_min);  // inner = away from the grid edge
  double best0_inner = 0.0;
  for (double v = v_min; v < 1.0; v *= step)
    for (int j = 0; j <= s0; ++j) {
      const double t = term(v, j);
      out.val0 = std::max(out.val0, t);
      if (v >= v_lo_inner) best0_inner = std::max(best0_inner, t);
    }
  const double v_hi_inner = std::sqrt(v_max);
  double bestI_inner = 0.0;
  for (double v = 1.0; v <= v_max * 1.0000001; v *= step)
    for (int j = 0; j <= s_inf; ++j) {
      const double t = term(v, j);
      out.val_inf = std::max(out.val_inf, t);
      if (v <= v_hi_inner) bestI_inner = std::max(bestI_inner, t);
    }
  out.grows_at_zero = out.val0 > 2.0 * std::max(best0_inner, 1e-300);
  out.grows_at_infinity = out.val_inf > 2.0 * std::max(bestI_inner, 1e-300);
  return out;
}

std::function<double(double, int)> fd_derivs(std::function<double(double)> f, double rel_step) {
  return [f = std::move(f), rel_step](double v, int j) -> double {
    if (j == 0) return f(v);
    if (j > 6) throw std::invalid_argument("fd_derivs supports orders <= 6");
    auto central = [&](double h) {
      double acc = 0.0;
      for (int i = 0; i <= j; ++i)
        acc += (i % 2 ? -1.0 : 1.0) * binom(j, i) * f(v + (0.5 * j - i) * h);
      return acc / std::pow(h, j);
    };
    const double h = rel_step * std::max(std::fabs(v), 1e-8);
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;  // one Richardson step
  };
}

namespace {

// Chain-rule table for G(v) = N(sqrt(v)):
// G^{(j)}(v) = sum_k c[j][k] N^{(k)}(sqrt(v)) v^{k/2 - j}.
std::vector<std::vector<double>> sqrt_chain_table(int jmax) {
  std::vector<std::vector<double>> c(jmax + 1, std::vector<double>(jmax + 1, 0.0));
  if (jmax >= 1) c[1][1] = 0.5;
  for (int j = 1; j < jmax; ++j)
    for (int k = 1; k <= j; ++k) {
      if (c[j][k] == 0.0) continue;
      c[j + 1][k + 1] += 0.5 * c[j][k];
      c[j + 1][k] += (0.5 * k - j) * c[j][k];
    }
  return c;
}

}  // namespace

HormResult local_multiplier_horm_check(const SpectralMultiplier& M, const CutoffFamily& cut,
                                       int s0, int s_inf, double v_min, double v_max,
                                       int pts_per_decade, const QuadOptions& opt) {
  if (!M.has_integrable_hat())
    throw std::invalid_argument(
        "local_multiplier_horm_check requires an integrable Fourier profile");
  const int jmax = std::max(s0, s_inf);
  if (jmax > 8) throw std::invalid_argument("local_multiplier_horm_check: order too high");
  const auto table = sqrt_chain_table(jmax);

  QuadOptions q = opt;
  if (q.abs_tol == 0.0) q.abs_tol = 2e-15 * std::max(M.hat_peak(), 1.0);

  // N^{(k)}(lambda) with the lambda-derivative taken under the integral.
  auto n_deriv = [&](double lam, int k) {
    auto f = [&](double t) {
      const double base = cut.eta_jet(t, 0).d[0] * M.hat(t);
      double osc;
      switch (k % 4) {
        case 0: osc = std::cos(lam * t); break;
        case 1: osc = -std::sin(lam * t); break;
        case 2: osc = -std::cos(lam * t); break;
        default: osc = std::sin(lam * t); break;
      }
      return base * std::pow(t, k) * osc;
    };
    return integrate(f, 0.0, 1.75, q) / kPi;
  };

  auto g_derivs = [&](double v, int j) {
    const double lam = std::sqrt(v);
    if (j == 0) return n_deriv(lam, 0);
    double acc = 0.0;
    for (int k = 1; k <= j; ++k) {
      if (table[j][k] == 0.0) continue;
      acc += table[j][k] * n_deriv(lam, k) * std::pow(v, 0.5 * k - j);
    }
    return acc;
  };

  return horm_seminorm(g_derivs, s0, s_inf, v_min, v_max, pts_per_decade);
}

// ---------------------------------------------------------------------------
// Strip class

StripClassResult strip_class_check(const SpectralMultiplier& M, const MultiplierContext& ctx,
                                   int beta, double s_max, int n_s) {
  StripClassResult out;
  const double W = ctx.W;
  for (const cdouble& z : M.singularities())
    if (std::fabs(z.imag()) <= W * (1.0 + 1e-12)) {
      out.in_class = false;
      out.C = kInf;
      out.reason = "singularity at Im z = " + std::to_string(z.imag()) +
                   " inside the strip of half-width " + std::to_string(W);
      return out;
    }

  const int N = 64;
  double worst = 0.0;
  for (int is = 0; is < n_s; ++is) {
    const double s = s_max * is / (n_s - 1.0);
    for (int corner = 0; corner < 4; ++corner) {
      if (s == 0.0 && (corner & 1)) continue;  // -s duplicates +s at 0
      const cdouble z0((corner & 1) ? -s : s, (corner & 2) ? -W : W);
      double rad = 0.1;
      for (const cdouble& zs : M.singularities())
        rad = std::min(rad, 0.5 * std::abs(z0 - zs));
      if (rad < 1e-6) {
        out.in_class = false;
        out.C = kInf;
        out.reason = "singularity grazes the strip boundary";
        return out;
      }
      std::vector<cdouble> f(N);
      for (int m = 0; m < N; ++m) {
        const double th = 2.0 * kPi * m / N;
        f[m] = M.M_alpha(z0 + rad * cdouble(std::cos(th), std::sin(th)));
        if (!std::isfinite(f[m].real()) || !std::isfinite(f[m].imag())) {
          out.in_class = false;
          out.C = kInf;
          out.reason = "non-finite value on a Cauchy circle";
          return out;
        }
      }
      double fact = 1.0, radp = 1.0;
      for (int j = 0; j <= beta; ++j) {
        cdouble acc(0.0, 0.0);
        for (int m = 0; m < N; ++m) {
          const double th = 2.0 * kPi * m * j / N;
          acc += f[m] * cdouble(std::cos(th), -std::sin(th));
        }
        const double dj = std::abs(acc) * fact / (N * radp);
        worst = std::max(worst, dj * std::pow(1.0 + s * s, 0.5 * j));
        fact *= (j + 1.0);
        radp *= rad;
      }
    }
  }
  out.in_class = std::isfinite(worst);
  out.C = worst;
  if (!out.in_class) out.reason = "boundary derivative bound diverged";
  return out;
}

// ---------------------------------------------------------------------------
// Derivative-stack envelope and weighted norms

std::vector<StackBoundConstant> dphhat_bound_check(const SpectralMultiplier& M,
                                                   const CutoffFamily& cut, int h,
                                                   const MultiplierContext& ctx,
                                                   const std::vector<std::pair<int, int>>& pq_list,
                                                   int grid_n) {
  if (h < 3) throw std::invalid_argument("dphhat_bound_check requires h >= 3");
  std::vector<StackBoundConstant> out;
  out.reserve(pq_list.size());
  for (auto [sp, sq] : pq_list) {
    const int depth = sp + sq;
    if (depth < 1 || depth > ctx.beta)
      throw std::invalid_argument("dphhat_bound_check: need 1 <= p+q <= beta");
    double C = 0.0;
    for (int i = 0; i < grid_n; ++i) {
      const double s = (h - 2.0) + 2.0 * (i + 0.5) / grid_n;
      const Jet piece = jet_mul(cut.omega_h_jet(h, s, depth), M.hat_jet(s, depth));
      const double val = std::fabs(hyperbolic_stack_value(piece, s, sp, sq));
      const double env = std::exp(-(sp + 0.5 * sq) * s - ctx.W * s) * std::pow(s, -ctx.beta);
      C = std::max(C, val / env);
    }
    out.push_back({sp, sq, C});
  }
  return out;
}

double weighted_l1_norm(const SmoothFn& piece_hat, const MultiplierContext& ctx,
                        const SphericalEvaluator& weight_ev, const QuadOptions& opt) {
  if (std::abs(weight_ev.lambda() - ctx.weight_lambda()) > 1e-12)
    throw std::invalid_argument("weighted_l1_norm: evaluator lambda != i alpha (1/p - 1/2)");
  const GroupParams& g = ctx.g;
  if (weight_ev.group().m_v != g.m_v || weight_ev.group().m_z != g.m_z)
    throw std::invalid_argument("weighted_l1_norm: evaluator group mismatch");

  QuadOptions inner;
  inner.rel_tol = 1e-9;
  auto integrand = [&](double r) {
    const double k = spherical_inverse_from_hat(g, piece_hat, r, inner);
    return weight_ev.phi(r).real() * std::fabs(k) * density_A(g, r);
  };
  const double r_hi = std::min(piece_hat.support_hi(), weight_ev.r_max());
  // Split so the top-of-support panel can never be skipped over.
  const double r1 = std::max(0.0, r_hi - 2.0);
  double total = 0.0;
  if (r1 > 0.0) total += integrate(integrand, 0.0, r1, opt);
  total += integrate(integrand, r1, r_hi, opt);
  return total;
}

}  // namespace drlab

#include "drlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "drlab/group.hpp"
#include "drlab/multiplier.hpp"
#include "drlab/profiles.hpp"
#include "drlab/quad.hpp"
#include "drlab/spherical.hpp"
#include "drlab/transforms.hpp"

namespace drlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Engine-output-only uniform in [lo, hi]; keeps sampled checks byte-stable
// across standard library implementations.
double urand(std::mt19937& eng, double lo, double hi) {
  return lo + (hi - lo) * (eng() * (1.0 / 4294967296.0));
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1.0);
  return v;
}

std::string group_label(const GroupParams& g) {
  for (const auto& name : preset_names()) {
    const GroupParams p = preset(name);
    if (p.m_v == g.m_v && p.m_z == g.m_z) return name;
  }
  return std::to_string(g.m_v) + "," + std::to_string(g.m_z);
}

GroupParams cfg_group(const SuiteConfig& cfg) {
  if (!cfg.preset.empty()) return preset(cfg.preset);
  if (cfg.mz >= 0) return GroupParams(cfg.mv, cfg.mz);
  return preset("heis");
}

bool preset_fixed(const SuiteConfig& cfg) { return !cfg.preset.empty() || cfg.mz >= 0; }

std::vector<GroupParams> preset_list(const SuiteConfig& cfg) {
  if (preset_fixed(cfg)) return {cfg_group(cfg)};
  std::vector<GroupParams> out;
  for (const auto& name : preset_names()) out.push_back(preset(name));
  return out;
}

// Sup of ratio_fn over a grid and over the nested midpoint refinement; a
// fitted "constant" is accepted when finite and stable under the refinement.
struct SupFit {
  double coarse = 0.0;
  double fine = 0.0;
  double ratio() const { return fine / std::max(coarse, 1e-300); }
  bool stable() const { return std::isfinite(fine) && ratio() < 2.0; }
};

SupFit sup_over_grids(const std::function<double(double)>& ratio_fn, double lo, double hi,
                      int n) {
  SupFit s;
  for (double x : linspace(lo, hi, n)) s.coarse = std::max(s.coarse, ratio_fn(x));
  for (double x : linspace(lo, hi, 2 * n - 1)) s.fine = std::max(s.fine, ratio_fn(x));
  return s;
}

struct Runner {
  VerificationReport& rep;
  int grid_scale;

  using Body = std::function<void(CheckRecord&)>;
  void check(const std::string& name, const std::string& anchor, const Body& body) {
    CheckRecord rec;
    rec.name = name;
    rec.anchor = anchor;
    rec.tolerance = kNaN;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.measured = kNaN;
      rec.detail = std::string("error: ") + e.what();
    }
    rec.runtime_ms = ms_since(t0);
    if (!rec.pass) rep.passed = false;
    rep.records.push_back(std::move(rec));
  }
};

double parse_family_heat_time(const SuiteConfig& cfg) {
  return cfg.heat_time > 0.0 ? cfg.heat_time : default_heat_time(cfg.h_max);
}

// ---------------------------------------------------------------------------
// geometry suite

void run_geometry(Runner& R, const SuiteConfig& cfg) {
  const int gs = cfg.grid_scale;
  for (const GroupParams& g : preset_list(cfg)) {
    const std::string tag = "[" + group_label(g) + "]";

    R.check("radius-vertical-axis" + tag, "radius-vertical-axis", [&](CheckRecord& rec) {
      double worst = 0.0;
      for (double t : linspace(-5.0, 5.0, 201 * gs))
        worst = std::max(worst,
                         std::fabs(radius(g, GroupPoint(0.0, 0.0, std::exp(t))) - std::fabs(t)));
      rec.measured = worst;
      rec.tolerance = 1e-12;
      rec.pass = worst <= rec.tolerance;
    });

    R.check("radius-exponential-pinch" + tag, "radius-exponential-pinch",
            [&](CheckRecord& rec) {
              std::mt19937 eng(cfg.seed);
              int bad = 0;
              const int n = 500 * gs;
              for (int i = 0; i < n; ++i) {
                const GroupPoint pt(urand(eng, 0.0, 40.0), urand(eng, 0.0, 40.0),
                                    std::exp(urand(eng, -6.0, 6.0)));
                const double r = radius(g, pt);
                if (!(std::exp(-r) <= pt.a * (1.0 + 1e-12) &&
                      pt.a <= std::exp(r) * (1.0 + 1e-12)))
                  ++bad;
              }
              rec.measured = bad;
              rec.tolerance = 0.0;
              rec.pass = bad == 0;
              rec.detail = std::to_string(n) + " samples";
            });

    R.check("ball-model-range" + tag, "ball-model-range", [&](CheckRecord& rec) {
      std::mt19937 eng(cfg.seed + 1);
      double worst = 0.0;
      for (int i = 0; i < 500 * gs; ++i) {
        const GroupPoint pt(urand(eng, 0.0, 40.0), urand(eng, 0.0, 40.0),
                            std::exp(urand(eng, -6.0, 6.0)));
        worst = std::max(worst, ball_image_norm(g, pt));
      }
      rec.measured = worst;
      rec.tolerance = 1.0;
      rec.pass = worst < 1.0;
    });

    R.check("ball-model-axis-formula" + tag, "ball-model-range", [&](CheckRecord& rec) {
      double worst = 0.0;
      for (double t : linspace(-6.0, 6.0, 121 * gs)) {
        const double a = std::exp(t);
        worst = std::max(worst, std::fabs(ball_image_norm(g, GroupPoint(0.0, 0.0, a)) -
                                          std::fabs(a - 1.0) / (a + 1.0)));
      }
      rec.measured = worst;
      rec.tolerance = 1e-13;
      rec.pass = worst <= rec.tolerance;
    });

    R.check("volume-density-envelope" + tag, "volume-density-upper-envelope",
            [&](CheckRecord& rec) {
              auto ratio = [&](double r) {
                return density_A(g, r) /
                       (std::pow(r / (1.0 + r), g.n - 1) * std::exp(g.Q * r));
              };
              const SupFit s = sup_over_grids(ratio, 1e-3, 30.0, 400 * gs);
              rec.measured = s.fine;
              rec.pass = s.stable();
              rec.detail = "refinement ratio " + fmt(s.ratio());
            });

    R.check("haar-modular-identity" + tag, "haar-modular-identity", [&](CheckRecord& rec) {
      std::mt19937 eng(cfg.seed + 2);
      double worst = 0.0;
      for (int i = 0; i < 200 * gs; ++i) {
        const GroupPoint pt(urand(eng, 0.0, 5.0), urand(eng, 0.0, 5.0),
                            std::exp(urand(eng, -4.0, 4.0)));
        const double lhs = std::pow(pt.a, -(g.Q + 1.0));
        const double rhs = modular_delta(g, pt) / pt.a;
        worst = std::max(worst, std::fabs(lhs - rhs) / rhs);
        // chi^{1/p-1/2} delta^{1/2} collapses to a single power of a
        const double e1 = std::pow(character_chi(pt, cfg.alpha), 1.0 / cfg.p - 0.5) *
                          std::sqrt(modular_delta(g, pt));
        const double e2 = std::pow(pt.a, cfg.alpha * (1.0 / cfg.p - 0.5) - 0.5 * g.Q);
        worst = std::max(worst, std::fabs(e1 - e2) / std::fabs(e2));
      }
      rec.measured = worst;
      rec.tolerance = 1e-12;
      rec.pass = worst <= rec.tolerance;
    });
  }

  R.check("volume-density-closed-values", "volume-density-closed-form", [&](CheckRecord& rec) {
    const GroupParams heis(2, 1), rh(2, 0);
    double worst = std::fabs(density_A(heis, 0.0));
    const double oracle = 16.0 * std::pow(std::sinh(0.5), 3) * std::cosh(0.5);
    worst = std::max(worst, std::fabs(density_A(heis, 1.0) - oracle) / oracle);
    const double oracle20 = 4.0 * std::pow(std::sinh(1.0), 2);
    worst = std::max(worst, std::fabs(density_A(rh, 2.0) - oracle20) / oracle20);
    rec.measured = worst;
    rec.tolerance = 1e-13;
    rec.pass = worst <= rec.tolerance;
  });
}

// ---------------------------------------------------------------------------
// spherical suite

void run_spherical(Runner& R, const SuiteConfig& cfg) {
  const int gs = cfg.grid_scale;
  for (const GroupParams& g : preset_list(cfg)) {
    const std::string tag = "[" + group_label(g) + "]";

    R.check("unit-value-at-origin" + tag, "spherical-normalization", [&](CheckRecord& rec) {
      double worst = 0.0;
      for (const cdouble lam : {cdouble(0.7, 0.0), cdouble(2.0, 0.0),
                                cdouble(0.0, 0.3 * g.Q), cdouble(1.3, 0.2)}) {
        SphericalEvaluator ev(g, lam, 5.0);
        worst = std::max(worst, std::abs(ev.phi(0.0) - 1.0));
      }
      rec.measured = worst;
      rec.tolerance = 0.0;
      rec.pass = worst == 0.0;
    });

    R.check("lambda-sign-symmetry" + tag, "spectral-parameter-parity", [&](CheckRecord& rec) {
      double worst = 0.0;
      for (const cdouble lam : {cdouble(1.1, 0.0), cdouble(0.4, 0.25)}) {
        SphericalEvaluator ep(g, lam, 20.0), em(g, -lam, 20.0);
        for (double r : linspace(0.0, 20.0, 41 * gs))
          worst = std::max(worst, std::abs(ep.phi(r) - em.phi(r)));
      }
      rec.measured = worst;
      rec.tolerance = 1e-12;
      rec.pass = worst <= rec.tolerance;
    });

    R.check("origin-slope-vanishes" + tag, "spherical-normalization", [&](CheckRecord& rec) {
      SphericalEvaluator ev(g, cdouble(1.0, 0.0), 5.0);
      const double s1 = std::abs(ev.phi(1e-2) - 1.0) / 1e-2;
      const double s2 = std::abs(ev.phi(1e-3) - 1.0) / 1e-3;
      rec.measured = s2 / std::max(s1, 1e-300);
      rec.tolerance = 0.2;  // quadratic touch: slope estimate drops ~10x per decade
      rec.pass = rec.measured <= rec.tolerance;
      rec.detail = "slope(1e-2)=" + fmt(s1) + " slope(1e-3)=" + fmt(s2);
    });

    R.check("constant-eigenfunction" + tag, "unit-eigenfunction", [&](CheckRecord& rec) {
      SphericalEvaluator ev(g, cdouble(0.0, 0.5 * g.Q), 25.0);
      double worst = 0.0;
      for (double r : linspace(0.0, 25.0, 126 * gs))
        worst = std::max(worst, std::abs(ev.phi(r) - 1.0));
      rec.measured = worst;
      rec.tolerance = 1e-10;
      rec.pass = worst <= rec.tolerance;
    });

    R.check("ground-state-envelope" + tag, "ground-spherical-envelope", [&](CheckRecord& rec) {
      SphericalEvaluator ev(g, cdouble(0.0, 0.0), 26.0);
      auto ratio = [&](double r) {
        return ev.phi(r).real() / ((1.0 + r) * std::exp(-0.5 * g.Q * r));
      };
      const SupFit s = sup_over_grids(ratio, 1e-3, 25.0, 300 * gs);
      const double near0 = ratio(1e-6);
      rec.measured = s.fine;
      rec.pass = s.stable() && std::fabs(near0 - 1.0) < 1e-4;
      rec.detail = "refinement ratio " + fmt(s.ratio()) + ", ratio(0+)=" + fmt(near0);
    });

    R.check("modulus-envelope" + tag, "spherical-modulus-envelope", [&](CheckRecord& rec) {
      double worst_ratio = 0.0, worst_c = 0.0;
      for (const cdouble lam :
           {cdouble(1.0, 0.0), cdouble(2.0, 0.0), cdouble(0.0, 0.3 * g.Q),
            cdouble(1.0, 0.225 * g.Q)}) {
        SphericalEvaluator ev(g, lam, 26.0);
        const double im = std::fabs(lam.imag());
        auto ratio = [&](double r) {
          return std::abs(ev.phi(r)) /
                 (std::exp(im * r) * (1.0 + r) * std::exp(-0.5 * g.Q * r));
        };
        const SupFit s = sup_over_grids(ratio, 1e-3, 25.0, 200 * gs);
        worst_c = std::max(worst_c, s.fine);
        worst_ratio = std::max(worst_ratio, s.ratio());
      }
      rec.measured = worst_c;
      rec.pass = std::isfinite(worst_c) && worst_ratio < 2.0;
      rec.detail = "worst refinement ratio " + fmt(worst_ratio);
    });

    R.check("eigen-equation-residual" + tag, "radial-eigen-residual", [&](CheckRecord& rec) {
      SphericalEvaluator ev(g, cdouble(1.0, 0.0), 12.0);
      double worst = 0.0;
      for (double r : linspace(0.5, 10.0, 39 * gs))
        worst = std::max(worst, radial_eigen_residual(ev, r));
      SphericalEvaluator ec(g, cdouble(0.0, 0.5 * g.Q), 12.0);
      double worst_c = 0.0;
      for (double r : linspace(0.5, 10.0, 20))
        worst_c = std::max(worst_c, radial_eigen_residual(ec, r));
      rec.measured = worst;
      rec.tolerance = 1e-6;
      rec.pass = worst <= rec.tolerance && worst_c <= 1e-9;
      rec.detail = "constant-case residual " + fmt(worst_c);
    });
  }

  R.check("rank-one-closed-form", "rank-one-closed-form", [&](CheckRecord& rec) {
    const GroupParams g(2, 0);
    double worst = 0.0;
    for (const cdouble lam :
         {cdouble(0.5, 0.0), cdouble(1.0, 0.0), cdouble(2.0, 0.0), cdouble(0.0, 0.3)}) {
      SphericalEvaluator ev(g, lam, 21.0);
      for (double r : linspace(0.02, 20.0, 80 * cfg.grid_scale))
        worst = std::max(worst, std::abs(ev.phi(r) - phi_real_hyp_closed_form(lam, r)));
    }
    rec.measured = worst;
    rec.tolerance = 1e-8;
    rec.pass = worst <= rec.tolerance;
  });
}

// ---------------------------------------------------------------------------
// transforms suite

void run_transforms(Runner& R, const SuiteConfig& cfg) {
  const int gs = cfg.grid_scale;
  const SmoothFn f = SmoothFn::gaussian(1.0);
  PiecewiseCheb::FitOptions fo;
  fo.seg_len = 1.0;
  fo.degree = 48;
  fo.first_degree = 64;
  fo.max_order = 4;

  std::vector<GroupParams> groups;
  if (preset_fixed(cfg))
    groups = {cfg_group(cfg)};
  else
    groups = {GroupParams(2, 0), GroupParams(2, 1)};

  for (const GroupParams& g : groups) {
    const std::string tag = "[" + group_label(g) + "]";
    const bool even_branch = g.m_z % 2 == 0;
    const double rt_tol = cfg.tol > 0.0 ? cfg.tol : (even_branch ? 1e-4 : 1e-3);

    R.check("abel-evenness" + tag, "abel-evenness", [&](CheckRecord& rec) {
      double worst = 0.0;
      for (double t : {0.3, 1.0, 2.5}) {
        const double a = abel_forward(g, f, t), b = abel_forward(g, f, -t);
        worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(a), 1e-300));
      }
      rec.measured = worst;
      rec.tolerance = 1e-6;
      rec.pass = worst <= rec.tolerance;
    });

    const SmoothFn profile = abel_forward_profile(g, f, 8.0, fo);

    R.check("abel-round-trip" + tag,
            even_branch ? "abel-inversion-even-branch" : "abel-inversion-odd-branch",
            [&](CheckRecord& rec) {
              double worst = 0.0;
              for (double r : linspace(0.0, 10.0, 101 * gs)) {
                const double back = abel_inverse(g, profile, r);
                worst = std::max(worst, std::fabs(back - f(r)));
              }
              rec.measured = worst;  // sup|f| = 1
              rec.tolerance = rt_tol;
              rec.pass = worst <= rec.tolerance;
            });

    R.check("spherical-two-route" + tag, "spherical-equals-fourier-abel",
            [&](CheckRecord& rec) {
              double worst = 0.0;
              const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-3;
              for (const cdouble lam : {cdouble(0.0, 0.0), cdouble(0.5, 0.0),
                                        cdouble(1.0, 0.0), cdouble(2.0, 0.0),
                                        cdouble(0.0, 0.3)}) {
                SphericalEvaluator ev(g, lam, 9.0);
                const TwoRouteResult tr = spherical_transform_two_route(f, ev, profile);
                worst = std::max(worst, tr.rel_dev);
              }
              rec.measured = worst;
              rec.tolerance = tol;
              rec.pass = worst <= rec.tolerance;
            });

    R.check("haar-normalization-certificate" + tag, "haar-normalization-certificate",
            [&](CheckRecord& rec) {
              SphericalEvaluator ev(g, cdouble(0.0, 0.5 * g.Q), 9.0);
              const TwoRouteResult tr = spherical_transform_two_route(f, ev, profile);
              rec.measured = tr.rel_dev;
              rec.tolerance = 1e-6;
              rec.pass = tr.rel_dev <= rec.tolerance;
              rec.detail = "direct=" + fmt(tr.direct.real()) +
                           " via-profile=" + fmt(tr.via_abel.real());
            });

    R.check("abel-linearity" + tag, "transform-linearity", [&](CheckRecord& rec) {
      const SmoothFn f2 = SmoothFn::gaussian(1.7);
      const SmoothFn mix = SmoothFn::combine(0.6, f, -1.3, f2);
      double worst = 0.0;
      for (double t : {0.2, 1.1, 3.0}) {
        const double lhs = abel_forward(g, mix, t);
        const double rhs = 0.6 * abel_forward(g, f, t) - 1.3 * abel_forward(g, f2, t);
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(std::fabs(rhs), 1e-300));
      }
      rec.measured = worst;
      rec.tolerance = 1e-10;
      rec.pass = worst <= rec.tolerance;
    });

    R.check("heat-calculus-round-trip" + tag, "functional-calculus-round-trip",
            [&](CheckRecord& rec) {
              const double time = 0.25;
              const SpectralMultiplier m = SpectralMultiplier::heat(time, 0.0);
              const SmoothFn hat = m.hat_fn(1e-60);
              const double r_hi = hat.support_hi();
              PiecewiseCheb::FitOptions ko;
              ko.seg_len = 1.0;
              ko.max_order = 0;
              QuadOptions kq;
              kq.rel_tol = 1e-10;
              auto ks = [&](double r) {
                return spherical_inverse_from_hat(g, hat, std::fabs(r), kq);
              };
              const SmoothFn k = SmoothFn::from_samples(ks, 0.0, r_hi, true, ko);
              double worst = 0.0;
              for (const double lam : {0.0, 0.5, 1.0, 2.0}) {
                SphericalEvaluator ev(g, cdouble(lam, 0.0), r_hi + 0.5);
                const cdouble back = spherical_transform(k, ev);
                const double want = std::exp(-time * lam * lam);
                worst = std::max(worst, std::abs(back - want) / want);
              }
              rec.measured = worst;
              rec.tolerance = 1e-3;
              rec.pass = worst <= rec.tolerance;
            });
  }

  R.check("line-fourier-gaussian", "line-fourier-gaussian", [&](CheckRecord& rec) {
    double worst = 0.0;
    for (double s : {0.0, 0.7, 2.0, 5.0}) {
      const cdouble got = fourier_line(f, cdouble(s, 0.0));
      const double want = std::sqrt(M_PI) * std::exp(-0.25 * s * s);
      worst = std::max(worst, std::abs(got - want) / want);
    }
    rec.measured = worst;
    rec.tolerance = 1e-10;
    rec.pass = worst <= rec.tolerance;
  });

  R.check("line-fourier-round-trip", "line-fourier-inversion", [&](CheckRecord& rec) {
    // F then F^{-1} numerically, sampled pointwise. The outer integrand
    // carries the inner quadrature's noise floor, so it gets an absolute
    // tolerance instead of a pure relative one.
    // At large s the transform is exponentially small while the integrand is
    // O(1), so the inner call needs an absolute floor, not just a relative
    // target; the outer one absorbs the inner noise accumulated over [0, 12].
    QuadOptions inner;
    inner.rel_tol = 1e-10;
    inner.abs_tol = 1e-13;
    QuadOptions outer_q;
    outer_q.rel_tol = 1e-9;
    outer_q.abs_tol = 1e-10;
    double worst = 0.0;
    for (double t0 : {0.0, 0.8, 2.2}) {
      auto outer = [&](double s) {
        const cdouble G = fourier_line(f, cdouble(s, 0.0), inner);
        return G.real() * std::cos(s * t0);
      };
      const double back = integrate(outer, 0.0, 12.0, outer_q) / M_PI;
      worst = std::max(worst, std::fabs(back - f(t0)));
    }
    rec.measured = worst;
    rec.tolerance = 1e-8;
    rec.pass = worst <= rec.tolerance;
  });

  R.check("profile-derivative-consistency", "plumbing", [&](CheckRecord& rec) {
    const GroupParams g(2, 1);
    const SmoothFn profile = abel_forward_profile(g, f, 8.0, fo);
    double worst = 0.0;
    const double h = 1e-4;
    for (double t : linspace(0.3, 7.0, 35)) {
      const double fd = (profile(t + h) - profile(t - h)) / (2.0 * h);
      worst = std::max(worst, std::fabs(profile.deriv(t, 1) - fd));
    }
    rec.measured = worst;
    rec.tolerance = 1e-6;
    rec.pass = worst <= rec.tolerance;
  });
}

// ---------------------------------------------------------------------------
// multiplier suite

void run_multiplier(Runner& R, const SuiteConfig& cfg) {
  const int gs = cfg.grid_scale;
  const CutoffFamily cut;
  const GroupParams g_odd = preset_fixed(cfg) ? cfg_group(cfg) : preset("heis");
  const GroupParams g_even(2, 0);
  const MultiplierContext ctx(g_odd, DriftParam(cfg.alpha), cfg.p, cfg.beta);

  R.check("dyadic-partition-of-unity", "dyadic-partition-of-unity", [&](CheckRecord& rec) {
    const double resid = cut.partition_residual(-50.0, 50.0, 10001 * gs);
    rec.measured = resid;
    rec.tolerance = 1e-12;
    rec.pass = resid <= rec.tolerance;
  });

  R.check("cutoff-support-plateau", "cutoff-support-plateau", [&](CheckRecord& rec) {
    double worst = 0.0;
    for (double t : linspace(-0.25, 0.25, 51)) worst = std::max(worst, std::fabs(cut.omega(t) - 1.0));
    for (double t : linspace(0.75, 3.0, 51)) worst = std::max(worst, std::fabs(cut.omega(t)));
    const SmoothFn omega5 = cut.omega_h_fn(5);
    for (double t : {0.0, 2.9, 3.05, 5.05, 7.0}) worst = std::max(worst, std::fabs(omega5(t)));
    for (double t : {4.0, -4.0}) worst = std::max(worst, std::fabs(omega5(t) - 1.0));
    const SmoothFn eta = cut.eta_fn();
    for (double t : linspace(-1.25, 1.25, 51)) worst = std::max(worst, std::fabs(eta(t) - 1.0));
    for (double t : {1.75, 2.0, -2.5}) worst = std::max(worst, std::fabs(eta(t)));
    rec.measured = worst;
    // supports and the base plateau are exact by construction; the shifted
    // sums in eta telescope up to the rounding of 1 - t
    rec.tolerance = 1e-14;
    rec.pass = worst <= rec.tolerance;
  });

  R.check("fourier-profile-consistency", "fourier-profile-consistency", [&](CheckRecord& rec) {
    double worst = 0.0;
    {  // heat: transform the multiplier profile directly
      const double time = 1.0;
      const SpectralMultiplier m = SpectralMultiplier::heat(time, cfg.alpha);
      auto jp = [time, a = cfg.alpha](double x, double* out, int order) {
        Jet q;
        q.n = order;
        q.d[0] = -time * (x * x + 0.25 * a * a);
        if (order >= 1) q.d[1] = -2.0 * time * x;
        if (order >= 2) q.d[2] = -2.0 * time;
        const Jet e = jet_exp(q);
        for (int k = 0; k <= order; ++k) out[k] = e.d[k];
      };
      const SmoothFn m_line(jp, 2, -7.0, 7.0, true, false);
      for (double s : {0.0, 1.0, 3.0}) {
        const double got = fourier_line(m_line, cdouble(s, 0.0)).real();
        worst = std::max(worst, std::fabs(got - m.hat(s)) / m.hat_peak());
      }
    }
    {  // resolvent: invert the closed-form profile back to the multiplier
      const SpectralMultiplier m = SpectralMultiplier::resolvent_exp(0.5, cfg.alpha);
      const SmoothFn hat = m.hat_fn(1e-19);
      for (double z : {0.0, 0.5, 2.0}) {
        const double got = fourier_line_inverse(hat, cdouble(z, 0.0)).real();
        const double want = m.M_alpha(cdouble(z, 0.0)).real();
        worst = std::max(worst, std::fabs(got - want) / want);
      }
    }
    rec.measured = worst;
    rec.tolerance = 1e-6;
    rec.pass = worst <= rec.tolerance;
  });

  R.check("dyadic-piece-support", "dyadic-piece-support", [&](CheckRecord& rec) {
    const SpectralMultiplier m = SpectralMultiplier::heat(1.0, cfg.alpha);
    double worst = 0.0;
    for (int h : {3, 5, 9}) {
      const SmoothFn piece = dyadic_piece(m, cut, h);
      worst = std::max(worst, std::fabs(piece(h - 1.0) - m.hat(h - 1.0)));
      for (double t : {double(h), h - 2.0, h - 2.2, 0.5, -(h - 2.1)})
        worst = std::max(worst, std::fabs(piece(t)));
    }
    // partition of the profile: eta*hat + sum of pieces telescopes back
    const SmoothFn eta = cut.eta_fn();
    for (double t : linspace(0.0, 11.0, 56 * gs)) {
      double s = eta(t) * m.hat(t);
      for (int h = 3; h <= 13; ++h) s += dyadic_piece(m, cut, h)(t);
      worst = std::max(worst, std::fabs(s - m.hat(t)) / m.hat_peak());
    }
    rec.measured = worst;
    rec.tolerance = 1e-10;
    rec.pass = worst <= rec.tolerance;
  });

  R.check("kernel-finite-support", "kernel-finite-support", [&](CheckRecord& rec) {
    const double time = default_heat_time(14.0);
    QuadOptions q;
    q.rel_tol = 1e-9;
    double worst_even = 0.0, worst_odd = 0.0;
    for (int h = 4; h <= 12; ++h) {
      const SpectralMultiplier m = SpectralMultiplier::heat(time, cfg.alpha);
      const SmoothFn piece = dyadic_piece(m, cut, h);
      for (double r : {h - 2.5, h - 2.0, double(h), h + 0.5})
        worst_even = std::max(worst_even,
                              std::fabs(spherical_inverse_from_hat(g_even, piece, r, q)));
      double peak = 0.0;
      for (double r : linspace(h - 1.9, h - 0.1, 10))
        peak = std::max(peak, std::fabs(spherical_inverse_from_hat(g_odd, piece, r, q)));
      for (double r : {double(h), h + 0.25, h + 1.0})
        worst_odd = std::max(worst_odd,
                             std::fabs(spherical_inverse_from_hat(g_odd, piece, r, q)) /
                                 std::max(peak, 1e-300));
    }
    rec.measured = std::max(worst_even, worst_odd);
    rec.tolerance = 1e-12;
    rec.pass = worst_even == 0.0 && worst_odd <= 1e-12;
    rec.detail = "even-branch residual " + fmt(worst_even) + ", odd-branch relative " +
                 fmt(worst_odd);
  });

  R.check("finite-propagation-support", "finite-propagation-support", [&](CheckRecord& rec) {
    const SpectralMultiplier m = SpectralMultiplier::heat(1.0, cfg.alpha);
    const SmoothFn lp = local_profile(m, cut);
    QuadOptions q;
    q.rel_tol = 1e-9;
    double peak = 0.0;
    for (double r : linspace(0.0, 2.2, 45 * gs))
      peak = std::max(peak, std::fabs(spherical_inverse_from_hat(g_even, lp, r, q)));
    double out = 0.0;
    for (double r : linspace(2.21, 5.0, 57 * gs))
      out = std::max(out, std::fabs(spherical_inverse_from_hat(g_even, lp, r, q)));
    rec.measured = out / peak;
    rec.tolerance = 1e-6;
    rec.pass = rec.measured <= rec.tolerance;
    rec.detail = "peak " + fmt(peak);
  });

  R.check("derivative-stack-envelope", "derivative-stack-envelope", [&](CheckRecord& rec) {
    const double c = cfg.res_c > 0.0 ? cfg.res_c : 2.0 * ctx.W;
    const SpectralMultiplier m = SpectralMultiplier::resolvent_exp(c, cfg.alpha);
    std::vector<std::pair<int, int>> pq;
    for (int sp = 0; sp <= 3; ++sp)
      for (int sq = 0; sq <= 3 - sp; ++sq)
        if (sp + sq >= 1 && sp + sq <= ctx.beta) pq.emplace_back(sp, sq);
    double worst_refine = 0.0, worst_h = 0.0;
    std::vector<double> cmax(pq.size(), 0.0), cmin(pq.size(), 1e300);
    bool finite = true;
    for (int h : {5, 10, 15}) {
      const auto coarse = dphhat_bound_check(m, cut, h, ctx, pq, 81 * gs);
      const auto fine = dphhat_bound_check(m, cut, h, ctx, pq, 162 * gs);
      for (size_t i = 0; i < pq.size(); ++i) {
        if (!std::isfinite(fine[i].C)) finite = false;
        worst_refine = std::max(worst_refine, fine[i].C / std::max(coarse[i].C, 1e-300));
        cmax[i] = std::max(cmax[i], fine[i].C);
        cmin[i] = std::min(cmin[i], fine[i].C);
      }
    }
    for (size_t i = 0; i < pq.size(); ++i)
      worst_h = std::max(worst_h, cmax[i] / std::max(cmin[i], 1e-300));
    rec.measured = worst_refine;
    rec.tolerance = 2.0;
    rec.pass = finite && worst_refine < 2.0 && worst_h < 3.0;
    rec.detail = "h-variation " + fmt(worst_h) + " (limit 3)";
  });

  R.check("global-part-weighted-decay", "global-part-weighted-decay", [&](CheckRecord& rec) {
    struct Combo {
      const char* family;
      double alpha, p;
      int beta;
    };
    const Combo combos[] = {{"heat", 1.0, 4.0, 3},
                            {"heat", 2.0, 1.5, 4},
                            {"resolvent-exp", 1.0, 4.0, 3},
                            {"resolvent-exp", 2.0, 1.5, 4}};
    double worst_gap = -1e300;
    bool all_pass = true;
    std::string lines;
    for (const Combo& co : combos) {
      SuiteConfig sub = cfg;
      sub.family = co.family;
      sub.alpha = co.alpha;
      sub.p = co.p;
      sub.beta = co.beta;
      sub.h_min = cfg.h_min;
      sub.h_max = cfg.h_max;
      sub.preset = group_label(g_odd);
      if (sub.preset.find(',') != std::string::npos) {
        sub.preset.clear();
        sub.mv = g_odd.m_v;
        sub.mz = g_odd.m_z;
      }
      const KernelSweepResult sw = kernel_sweep(sub);
      all_pass = all_pass && sw.pass;
      worst_gap = std::max(worst_gap, sw.fit.slope - sw.slope_limit);
      lines += std::string(co.family) + "(a=" + fmt(co.alpha) + ",p=" + fmt(co.p) +
               ",b=" + std::to_string(co.beta) + "): slope " + fmt(sw.fit.slope) +
               " limit " + fmt(sw.slope_limit) + "; ";
      if (!cfg.csv_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(cfg.csv_dir);
        std::ostringstream name;
        name << "weighted_l1_" << co.family << "_a" << co.alpha << "_p" << co.p << ".csv";
        std::ofstream out(fs::path(cfg.csv_dir) / name.str());
        out << "h,norm\n";
        for (const auto& [h, v] : sw.norms) out << h << "," << std::scientific << v << "\n";
      }
    }
    rec.measured = worst_gap;
    rec.tolerance = 0.0;
    rec.pass = all_pass;
    rec.detail = lines;
  });

  R.check("mixed-seminorm-oracles", "mixed-derivative-seminorm", [&](CheckRecord& rec) {
    double worst = 0.0;
    {  // constant multiplier: both seminorms are exactly 1
      auto one = [](double, int j) { return j == 0 ? 1.0 : 0.0; };
      const HormResult h = horm_seminorm(one, 2, 3);
      worst = std::max(worst, std::fabs(h.val0 - 1.0));
      worst = std::max(worst, std::fabs(h.val_inf - 1.0));
    }
    {  // e^{-v}: global sup attained by j=3 at v=3, local by j=0 as v->0
      auto expm = [](double v, int j) { return (j % 2 ? -1.0 : 1.0) * std::exp(-v); };
      const HormResult h = horm_seminorm(expm, 2, 3);
      const double oracle = std::pow(3.0 / M_E, 3);
      worst = std::max(worst, std::fabs(h.val_inf - oracle) / oracle);
      worst = std::max(worst, std::fabs(h.val0 - 1.0));
      if (h.grows_at_infinity) worst = std::max(worst, 1.0);
    }
    {  // e^{v}: the global seminorm must be flagged as still growing
      auto expp = [](double v, int) { return std::exp(std::min(v, 600.0)); };
      const HormResult h = horm_seminorm(expp, 1, 2, 1e-4, 1e4, 16);
      if (!h.grows_at_infinity) worst = std::max(worst, 1.0);
    }
    rec.measured = worst;
    rec.tolerance = 0.02;  // the log grid lands within 10^(1/32) of the true argmax
    rec.pass = worst <= rec.tolerance;
  });

  R.check("local-part-seminorm-transfer", "local-part-seminorm-transfer",
          [&](CheckRecord& rec) {
            const SpectralMultiplier m = SpectralMultiplier::heat(1.0, cfg.alpha);
            const int s_inf = (g_odd.n + 1) / 2 + 1;
            const HormResult a = local_multiplier_horm_check(m, cut, 2, s_inf);
            const HormResult b =
                local_multiplier_horm_check(m, cut, 2, s_inf, 1e-6, 1e6, 64);
            const double r0 = b.val0 / std::max(a.val0, 1e-300);
            const double ri = b.val_inf / std::max(a.val_inf, 1e-300);
            rec.measured = std::max(std::fabs(r0 - 1.0), std::fabs(ri - 1.0));
            rec.tolerance = 1.0;  // doubled grid: values change by < 2x
            rec.pass = std::isfinite(b.val0) && std::isfinite(b.val_inf) &&
                       rec.measured < rec.tolerance && !b.grows_at_infinity;
            rec.detail = "val0=" + fmt(b.val0) + " val_inf=" + fmt(b.val_inf) +
                         " s_inf=" + std::to_string(s_inf);
          });

  R.check("integrable-profile-precondition", "plumbing", [&](CheckRecord& rec) {
    SpectralMultiplier::CustomSpec spec;
    spec.M = [](double) { return 1.0; };
    spec.M_alpha = [](cdouble) { return cdouble(1.0, 0.0); };
    spec.integrable_hat = false;
    const SpectralMultiplier m = SpectralMultiplier::custom(spec);
    bool threw = false;
    try {
      local_multiplier_horm_check(m, cut, 2, 3);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    rec.measured = threw ? 0.0 : 1.0;
    rec.tolerance = 0.0;
    rec.pass = threw;
    rec.detail = "constant multiplier rejected: profile not integrable";
  });

  R.check("kernel-reconstruction", "kernel-reconstruction", [&](CheckRecord& rec) {
    const double time = 4.0;
    const SpectralMultiplier m = SpectralMultiplier::heat(time, cfg.alpha);
    const SmoothFn hat = m.hat_fn(1e-70);
    const SmoothFn lp = local_profile(m, cut);
    QuadOptions q;
    q.rel_tol = 1e-11;
    auto kernel_at = [&](const SmoothFn& prof, double r) {
      return spherical_inverse_from_hat(g_odd, prof, r, q);
    };
    const std::vector<double> grid = linspace(0.0, 12.0, 49);
    std::vector<double> full(grid.size()), partial(grid.size());
    double peak = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
      full[i] = kernel_at(hat, grid[i]);
      partial[i] = kernel_at(lp, grid[i]);
      peak = std::max(peak, std::fabs(full[i]));
    }
    // each partial sum stacks the inner quadrature noise of ~14 inversions,
    // so halving is only demanded above that noise level
    const double floor = std::max(1e-7 * peak, 1e-15);
    std::vector<std::pair<int, double>> errs;
    int h_next = 3;
    for (int H : {6, 8, 10, 12, 14}) {
      for (; h_next <= H; ++h_next) {
        const SmoothFn piece = dyadic_piece(m, cut, h_next);
        for (size_t i = 0; i < grid.size(); ++i) partial[i] += kernel_at(piece, grid[i]);
      }
      double e = 0.0;
      for (size_t i = 0; i < grid.size(); ++i)
        if (grid[i] <= H - 2.0) e = std::max(e, std::fabs(full[i] - partial[i]));
      errs.emplace_back(H, e);
    }
    double worst_ratio = 0.0;
    std::string seq;
    for (size_t i = 0; i + 1 < errs.size(); ++i) {
      const double e0 = errs[i].second, e1 = errs[i + 1].second;
      if (e1 > floor) worst_ratio = std::max(worst_ratio, e1 / std::max(e0, 1e-300));
      seq += "E(" + std::to_string(errs[i].first) + ")=" + fmt(e0) + " ";
    }
    seq += "E(" + std::to_string(errs.back().first) + ")=" + fmt(errs.back().second);
    rec.measured = worst_ratio;
    rec.tolerance = 0.5;
    rec.pass = worst_ratio <= rec.tolerance;
    rec.detail = seq + " floor=" + fmt(floor);
  });
}

// ---------------------------------------------------------------------------
// region suite

void run_region(Runner& R, const SuiteConfig& cfg) {
  const GroupParams g = preset_fixed(cfg) ? cfg_group(cfg) : preset("heis");

  R.check("parabolic-region-membership", "parabolic-region-membership",
          [&](CheckRecord& rec) {
            const MultiplierContext c24(g, DriftParam(2.0), 4.0, 3);
            double worst = 0.0;
            if (!parabolic_region_contains(1.0, 0.0, c24)) worst = 1.0;
            if (parabolic_region_contains(0.5, 0.0, c24)) worst = 1.0;
            // vertex height at y = 0 is (alpha^2/4) cos^2(phi*) = 3/4 here
            const double a2 = 4.0, s2 = 0.25;
            worst = std::max(worst, std::fabs(0.25 * a2 * (1.0 - s2) - 0.75));
            std::mt19937 eng(cfg.seed + 3);
            for (int i = 0; i < 40; ++i) {
              const double x = urand(eng, -2.0, 6.0), y = urand(eng, -4.0, 4.0);
              if (parabolic_region_contains(x, y, c24) !=
                  parabolic_region_contains(x, -y, c24))
                worst = 1.0;
            }
            rec.measured = worst;
            rec.tolerance = 0.0;
            rec.pass = worst == 0.0;
          });

  R.check("pole-strip-region-equivalence", "pole-strip-region-equivalence",
          [&](CheckRecord& rec) {
            int tested = 0, mismatches = 0;
            std::mt19937 eng(cfg.seed + 4);
            for (const auto& [al, pp] : std::vector<std::pair<double, double>>{
                     {cfg.alpha, cfg.p}, {2.0, 1.5}}) {
              const MultiplierContext c(g, DriftParam(al), pp, 3);
              for (int i = 0; i < 120; ++i) {
                const cdouble w(urand(eng, -2.0, 2.0 + al * al),
                                urand(eng, -4.0, 4.0));
                const PoleStripResult r = resolvent_pole_strip_test(w, c, 1e-6);
                if (r.indeterminate) continue;
                ++tested;
                if (!r.equivalent) ++mismatches;
              }
            }
            rec.measured = mismatches;
            rec.tolerance = 0.0;
            rec.pass = mismatches == 0 && tested >= 50;
            rec.detail = std::to_string(tested) + " samples off the boundary band";
          });

  R.check("pole-strip-examples", "pole-strip-region-equivalence", [&](CheckRecord& rec) {
    const MultiplierContext c(g, DriftParam(cfg.alpha), cfg.p, 3);
    const double a2 = cfg.alpha * cfg.alpha;
    const double vertex = 0.25 * a2 * (1.0 - std::pow(2.0 / cfg.p - 1.0, 2));
    bool ok = true;
    {  // right of the spectrum bottom: inside, poles real
      const PoleStripResult r = resolvent_pole_strip_test(cdouble(0.25 * a2 + 1.0, 0.0), c);
      ok = ok && !r.indeterminate && r.in_region && r.poles_in_strip && r.equivalent;
    }
    {  // far left: outside, poles imaginary and large
      const PoleStripResult r = resolvent_pole_strip_test(cdouble(-1.0, 0.0), c);
      ok = ok && !r.indeterminate && !r.in_region && !r.poles_in_strip && r.equivalent;
    }
    {  // just below the vertex on the symmetry axis
      const PoleStripResult r = resolvent_pole_strip_test(cdouble(vertex - 1e-3, 0.0), c);
      ok = ok && !r.indeterminate && !r.in_region && r.equivalent;
    }
    rec.measured = ok ? 0.0 : 1.0;
    rec.tolerance = 0.0;
    rec.pass = ok;
  });

  R.check("strip-class-entire", "strip-holomorphy-class", [&](CheckRecord& rec) {
    const MultiplierContext c(g, DriftParam(cfg.alpha), cfg.p, cfg.beta);
    const SpectralMultiplier m = SpectralMultiplier::heat(1.0, cfg.alpha);
    const StripClassResult coarse = strip_class_check(m, c, cfg.beta, 10.0, 41);
    const StripClassResult fine = strip_class_check(m, c, cfg.beta, 10.0, 81);
    rec.measured = fine.C;
    rec.pass = coarse.in_class && fine.in_class &&
               fine.C < 2.0 * std::max(coarse.C, 1e-300);
    rec.detail = "refinement ratio " + fmt(fine.C / std::max(coarse.C, 1e-300));
  });

  R.check("strip-class-pole-dichotomy", "strip-holomorphy-class", [&](CheckRecord& rec) {
    const MultiplierContext c(g, DriftParam(cfg.alpha), cfg.p, cfg.beta);
    bool ok = true;
    std::string seq;
    for (double frac : {0.5, 0.9, 1.5, 2.0}) {
      const double cc = frac * c.W;
      const SpectralMultiplier m = SpectralMultiplier::resolvent_exp(cc, cfg.alpha);
      const StripClassResult sc = strip_class_check(m, c, cfg.beta);
      const bool want_in = cc > c.W;
      ok = ok && (sc.in_class == want_in);
      // membership of the matching resolvent parameter in the region flips
      // exactly with the pole leaving the strip
      const PoleStripResult ps =
          resolvent_pole_strip_test(cdouble(0.25 * cfg.alpha * cfg.alpha - cc * cc, 0.0), c);
      if (!ps.indeterminate) ok = ok && (ps.poles_in_strip == !sc.in_class);
      seq += "c/W=" + fmt(frac) + (sc.in_class ? ":in " : ":out ");
    }
    rec.measured = ok ? 0.0 : 1.0;
    rec.tolerance = 0.0;
    rec.pass = ok;
    rec.detail = seq;
  });

  R.check("strip-class-constant", "strip-holomorphy-class", [&](CheckRecord& rec) {
    SpectralMultiplier::CustomSpec spec;
    spec.M = [](double) { return 0.7; };
    spec.M_alpha = [](cdouble) { return cdouble(0.7, 0.0); };
    spec.integrable_hat = false;
    spec.alpha = cfg.alpha;
    const SpectralMultiplier m = SpectralMultiplier::custom(spec);
    const MultiplierContext c(g, DriftParam(cfg.alpha), cfg.p, cfg.beta);
    const StripClassResult sc = strip_class_check(m, c, cfg.beta);
    rec.measured = std::fabs(sc.C - 0.7);
    rec.tolerance = 1e-9;
    rec.pass = sc.in_class && rec.measured <= rec.tolerance;
  });
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"geometry", "transforms", "abel", "spherical", "multiplier", "region",
          "paper-core"};
}

DecayFit decay_fit(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 5) throw std::invalid_argument("decay_fit: need at least 5 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = int(pts.size());
  for (const auto& [h, v] : pts) {
    if (!(v > 0.0)) throw std::invalid_argument("decay_fit: values must be positive");
    const double x = std::log(h), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  DecayFit f;
  f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  f.intercept = (sy - f.slope * sx) / n;
  for (const auto& [h, v] : pts)
    f.max_residual =
        std::max(f.max_residual, std::fabs(std::log(v) - f.intercept - f.slope * std::log(h)));
  return f;
}

KernelSweepResult kernel_sweep(const SuiteConfig& cfg) {
  if (cfg.h_min < 3) throw std::invalid_argument("kernel_sweep: h_min must be >= 3");
  if (cfg.h_max - cfg.h_min + 1 < 5)
    throw std::invalid_argument("kernel_sweep: need at least 5 h values");
  const GroupParams g = cfg_group(cfg);
  const MultiplierContext ctx(g, DriftParam(cfg.alpha), cfg.p, cfg.beta);
  SpectralMultiplier m = SpectralMultiplier::heat(1.0, cfg.alpha);
  if (cfg.family == "heat")
    m = SpectralMultiplier::heat(parse_family_heat_time(cfg), cfg.alpha);
  else if (cfg.family == "resolvent-exp" || cfg.family == "resolvent_exp")
    m = SpectralMultiplier::resolvent_exp(cfg.res_c > 0.0 ? cfg.res_c : 2.0 * ctx.W,
                                          cfg.alpha);
  else
    throw std::invalid_argument("kernel_sweep: unknown family '" + cfg.family + "'");

  const CutoffFamily cut;
  SphericalEvaluator weight(g, ctx.weight_lambda(), cfg.h_max + 0.5);
  QuadOptions q;
  q.rel_tol = 1e-7;

  KernelSweepResult out;
  for (int h = cfg.h_min; h <= cfg.h_max; ++h) {
    const SmoothFn piece = dyadic_piece(m, cut, h);
    out.norms.emplace_back(double(h), weighted_l1_norm(piece, ctx, weight, q));
  }
  out.fit = decay_fit(out.norms);
  out.slope_limit = 1.0 - cfg.beta + 0.3;
  bool positive = true;
  for (const auto& [h, v] : out.norms) positive = positive && v > 0.0 && std::isfinite(v);
  out.pass = positive && out.fit.slope <= out.slope_limit;
  return out;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  const std::string s = cfg.suite;
  const bool known = s == "geometry" || s == "transforms" || s == "abel" ||
                     s == "spherical" || s == "multiplier" || s == "region" ||
                     s == "paper-core";
  if (!known) throw std::invalid_argument("unknown suite '" + s + "'");
  if (!cfg.preset.empty()) preset(cfg.preset);  // validates the name
  if (cfg.mz >= 0) GroupParams(cfg.mv, cfg.mz);
  if (cfg.grid_scale < 1 || cfg.grid_scale > 8)
    throw std::invalid_argument("grid_scale must be in [1, 8]");
  MultiplierContext(cfg_group(cfg), DriftParam(cfg.alpha), cfg.p, cfg.beta);  // validates

  VerificationReport rep;
  rep.suite = s;
  rep.config = cfg;
  rep.generated_at = now_iso8601();
  const auto t0 = std::chrono::steady_clock::now();
  Runner R{rep, cfg.grid_scale};

  if (s == "geometry" || s == "paper-core") run_geometry(R, cfg);
  if (s == "spherical" || s == "paper-core") run_spherical(R, cfg);
  if (s == "transforms" || s == "abel" || s == "paper-core") run_transforms(R, cfg);
  if (s == "multiplier" || s == "paper-core") run_multiplier(R, cfg);
  if (s == "region" || s == "paper-core") run_region(R, cfg);

  rep.runtime_ms = ms_since(t0);
  if (!cfg.out_json.empty()) {
    std::ofstream out(cfg.out_json);
    if (!out) throw std::invalid_argument("cannot write report to " + cfg.out_json);
    out << rep.to_json() << "\n";
  }
  return rep;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["suite"] = suite;
  j["generated_at"] = generated_at;
  j["passed"] = passed;
  j["runtime_ms"] = runtime_ms;
  j["config"] = {{"suite", config.suite},       {"preset", config.preset},
                 {"mv", config.mv},             {"mz", config.mz},
                 {"family", config.family},     {"alpha", config.alpha},
                 {"p", config.p},               {"beta", config.beta},
                 {"h_min", config.h_min},       {"h_max", config.h_max},
                 {"heat_time", config.heat_time}, {"res_c", config.res_c},
                 {"tol", config.tol},           {"grid_scale", config.grid_scale},
                 {"seed", config.seed}};
  j["records"] = nlohmann::json::array();
  for (const CheckRecord& r : records) {
    nlohmann::json jr;
    jr["name"] = r.name;
    jr["anchor"] = r.anchor;
    jr["pass"] = r.pass;
    if (std::isfinite(r.measured)) jr["measured"] = r.measured;
    if (std::isfinite(r.tolerance)) jr["tolerance"] = r.tolerance;
    jr["detail"] = r.detail;
    jr["runtime_ms"] = r.runtime_ms;
    j["records"].push_back(jr);
  }
  return j.dump(indent);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << (passed ? "PASS" : "FAIL") << " ("
      << records.size() << " checks, " << fmt(runtime_ms / 1000.0) << " s)\n";
  for (const CheckRecord& r : records) {
    out << (r.pass ? "  PASS  " : "  FAIL  ") << r.name;
    if (std::isfinite(r.measured)) {
      out << "  measured=" << fmt(r.measured);
      if (std::isfinite(r.tolerance)) out << " limit=" << fmt(r.tolerance);
    }
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace drlab

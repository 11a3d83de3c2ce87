#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "drlab/group.hpp"
#include "drlab/jets.hpp"
#include "drlab/profiles.hpp"
#include "drlab/quad.hpp"
#include "drlab/spherical.hpp"

namespace drlab {

/// Exponent/drift context for the multiplier layer: the strip half-width
/// W = |alpha| |1/p - 1/2|, the aperture angle phi_star = arcsin|2/p - 1|,
/// and the derivative order beta used by the admissibility checkers.
struct MultiplierContext {
  GroupParams g;
  DriftParam alpha;
  double p;
  int beta;
  double W;
  double phi_star;

  MultiplierContext(const GroupParams& g_, const DriftParam& alpha_, double p_, int beta_);

  /// beta > max(2, n/2); checkers still run below the threshold, callers warn.
  bool meets_regularity_threshold() const;
  /// Spectral parameter of the weight in the weighted L1 norm.
  cdouble weight_lambda() const { return cdouble(0.0, alpha.alpha * (1.0 / p - 0.5)); }
};

/// Open parabolic region x > y^2/(alpha^2 sin^2 phi*) + (alpha^2/4) cos^2 phi*.
bool parabolic_region_contains(double x, double y, const MultiplierContext& ctx);

struct PoleStripResult {
  bool indeterminate = false;  // w in the excluded boundary band
  bool in_region = false;
  bool poles_in_strip = false;  // both poles of z -> (w - z^2 - alpha^2/4)^{-1}
  bool equivalent = false;      // in_region == poles_in_strip
  cdouble pole;                 // principal root; the other is its negative
};

/// For M(z) = (w - z)^{-1} the shifted multiplier has poles at
/// z = +- sqrt(w - alpha^2/4); membership of w in the parabolic region is
/// equivalent to both poles lying in the open strip |Im z| < W.
PoleStripResult resolvent_pole_strip_test(cdouble w, const MultiplierContext& ctx,
                                          double boundary_band = 1e-8);

/// Plateau cutoff built as 1_[-1/2,1/2] * rho with rho a normalized smooth
/// bump of radius 1/4. Consequences, exact by construction: supp omega
/// = [-3/4, 3/4]; omega = 1 on [-1/4, 1/4]; omega(t) + omega(1 - t) = 1 on
/// the transition band, so the integer translates partition unity to
/// rounding. Transition values integrate the bump tail directly, so they
/// decay with the true C-infinity-flat tail instead of sitting on a fit's
/// absolute noise floor; derivatives of every order are closed-form bump jets.
class CutoffFamily {
 public:
  CutoffFamily();

  double omega(double t) const;
  Jet omega_jet(double t, int order) const;
  /// omega_h(t) = omega(t - h + 1) + omega(t + h - 1), h >= 2.
  Jet omega_h_jet(int h, double t, int order) const;
  /// eta = omega + omega_2; identically 1 on [-5/4, 5/4], supported in [-7/4, 7/4].
  Jet eta_jet(double t, int order) const;

  SmoothFn omega_fn() const;
  SmoothFn omega_h_fn(int h) const;
  SmoothFn eta_fn() const;

  /// max over an n-point grid on [lo, hi] of |sum_h omega(t - h) - 1|.
  double partition_residual(double lo, double hi, int n) const;

  /// Normalized bump jets (zero outside |x| < 1/4); order <= kMaxJet - 1.
  Jet bump_jet(double x, int order) const;

 private:
  double bump_norm_ = 1.0;
  double tail_mass(double x) const;  // normalized bump mass on [x, 1/4]
};

/// A spectral multiplier M of the drift Laplacian together with its shifted
/// form M_alpha(z) = M(z^2 + alpha^2/4), the analytic extension of M_alpha,
/// and the even Fourier profile hat(t) of M_alpha with closed-form jets.
class SpectralMultiplier {
 public:
  enum class Family { heat, resolvent_exp, custom };

  struct CustomSpec {
    std::function<double(double)> M;              // on [alpha^2/4, inf)
    std::function<cdouble(cdouble)> M_alpha;      // analytic extension
    std::function<double(double)> hat;            // may be empty
    std::function<Jet(double, int)> hat_jet;      // may be empty
    std::vector<cdouble> singularities;
    bool integrable_hat = false;
    double hat_support_hi = 0.0;
    double alpha = 1.0;
  };

  /// M(x) = e^{-time x}: hat(s) = e^{-time alpha^2/4} sqrt(pi/time) e^{-s^2/(4 time)}.
  static SpectralMultiplier heat(double time, double alpha);
  /// M_alpha(z) = (z^2 + c^2)^{-1}: hat(t) = (pi/c) e^{-c|t|}; poles at +-ic.
  static SpectralMultiplier resolvent_exp(double c, double alpha);
  static SpectralMultiplier custom(CustomSpec spec);

  Family family() const { return family_; }
  double alpha() const { return alpha_; }
  /// Family parameter: heat time, or the resolvent c.
  double param() const { return param_; }

  double M(double x) const;
  cdouble M_alpha(cdouble z) const;
  double hat(double t) const;
  /// Derivatives of hat at t; for the resolvent family the |t| kink makes
  /// these one-sided at t = 0 (even-extension convention).
  Jet hat_jet(double t, int order) const;
  const std::vector<cdouble>& singularities() const { return singularities_; }
  bool has_integrable_hat() const { return integrable_hat_; }
  /// |t| beyond which hat is below floor_rel times its peak.
  double hat_support_hi(double floor_rel = 1e-70) const;
  double hat_peak() const;
  /// Even SmoothFn wrapping hat with the support hint above.
  SmoothFn hat_fn(double floor_rel = 1e-70) const;

 private:
  SpectralMultiplier() = default;
  Family family_ = Family::custom;
  double alpha_ = 1.0;
  double param_ = 0.0;
  std::vector<cdouble> singularities_;
  bool integrable_hat_ = false;
  CustomSpec spec_;
};

/// Heat time making hat(h_max) about 1e-50 of peak: h_max^2 / (4 ln 1e50).
double default_heat_time(double h_max);

/// Abel-side dyadic piece hat_P_h = omega_h * hat; even, exactly zero outside
/// |t| in (h - 2, h), closed-form jets. Requires h >= 3.
SmoothFn dyadic_piece(const SpectralMultiplier& M, const CutoffFamily& cut, int h);

/// Abel-side profile eta * hat of the local kernel part.
SmoothFn local_profile(const SpectralMultiplier& M, const CutoffFamily& cut);

struct HormResult {
  double val0 = 0.0;      // max_{j<=s0} sup_{0<v<1} |v^j D^j M(v)|
  double val_inf = 0.0;   // max_{j<=s_inf} sup_{v>=1} |v^j D^j M(v)|
  bool grows_at_zero = false;
  bool grows_at_infinity = false;  // sup still climbing at the grid edge
};

/// Mixed local/global derivative seminorms on a log grid; derivs(v, j) must
/// return the j-th derivative of M at v.
HormResult horm_seminorm(const std::function<double(double, int)>& derivs, int s0, int s_inf,
                         double v_min = 1e-6, double v_max = 1e6, int pts_per_decade = 32);

/// Central finite differences for value-only multipliers, order <= 6.
std::function<double(double, int)> fd_derivs(std::function<double(double)> f,
                                             double rel_step = 1e-2);

/// The local-part transfer hypothesis: forms N(lambda) as the inverse line
/// Fourier transform of eta * hat, substitutes lambda = sqrt(v), and returns
/// the Horm seminorms of v -> N(sqrt(v)). Derivatives are taken under the
/// integral sign (exact), the sqrt substitution by the chain-rule table.
HormResult local_multiplier_horm_check(const SpectralMultiplier& M, const CutoffFamily& cut,
                                       int s0, int s_inf, double v_min = 1e-6,
                                       double v_max = 1e6, int pts_per_decade = 32,
                                       const QuadOptions& opt = {});

struct StripClassResult {
  bool in_class = false;
  double C = 0.0;  // sup over the grid of |D^j M_alpha(s +- iW)| (1 + s^2)^{j/2}
  std::string reason;
};

/// Bounded-holomorphy check on the strip |Im z| < W with boundary-derivative
/// decay up to order beta; derivatives by Cauchy circles of radius
/// min(0.1, half the distance to the nearest singularity).
StripClassResult strip_class_check(const SpectralMultiplier& M, const MultiplierContext& ctx,
                                   int beta, double s_max = 10.0, int n_s = 41);

struct StackBoundConstant {
  int p = 0;  // full-argument factors -(1/sinh s) d/ds
  int q = 0;  // half-argument factors -(1/sinh(s/2)) d/ds
  double C = 0.0;
};

/// Fitted constants for the derivative-stack envelope on s in (h-2, h):
/// |stack hat_P_h(s)| <= C e^{-(p + q/2) s} s^{-beta} e^{-W s}.
std::vector<StackBoundConstant> dphhat_bound_check(const SpectralMultiplier& M,
                                                   const CutoffFamily& cut, int h,
                                                   const MultiplierContext& ctx,
                                                   const std::vector<std::pair<int, int>>& pq_list,
                                                   int grid_n = 81);

/// Weighted L1 norm of the kernel with Abel-side profile piece_hat:
/// integral of phi_{i alpha(1/p - 1/2)}(r) |k(r)| A(r) dr. weight_ev must be
/// built at ctx.weight_lambda() on ctx.g.
double weighted_l1_norm(const SmoothFn& piece_hat, const MultiplierContext& ctx,
                        const SphericalEvaluator& weight_ev, const QuadOptions& opt = {});

}  // namespace drlab

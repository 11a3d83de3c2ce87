#pragma once

#include <array>
#include <complex>
#include <vector>

#include "drlab/group.hpp"

namespace drlab {

using cdouble = std::complex<double>;

/// Radial eigenfunction phi_lambda of the (positive) Laplace-Beltrami
/// operator, eigenvalue lambda^2 + Q^2/4, normalized phi_lambda(0) = 1.
///
/// Solved once per (group, lambda^2) in Liouville normal form w = sqrt(A) u,
/// w'' = (V - lambda^2 - Q^2/4) w with the bounded-at-infinity potential
/// V = Q^2/4 + m(m-2)/(16 sinh^2(r/2)) + k(2-k)/(16 cosh^2(r/2)),
/// m = m_v + m_z, k = m_z. Integration starts at r0 = 1e-3 from a degree-6
/// Taylor expansion of u (coefficients generated by the ODE recurrence);
/// adaptive Dormand-Prince 5(4) steps are cached and queries interpolate
/// with a two-point quintic Hermite using w'' = q w at the nodes.
///
/// Only lambda^2 enters, so phi_{-lambda} == phi_lambda exactly. Supported
/// range |Im lambda| <= Q/2 + 5.
class SphericalEvaluator {
 public:
  SphericalEvaluator(const GroupParams& g, cdouble lambda, double r_max = 30.0,
                     double rel_tol = 1e-13);

  cdouble phi(double r) const;
  double r_max() const { return r_max_; }
  cdouble lambda() const { return lambda_; }
  cdouble eigenvalue() const { return E_; }
  const GroupParams& group() const { return g_; }
  int steps() const { return int(nodes_.size()) - 1; }

 private:
  struct Node {
    double r;
    cdouble w, wp, q;  // q = (V - E) so that w'' = q w
  };

  GroupParams g_;
  cdouble lambda_, E_;
  double r_max_;
  double r0_ = 1e-3;
  std::array<cdouble, 4> taylor_{};  // u = sum_j taylor_[j] r^{2j}
  std::vector<Node> nodes_;

  cdouble ode_q(double r) const;
  cdouble u_series(double r) const;
  cdouble u_series_deriv(double r) const;
  void build_taylor();
  void integrate(double rel_tol);
};

/// |u'' + (A'/A) u' + E u| at r for u = phi, via fourth-order central
/// differences on the cached solution; independent of the solver's own
/// derivative bookkeeping.
double radial_eigen_residual(const SphericalEvaluator& ev, double r, double step = 0.02);

/// Closed form for the (2,0) oracle case: sin(lambda r) / (2 lambda sinh(r/2)).
cdouble phi_real_hyp_closed_form(cdouble lambda, double r);

}  // namespace drlab

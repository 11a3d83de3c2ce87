#pragma once

#include <string>
#include <vector>

namespace drlab {

/// Structure constants of a Damek-Ricci space S = N A, where N is an H-type
/// group whose Lie algebra splits as v + z with dim v = m_v, dim z = m_z.
/// m_z = 0 degenerates to the real hyperbolic space H^{m_v+1} and serves as
/// the closed-form oracle case.
struct GroupParams {
  int m_v;    // dimension of the first layer; positive and even
  int m_z;    // dimension of the center; nonnegative
  double Q;   // half the homogeneous dimension of N: (m_v + 2*m_z) / 2
  int n;      // dimension of S: m_v + m_z + 1

  GroupParams(int mv, int mz);
};

/// Named parameter sets: "real-hyp" (2,0), "heis" (2,1), "quat" (4,3).
GroupParams preset(const std::string& name);
std::vector<std::string> preset_names();

/// A point of S in radial coordinates (|X|, |Z|, a). Only the norms of the
/// v- and z-components enter every radial quantity computed here.
struct GroupPoint {
  double x_norm;  // |X| >= 0
  double z_norm;  // |Z| >= 0
  double a;       // a > 0

  GroupPoint(double xn, double zn, double a_);
};

/// Drift direction strength for the shifted operator L_alpha = L_0 - alpha X_0.
struct DriftParam {
  double alpha;  // nonzero

  explicit DriftParam(double a);
};

/// Volume density A(r) = 2^{m_v+2m_z} sinh^{m_v+m_z}(r/2) cosh^{m_z}(r/2),
/// normalized so that the radial part of the left Haar measure is A(r) dr.
double density_A(const GroupParams& g, double r);

/// log A(r), usable far beyond the overflow range of density_A (r ~ 700/Q).
double log_density_A(const GroupParams& g, double r);

/// d/dr log A(r) = (m_v+m_z)/2 * coth(r/2) + m_z/2 * tanh(r/2), r > 0.
double log_density_A_deriv(const GroupParams& g, double r);

/// Euclidean norm of the Cayley-type model map F(X,Z,a) into the unit ball.
/// Evaluated through the exact identity 1 - |F|^2 = 4a / D with
/// D = (1+a+|X|^2/4)^2 + |Z|^2, which keeps the value in [0,1) and avoids
/// cancellation near the identity.
double ball_image_norm(const GroupParams& g, const GroupPoint& pt);

/// Geodesic distance from the identity, r = log((1+|F|)/(1-|F|)).
/// Satisfies r(0,0,a) = |log a| and e^{-r} <= a <= e^{r}.
double radius(const GroupParams& g, const GroupPoint& pt);

/// Modular function delta(X,Z,a) = a^{-Q} (ratio of left to right Haar).
double modular_delta(const GroupParams& g, const GroupPoint& pt);

/// Multiplicative character chi_alpha(X,Z,a) = a^alpha.
double character_chi(const GroupPoint& pt, double alpha);

}  // namespace drlab

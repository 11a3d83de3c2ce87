#include "drlab/group.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace drlab {

GroupParams::GroupParams(int mv, int mz) : m_v(mv), m_z(mz) {
  if (mv <= 0 || mv % 2 != 0)
    throw std::invalid_argument("GroupParams: m_v must be positive and even");
  if (mz < 0) throw std::invalid_argument("GroupParams: m_z must be nonnegative");
  Q = 0.5 * (m_v + 2 * m_z);
  n = m_v + m_z + 1;
}

GroupParams preset(const std::string& name) {
  if (name == "real-hyp") return GroupParams(2, 0);
  if (name == "heis") return GroupParams(2, 1);
  if (name == "quat") return GroupParams(4, 3);
  throw std::invalid_argument("preset: unknown name '" + name +
                              "' (expected real-hyp, heis, quat)");
}

std::vector<std::string> preset_names() { return {"real-hyp", "heis", "quat"}; }

GroupPoint::GroupPoint(double xn, double zn, double a_) : x_norm(xn), z_norm(zn), a(a_) {
  if (!(xn >= 0.0)) throw std::invalid_argument("GroupPoint: |X| must be >= 0");
  if (!(zn >= 0.0)) throw std::invalid_argument("GroupPoint: |Z| must be >= 0");
  if (!(a_ > 0.0)) throw std::invalid_argument("GroupPoint: a must be > 0");
}

DriftParam::DriftParam(double a) : alpha(a) {
  if (a == 0.0) throw std::invalid_argument("DriftParam: alpha must be nonzero");
}

double density_A(const GroupParams& g, double r) {
  if (r < 0.0) throw std::invalid_argument("density_A: r must be >= 0");
  const int m = g.m_v + g.m_z;
  return std::exp2(double(g.m_v + 2 * g.m_z)) * std::pow(std::sinh(0.5 * r), m) *
         std::pow(std::cosh(0.5 * r), g.m_z);
}

namespace {
// log(sinh x) and log(cosh x) without overflow for large x.
double log_sinh(double x) { return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0); }
double log_cosh(double x) { return x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0); }
}  // namespace

double log_density_A(const GroupParams& g, double r) {
  if (r < 0.0) throw std::invalid_argument("log_density_A: r must be >= 0");
  if (r == 0.0) return -std::numeric_limits<double>::infinity();
  const int m = g.m_v + g.m_z;
  return (g.m_v + 2 * g.m_z) * std::log(2.0) + m * log_sinh(0.5 * r) +
         g.m_z * log_cosh(0.5 * r);
}

double log_density_A_deriv(const GroupParams& g, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("log_density_A_deriv: r must be > 0");
  return 0.5 * (g.m_v + g.m_z) / std::tanh(0.5 * r) + 0.5 * g.m_z * std::tanh(0.5 * r);
}

double ball_image_norm(const GroupParams&, const GroupPoint& pt) {
  const double q = 0.25 * pt.x_norm * pt.x_norm;
  const double z2 = pt.z_norm * pt.z_norm;
  const double c = 1.0 + pt.a + q;
  const double D = c * c + z2;
  // D - 4a expanded exactly; every term is nonnegative.
  const double Dm4a = (1.0 - pt.a) * (1.0 - pt.a) + 2.0 * q * (1.0 + pt.a) + q * q + z2;
  return std::sqrt(Dm4a / D);
}

double radius(const GroupParams& g, const GroupPoint& pt) {
  const double q = 0.25 * pt.x_norm * pt.x_norm;
  const double z2 = pt.z_norm * pt.z_norm;
  const double c = 1.0 + pt.a + q;
  const double D = c * c + z2;
  const double F = ball_image_norm(g, pt);
  // (1+F)/(1-F) = (1+F)^2 D / (4a), stable when F is close to 1.
  return 2.0 * std::log1p(F) + std::log(D) - std::log(4.0 * pt.a);
}

double modular_delta(const GroupParams& g, const GroupPoint& pt) {
  return std::pow(pt.a, -g.Q);
}

double character_chi(const GroupPoint& pt, double alpha) {
  return std::pow(pt.a, alpha);
}

}  // namespace drlab

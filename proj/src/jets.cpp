#include "drlab/jets.hpp"

#include <cmath>
#include <stdexcept>

namespace drlab {

namespace {
struct BinomTable {
  double c[kMaxJet + 1][kMaxJet + 1]{};
  BinomTable() {
    for (int n = 0; n <= kMaxJet; ++n) {
      c[n][0] = c[n][n] = 1.0;
      for (int k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
  }
};
const BinomTable kBinom;

int checked_order(int n) {
  if (n < 0 || n > kMaxJet) throw std::invalid_argument("jet order out of range");
  return n;
}
}  // namespace

double binom(int n, int k) { return kBinom.c[n][k]; }

Jet Jet::constant(double v, int order) {
  Jet j;
  j.n = checked_order(order);
  j.d[0] = v;
  return j;
}

Jet Jet::variable(double v, int order) {
  Jet j;
  j.n = checked_order(order);
  j.d[0] = v;
  if (order >= 1) j.d[1] = 1.0;
  return j;
}

Jet jet_add(const Jet& a, const Jet& b) {
  Jet r;
  r.n = std::min(a.n, b.n);
  for (int i = 0; i <= r.n; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

Jet jet_sub(const Jet& a, const Jet& b) {
  Jet r;
  r.n = std::min(a.n, b.n);
  for (int i = 0; i <= r.n; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

Jet jet_scale(const Jet& a, double s) {
  Jet r = a;
  for (int i = 0; i <= r.n; ++i) r.d[i] *= s;
  return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  Jet r;
  r.n = std::min(a.n, b.n);
  for (int k = 0; k <= r.n; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += binom(k, i) * a.d[i] * b.d[k - i];
    r.d[k] = acc;
  }
  return r;
}

Jet jet_reciprocal(const Jet& u) {
  if (u.d[0] == 0.0) throw std::domain_error("jet_reciprocal: value is zero");
  Jet r;
  r.n = u.n;
  r.d[0] = 1.0 / u.d[0];
  for (int k = 1; k <= r.n; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += binom(k, i) * u.d[i] * r.d[k - i];
    r.d[k] = -acc / u.d[0];
  }
  return r;
}

Jet jet_exp(const Jet& g) {
  Jet r;
  r.n = g.n;
  r.d[0] = std::exp(g.d[0]);
  for (int k = 1; k <= r.n; ++k) {
    double acc = 0.0;
    for (int i = 0; i < k; ++i) acc += binom(k - 1, i) * r.d[i] * g.d[k - i];
    r.d[k] = acc;
  }
  return r;
}

Jet jet_sinh(double x, double c, int order) {
  Jet r;
  r.n = checked_order(order);
  const double sh = std::sinh(c * x), ch = std::cosh(c * x);
  double p = 1.0;
  for (int k = 0; k <= order; ++k) {
    r.d[k] = p * (k % 2 ? ch : sh);
    p *= c;
  }
  return r;
}

Jet jet_cosh(double x, double c, int order) {
  Jet r;
  r.n = checked_order(order);
  const double sh = std::sinh(c * x), ch = std::cosh(c * x);
  double p = 1.0;
  for (int k = 0; k <= order; ++k) {
    r.d[k] = p * (k % 2 ? sh : ch);
    p *= c;
  }
  return r;
}

Jet jet_csch(double x, double c, int order) {
  if (x == 0.0) throw std::domain_error("jet_csch: pole at 0");
  return jet_reciprocal(jet_sinh(x, c, order));
}

Jet apply_inv_sinh_derivative(const Jet& F, double s, double c) {
  if (F.n < 1) throw std::invalid_argument("apply_inv_sinh_derivative: jet too short");
  const Jet csch = jet_csch(s, c, F.n - 1);
  Jet r;
  r.n = F.n - 1;
  for (int k = 0; k <= r.n; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += binom(k, i) * csch.d[i] * F.d[k - i + 1];
    r.d[k] = -acc;
  }
  return r;
}

double hyperbolic_stack_value(Jet F, double s, int p, int q) {
  if (F.n < p + q)
    throw std::invalid_argument("hyperbolic_stack_value: jet order below p+q");
  for (int i = 0; i < q; ++i) F = apply_inv_sinh_derivative(F, s, 0.5);
  for (int i = 0; i < p; ++i) F = apply_inv_sinh_derivative(F, s, 1.0);
  return F.d[0];
}

}  // namespace drlab

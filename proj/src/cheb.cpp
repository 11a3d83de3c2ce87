#include "drlab/cheb.hpp"

#include <cmath>
#include <stdexcept>

namespace drlab {

ChebSeries ChebSeries::fit(const std::function<double(double)>& f, double a, double b,
                           int degree) {
  if (!(b > a) || degree < 2) throw std::invalid_argument("ChebSeries::fit: bad interval/degree");
  const int N = degree;
  std::vector<double> fv(N + 1);
  for (int k = 0; k <= N; ++k) {
    const double xk = std::cos(M_PI * k / N);  // extrema points, descending
    fv[k] = f(0.5 * (a + b) + 0.5 * (b - a) * xk);
  }
  ChebSeries s;
  s.a_ = a;
  s.b_ = b;
  s.c_.assign(N + 1, 0.0);
  for (int j = 0; j <= N; ++j) {
    double acc = 0.5 * (fv[0] + (j % 2 ? -1.0 : 1.0) * fv[N]);
    for (int k = 1; k < N; ++k) acc += fv[k] * std::cos(M_PI * j * k / N);
    acc *= 2.0 / N;
    if (j == 0 || j == N) acc *= 0.5;
    s.c_[j] = acc;
  }
  return s;
}

double ChebSeries::eval(double x) const {
  const double t = (2.0 * x - (a_ + b_)) / (b_ - a_);
  double b1 = 0.0, b2 = 0.0;
  for (int j = int(c_.size()) - 1; j >= 1; --j) {
    const double b0 = 2.0 * t * b1 - b2 + c_[j];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c_[0];
}

ChebSeries ChebSeries::derivative() const {
  const int n = int(c_.size()) - 1;
  ChebSeries d;
  d.a_ = a_;
  d.b_ = b_;
  d.c_.assign(std::max(n, 1), 0.0);
  const double scale = 2.0 / (b_ - a_);
  double dj1 = 0.0, dj2 = 0.0;  // d_{j+1}, d_{j+2}
  for (int j = n - 1; j >= 0; --j) {
    const double dj = dj2 + 2.0 * (j + 1) * c_[j + 1];
    d.c_[j] = dj;
    dj2 = dj1;
    dj1 = dj;
  }
  // The recurrence above uses d_{j+2}; shift bookkeeping handled by dj2/dj1.
  d.c_[0] *= 0.5;
  for (auto& v : d.c_) v *= scale;
  return d;
}

double ChebSeries::tail_ratio() const {
  if (c_.size() < 4) return 0.0;
  double mx = 0.0;
  for (double v : c_) mx = std::max(mx, std::fabs(v));
  if (mx == 0.0) return 0.0;
  const double tail = std::max(std::fabs(c_[c_.size() - 1]), std::fabs(c_[c_.size() - 2]));
  return tail / mx;
}

PiecewiseCheb PiecewiseCheb::fit(const std::function<double(double)>& f, double lo, double hi,
                                 bool even, const FitOptions& opt) {
  if (even && lo != 0.0)
    throw std::invalid_argument("PiecewiseCheb::fit: even fit expects lo = 0");
  if (!(hi > lo)) throw std::invalid_argument("PiecewiseCheb::fit: empty interval");
  PiecewiseCheb pc;
  pc.lo_ = lo;
  pc.hi_ = hi;
  pc.even_ = even;
  pc.max_order_ = opt.max_order;

  std::vector<ChebSeries> base;
  if (even) {
    const double l0 = std::min(opt.seg_len, hi);
    base.push_back(ChebSeries::fit(f, -l0, l0, opt.first_degree));
    pc.breaks_ = {-l0, l0};
    double x = l0;
    while (x < hi) {
      const double nx = std::min(x + opt.seg_len, hi);
      base.push_back(ChebSeries::fit(f, x, nx, opt.degree));
      pc.breaks_.push_back(nx);
      x = nx;
    }
  } else {
    pc.breaks_ = {lo};
    double x = lo;
    while (x < hi) {
      const double nx = std::min(x + opt.seg_len, hi);
      base.push_back(ChebSeries::fit(f, x, nx, opt.degree));
      pc.breaks_.push_back(nx);
      x = nx;
    }
  }
  for (const auto& s : base) pc.noise_ = std::max(pc.noise_, s.tail_ratio());

  pc.ders_.resize(opt.max_order + 1);
  pc.ders_[0] = std::move(base);
  for (int k = 1; k <= opt.max_order; ++k) {
    pc.ders_[k].reserve(pc.ders_[0].size());
    for (const auto& s : pc.ders_[k - 1]) pc.ders_[k].push_back(s.derivative());
  }
  return pc;
}

int PiecewiseCheb::segment_of(double x) const {
  // breaks_ ascending; segment i covers [breaks_[i], breaks_[i+1]].
  int i = 0;
  const int ns = int(ders_[0].size());
  while (i + 1 < ns && x > breaks_[i + 1]) ++i;
  return i;
}

double PiecewiseCheb::eval(double x, int order) const {
  if (order > max_order_)
    throw std::out_of_range("PiecewiseCheb::eval: derivative order exceeds cache");
  double sign = 1.0;
  if (even_ && x < 0.0) {
    x = -x;
    if (order % 2) sign = -1.0;
  }
  if (x > hi_ * (1.0 + 1e-12) + 1e-12)
    throw std::out_of_range("PiecewiseCheb::eval: x beyond fitted range");
  x = std::min(x, hi_);
  return sign * ders_[order][segment_of(x)].eval(x);
}

void PiecewiseCheb::jet(double x, double* out, int order) const {
  for (int k = 0; k <= order; ++k) out[k] = eval(x, k);
}

}  // namespace drlab

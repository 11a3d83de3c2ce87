#pragma once

#include <functional>
#include <vector>

namespace drlab {

/// Chebyshev interpolant sum c_j T_j on [a,b], built from samples at the
/// N+1 extrema points. Differentiation is exact on the series.
class ChebSeries {
 public:
  ChebSeries() = default;
  static ChebSeries fit(const std::function<double(double)>& f, double a, double b, int degree);

  double eval(double x) const;  // Clenshaw
  ChebSeries derivative() const;
  double a() const { return a_; }
  double b() const { return b_; }
  /// max |c_j| over the trailing two coefficients, relative to the largest;
  /// a resolution diagnostic for analytic inputs.
  double tail_ratio() const;

 private:
  std::vector<double> c_;
  double a_ = -1.0, b_ = 1.0;
};

/// Piecewise Chebyshev model of a smooth function on [lo, hi] with cached
/// derivative series up to max_order. With even = true the model represents
/// an even function sampled on x >= 0; the first segment straddles 0 so
/// derivatives stay accurate there, and queries use |x| with sign flips on
/// odd orders.
class PiecewiseCheb {
 public:
  struct FitOptions {
    double seg_len = 2.0;
    int degree = 48;
    int first_degree = 64;  // for the symmetric first segment of even fits
    int max_order = 4;
  };

  PiecewiseCheb() = default;
  static PiecewiseCheb fit(const std::function<double(double)>& f, double lo, double hi,
                           bool even, const FitOptions& opt);
  static PiecewiseCheb fit(const std::function<double(double)>& f, double lo, double hi,
                           bool even) {
    return fit(f, lo, hi, even, FitOptions());
  }

  double eval(double x, int order = 0) const;
  void jet(double x, double* out, int order) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool even() const { return even_; }
  int max_order() const { return max_order_; }
  double fit_noise() const { return noise_; }

 private:
  // ders_[k][s] is the k-th derivative series on segment s.
  std::vector<std::vector<ChebSeries>> ders_;
  std::vector<double> breaks_;
  double lo_ = 0.0, hi_ = 0.0, noise_ = 0.0;
  bool even_ = false;
  int max_order_ = 0;
  int segment_of(double x) const;
};

}  // namespace drlab

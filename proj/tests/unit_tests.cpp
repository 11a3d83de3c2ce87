#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include <json.hpp>

#include "drlab/cheb.hpp"
#include "drlab/group.hpp"
#include "drlab/harness.hpp"
#include "drlab/jets.hpp"
#include "drlab/multiplier.hpp"
#include "drlab/profiles.hpp"
#include "drlab/quad.hpp"
#include "drlab/spherical.hpp"
#include "drlab/transforms.hpp"

using namespace drlab;

TEST_CASE("quadrature basics") {
  QuadOptions q;
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, q) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, q) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double) { return 0.0; }, 0.0, 5.0, q) == 0.0);
  // inverted bounds are an empty range
  CHECK(integrate([](double x) { return x; }, 1.0, 0.0, q) == 0.0);
  const double tail = integrate_tail([](double x) { return std::exp(-x); }, 0.0, 5.0, q);
  CHECK(tail == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("chebyshev fit and derivatives") {
  ChebSeries s = ChebSeries::fit([](double x) { return std::exp(x); }, 0.0, 2.0, 40);
  CHECK(s.eval(1.3) == doctest::Approx(std::exp(1.3)).epsilon(1e-14));
  CHECK(s.derivative().eval(0.4) == doctest::Approx(std::exp(0.4)).epsilon(1e-12));
  CHECK(s.tail_ratio() < 1e-14);

  PiecewiseCheb::FitOptions fo;
  fo.seg_len = 1.5;
  fo.max_order = 3;
  PiecewiseCheb pc =
      PiecewiseCheb::fit([](double x) { return std::cos(x); }, 0.0, 6.0, true, fo);
  CHECK(pc.eval(2.2) == doctest::Approx(std::cos(2.2)).epsilon(1e-13));
  CHECK(pc.eval(2.2, 1) == doctest::Approx(-std::sin(2.2)).epsilon(1e-11));
  CHECK(pc.eval(2.2, 3) == doctest::Approx(std::sin(2.2)).epsilon(1e-8));
  // even model: odd derivatives flip sign across 0
  CHECK(pc.eval(-2.2, 1) == doctest::Approx(std::sin(2.2)).epsilon(1e-11));
}

TEST_CASE("jet arithmetic oracles") {
  // exp of a linear jet has derivatives e^a b^k
  Jet lin;
  lin.n = 5;
  lin.d[0] = 0.3;
  lin.d[1] = 1.7;
  const Jet e = jet_exp(lin);
  for (int k = 0; k <= 5; ++k)
    CHECK(e.d[k] == doctest::Approx(std::exp(0.3) * std::pow(1.7, k)).epsilon(1e-12));

  // reciprocal is a two-sided inverse under jet_mul
  Jet j;
  j.n = 4;
  j.d[0] = 2.0;
  j.d[1] = -0.4;
  j.d[2] = 0.9;
  j.d[3] = 0.1;
  j.d[4] = -2.2;
  const Jet prod = jet_mul(j, jet_reciprocal(j));
  CHECK(prod.d[0] == doctest::Approx(1.0));
  for (int k = 1; k <= 4; ++k) CHECK(prod.d[k] == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(jet_reciprocal(Jet{}), std::domain_error);
}

TEST_CASE("hyperbolic derivative stack oracles") {
  // -(1/sinh) d/ds applied to cosh(s) is the constant -1, and vanishes on
  // the next application
  const double s = 1.3;
  const Jet ch = jet_cosh(s, 1.0, 3);
  CHECK(hyperbolic_stack_value(ch, s, 1, 0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(hyperbolic_stack_value(ch, s, 2, 0) == doctest::Approx(0.0).epsilon(1e-14));

  // half-argument variant on cosh(s/2)
  const Jet chh = jet_cosh(s, 0.5, 1);
  CHECK(hyperbolic_stack_value(chh, s, 0, 1) == doctest::Approx(-0.5).epsilon(1e-14));

  CHECK_THROWS_AS(hyperbolic_stack_value(chh, s, 1, 1), std::invalid_argument);
}

TEST_CASE("group parameters and density") {
  const GroupParams heis = preset("heis");
  CHECK(heis.m_v == 2);
  CHECK(heis.m_z == 1);
  CHECK(heis.Q == doctest::Approx(2.0));
  CHECK(heis.n == 4);
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
  CHECK_THROWS_AS(GroupParams(3, 1), std::invalid_argument);  // m_v must be even

  const GroupParams rh(2, 0);
  CHECK(density_A(rh, 1.4) ==
        doctest::Approx(4.0 * std::pow(std::sinh(0.7), 2)).epsilon(1e-15));
  CHECK(radius(rh, GroupPoint(0.0, 0.0, std::exp(2.3))) ==
        doctest::Approx(2.3).epsilon(1e-13));
  CHECK(radius(rh, GroupPoint(0.0, 0.0, 1.0)) == doctest::Approx(0.0));
  CHECK(modular_delta(rh, GroupPoint(1.0, 0.0, 0.5)) ==
        doctest::Approx(std::pow(0.5, -rh.Q)));
  CHECK(character_chi(GroupPoint(1.0, 0.0, 0.5), 3.0) == doctest::Approx(0.125));
}

TEST_CASE("smooth profiles") {
  const SmoothFn f = SmoothFn::gaussian(1.0);
  CHECK(f(0.7) == doctest::Approx(std::exp(-0.49)).epsilon(1e-15));
  CHECK(f.deriv(0.7, 1) == doctest::Approx(-1.4 * std::exp(-0.49)).epsilon(1e-13));
  CHECK(f.even());
  CHECK_FALSE(f.compact());
  CHECK(f.support_hi() > 6.0);
  // even reflection flips odd derivatives
  CHECK(f.deriv(-0.7, 1) == doctest::Approx(1.4 * std::exp(-0.49)).epsilon(1e-13));

  const SmoothFn g = SmoothFn::gaussian(2.0);
  const SmoothFn mix = SmoothFn::combine(2.0, f, -0.5, g);
  CHECK(mix(0.3) == doctest::Approx(2.0 * f(0.3) - 0.5 * g(0.3)).epsilon(1e-15));
}

TEST_CASE("spherical evaluator") {
  const GroupParams rh(2, 0);
  SphericalEvaluator ev(rh, cdouble(1.2, 0.0), 10.0);
  CHECK(ev.eigenvalue().real() == doctest::Approx(1.2 * 1.2 + 0.25 * rh.Q * rh.Q));
  CHECK(std::abs(ev.phi(0.0) - 1.0) == 0.0);
  CHECK(std::abs(ev.phi(3.1) - phi_real_hyp_closed_form(cdouble(1.2, 0.0), 3.1)) < 1e-10);
  // real spectral parameter gives a real function
  CHECK(std::abs(ev.phi(4.0).imag()) < 1e-13);
  CHECK(ev.steps() > 10);
  CHECK_THROWS_AS(ev.phi(11.0), std::out_of_range);
  CHECK_THROWS_AS(SphericalEvaluator(rh, cdouble(0.0, rh.Q + 6.0), 10.0),
                  std::domain_error);
}

TEST_CASE("line fourier transform closed form") {
  const SmoothFn f = SmoothFn::gaussian(1.0);
  const cdouble got = fourier_line(f, cdouble(1.5, 0.0));
  CHECK(got.real() == doctest::Approx(std::sqrt(M_PI) * std::exp(-0.5625)).epsilon(1e-12));
  CHECK(std::abs(got.imag()) < 1e-14);
  CHECK(unit_sphere_area(1) == doctest::Approx(2.0));
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * M_PI));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * M_PI));
}

TEST_CASE("cutoff family identities") {
  const CutoffFamily cut;
  CHECK(cut.omega(0.1) == 1.0);
  CHECK(cut.omega(0.75) == 0.0);
  CHECK(cut.omega(-0.8) == 0.0);
  CHECK(cut.omega(0.5) == doctest::Approx(0.5).epsilon(1e-9));
  // complement pairs telescope exactly when 1 - t is formed in place
  for (double t : {0.52, 0.64, 0.7, 0.74}) {
    CHECK(cut.omega(t) + cut.omega(1.0 - t) == 1.0);
  }
  CHECK(cut.partition_residual(-3.0, 3.0, 501) == 0.0);
  // first derivative equals the shifted bump by construction
  const Jet j = cut.omega_jet(0.6, 2);
  const Jet bm = cut.bump_jet(0.6 - 0.5, 1);
  CHECK(j.d[1] == doctest::Approx(-bm.d[0]).epsilon(1e-13));
}

TEST_CASE("spectral multiplier families") {
  const SpectralMultiplier heat = SpectralMultiplier::heat(0.7, 1.0);
  CHECK(heat.M(2.0) == doctest::Approx(std::exp(-1.4)));
  CHECK(heat.hat_peak() ==
        doctest::Approx(std::exp(-0.25 * 0.7) * std::sqrt(M_PI / 0.7)).epsilon(1e-14));
  CHECK(heat.hat(1.1) ==
        doctest::Approx(heat.hat_peak() * std::exp(-1.21 / 2.8)).epsilon(1e-14));
  CHECK(heat.singularities().empty());
  CHECK(heat.has_integrable_hat());

  const SpectralMultiplier res = SpectralMultiplier::resolvent_exp(0.8, 1.0);
  CHECK(res.M_alpha(cdouble(0.5, 0.0)).real() == doctest::Approx(1.0 / (0.25 + 0.64)));
  CHECK(res.hat(2.0) == doctest::Approx((M_PI / 0.8) * std::exp(-1.6)).epsilon(1e-14));
  const Jet hj = res.hat_jet(2.0, 3);
  for (int k = 0; k <= 3; ++k)
    CHECK(hj.d[k] == doctest::Approx(res.hat(2.0) * std::pow(-0.8, k)).epsilon(1e-13));
  CHECK(res.singularities().size() == 2);

  CHECK(default_heat_time(20.0) ==
        doctest::Approx(400.0 / (4.0 * std::log(1e50))).epsilon(1e-14));

  // dyadic piece: exactly zero outside (h-2, h), matches omega_h * hat inside
  const CutoffFamily cut;
  const SmoothFn piece = dyadic_piece(heat, cut, 4);
  CHECK(piece(2.0) == 0.0);
  CHECK(piece(4.0) == 0.0);
  CHECK(piece(3.1) ==
        doctest::Approx(cut.omega_h_jet(4, 3.1, 0).d[0] * heat.hat(3.1)).epsilon(1e-13));
  CHECK(piece.compact());
  CHECK_THROWS_AS(dyadic_piece(heat, cut, 2), std::invalid_argument);
}

TEST_CASE("parabolic region and pole strip") {
  const GroupParams heis = preset("heis");
  const MultiplierContext ctx(heis, DriftParam(2.0), 4.0, 3);
  CHECK(ctx.W == doctest::Approx(0.5));
  CHECK(ctx.phi_star == doctest::Approx(std::asin(0.5)));
  // vertex of the boundary parabola on the real axis is at 3/4
  CHECK(parabolic_region_contains(0.7501, 0.0, ctx));
  CHECK_FALSE(parabolic_region_contains(0.7499, 0.0, ctx));

  const PoleStripResult in = resolvent_pole_strip_test(cdouble(2.0, 0.0), ctx);
  CHECK_FALSE(in.indeterminate);
  CHECK(in.in_region);
  CHECK(in.poles_in_strip);
  CHECK(in.equivalent);
  const PoleStripResult out = resolvent_pole_strip_test(cdouble(-1.0, 0.5), ctx);
  CHECK_FALSE(out.in_region);
  CHECK(out.equivalent);
  const PoleStripResult band = resolvent_pole_strip_test(cdouble(0.75, 0.0), ctx);
  CHECK(band.indeterminate);

  CHECK_THROWS_AS(MultiplierContext(heis, DriftParam(1.0), 2.0, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(MultiplierContext(heis, DriftParam(1.0), 4.0, 0),
                  std::invalid_argument);
}

TEST_CASE("horm seminorm oracles") {
  auto expm = [](double v, int j) { return (j % 2 ? -1.0 : 1.0) * std::exp(-v); };
  const HormResult h = horm_seminorm(expm, 2, 3);
  CHECK(h.val0 == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(h.val_inf == doctest::Approx(std::pow(3.0 / M_E, 3)).epsilon(2e-2));
  CHECK_FALSE(h.grows_at_infinity);
  CHECK_FALSE(h.grows_at_zero);

  // finite differences recover polynomial derivatives
  const auto d = fd_derivs([](double v) { return v * v * v; });
  CHECK(d(2.0, 0) == doctest::Approx(8.0));
  CHECK(d(2.0, 1) == doctest::Approx(12.0).epsilon(1e-3));
  CHECK(d(2.0, 2) == doctest::Approx(12.0).epsilon(1e-5));
  CHECK(d(2.0, 3) == doctest::Approx(6.0).epsilon(1e-4));
}

TEST_CASE("decay fit on synthetic power law") {
  std::vector<std::pair<double, double>> pts;
  for (int h = 4; h <= 20; ++h) pts.emplace_back(h, 7.0 * std::pow(h, -2.5));
  const DecayFit fit = decay_fit(pts);
  CHECK(fit.slope == doctest::Approx(-2.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(fit.max_residual < 1e-12);
  CHECK_THROWS_AS(decay_fit({{1.0, 1.0}, {2.0, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(
      decay_fit({{1.0, 1.0}, {2.0, 0.5}, {3.0, -0.1}, {4.0, 0.2}, {5.0, 0.1}}),
      std::invalid_argument);
}

TEST_CASE("suite runner basics") {
  SuiteConfig cfg;
  cfg.suite = "region";
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.passed);
  CHECK(rep.records.size() == 6);
  const nlohmann::json j = nlohmann::json::parse(rep.to_json());
  CHECK(j["suite"] == "region");
  CHECK(j["records"].size() == 6);
  CHECK(rep.to_text().find("PASS") != std::string::npos);

  SuiteConfig bad;
  bad.suite = "nope";
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
  SuiteConfig bad2;
  bad2.grid_scale = 99;
  CHECK_THROWS_AS(run_suite(bad2), std::invalid_argument);
}

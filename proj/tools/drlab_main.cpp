// drlab: command-line front end for the verification suites and the
// individual geometric / spectral queries.

#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "drlab/group.hpp"
#include "drlab/harness.hpp"
#include "drlab/multiplier.hpp"
#include "drlab/spherical.hpp"

namespace {

using drlab::cdouble;

cdouble parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw CLI::ValidationError("lambda", "cannot parse '" + s + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw CLI::ValidationError("lambda", "expected RE or RE,IM, got '" + s + "'");
  }
  return {re, im};
}

struct GroupArgs {
  std::string preset;
  int mv = 0, mz = -1;

  void attach(CLI::App* app) {
    auto* p = app->add_option("--preset", preset, "named parameter pair")
                  ->check(CLI::IsMember(drlab::preset_names()));
    auto* v = app->add_option("--mv", mv, "first layer dimension (even, > 0)");
    auto* z = app->add_option("--mz", mz, "center dimension (>= 0)");
    p->excludes(v)->excludes(z);
    v->needs(z);
    z->needs(v);
  }
  drlab::GroupParams resolve(const char* fallback = "heis") const {
    if (!preset.empty()) return drlab::preset(preset);
    if (mz >= 0) return drlab::GroupParams(mv, mz);
    return drlab::preset(fallback);
  }
};

int run_verify(const drlab::SuiteConfig& cfg, bool json_stdout) {
  const drlab::VerificationReport rep = drlab::run_suite(cfg);
  if (json_stdout)
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_text();
  return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical analysis and multiplier verification toolkit"};
  app.require_subcommand(1);
  // options for a subcommand live in a section of the same name, e.g.
  //   [verify]
  //   suite=region
  app.set_config("--config", "", "read options from an INI-style file");
  app.fallthrough();

  // ---- verify ----
  drlab::SuiteConfig cfg;
  bool json_stdout = false;
  GroupArgs vg;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "suite name")
      ->check(CLI::IsMember(drlab::suite_names()))
      ->capture_default_str();
  vg.attach(verify);
  verify->add_option("--family", cfg.family, "multiplier family: heat | resolvent-exp")
      ->capture_default_str();
  verify->add_option("--alpha", cfg.alpha, "drift parameter")->capture_default_str();
  verify->add_option("--p", cfg.p, "Lebesgue exponent, p != 2")->capture_default_str();
  verify->add_option("--beta", cfg.beta, "derivative order budget")->capture_default_str();
  verify->add_option("--h-min", cfg.h_min, "first dyadic window")->capture_default_str();
  verify->add_option("--h-max", cfg.h_max, "last dyadic window")->capture_default_str();
  verify->add_option("--heat-time", cfg.heat_time, "heat family time (0 = auto)");
  verify->add_option("--res-c", cfg.res_c, "resolvent family decay rate (0 = auto)");
  verify->add_option("--tol", cfg.tol, "override the default check tolerance (0 = defaults)");
  verify->add_option("--grid-scale", cfg.grid_scale, "grid density multiplier")
      ->check(CLI::Range(1, 8));
  verify->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--out", cfg.out_json, "write the JSON report to this path");
  verify->add_option("--csv-dir", cfg.csv_dir, "write per-check CSV tables here");
  verify->add_flag("--json", json_stdout, "print the JSON report instead of text");

  // ---- kernel ----
  drlab::SuiteConfig kcfg;
  GroupArgs kg;
  std::string kernel_out, kernel_csv;
  auto* kernel = app.add_subcommand("kernel", "weighted-norm sweep over dyadic kernel pieces");
  kg.attach(kernel);
  kernel->add_option("--family", kcfg.family, "heat | resolvent-exp")->capture_default_str();
  kernel->add_option("--alpha", kcfg.alpha, "drift parameter")->capture_default_str();
  kernel->add_option("--p", kcfg.p, "Lebesgue exponent, p != 2")->capture_default_str();
  kernel->add_option("--beta", kcfg.beta, "derivative order budget")->capture_default_str();
  kernel->add_option("--h-min", kcfg.h_min, "first dyadic window")->capture_default_str();
  kernel->add_option("--h-max", kcfg.h_max, "last dyadic window")->capture_default_str();
  kernel->add_option("--heat-time", kcfg.heat_time, "heat family time (0 = auto)");
  kernel->add_option("--res-c", kcfg.res_c, "resolvent family decay rate (0 = auto)");
  kernel->add_option("--out", kernel_out, "write a JSON summary to this path");
  kernel->add_option("--csv", kernel_csv, "write the h,norm table to this path");

  // ---- phi ----
  GroupArgs pg;
  std::string phi_lambda = "1";
  std::string phi_lambdas;
  double phi_r = 1.0;
  auto* phi = app.add_subcommand("phi", "evaluate the radial eigenfunction");
  pg.attach(phi);
  phi->add_option("--lambda", phi_lambda, "spectral parameter RE or RE,IM")
      ->capture_default_str();
  phi->add_option("--lambdas", phi_lambdas, "comma-separated list of real spectral parameters");
  phi->add_option("--r", phi_r, "radius")->capture_default_str();

  // ---- region ----
  GroupArgs rg;
  double region_x = 0.0, region_y = 0.0, region_alpha = 1.0, region_p = 4.0;
  auto* region = app.add_subcommand("region", "test membership in the parabolic region");
  rg.attach(region);
  region->add_option("--x", region_x, "real part")->required();
  region->add_option("--y", region_y, "imaginary part")->capture_default_str();
  region->add_option("--alpha", region_alpha, "drift parameter")->capture_default_str();
  region->add_option("--p", region_p, "Lebesgue exponent, p != 2")->capture_default_str();

  // ---- strip ----
  GroupArgs sg;
  std::string strip_family = "heat";
  double strip_alpha = 1.0, strip_p = 4.0, strip_time = 1.0, strip_c = 0.0;
  int strip_beta = 3;
  auto* strip = app.add_subcommand("strip", "holomorphic strip-class test for a multiplier");
  sg.attach(strip);
  strip->add_option("--family", strip_family, "heat | resolvent-exp")->capture_default_str();
  strip->add_option("--alpha", strip_alpha, "drift parameter")->capture_default_str();
  strip->add_option("--p", strip_p, "Lebesgue exponent, p != 2")->capture_default_str();
  strip->add_option("--beta", strip_beta, "derivative order budget")->capture_default_str();
  strip->add_option("--heat-time", strip_time, "heat family time")->capture_default_str();
  strip->add_option("--res-c", strip_c, "resolvent family decay rate (0 = auto 2W)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (!vg.preset.empty()) cfg.preset = vg.preset;
      cfg.mv = vg.mv;
      cfg.mz = vg.mz;
      return run_verify(cfg, json_stdout);
    }

    if (kernel->parsed()) {
      if (!kg.preset.empty()) kcfg.preset = kg.preset;
      kcfg.mv = kg.mv;
      kcfg.mz = kg.mz;
      const drlab::KernelSweepResult sw = drlab::kernel_sweep(kcfg);
      std::printf("slope %.6f  limit %.6f  %s\n", sw.fit.slope, sw.slope_limit,
                  sw.pass ? "PASS" : "FAIL");
      for (const auto& [h, v] : sw.norms) std::printf("  h=%-3g norm=%.6e\n", h, v);
      if (!kernel_csv.empty()) {
        FILE* out = std::fopen(kernel_csv.c_str(), "w");
        if (!out) throw std::invalid_argument("cannot write " + kernel_csv);
        std::fprintf(out, "h,norm\n");
        for (const auto& [h, v] : sw.norms) std::fprintf(out, "%g,%.12e\n", h, v);
        std::fclose(out);
      }
      if (!kernel_out.empty()) {
        FILE* out = std::fopen(kernel_out.c_str(), "w");
        if (!out) throw std::invalid_argument("cannot write " + kernel_out);
        std::fprintf(out,
                     "{\n  \"family\": \"%s\",\n  \"alpha\": %g,\n  \"p\": %g,\n"
                     "  \"beta\": %d,\n  \"slope\": %.12g,\n  \"slope_limit\": %.12g,\n"
                     "  \"pass\": %s\n}\n",
                     kcfg.family.c_str(), kcfg.alpha, kcfg.p, kcfg.beta, sw.fit.slope,
                     sw.slope_limit, sw.pass ? "true" : "false");
        std::fclose(out);
      }
      return sw.pass ? 0 : 1;
    }

    if (phi->parsed()) {
      const drlab::GroupParams g = pg.resolve();
      if (!phi_lambdas.empty()) {
        std::istringstream in(phi_lambdas);
        std::string tok;
        while (std::getline(in, tok, ',')) {
          const double lam = std::stod(tok);
          drlab::SphericalEvaluator ev(g, cdouble(lam, 0.0), phi_r + 1.0);
          const cdouble v = ev.phi(phi_r);
          std::printf("lambda=%g  phi=%.12g\n", lam, v.real());
        }
        return 0;
      }
      const cdouble lam = parse_complex(phi_lambda);
      drlab::SphericalEvaluator ev(g, lam, phi_r + 1.0);
      const cdouble v = ev.phi(phi_r);
      if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
        std::printf("%.12g%+.12gi\n", v.real(), v.imag());
      else
        std::printf("%.12g\n", v.real());
      return 0;
    }

    if (region->parsed()) {
      const drlab::GroupParams g = rg.resolve();
      const drlab::MultiplierContext ctx(g, drlab::DriftParam(region_alpha), region_p, 3);
      const bool in = drlab::parabolic_region_contains(region_x, region_y, ctx);
      std::printf("%s\n", in ? "inside" : "outside");
      return 0;
    }

    if (strip->parsed()) {
      const drlab::GroupParams g = sg.resolve();
      const drlab::MultiplierContext ctx(g, drlab::DriftParam(strip_alpha), strip_p,
                                         strip_beta);
      drlab::SpectralMultiplier m = drlab::SpectralMultiplier::heat(strip_time, strip_alpha);
      if (strip_family == "resolvent-exp" || strip_family == "resolvent_exp")
        m = drlab::SpectralMultiplier::resolvent_exp(
            strip_c > 0.0 ? strip_c : 2.0 * ctx.W, strip_alpha);
      else if (strip_family != "heat")
        throw std::invalid_argument("unknown family '" + strip_family + "'");
      const drlab::StripClassResult sc = drlab::strip_class_check(m, ctx, strip_beta);
      if (sc.in_class)
        std::printf("in-class  C=%.6g\n", sc.C);
      else
        std::printf("not-in-class  (%s)\n", sc.reason.c_str());
      return sc.in_class ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}

// Acceptance gate: runs the full verification suite once and grades the
// result against the release criteria, one line per criterion. Exit status
// 0 iff every criterion holds, including the per-check time budgets.

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "drlab/harness.hpp"

using drlab::CheckRecord;
using drlab::SuiteConfig;
using drlab::VerificationReport;

namespace {

struct Requirement {
  std::string record;  // check name in the report
  double max_ms = 0.0; // 0 = no time budget
};

struct Criterion {
  const char* what;
  std::vector<Requirement> reqs;
};

const std::vector<Criterion> kCriteria = {
    {"Abel round trip on both inversion branches, within budget",
     {{"abel-round-trip[real-hyp]", 30000.0}, {"abel-round-trip[heis]", 30000.0}}},
    {"spherical transform equals line Fourier of the Abel transform",
     {{"spherical-two-route[real-hyp]"}, {"spherical-two-route[heis]"}}},
    {"closed-form eigenfunction oracle and unit eigenfunction",
     {{"rank-one-closed-form"},
      {"constant-eigenfunction[real-hyp]"},
      {"constant-eigenfunction[heis]"},
      {"constant-eigenfunction[quat]"}}},
    {"envelope bounds with grid-stable fitted constants",
     {{"volume-density-envelope[real-hyp]"},
      {"volume-density-envelope[heis]"},
      {"volume-density-envelope[quat]"},
      {"ground-state-envelope[real-hyp]"},
      {"ground-state-envelope[heis]"},
      {"ground-state-envelope[quat]"},
      {"modulus-envelope[real-hyp]"},
      {"modulus-envelope[heis]"},
      {"modulus-envelope[quat]"},
      {"derivative-stack-envelope"}}},
    {"local kernel part vanishes beyond the propagation ball",
     {{"finite-propagation-support"}}},
    {"dyadic kernel pieces vanish outside their annuli",
     {{"kernel-finite-support"}}},
    {"weighted L1 decay of the global kernel pieces, within budget",
     {{"global-part-weighted-decay", 600000.0}}},
    {"pole-in-strip equivalent to parabolic region membership",
     {{"pole-strip-region-equivalence"}}},
    {"local multiplier seminorms finite and grid-stable",
     {{"local-part-seminorm-transfer"}}},
    {"partial kernel sums converge geometrically to the target kernel",
     {{"kernel-reconstruction"}}},
};

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  cfg.suite = "paper-core";
  VerificationReport rep;
  try {
    rep = drlab::run_suite(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "suite did not run: %s\n", e.what());
    return 1;
  }

  if (argc > 1) {
    std::ofstream out(argv[1]);
    if (out) out << rep.to_json() << '\n';
  }

  std::map<std::string, const CheckRecord*> by_name;
  for (const CheckRecord& r : rep.records) by_name[r.name] = &r;

  bool all = true;
  for (size_t i = 0; i < kCriteria.size(); ++i) {
    const Criterion& c = kCriteria[i];
    std::string why;
    for (const Requirement& req : c.reqs) {
      const auto it = by_name.find(req.record);
      if (it == by_name.end()) {
        why = req.record + " missing from the report";
        break;
      }
      const CheckRecord& r = *it->second;
      if (!r.pass) {
        why = req.record + " failed (measured " + std::to_string(r.measured) +
              ", tolerance " + std::to_string(r.tolerance) + ")";
        break;
      }
      if (req.max_ms > 0.0 && r.runtime_ms > req.max_ms) {
        why = req.record + " took " + std::to_string(r.runtime_ms / 1000.0) +
              " s, budget " + std::to_string(req.max_ms / 1000.0) + " s";
        break;
      }
    }
    const bool ok = why.empty();
    all = all && ok;
    std::printf("criterion %2zu: %s  %s%s%s\n", i + 1, ok ? "PASS" : "FAIL", c.what,
                ok ? "" : " -- ", why.c_str());
  }
  std::printf("acceptance: %s (%zu criteria, %zu checks, %.1f s)\n",
              all ? "PASS" : "FAIL", kCriteria.size(), rep.records.size(),
              rep.runtime_ms / 1000.0);
  return all ? 0 : 1;
}

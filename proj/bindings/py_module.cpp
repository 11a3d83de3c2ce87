#include <complex>
#include <memory>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drlab/group.hpp"
#include "drlab/harness.hpp"
#include "drlab/multiplier.hpp"
#include "drlab/spherical.hpp"

namespace py = pybind11;
using namespace drlab;

namespace {

GroupParams make_group(const std::string& preset_name, int mv, int mz) {
  if (!preset_name.empty()) return preset(preset_name);
  if (mz >= 0) return GroupParams(mv, mz);
  throw std::invalid_argument("pass preset=... or mv=/mz=");
}

}  // namespace

PYBIND11_MODULE(_drlab, m) {
  m.doc() = "spherical analysis and multiplier verification toolkit";
  m.attr("__version__") = "0.1.0";

  py::class_<GroupParams>(m, "GroupParams")
      .def(py::init<int, int>(), py::arg("mv"), py::arg("mz"))
      .def_readonly("m_v", &GroupParams::m_v)
      .def_readonly("m_z", &GroupParams::m_z)
      .def_readonly("Q", &GroupParams::Q)
      .def_readonly("n", &GroupParams::n)
      .def("__repr__", [](const GroupParams& g) {
        return "GroupParams(mv=" + std::to_string(g.m_v) +
               ", mz=" + std::to_string(g.m_z) + ")";
      });

  m.def("preset", &preset, py::arg("name"));
  m.def("preset_names", &preset_names);
  m.def(
      "make_group",
      [](const std::string& preset_name, int mv, int mz) {
        return make_group(preset_name, mv, mz);
      },
      py::arg("preset") = "", py::arg("mv") = 0, py::arg("mz") = -1);

  m.def(
      "radius",
      [](const GroupParams& g, double x_norm, double z_norm, double a) {
        return radius(g, GroupPoint(x_norm, z_norm, a));
      },
      py::arg("group"), py::arg("x_norm"), py::arg("z_norm"), py::arg("a"),
      "geodesic distance to the identity");

  m.def("density", &density_A, py::arg("group"), py::arg("r"),
        "radial volume density A(r)");

  m.def(
      "phi",
      [](const GroupParams& g, std::complex<double> lam, double r) {
        SphericalEvaluator ev(g, lam, r + 1.0);
        return ev.phi(r);
      },
      py::arg("group"), py::arg("lam"), py::arg("r"),
      "radial eigenfunction, normalized to 1 at the origin");

  m.def(
      "region_contains",
      [](const GroupParams& g, double x, double y, double alpha, double p) {
        const MultiplierContext ctx(g, DriftParam(alpha), p, 3);
        return parabolic_region_contains(x, y, ctx);
      },
      py::arg("group"), py::arg("x"), py::arg("y"), py::arg("alpha"), py::arg("p"),
      "membership of x+iy in the parabolic holomorphy region");

  m.def(
      "verify",
      [](const std::string& suite, const std::string& preset_name, int mv, int mz,
         const std::string& family, double alpha, double p, int beta, int h_min,
         int h_max, double tol, int grid_scale, unsigned seed) {
        SuiteConfig cfg;
        cfg.suite = suite;
        cfg.preset = preset_name;
        cfg.mv = mv;
        cfg.mz = mz;
        cfg.family = family;
        cfg.alpha = alpha;
        cfg.p = p;
        cfg.beta = beta;
        cfg.h_min = h_min;
        cfg.h_max = h_max;
        cfg.tol = tol;
        cfg.grid_scale = grid_scale;
        cfg.seed = seed;
        return run_suite(cfg).to_json();
      },
      py::arg("suite") = "geometry", py::arg("preset") = "", py::arg("mv") = 0,
      py::arg("mz") = -1, py::arg("family") = "heat", py::arg("alpha") = 1.0,
      py::arg("p") = 4.0, py::arg("beta") = 3, py::arg("h_min") = 4,
      py::arg("h_max") = 20, py::arg("tol") = 0.0, py::arg("grid_scale") = 1,
      py::arg("seed") = 12345u,
      "run a verification suite and return the JSON report as a string");
}

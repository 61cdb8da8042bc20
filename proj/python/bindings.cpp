#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "msdiff/config.hpp"
#include "msdiff/dense_solve.hpp"
#include "msdiff/diagnostics.hpp"
#include "msdiff/errors.hpp"
#include "msdiff/homs_core.hpp"
#include "msdiff/output.hpp"
#include "msdiff/simulation.hpp"

namespace py = pybind11;
using namespace msdiff;

namespace {

py::array_t<double> to_array(const SpeciesField& f) {
  py::array_t<double> out({f.species(), f.points()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < f.species(); ++i)
    for (std::size_t l = 0; l < f.points(); ++l) v(i, l) = f(i, l);
  return out;
}

py::array_t<double> to_array(const DenseMatrix& m) {
  py::array_t<double> out({m.size(), m.size()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) v(i, j) = m(i, j);
  return out;
}

DenseMatrix to_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw InvalidParameterError("expected a square matrix");
  }
  DenseMatrix m(static_cast<std::size_t>(a.shape(0)));
  auto v = a.unchecked<2>();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) v(i, j), m(i, j) = v(i, j);
  return m;
}

const Snapshot& snapshot_at(const RunReport& r, std::size_t k) {
  if (k >= r.snapshots.size()) throw py::index_error("snapshot index out of range");
  return r.snapshots[k];
}

py::dict spec_dict(const MixtureSpec& s) {
  py::dict d;
  d["species"] = s.species_names;
  d["masses"] = s.masses;
  d["diffusivities"] = to_array(s.diffusivities);
  d["cross_section_norms"] = to_array(s.cross_section_norms);
  d["gamma"] = to_array(s.gamma);
  d["kappa_t"] = s.kappa_t();
  d["n_ref"] = s.n_ref;
  return d;
}

py::dict norms_dict(const FieldDifference& d) {
  auto linf = [](const std::vector<NormPair>& v) {
    std::vector<double> out;
    for (const auto& p : v) out.push_back(p.linf);
    return out;
  };
  py::dict out;
  out["n"] = linf(d.n);
  out["J"] = linf(d.flux);
  out["p_total"] = linf(d.p_total);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maxwell-Stefan and higher-order Maxwell-Stefan diffusion in 1D";

  static py::exception<Error> base(m, "Error");
  static py::exception<ConfigError> config_exc(m, "ConfigError", base.ptr());
  static py::exception<SingularSystemError> singular_exc(m, "SingularSystemError", base.ptr());
  static py::exception<StabilityError> stability_exc(m, "StabilityError", base.ptr());
  static py::exception<ComparisonError> comparison_exc(m, "ComparisonError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      config_exc(e.what());
    } catch (const SingularSystemError& e) {
      singular_exc(e.what());
    } catch (const StabilityError& e) {
      stability_exc(e.what());
    } catch (const ComparisonError& e) {
      comparison_exc(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::enum_<Model>(m, "Model").value("MS", Model::kMs).value("HOMS", Model::kHoms);

  py::class_<SimConfig>(m, "Config")
      .def_static("preset", &preset_config, py::arg("name") = "duncan-toor")
      .def_static("parse", &parse_config, py::arg("text"))
      .def_static("load", &load_config, py::arg("path"))
      .def_readwrite("model", &SimConfig::model)
      .def_readwrite("dx", &SimConfig::dx)
      .def_readwrite("dt", &SimConfig::dt)
      .def_readwrite("t_end", &SimConfig::t_end)
      .def_readwrite("snapshot_times", &SimConfig::snapshot_times)
      .def_readwrite("neglect_self_diffusion", &SimConfig::neglect_self_diffusion)
      .def_readwrite("strict_cfl", &SimConfig::strict_cfl)
      .def_readwrite("output_dir", &SimConfig::output_dir)
      .def_readwrite("gamma_list", &SimConfig::gamma_list)
      .def_readwrite("compare_time", &SimConfig::compare_time)
      .def(
          "set_gamma",
          [](SimConfig& c, double g) {
            c.gamma_override = uniform_matrix(c.mixture.species_count(), g);
          },
          py::arg("gamma"))
      .def("spec", [](const SimConfig& c) { return spec_dict(c.mixture_spec()); })
      .def("nodes", [](const SimConfig& c) { return c.grid().nodes; })
      .def("validate", &SimConfig::validate)
      .def("params", &format_params);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("model", &RunReport::model)
      .def_readonly("complete", &RunReport::complete)
      .def_readonly("error", &RunReport::error)
      .def_readonly("error_code", &RunReport::error_code)
      .def_readonly("warnings", &RunReport::warnings)
      .def_readonly("initial_mass", &RunReport::initial_mass)
      .def_readonly("equilibrium", &RunReport::equilibrium)
      .def_property_readonly("cfl", [](const RunReport& r) { return py::make_tuple(r.cfl.value, r.cfl.flagged); })
      .def_property_readonly("times",
                             [](const RunReport& r) {
                               std::vector<double> t;
                               for (const auto& s : r.snapshots) t.push_back(s.time);
                               return t;
                             })
      .def_property_readonly("x", [](const RunReport& r) { return r.grid.nodes; })
      .def_property_readonly("x_half", [](const RunReport& r) { return r.grid.half_nodes; })
      .def("n", [](const RunReport& r, std::size_t k) { return to_array(snapshot_at(r, k).state.n); })
      .def("P", [](const RunReport& r, std::size_t k) { return to_array(snapshot_at(r, k).state.deviator); })
      .def("J", [](const RunReport& r, std::size_t k) { return to_array(snapshot_at(r, k).state.flux); })
      .def("equilibrium_distance",
           [](const RunReport& r, std::size_t k) {
             std::vector<double> linf;
             for (const auto& d : equilibrium_distance(snapshot_at(r, k).state.n, r.equilibrium, r.grid))
               linf.push_back(d.linf);
             return linf;
           })
      .def("uphill", [](const RunReport& r, std::size_t species, double initial) {
             const auto u = uphill_metric(r.snapshots, species, initial);
             return py::make_tuple(u.max_deviation, u.time);
           }, py::arg("species"), py::arg("initial_value"))
      .def("summary_json", &summary_json)
      .def("write", [](const RunReport& r, const std::filesystem::path& dir) { write_run(r, dir); });

  m.def("run", py::overload_cast<const SimConfig&>(&run), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run", py::overload_cast<const SimConfig&, Model>(&run), py::arg("config"), py::arg("model"),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "compare_runs",
      [](const RunReport& a, const RunReport& b, double t) {
        return norms_dict(compare_runs(a, b, t).difference);
      },
      py::arg("a"), py::arg("b"), py::arg("t"));

  m.def(
      "sweep_gamma",
      [](const SimConfig& c, const std::vector<double>& gammas, bool toggle) {
        const auto s = sweep_gamma(c, gammas, toggle);
        py::list rows;
        for (const auto& e : s.entries) {
          rows.append(py::make_tuple(e.gamma, e.neglect_self_diffusion, e.gap.difference.max_n_linf()));
        }
        return py::make_tuple(rows, s.monotone);
      },
      py::arg("config"), py::arg("gammas"), py::arg("toggle_self_diffusion") = false);

  m.def(
      "cfl_number",
      [](const SimConfig& c) {
        const auto r = cfl_number(c.mixture_spec(), c.dt, c.dx);
        return py::make_tuple(r.value, r.flagged);
      },
      py::arg("config"));

  m.def(
      "solve_deviator",
      [](const SimConfig& c, const std::vector<double>& n) { return solve_deviator(n, c.mixture_spec()); },
      py::arg("config"), py::arg("n"));

  m.def(
      "solve_dense",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
         const std::vector<double>& b) { return solve_dense(to_matrix(a), b); },
      py::arg("a"), py::arg("b"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lrc/analysis.hpp"
#include "lrc/bounds.hpp"
#include "lrc/cli.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/erasure.hpp"
#include "lrc/error.hpp"
#include "lrc/io.hpp"
#include "lrc/matroid.hpp"
#include "lrc/oracle.hpp"

namespace py = pybind11;
using lrc::Matroid;
using lrc::Subset;

namespace {

Subset to_subset(const std::vector<int>& elements) { return Subset::of(std::span<const int>(elements)); }

// Structured results cross the boundary as JSON text; the Python side decodes them.
std::string dumps(const lrc::io::Json& doc) { return lrc::io::dump(doc); }

std::string atom_matroid_json(const lrc::AtomMatroid& am) {
  lrc::io::Json doc = lrc::io::matroid_to_json(am.matroid);
  doc["atoms"] = lrc::io::atoms_to_json({am.matroid.size(), am.k, am.atoms})["atoms"];
  doc["k"] = am.k;
  return dumps(doc);
}

}  // namespace

PYBIND11_MODULE(_lrcmat, mod) {
  mod.doc() = "Matroid tools for locally repairable codes";

  py::register_exception<lrc::Error>(mod, "LrcError", PyExc_ValueError);

  py::class_<Matroid>(mod, "Matroid")
      .def_static("uniform", &Matroid::uniform, py::arg("n"), py::arg("k"))
      .def_static("from_json", [](const std::string& text) { return lrc::io::matroid_from_json(lrc::io::parse(text)); })
      .def("to_json", [](const Matroid& m) { return dumps(lrc::io::matroid_to_json(m)); })
      .def_property_readonly("n", &Matroid::size)
      .def("rank", [](const Matroid& m, const std::vector<int>& x) { return m.rank(to_subset(x)); }, py::arg("x"))
      .def("full_rank", [](const Matroid& m) { return m.rank(); })
      .def("closure", [](const Matroid& m, const std::vector<int>& x) { return m.closure(to_subset(x)).elements(); })
      .def("is_flat", [](const Matroid& m, const std::vector<int>& x) { return m.is_flat(to_subset(x)); })
      .def("is_cyclic", [](const Matroid& m, const std::vector<int>& x) { return m.is_cyclic(to_subset(x)); })
      .def("dual", &Matroid::dual)
      .def("restriction", [](const Matroid& m, const std::vector<int>& x) { return m.restriction(to_subset(x)); })
      .def("circuits",
           [](const Matroid& m) {
             std::vector<std::vector<int>> out;
             for (Subset c : lrc::circuits(m)) out.push_back(c.elements());
             return out;
           })
      .def("cyclic_flats",
           [](const Matroid& m) {
             std::vector<std::pair<std::vector<int>, int>> out;
             const auto lattice = lrc::cyclic_flats(m);
             for (const auto& f : lattice.flats()) out.emplace_back(f.set.elements(), f.rank);
             return out;
           })
      .def("params",
           [](const Matroid& m) {
             const auto p = lrc::params_from_matroid(m);
             return py::make_tuple(p.n, p.k, p.d);
           })
      .def("__eq__", &lrc::same_rank_function);

  mod.def("validate_params", &lrc::validate_params, py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));
  mod.def("singleton_bound", &lrc::singleton_bound, py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));
  mod.def("old_lower_bound", &lrc::old_lower_bound, py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));
  mod.def(
      "theorem14_lower_bound",
      [](int n, int k, int r, int delta) { return dumps(lrc::io::theorem14_to_json(lrc::theorem14_lower_bound(n, k, r, delta))); },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));
  mod.def(
      "classify",
      [](int n, int k, int r, int delta, bool witness) {
        return dumps(lrc::io::bound_report_to_json(lrc::classify_achievability(n, k, r, delta), witness));
      },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"), py::arg("witness") = false);

  mod.def(
      "has_locality",
      [](const Matroid& m, int r, int delta) -> std::optional<std::string> {
        auto cover = lrc::has_locality(m, r, delta);
        if (!cover) return std::nullopt;
        return dumps(lrc::io::cover_to_json(*cover));
      },
      py::arg("m"), py::arg("r"), py::arg("delta"));
  mod.def("achieves_bound", &lrc::achieves_bound, py::arg("m"), py::arg("r"), py::arg("delta"));
  mod.def(
      "check_structure",
      [](const Matroid& m, int r, int delta) {
        auto cover = lrc::has_locality(m, r, delta);
        if (!cover) throw lrc::Error(lrc::ErrorCode::kNoLocality, "matroid has no (r, delta)-locality");
        return dumps(lrc::io::structure_report_to_json(lrc::check_structure_theorem(m, *cover)));
      },
      py::arg("m"), py::arg("r"), py::arg("delta"));

  mod.def(
      "construction1",
      [](const std::string& atoms_json) {
        const auto doc = lrc::io::atoms_from_json(lrc::io::parse(atoms_json));
        return atom_matroid_json(lrc::construction1(doc.n, doc.atoms, doc.k));
      },
      py::arg("atoms_json"));
  mod.def(
      "construction1_violations",
      [](const std::string& atoms_json) {
        const auto doc = lrc::io::atoms_from_json(lrc::io::parse(atoms_json));
        return dumps(lrc::io::violations_to_json(lrc::construction1_violations(doc.n, doc.atoms, doc.k)));
      },
      py::arg("atoms_json"));
  mod.def(
      "theorem11_construction",
      [](int n, int k, int r, int delta) { return atom_matroid_json(lrc::theorem11_construction(n, k, r, delta)); },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));
  mod.def(
      "theorem14_construction",
      [](int n, int k, int r, int delta) { return atom_matroid_json(lrc::theorem14_construction(n, k, r, delta)); },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));

  mod.def(
      "induce_matroid",
      [](int s, int n, const std::vector<std::vector<int>>& codewords) {
        return lrc::induce_matroid(lrc::BlockCode(s, n, codewords));
      },
      py::arg("s"), py::arg("n"), py::arg("codewords"));
  mod.def(
      "code_min_distance",
      [](int s, int n, const std::vector<std::vector<int>>& codewords) {
        return lrc::code_min_distance(lrc::BlockCode(s, n, codewords));
      },
      py::arg("s"), py::arg("n"), py::arg("codewords"));

  mod.def(
      "monte_carlo",
      [](const Matroid& m, int r, int delta, double p, std::int64_t trials, std::uint64_t seed, int threads) {
        auto cover = lrc::has_locality(m, r, delta);
        if (!cover) throw lrc::Error(lrc::ErrorCode::kNoLocality, "matroid has no (r, delta)-locality");
        lrc::MonteCarloStats stats;
        {
          py::gil_scoped_release release;
          stats = lrc::monte_carlo(m, *cover, p, trials, seed, threads);
        }
        return dumps(lrc::io::monte_carlo_to_json(stats));
      },
      py::arg("m"), py::arg("r"), py::arg("delta"), py::arg("p"), py::arg("trials"), py::arg("seed"),
      py::arg("threads") = 1);

  mod.def("oracle_d", &lrc::oracle::oracle_d, py::arg("m"));
  mod.def("oracle_locality", &lrc::oracle::oracle_locality, py::arg("m"), py::arg("r"), py::arg("delta"));

  mod.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out;
        std::ostringstream err;
        const int status = lrc::cli::run(args, in, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}

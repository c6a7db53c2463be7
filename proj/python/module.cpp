// Python bindings for the core operations: shape handling, the pair and
// vertex conditions, reduced bases, primality, lattice witnesses, and the
// shape families.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polygb/conditions.hpp"
#include "polygb/families.hpp"
#include "polygb/gbasis.hpp"
#include "polygb/io.hpp"
#include "polygb/lattice.hpp"

namespace py = pybind11;
using namespace polygb;

namespace {

Vertex to_vertex(const std::pair<int, int>& t) { return {t.first, t.second}; }
std::pair<int, int> from_vertex(Vertex v) { return {v.x, v.y}; }

std::vector<Cell> to_cells(const std::vector<std::pair<int, int>>& raw) {
  std::vector<Cell> out;
  out.reserve(raw.size());
  for (const auto& t : raw) out.push_back(to_vertex(t));
  return out;
}

MonomialOrder make_order(const Polyomino& p, int order,
                         const std::optional<std::pair<int, int>>& rotate_at) {
  MonomialOrder o(VarTable(p), order);
  if (rotate_at) o = o.rotated_at(to_vertex(*rotate_at));
  return o;
}

py::dict report_dict(const conditions::ConditionReport& r) {
  py::dict d;
  d["prop21_odd"] = r.prop21_odd;
  d["prop21_even"] = r.prop21_even;
  py::list pred;
  for (bool b : r.quadratic_prediction) pred.append(b);
  d["quadratic_prediction"] = pred;
  py::dict prof;
  for (const auto& [v, ks] : r.profile)
    prof[py::make_tuple(v.x, v.y)] = std::set<int>(ks.begin(), ks.end());
  d["pi_profile"] = prof;
  py::dict cert;
  cert["sufficient"] = r.certificate.sufficient;
  cert["parity"] = r.certificate.sufficient ? std::string(1, r.certificate.parity) : "";
  py::dict chosen;
  for (const auto& [v, k] : r.certificate.chosen) chosen[py::make_tuple(v.x, v.y)] = k;
  cert["chosen"] = chosen;
  d["certificate"] = cert;
  return d;
}

}  // namespace

PYBIND11_MODULE(polygb, m) {
  m.doc() = "Inner-2-minor ideals of polyominoes: quadratic reduced bases, "
            "primality, and shape families";

  py::register_exception<Error>(m, "Error");

  py::class_<Polyomino>(m, "Polyomino")
      .def(py::init([](const std::vector<std::pair<int, int>>& cells, const std::string& name) {
             return Polyomino::validate(to_cells(cells), name);
           }),
           py::arg("cells"), py::arg("name") = "")
      .def_static(
          "parse", [](const std::string& text, const std::string& name) {
            return parse_any(text, name);
          },
          py::arg("text"), py::arg("name") = "", "Parse ascii art or json")
      .def_static("load", &load_polyomino, py::arg("path"))
      .def_property_readonly("name", &Polyomino::name)
      .def_property_readonly("rank", &Polyomino::rank)
      .def_property_readonly("width", &Polyomino::width)
      .def_property_readonly("height", &Polyomino::height)
      .def_property_readonly("cells",
                             [](const Polyomino& p) {
                               std::vector<std::pair<int, int>> out;
                               for (Cell c : p.cells()) out.push_back(from_vertex(c));
                               return out;
                             })
      .def_property_readonly("vertices",
                             [](const Polyomino& p) {
                               std::vector<std::pair<int, int>> out;
                               for (Vertex v : p.vertices()) out.push_back(from_vertex(v));
                               return out;
                             })
      .def("has_cell",
           [](const Polyomino& p, std::pair<int, int> c) { return p.has_cell(to_vertex(c)); })
      .def("ascii", [](const Polyomino& p) { return to_ascii(p); })
      .def("json", [](const Polyomino& p) { return to_json(p); })
      .def("__eq__", [](const Polyomino& a, const Polyomino& b) { return a.cells() == b.cells(); })
      .def("__repr__", [](const Polyomino& p) {
        return "<Polyomino " + (p.name().empty() ? "?" : p.name()) + " rank=" +
               std::to_string(p.rank()) + ">";
      });

  m.def("is_thin", &is_thin, py::arg("p"));
  m.def("is_simple", &is_simple, py::arg("p"));
  m.def("is_thin_cycle", [](const Polyomino& p) { return is_thin_cycle(p); }, py::arg("p"));
  m.def("holes", &holes, py::arg("p"));
  m.def(
      "inner_intervals",
      [](const Polyomino& p) {
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
        for (const Interval& iv : inner_intervals(p))
          out.push_back({from_vertex(iv.lo), from_vertex(iv.hi)});
        return out;
      },
      py::arg("p"), "Inner intervals as ((lo_x, lo_y), (hi_x, hi_y)) pairs");

  m.def("prop21", &conditions::prop21, py::arg("p"), py::arg("odd_class"),
        "Pair condition deciding quadraticity for one parity class");
  m.def(
      "pi",
      [](const Polyomino& p, std::pair<int, int> v, int k) {
        return conditions::pi(p, to_vertex(v), k);
      },
      py::arg("p"), py::arg("v"), py::arg("k"), "Vertex predicate for order k rotated at v");
  m.def("conditions_report",
        [](const Polyomino& p) { return report_dict(conditions::primality_sufficient(p)); },
        py::arg("p"));
  m.def(
      "thin_obstructions",
      [](const Polyomino& p, bool odd_class) {
        std::vector<std::pair<std::string, std::pair<int, int>>> out;
        for (const auto& ob : conditions::thin_obstructions(p, odd_class))
          out.push_back({pattern_name(ob.pattern), from_vertex(ob.offset)});
        return out;
      },
      py::arg("p"), py::arg("odd_class"));

  m.def(
      "reduced_basis",
      [](const Polyomino& p, int order, const std::optional<std::pair<int, int>>& rotate_at,
         uint64_t pair_budget) {
        gbasis::GroebnerBasis b =
            gbasis::reduced_basis(p, make_order(p, order, rotate_at), pair_budget);
        std::vector<std::string> lines;
        for (const gbasis::Binomial& f : b.elems)
          lines.push_back(gbasis::to_string(f, b.order.vars()));
        return lines;
      },
      py::arg("p"), py::arg("order") = 1, py::arg("rotate_at") = std::nullopt,
      py::arg("pair_budget") = gbasis::kDefaultPairBudget,
      "Reduced basis elements as strings, sorted by leading monomial");
  m.def(
      "is_quadratic_gb",
      [](const Polyomino& p, int order, const std::optional<std::pair<int, int>>& rotate_at,
         uint64_t pair_budget) {
        return gbasis::is_quadratic_gb(p, make_order(p, order, rotate_at), pair_budget);
      },
      py::arg("p"), py::arg("order") = 1, py::arg("rotate_at") = std::nullopt,
      py::arg("pair_budget") = gbasis::kDefaultPairBudget);
  m.def(
      "is_prime",
      [](const Polyomino& p, uint64_t pair_budget) {
        gbasis::PrimalityCertificate c = gbasis::is_prime(p, pair_budget);
        py::dict d;
        d["prime"] = c.prime;
        d["witness"] = c.witness ? py::object(py::str(gbasis::to_string(
                                       *c.witness, c.saturation.ideal_gb.order.vars())))
                                 : py::object(py::none());
        d["witness_in_lattice"] = c.witness_in_lattice;
        d["saturation_passes"] = c.saturation.passes;
        return d;
      },
      py::arg("p"), py::arg("pair_budget") = gbasis::kDefaultPairBudget);
  m.def(
      "find_witness",
      [](const Polyomino& p, int max_degree,
         uint64_t pair_budget) -> std::optional<std::pair<std::string, int>> {
        auto w = lattice::find_witness(p, max_degree, pair_budget);
        if (!w) return std::nullopt;
        return std::make_pair(gbasis::to_string(w->binomial, VarTable(p)), w->degree);
      },
      py::arg("p"), py::arg("max_degree"), py::arg("pair_budget") = uint64_t{1'000'000});

  m.def(
      "make_grid",
      [](int m_, int n_, const std::vector<std::pair<int, int>>& cols,
         const std::vector<std::pair<int, int>>& rows) {
        return families::make_grid({m_, n_, cols, rows});
      },
      py::arg("m"), py::arg("n"), py::arg("cols"), py::arg("rows"));
  m.def(
      "make_subgrid",
      [](const Polyomino& g, const std::vector<std::pair<int, int>>& deleted) {
        return families::make_subgrid(g, to_cells(deleted));
      },
      py::arg("grid"), py::arg("deleted"));
  m.def(
      "split_p1_p2",
      [](const Polyomino& g) {
        auto [p1, p2] = families::split_P1_P2(g);
        std::vector<std::pair<int, int>> a, b;
        for (Cell c : p1) a.push_back(from_vertex(c));
        for (Cell c : p2) b.push_back(from_vertex(c));
        return std::make_pair(a, b);
      },
      py::arg("grid"));
  m.def(
      "make_thin_cycle",
      [](const std::string& runs) {
        families::ThinCycle tc = families::make_thin_cycle(families::parse_runs(runs));
        return std::make_pair(tc.poly, tc.min_run);
      },
      py::arg("runs"), "Returns (polyomino, min_run)");
  m.def(
      "enumerate_fixed",
      [](int rank, int rank_cap) {
        std::vector<Polyomino> out;
        families::enumerate_fixed(rank, [&](const Polyomino& p) { out.push_back(p); }, rank_cap);
        return out;
      },
      py::arg("rank"), py::arg("rank_cap") = 8);
  m.def("gallery", [] {
    py::dict d;
    for (const auto& [name, ascii] : families::gallery_ascii()) d[py::str(name)] = ascii;
    return d;
  });
  m.def("gallery_shape", &families::gallery_shape, py::arg("name"));
}

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <wpg/energy.hpp>
#include <wpg/generators.hpp>
#include <wpg/io.hpp>
#include <wpg/parity.hpp>
#include <wpg/reductions.hpp>
#include <wpg/threshold.hpp>
#include <wpg/weights.hpp>

namespace py = pybind11;
using namespace wpg;

namespace
{
  std::vector<bool> as_list(const region_t& r) { return {r.begin(), r.end()}; }

  std::vector<std::tuple<vertex_t, weight_t>> successors(const arena& a,
                                                         vertex_t v)
  {
    if (v >= a.size())
      throw py::index_error("vertex out of range");
    std::vector<std::tuple<vertex_t, weight_t>> out;
    for (auto& e : a.successors(v))
      out.emplace_back(e.to, e.weight);
    return out;
  }
}

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Solvers for parity games with weights";

  auto base = py::register_exception<error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<validation_error>(m, "ValidationError", base.ptr());
  py::register_exception<parse_error>(m, "ParseError", base.ptr());
  py::register_exception<capacity_error>(m, "CapacityError", base.ptr());
  py::register_exception<overflow_error>(m, "OverflowError", base.ptr());
  py::register_exception<not_winning_error>(m, "NotWinningError", base.ptr());
  py::register_exception<dead_end_error>(m, "DeadEndError", base.ptr());

  py::class_<arena>(m, "Arena")
    .def("__len__", &arena::size)
    .def_property_readonly("edge_count", &arena::edge_count)
    .def("owner", [](const arena& a, vertex_t v) { return index(a.owner(v)); })
    .def("color", &arena::color)
    .def("successors", &successors)
    .def(py::self == py::self);

  py::class_<game_instance>(m, "Instance")
    .def_property_readonly("kind", [](const game_instance& g) { return keyword(g.kind); })
    .def_readonly("arena", &game_instance::arena)
    .def_readonly("credit", &game_instance::credit)
    .def_readonly("meta", &game_instance::meta)
    .def(py::self == py::self)
    .def("__str__", [](const game_instance& g) { return serialize(g); });

  m.def("parse", &parse_instance, py::arg("text"));
  m.def("serialize", py::overload_cast<const game_instance&>(&serialize));

  m.def("solve_parity", [](const arena& a) { return as_list(solve_parity(a).win0); });
  m.def("solve_energy_parity",
        [](const arena& a) { return as_list(solve_energy_parity(a).win0); });
  m.def("solve_bounded_weight_parity",
        [](const arena& a) { return as_list(solve_bounded_weight_parity(a).win0); });
  m.def("solve_weight_parity",
        [](const arena& a) { return as_list(solve_weight_parity(a).win0); });
  m.def("minimal_initial_credit",
        [](const arena& a, vertex_t v) { return minimal_initial_credit(a, v); });

  m.def("threshold", [](const arena& a, vertex_t v, weight_t b) {
    return threshold_decide(a, v, b);
  }, py::arg("arena"), py::arg("vertex"), py::arg("bound"));
  m.def("optimal_cost", [](const arena& a, vertex_t v) -> std::optional<std::uint64_t> {
    const auto c = optimal_cost(a, v);
    if (c == infinite_cost)
      return std::nullopt;
    return c;
  });
  m.def("saturation_bound", &saturation_bound);

  m.def("solve_countdown", [](const game_instance& g, vertex_t v) {
    return solve_countdown(countdown_of(g), v);
  });

  m.def("gen_memory_family", &gen_memory_family, py::arg("n"), py::arg("w"));
  m.def("gen_cost_family", &gen_cost_family, py::arg("n"), py::arg("w"));
  m.def("figure", &figure, py::arg("name"));
  m.def("gen_random", [](std::uint64_t seed, std::uint32_t n, color_t colors,
                         weight_t w, double density) {
    return gen_random(seed, n, colors, w, density);
  }, py::arg("seed"), py::arg("n"), py::arg("max_color"), py::arg("max_w"),
        py::arg("density"));
  m.def("gen_random_countdown", &gen_random_countdown, py::arg("seed"),
        py::arg("n"), py::arg("max_decrement"), py::arg("credit"));
}

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/abelian.hpp"
#include "cayley/bench.hpp"
#include "cayley/find_subgroup.hpp"
#include "cayley/table.hpp"
#include "cayley/testkit.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

std::optional<std::string> message_of(const std::optional<Defect>& d) {
  if (!d) return std::nullopt;
  return d->message();
}

CayleyTable from_rows(const std::vector<std::vector<ElementId>>& rows) {
  std::vector<ElementId> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) {
      throw GroupError(ErrorKind::MalformedInput, "table must be square");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return CayleyTable::from_products(rows.size(), std::move(flat));
}

std::vector<std::vector<ElementId>> to_rows(const CayleyTable& t) {
  std::vector<std::vector<ElementId>> rows(t.order());
  for (ElementId i = 0; i < t.order(); ++i)
    rows[i].assign(t.row(i).begin(), t.row(i).end());
  return rows;
}

AssociativityMode mode_of(const std::string& name) {
  if (name == "full") return AssociativityMode::full;
  if (name == "light") return AssociativityMode::light;
  throw py::value_error("mode must be 'full' or 'light'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroups of prescribed order in Cayley-table groups";

  static py::exception<GroupError> group_error(m, "GroupError",
                                               PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GroupError& e) {
      py::set_error(group_error, e.what());
    }
  });

  py::class_<CayleyTable>(m, "CayleyTable")
      .def_static("parse", py::overload_cast<std::string_view>(&parse_table),
                  py::arg("text"))
      .def_static("from_rows", &from_rows, py::arg("rows"))
      .def_property_readonly("order", &CayleyTable::order)
      .def_property_readonly("identity", &CayleyTable::identity)
      .def_property_readonly("abelian", &CayleyTable::abelian)
      .def("product", &CayleyTable::product, py::arg("a"), py::arg("b"))
      .def("rows", &to_rows)
      .def("__len__", &CayleyTable::order)
      .def("__eq__", [](const CayleyTable& a, const CayleyTable& b) {
        return a == b;
      })
      .def("__str__", &format_table);

  py::class_<Subgroup>(m, "Subgroup")
      .def_readonly("elements", &Subgroup::elements)
      .def_readonly("generators", &Subgroup::generators)
      .def_readonly("parent_order", &Subgroup::parent_order)
      .def("__len__", &Subgroup::size)
      .def("__contains__", &Subgroup::contains)
      .def("__repr__", [](const Subgroup& h) {
        return "<Subgroup of order " + std::to_string(h.size()) + ">";
      });

  m.def("format_table", &format_table);
  m.def(
      "check_associativity",
      [](const CayleyTable& t, const std::string& mode) {
        return message_of(check_associativity(t, mode_of(mode)));
      },
      py::arg("table"), py::arg("mode") = "light",
      "None when associative, otherwise a message with a witness triple.");
  m.def("is_abelian", &is_abelian);
  m.def("inverse", &inverse);
  m.def("power", &power, py::arg("table"), py::arg("a"), py::arg("k"));
  m.def("element_order", &element_order);
  m.def("cyclic_subgroup", &cyclic_subgroup);
  m.def("closure", [](const CayleyTable& t, const std::vector<ElementId>& g) {
    return closure(t, g);
  });
  m.def("factorize", [](std::uint64_t k) { return factorize(k).factors; });

  m.def("sylow_component", &sylow_component);
  m.def("primary_part", [](const CayleyTable& t, std::uint64_t mm) {
    auto pp = primary_part(t, mm);
    return py::make_tuple(pp.part, pp.primes);
  });
  m.def("quotient", [](const CayleyTable& t, const Subgroup& n) {
    auto q = quotient(t, n);
    return py::make_tuple(std::move(q.table), q.projection,
                          q.representatives);
  });
  m.def("subgroup_table", [](const CayleyTable& t, const Subgroup& h) {
    auto st = subgroup_table(t, h);
    return py::make_tuple(std::move(st.table), st.to_parent);
  });
  m.def("subgroup_of_order", &subgroup_of_order, py::arg("table"),
        py::arg("ambient"), py::arg("m"));

  py::enum_<Branch>(m, "Branch")
      .value("early_exit", Branch::early_exit)
      .value("pruned", Branch::pruned)
      .value("retained", Branch::retained)
      .value("retained_and_constructed", Branch::retained_and_constructed);

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("chosen", &TraceStep::chosen)
      .def_readonly("cyclic_order", &TraceStep::cyclic_order)
      .def_readonly("branch", &TraceStep::branch)
      .def_readonly("running_generated_order",
                    &TraceStep::running_generated_order);

  m.def("find_subgroup", &find_subgroup, py::arg("table"), py::arg("m"));
  m.def(
      "find_subgroup_traced",
      [](const CayleyTable& t, std::uint64_t mm) {
        auto [h, trace] = find_subgroup_traced(t, mm);
        return py::make_tuple(std::move(h), std::move(trace.steps));
      },
      py::arg("table"), py::arg("m"));
  m.def("retained_generators", &retained_generators);

  auto tk = m.def_submodule("testkit", "Group builders and the oracle");
  tk.def("build_cyclic", &testkit::build_cyclic);
  tk.def("build_direct_product", &testkit::build_direct_product);
  tk.def("build_abelian", [](const std::vector<std::uint64_t>& inv) {
    return testkit::build_abelian(inv);
  });
  tk.def("build_dihedral", &testkit::build_dihedral);
  tk.def("build_quaternion", &testkit::build_quaternion);
  tk.def("build_symmetric", &testkit::build_symmetric);
  tk.def("build_alternating", &testkit::build_alternating);
  tk.def("random_abelian", [](std::uint64_t max_order, std::uint64_t seed) {
    auto r = testkit::random_abelian(max_order, seed);
    return py::make_tuple(std::move(r.table), r.invariants);
  });
  tk.def("enumerate_subgroups", &testkit::enumerate_subgroups,
         py::arg("table"), py::arg("allow_large") = false);
  tk.def("has_subgroup_of_order", &testkit::has_subgroup_of_order,
         py::arg("table"), py::arg("m"), py::arg("allow_large") = false);
  tk.def(
      "verify_subgroup",
      [](const CayleyTable& t, const Subgroup& h, std::uint64_t mm) {
        return message_of(testkit::verify_subgroup(t, h, mm));
      },
      "None when h is a subgroup of order m, otherwise the defect.");

  m.def(
      "bench",
      [](std::size_t min_n, std::size_t max_n, const std::string& family,
         unsigned repeats) {
        bench::Options opt;
        opt.min_n = min_n;
        opt.max_n = max_n;
        auto fam = bench::parse_family(family);
        if (!fam) throw py::value_error("family must be 'cyclic' or 'mixed'");
        opt.family = *fam;
        opt.repeats = repeats;
        auto report = bench::run(opt);
        py::list rows;
        for (const auto& r : report.rows) {
          py::dict d;
          d["n"] = r.n;
          d["m"] = r.m;
          d["wall_time"] = r.wall_time;
          d["table_build_time"] = r.table_build_time;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["fitted_exponent"] = report.fitted_exponent;
        return out;
      },
      py::arg("min_n") = 256, py::arg("max_n") = 2048,
      py::arg("family") = "mixed", py::arg("repeats") = 1);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}

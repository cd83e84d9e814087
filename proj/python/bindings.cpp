#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "twb/abelian.hpp"
#include "twb/character_table.hpp"
#include "twb/corpus.hpp"
#include "twb/errors.hpp"
#include "twb/finite_group.hpp"
#include "twb/group_map.hpp"
#include "twb/lattice_extension.hpp"
#include "twb/mobius.hpp"
#include "twb/twisted.hpp"

namespace py = pybind11;
using namespace twb;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const ReidemeisterValue& v) {
  if (v.is_infinite()) return py::float_(INFINITY);
  return to_py(v.value());
}

BigInt from_py(const py::handle& h) { return parse_bigint(py::str(h).cast<std::string>()); }

IntegerMatrix matrix_from_py(const py::sequence& rows) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& row : rows) {
    std::vector<BigInt> r;
    for (const auto& v : row.cast<py::sequence>()) r.push_back(from_py(v));
    out.push_back(std::move(r));
  }
  return IntegerMatrix(out);
}

py::list sequence_to_py(const std::vector<ReidemeisterValue>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

ReidemeisterSequence sequence_from_py(const py::sequence& values) {
  ReidemeisterSequence seq{{}, "python"};
  for (const auto& v : values) {
    if (py::isinstance<py::float_>(v) && std::isinf(v.cast<double>())) seq.values.push_back(ReidemeisterValue::infinite());
    else seq.values.emplace_back(from_py(v));
  }
  return seq;
}

py::list report_to_py(const CongruenceReport& report) {
  py::list out;
  for (const auto& e : report.entries) {
    py::dict d;
    d["n"] = e.n;
    d["P_n"] = e.periodic_count ? to_py(*e.periodic_count) : py::object(py::none());
    d["passes"] = e.passes;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Twisted conjugacy classes, Reidemeister numbers and the twisted Burnside check";

  py::register_exception<Error>(m, "TwbError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("from_cayley",
                  [](const std::vector<std::vector<Elem>>& table) { return FiniteGroup::from_cayley(table); },
                  py::arg("table"))
      .def_static("from_permutations",
                  [](std::size_t degree, const std::vector<std::vector<std::size_t>>& gens) {
                    return FiniteGroup::from_permutations(degree, gens);
                  },
                  py::arg("degree"), py::arg("generators"))
      .def_static("builtin",
                  [](const std::string& name, const std::vector<long long>& params) {
                    return builtin_group(name, params);
                  },
                  py::arg("name"), py::arg("params") = std::vector<long long>{})
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("label", &FiniteGroup::label)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("__len__", &FiniteGroup::order);

  py::class_<GroupMap>(m, "GroupMap")
      .def_static("identity", &GroupMap::identity, py::arg("group"))
      .def_static("from_image",
                  [](const FiniteGroup& g, std::vector<Elem> image) { return GroupMap::from_image(g, g, std::move(image)); },
                  py::arg("group"), py::arg("image"))
      .def_static("from_generators",
                  [](const FiniteGroup& g, const std::vector<Elem>& gens, const std::vector<Elem>& images) {
                    return endo_from_images(g, gens, images);
                  },
                  py::arg("group"), py::arg("generators"), py::arg("images"))
      .def_property_readonly("image", &GroupMap::image)
      .def_property_readonly("is_bijective", &GroupMap::is_bijective)
      .def("__call__", &GroupMap::operator())
      .def("__pow__", &iterate_map)
      .def("__eq__", [](const GroupMap& a, const GroupMap& b) { return a == b; });

  m.def("enumerate_endomorphisms", &enumerate_endomorphisms, py::arg("group"), py::arg("automorphisms_only") = false,
        py::arg("search_cap") = kDefaultSearchCap);

  m.def(
      "twisted_classes",
      [](const GroupMap& phi) {
        const auto p = twisted_classes(phi);
        py::dict d;
        d["class_of"] = p.class_of;
        d["reps"] = p.class_reps;
        d["sizes"] = p.class_sizes;
        return d;
      },
      py::arg("phi"), "class_of, reps and sizes of the twisted conjugacy classes");
  m.def("reidemeister_number", &reidemeister_number, py::arg("phi"));
  m.def(
      "eventual_image",
      [](const GroupMap& phi) {
        const auto ev = eventual_image(phi);
        return py::make_tuple(ev.embedding, ev.steps, reidemeister_number(ev.restricted));
      },
      py::arg("phi"), "(embedding, steps, R of the restriction)");

  m.def(
      "character_table",
      [](const FiniteGroup& g) {
        const auto t = character_table(g);
        py::dict d;
        d["degrees"] = t.degrees;
        d["class_reps"] = t.classes.reps;
        d["class_sizes"] = t.classes.sizes;
        d["exponent"] = t.classes.exponent;
        py::list rows;
        for (const auto& row : t.chars) {
          py::list r;
          for (const auto& v : row) r.append(v.to_complex());
          rows.append(r);
        }
        d["values"] = rows;
        py::list exact;
        for (const auto& row : t.chars) {
          py::list r;
          for (const auto& v : row) r.append(v.to_string());
          exact.append(r);
        }
        d["exact"] = exact;
        return d;
      },
      py::arg("group"), "character table; 'values' are numerical, 'exact' are strings in z = exp(2 pi i / exponent)");
  m.def(
      "burnside_check",
      [](const GroupMap& phi) {
        const auto r = burnside_check(phi);
        return py::make_tuple(r.reidemeister, r.fixed_points);
      },
      py::arg("phi"), "(R(phi), number of irreducible characters fixed by phi)");

  m.def(
      "reidemeister_abelian",
      [](std::size_t rank, const py::sequence& torsion, const py::sequence& matrix) {
        std::vector<BigInt> t;
        for (const auto& d : torsion) t.push_back(from_py(d));
        return to_py(reidemeister_abelian(AbelianEndo(FgAbelianGroup(rank, t), matrix_from_py(matrix))));
      },
      py::arg("rank"), py::arg("torsion"), py::arg("matrix"));
  m.def(
      "reidemeister_extension",
      [](const py::sequence& theta, const py::sequence& b, int eps) {
        LatticeExtensionGroup g(matrix_from_py(theta));
        return to_py(reidemeister_extension(g, validate_extension_endo(g, matrix_from_py(b), eps)));
      },
      py::arg("theta"), py::arg("B"), py::arg("eps"));
  m.def(
      "torus_map_reidemeister",
      [](const py::sequence& a, std::size_t n_max) { return sequence_to_py(torus_map_reidemeister(matrix_from_py(a), n_max).values); },
      py::arg("matrix"), py::arg("n_max"));

  m.def("mobius", &mobius, py::arg("n"));
  m.def(
      "periodic_class_counts",
      [](const py::sequence& seq) {
        py::list out;
        for (const auto& p : periodic_class_counts(sequence_from_py(seq))) out.append(to_py(p));
        return out;
      },
      py::arg("sequence"));
  m.def(
      "congruence_check",
      [](const py::sequence& seq) { return report_to_py(congruence_check_partial(sequence_from_py(seq))); },
      py::arg("sequence"), "per-n entries; P_n is None where an infinite value is needed");

  m.def(
      "run_corpus",
      [](std::size_t max_order, bool automorphisms_only, std::size_t n_max, std::size_t jobs) {
        CorpusOptions o;
        o.max_order = max_order;
        o.automorphisms_only = automorphisms_only;
        o.n_max = n_max;
        o.jobs = jobs;
        CorpusSummary s;
        {
          py::gil_scoped_release release;
          s = run_corpus(o);
        }
        py::dict d;
        d["pairs"] = s.pairs();
        d["failures"] = s.failures();
        py::list groups;
        for (const auto& g : s.groups) groups.append(py::make_tuple(g.name, g.order, g.maps));
        d["groups"] = groups;
        return d;
      },
      py::arg("max_order") = 24, py::arg("automorphisms_only") = false, py::arg("n_max") = 12, py::arg("jobs") = 1);
}

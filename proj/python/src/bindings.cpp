#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclotome/errors.hpp"
#include "cyclotome/literal.hpp"
#include "cyclotome/report.hpp"
#include "cyclotome/serre_dims.hpp"

namespace py = pybind11;
using namespace cyclotome;

namespace {

py::object fraction(HalfInt x) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(x.twice(), 2);
}

template <class Tag>
py::dict entries(const CycVector<Tag>& v) {
  py::dict d;
  for (const auto& [x, m] : v.entries()) d[py::make_tuple(x.vertex + 1, x.height)] = m;
  return d;
}

DerivedObject object(const CycIndex& ci, const std::string& name) {
  auto x = ci.category().parse_name(name);
  if (!x) throw ParseError("unknown object '" + name + "'");
  return *x;
}

py::dict report_dict(const VerificationReport& r) {
  py::list checks;
  for (const auto& c : r.checks)
    checks.append(py::dict(py::arg("name") = c.name, py::arg("computed") = c.computed,
                           py::arg("expected") = c.expected, py::arg("pass") = c.pass));
  return py::dict(py::arg("relation") = r.relation, py::arg("type") = r.type, py::arg("orientation") = r.orientation,
                  py::arg("args") = r.args, py::arg("pass") = r.pass(), py::arg("checks") = checks,
                  py::arg("notes") = r.notes);
}

template <class Tag>
void bind_vector(py::module_& m, const char* name) {
  using V = CycVector<Tag>;
  py::class_<V>(m, name)
      .def("entries", &entries<Tag>, "{(vertex, height): multiplicity}, vertices 1-based")
      .def("total", &V::total)
      .def("is_zero", &V::is_zero)
      .def("__add__", [](const V& a, const V& b) { return a + b; })
      .def("__sub__", [](const V& a, const V& b) { return a - b; })
      .def("__eq__", [](const V& a, const V& b) { return a == b; })
      .def("__hash__", [](const V& v) { return py::hash(py::frozenset(py::dict(entries(v)).attr("items")())); })
      .def("__repr__", [name](const V& v) { return std::string(name) + "(" + py::str(entries(v)).cast<std::string>() + ")"; });
}

}  // namespace

PYBIND11_MODULE(_cyclotome, m) {
  m.doc() = "Exact combinatorics of cyclic quiver varieties at roots of unity";
  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Quiver>(m, "Quiver")
      .def_static("load", &Quiver::load, py::arg("type"), py::arg("orientation") = "linear")
      .def_static("parse", &Quiver::parse, py::arg("text"))
      .def_property_readonly("rank", &Quiver::rank)
      .def_property_readonly("type", [](const Quiver& q) { return q.type().name(); })
      .def_property_readonly("coxeter_number", &Quiver::coxeter_number)
      .def_property_readonly("arrows",
                             [](const Quiver& q) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& a : q.arrows()) out.emplace_back(a.source + 1, a.target + 1);
                               return out;
                             })
      .def("orientation_label", &Quiver::orientation_label)
      .def("cartan_matrix",
           [](const Quiver& q) {
             std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(q.rank()));
             for (int i = 0; i < q.rank(); ++i)
               for (int j = 0; j < q.rank(); ++j) out[static_cast<std::size_t>(i)].push_back(q.cartan_entry(i, j));
             return out;
           })
      .def("euler_form",
           [](const Quiver& q, std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
             return q.euler_form(DimensionVector(std::move(x)), DimensionVector(std::move(y)));
           })
      .def("positive_roots",
           [](const Quiver& q) {
             std::vector<std::vector<std::int64_t>> out;
             for (const auto& r : q.positive_roots()) out.push_back(r.coords());
             return out;
           })
      .def("to_text", &Quiver::to_text)
      .def("__repr__", [](const Quiver& q) { return "Quiver(" + q.type().name() + ", " + q.orientation_label() + ")"; });

  m.def("all_orientations", [](const std::string& type) { return Quiver::all_orientations(DynkinType::parse(type)); });

  bind_vector<SigmaHatSide>(m, "VVector");
  bind_vector<HatSide>(m, "WVector");

  py::class_<VWPair>(m, "Pair")
      .def(py::init<>())
      .def_readwrite("v", &VWPair::v)
      .def_readwrite("w", &VWPair::w)
      .def("__eq__", [](const VWPair& a, const VWPair& b) { return a == b; })
      .def("__add__", [](const VWPair& a, const VWPair& b) { return a + b; });

  py::class_<CycIndex>(m, "CycIndex")
      .def(py::init([](const Quiver& q) { return CycIndex::build(q); }))
      .def_static("of", [](const std::string& type, const std::string& orientation) {
        return CycIndex::build(Quiver::load(type, orientation));
      }, py::arg("type"), py::arg("orientation") = "linear")
      .def_property_readonly("quiver", &CycIndex::quiver, py::return_value_policy::copy)
      .def_property_readonly("h", &CycIndex::h)
      .def_property_readonly("rank", &CycIndex::rank)
      .def("sigma_hat", [](const CycIndex& ci) {
        std::vector<std::pair<int, int>> out;
        for (const auto& x : ci.sigma_hat_vertices()) out.emplace_back(x.vertex + 1, x.height);
        return out;
      })
      .def("hat", [](const CycIndex& ci) {
        std::vector<std::pair<int, int>> out;
        for (const auto& x : ci.hat_vertices()) out.emplace_back(x.vertex + 1, x.height);
        return out;
      })
      .def("name", [](const CycIndex& ci, int i, int a) { return ci.name(ci.make(i - 1, a)); })
      .def("modules", [](const CycIndex& ci) {
        std::vector<std::string> out;
        for (const auto& mod : ci.category().modules()) out.push_back(ci.category().name(mod));
        return out;
      })
      .def("format", [](const CycIndex& ci, const VVector& v) { return to_string(ci, v); })
      .def("format", [](const CycIndex& ci, const WVector& w) { return to_string(ci, w); })
      .def("format", [](const CycIndex& ci, const VWPair& p) { return to_string(ci, p); })
      .def("q_cartan", &CycIndex::q_cartan_apply)
      .def("Sigma_star", py::overload_cast<const VVector&>(&CycIndex::Sigma_star, py::const_))
      .def("Sigma_star", py::overload_cast<const WVector&>(&CycIndex::Sigma_star, py::const_));

  m.def("parse_v", &parse_v_literal, py::arg("ci"), py::arg("literal"));
  m.def("parse_w", &parse_w_literal, py::arg("ci"), py::arg("literal"));
  m.def("parse_pair", &parse_pair_literal, py::arg("ci"), py::arg("literal"));

  m.def("hom_dim", [](const CycIndex& ci, const std::string& x, const std::string& y) {
    return ci.category().hom_dim(object(ci, x), object(ci, y));
  });
  m.def("v_f", &v_f, py::arg("ci"), py::arg("i0"));
  m.def("v_sigma_f", &v_sigma_f, py::arg("ci"), py::arg("i0"));
  m.def("w_f", &w_f, py::arg("ci"), py::arg("i0"));
  m.def("residual", &residual);
  m.def("is_l_dominant", &is_l_dominant);
  m.def("iota", [](const CycIndex& ci, const std::string& name) {
    const DerivedObject x = object(ci, name);
    if (x.shift != 0) throw NotIndecomposable(name + " is not a module");
    return iota(ci, x.module);
  });
  m.def("lift", &solve_w_tilde, py::arg("ci"), py::arg("w_tilde"));
  m.def("enumerate_l_dominant", [](const CycIndex& ci, const WVector& w) { return enumerate_l_dominant(ci, w); });
  m.def("enumerate_l_dominant_bruteforce",
        [](const CycIndex& ci, const WVector& w) { return enumerate_l_dominant_bruteforce(ci, w); });
  m.def("dominant_count", &dominant_count);
  m.def("kostant_partitions", [](const Quiver& q, std::vector<std::int64_t> beta) {
    return kostant_partitions(q, DimensionVector(std::move(beta)));
  });

  m.def("d_form", &d_form);
  m.def("twist_exponent", [](const CycIndex& ci, const WVector& a, const WVector& b) {
    return fraction(twist_exponent(ci, a, b));
  });
  m.def("leading_exponent_tilde", &leading_exponent_tilde);
  m.def("leading_exponent", [](const CycIndex& ci, const VWPair& a, const VWPair& b) {
    return fraction(leading_exponent(ci, a, b));
  });
  m.def("script_N", [](const CycIndex& ci, const VWPair& a, const VWPair& b) { return fraction(script_N(ci, a, b)); });
  m.def("hl_form", [](const CycIndex& ci, const std::string& x, const std::string& y) {
    const DerivedObject a = object(ci, x), b = object(ci, y);
    if (a.shift != 0 || b.shift != 0) throw NotIndecomposable("hl_form takes modules");
    return hl_form(ci, a.module, b.module);
  });

  m.def("verify", [](const CycIndex& ci, const std::string& which, int same_n_mass) {
    py::list out;
    for (const auto& r : verify_suite(ci, which, same_n_mass)) out.append(report_dict(r));
    return out;
  }, py::arg("ci"), py::arg("which") = "all", py::arg("same_n_mass") = 3);
  m.def("verify_json", [](const CycIndex& ci, const std::string& which, int same_n_mass) {
    return render_json(verify_suite(ci, which, same_n_mass));
  }, py::arg("ci"), py::arg("which") = "all", py::arg("same_n_mass") = 3);
  m.def("serre_quotient_dims", [](const Quiver& q, int maxdeg) {
    py::dict d;
    for (const auto& [beta, dim] : serre_quotient_dims(q, maxdeg)) d[py::tuple(py::cast(beta.coords()))] = dim;
    return d;
  }, py::arg("quiver"), py::arg("maxdeg"));
}

#include <toricsolve/arith.hpp>
#include <toricsolve/bounds.hpp>
#include <toricsolve/geometry.hpp>
#include <toricsolve/polytope.hpp>
#include <toricsolve/prefix.hpp>
#include <toricsolve/resultant.hpp>
#include <toricsolve/sysfile.hpp>
#include <toricsolve/unired.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace toricsolve;

namespace {

using Strings = std::vector<std::string>;

py::object pyint(const Int& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list pyints(const std::vector<Int>& v) {
  py::list out;
  for (const auto& x : v) out.append(pyint(x));
  return out;
}

// exact rational coefficients as (numerator, denominator) pairs
py::list pyrats(const UniPoly& f) {
  py::list out;
  for (const auto& c : f.coeffs()) out.append(py::make_tuple(pyint(c.get_num()), pyint(c.get_den())));
  return out;
}

Int toint(const py::int_& v) {
  const std::string s = py::str(py::handle(v));
  return Int(s);
}

PolySystem sys(const Strings& polys, const Strings& vars) { return parse_system(polys, vars); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse polynomial systems over the integers";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);

  m.def("bezout", [](const Strings& p, const Strings& v) { return pyint(bezout_bound(sys(p, v))); },
        py::arg("polys"), py::arg("vars"));
  m.def("normalized_volume", [](const Strings& p, const Strings& v) {
    return pyint(newton_polytope(sys(p, v)).normalized_volume());
  }, py::arg("polys"), py::arg("vars"), "V_F of Q_F");
  m.def("mixed_volume", [](const Strings& p, const Strings& v) {
    const auto F = sys(p, v);
    std::vector<LatticePolytope> Ps;
    for (const auto& f : F.polys()) Ps.push_back(newton_polytope(f));
    return pyint(mixed_volume(Ps));
  }, py::arg("polys"), py::arg("vars"));

  m.def("cascade", [](const Strings& p, const Strings& v, const std::string& projection, const std::string& pvar,
                      const Strings& order) {
    Strings all = v;
    all.push_back(pvar);
    return pyints(cascade_unired(sys(p, v), parse_poly(projection, all), order).coefficients);
  }, py::arg("polys"), py::arg("vars"), py::arg("projection"), py::arg("projection_var") = "u",
        py::arg("order") = Strings{}, "integer coefficients of P(u), ascending");

  m.def("univariate_reduction", [](const Strings& p, const Strings& v) {
    const auto r = univariate_reduction(sys(p, v));
    py::dict d;
    d["h"] = pyints(r.h.primitive_ints());
    d["u"] = pyints(r.u);
    d["epsilon"] = pyint(r.epsilon);
    d["V_F"] = pyint(r.V_F);
    d["M_F"] = r.M_F;
    return d;
  }, py::arg("polys"), py::arg("vars"));

  m.def("rur", [](const Strings& p, const Strings& v) {
    const auto F = sys(p, v);
    const auto r = rur(F);
    py::dict d;
    d["h"] = pyints(r.h.primitive_ints());
    d["u"] = pyints(r.base.u);
    d["epsilon"] = pyint(r.base.epsilon);
    py::list hi;
    for (const auto& f : r.h_i) hi.append(pyrats(f));
    d["h_i"] = hi;
    d["a_i"] = pyints(r.a_i);
    d["verified"] = verify_rur(F, r);
    return d;
  }, py::arg("polys"), py::arg("vars"));

  m.def("dimension", [](const Strings& p, const Strings& v, std::uint64_t seed) {
    DimensionOptions o;
    o.seed = seed;
    return dimension(sys(p, v), o);
  }, py::arg("polys"), py::arg("vars"), py::arg("seed") = 0, "-1 for the empty zero set");

  m.def("sturm_count", [](const std::vector<py::int_>& coeffs) {
    std::vector<Int> c;
    for (const auto& x : coeffs) c.push_back(toint(x));
    return sturm_count(UniPoly::from_ints(c));
  }, py::arg("coeffs"), "distinct real roots; ascending integer coefficients");

  m.def("count_roots_mod_p", [](const Strings& p, const Strings& v, u64 prime) {
    return count_roots_mod_p(sys(p, v), prime);
  }, py::arg("polys"), py::arg("vars"), py::arg("p"));
  m.def("prime_count", [](u64 lo, u64 hi) { return prime_count(lo, hi); }, py::arg("lo"), py::arg("hi"));

  m.def("forall_exists", [](const std::string& f, const std::string& ring, bool include_zero) {
    if (ring != "N" && ring != "Z") throw InputError("ring must be N or Z");
    const auto r = jst_decide(parse_poly(f, {"x", "y"}), ring == "N" ? Ring::N : Ring::Z, include_zero);
    py::dict d;
    d["verdict"] = r.verdict;
    d["condition1"] = r.condition1;
    d["condition2"] = r.condition2;
    d["condition3"] = r.condition3;
    d["alpha"] = pyint(r.alpha);
    py::list roots;
    for (const auto& g : r.roots) roots.append(pyrats(g));
    d["roots"] = roots;
    return d;
  }, py::arg("f"), py::arg("ring") = "N", py::arg("include_zero") = false, "f in variables x, y");

  m.def("m_bound", [](const Strings& p, const Strings& v) {
    const auto b = m_bound(sys(p, v));
    return py::make_tuple(b.value.lo_double(), b.value.hi_double());
  }, py::arg("polys"), py::arg("vars"), "enclosure (lower, upper) as floats");
  m.def("components_bound", [](std::size_t n, const py::int_& V, std::size_t p, std::size_t s) {
    return pyint(components_bound(n, toint(V), p, s));
  }, py::arg("n"), py::arg("V_F"), py::arg("p"), py::arg("s"));

  m.def("load_system_file", [](const std::string& path) {
    const auto s = load_system_file(path);
    py::dict d;
    d["vars"] = s.vars;
    d["names"] = s.names;
    Strings polys;
    for (const auto& f : s.system.polys()) polys.push_back(f.to_string());
    d["polys"] = polys;
    d["projection"] = s.projection ? py::object(py::str(s.projection->to_string())) : py::none();
    d["projection_var"] = s.projection_var;
    return d;
  }, py::arg("path"));
}

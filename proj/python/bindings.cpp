#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mds/cli.hpp"
#include "mds/errors.hpp"
#include "mds/render.hpp"

namespace py = pybind11;
using namespace mds;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

RatVec rationals(const std::vector<std::string>& v) {
  RatVec out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

RatVec sized(const std::vector<std::string>& v, std::size_t n, const char* what) {
  if (v.size() != n) throw ParseError(std::string(what) + " needs " + std::to_string(n) + " coordinates");
  return rationals(v);
}

CheckOptions options(long m_factor) {
  CheckOptions o;
  o.m_factor = m_factor;
  return o;
}

TetraTuple tuple_of(const std::vector<std::string>& v) {
  const RatVec t = sized(v, 4, "tuple");
  TetraTuple out{t[0], t[1], t[2], t[3]};
  out.validate();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact criteria for blowups of toric varieties that are not Mori Dream Spaces";

  // Later registrations are tried first, so the generic base goes first.
  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidPolytope>(m, "InvalidPolytope", PyExc_ValueError);
  py::register_exception<NotSizeOne>(m, "NotSizeOne", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.attr("SCHEMA") = kSchema;

  m.def("check_2d", [](const std::vector<std::string>& left, const std::vector<std::string>& right, long m_factor) {
    const RatVec l = sized(left, 2, "left"), r = sized(right, 2, "right");
    return dump(to_json(check_2d(Polygon4({l[0], l[1]}, {r[0], r[1]}), options(m_factor))));
  }, py::arg("left"), py::arg("right"), py::arg("m_factor") = 1);

  m.def("check_3d", [](const std::vector<std::string>& left, const std::vector<std::string>& right, long m_factor,
                       bool n1) {
    const RatVec l = sized(left, 3, "left"), r = sized(right, 3, "right");
    const Polytope3 p({l[0], l[1], l[2]}, {r[0], r[1], r[2]});
    return dump(to_json(n1 ? check_3d_n1(p, options(m_factor)) : check_3d(p, options(m_factor))));
  }, py::arg("left"), py::arg("right"), py::arg("m_factor") = 1, py::arg("n1") = false);

  m.def("check_tetra", [](const std::vector<std::string>& t) { return dump(to_json(check_tetra(tuple_of(t)))); },
        py::arg("tuple"));

  m.def("check_wps", [](const std::vector<std::int64_t>& w) { return dump(to_json(check_wps(WpsWeights(w)))); },
        py::arg("weights"));

  m.def("tetra_fan", [](const std::vector<std::string>& t) { return dump(to_json(tetra_fan(tuple_of(t)))); },
        py::arg("tuple"));

  m.def("search", [](int dim, std::int64_t bound, unsigned jobs) {
    std::vector<TableRow> rows;
    {
      py::gil_scoped_release release;
      rows = search(dim, bound, jobs);
    }
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    return dump(a);
  }, py::arg("dim"), py::arg("bound"), py::arg("jobs") = 1);

  m.def("closed_form_2d", [](long a, long b, long beta, long n) {
    return closed_form_2d({a, b, beta, n}).str();
  }, py::arg("A"), py::arg("B"), py::arg("beta"), py::arg("n"));

  m.def("closed_form_3d", [](long a, long b, long c, long beta, long gamma, long n, long d) {
    return closed_form_3d({a, b, c, beta, gamma, n}, d).str();
  }, py::arg("A"), py::arg("B"), py::arg("C"), py::arg("beta"), py::arg("gamma"), py::arg("n"), py::arg("d"));

  m.def("run_campaign", [](long s2, long s3, std::uint64_t seed) {
    return dump(to_json(run_campaign(s2, s3, seed)));
  }, py::arg("samples_2d"), py::arg("samples_3d"), py::arg("seed") = 20240101);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> all{"mds-oracle"};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : all) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}

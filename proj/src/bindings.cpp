#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "g3/covers.hpp"
#include "g3/maximal.hpp"
#include "g3/quotients.hpp"
#include "g3/serialize.hpp"

namespace py = pybind11;
using namespace g3;

namespace {

py::dict witness_dict(const Field& k, const CoverWitness& w) {
  py::dict d;
  d["curve"] = serialize(k, w.curve);
  d["family"] = family_tag(w.curve);
  d["permutation"] = w.permutation;
  return d;
}

py::dict report_dict(const MaximalReport& rep) {
  py::dict d;
  d["n"] = rep.n;
  d["q"] = rep.q;
  d["m"] = rep.m;
  d["m_mod8"] = rep.m_mod8;
  d["status"] = to_string(rep.status);
  d["frac_below_threshold"] = rep.frac_below ? py::cast(*rep.frac_below) : py::none();
  d["nq3_lo"] = rep.nq3_lo ? py::cast(*rep.nq3_lo) : py::none();
  d["nq3_hi"] = rep.nq3_hi ? py::cast(*rep.nq3_hi) : py::none();
  if (rep.witness) {
    const Field k(rep.n);
    d["witness"] = serialize(k, *rep.witness);
  } else {
    d["witness"] = py::none();
  }
  d["count"] = rep.count ? py::cast(*rep.count) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "genus-3 curves with split Jacobians over GF(2^n)";

  py::class_<Field>(m, "Field")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, Fe>(), py::arg("n"), py::arg("modulus"))
      .def_property_readonly("n", &Field::degree)
      .def_property_readonly("q", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("r0", &Field::r0)
      .def("add", &Field::add)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("div", &Field::div)
      .def("pow", &Field::pow)
      .def("sqrt", &Field::sqrt)
      .def("root4", &Field::root4)
      .def("root8", &Field::root8)
      .def("trace", &Field::trace)
      .def("in_as", &Field::in_as)
      .def("solve_as", &Field::solve_as)
      .def("cubic_roots", &Field::cubic_roots)
      .def("__repr__", [](const Field& k) {
        return "Field(n=" + std::to_string(k.degree()) + ", modulus=0x" + to_hex(k.modulus()) +
               ")";
      });

  // genus-3 curves travel as their canonical string forms
  m.def("validate",
        [](const Field& k, const std::string& s) { return validate(k, parse_genus3(k, s)); });
  m.def("count_points",
        [](const Field& k, const std::string& s) { return count_points(k, parse_genus3(k, s)); });
  m.def("quotients", [](const Field& k, const std::string& s) {
    const auto triple = quotients_of(k, parse_genus3(k, s));
    std::vector<std::string> out;
    if (triple.ordinary())
      for (const auto& e : triple.ord()) out.push_back(serialize(k, e));
    else
      for (const auto& e : triple.ss()) out.push_back(serialize(k, e));
    return out;
  });
  m.def("verify_isogeny", [](const Field& k, const std::string& s) {
    const auto rep = verify_isogeny(k, parse_genus3(k, s));
    py::dict d;
    d["count"] = rep.count;
    d["traces"] = rep.traces;
    d["trace_sum"] = rep.trace_sum;
    d["expected"] = rep.expected;
    d["ok"] = rep.ok;
    return d;
  });

  m.def("elliptic_count", [](const Field& k, const std::string& s) {
    return std::visit([&](const auto& e) { return count_points(k, e); }, parse_elliptic(k, s));
  });
  m.def("elliptic_trace", [](const Field& k, const std::string& s) {
    return std::visit([&](const auto& e) { return trace_of(k, e); }, parse_elliptic(k, s));
  });
  m.def("elliptic_invariants", [](const Field& k, const std::string& s) {
    const auto e = parse_elliptic(k, s);
    if (!std::holds_alternative<WeierstrassOrd>(e))
      throw std::invalid_argument("invariants are defined for ordinary curves");
    const auto inv = invariants_of(k, std::get<WeierstrassOrd>(e));
    py::dict d;
    d["j"] = inv.j;
    d["sgn"] = inv.sgn;
    d["trace"] = inv.trace;
    return d;
  });

  m.def(
      "cover_exists_hyp",
      [](const Field& k, std::array<Fe, 3> j, std::array<Fe, 3> sgn) -> py::object {
        const auto w = exists_hyp_cover(k, make_triple_invariants(k, j, sgn));
        if (!w) return py::none();
        return witness_dict(k, *w);
      },
      py::arg("field"), py::arg("j"), py::arg("sgn"));
  m.def(
      "cover_exists_nonhyp",
      [](const Field& k, std::array<Fe, 3> j, std::array<Fe, 3> sgn) -> py::object {
        const auto w = exists_nonhyp_cover(k, make_triple_invariants(k, j, sgn));
        if (!w) return py::none();
        return witness_dict(k, *w);
      },
      py::arg("field"), py::arg("j"), py::arg("sgn"));
  m.def(
      "ss_cover_search",
      [](const Field& k, std::array<long long, 3> traces, std::uint64_t max_candidates) {
        const auto res = exists_ss_cover(k, traces, max_candidates);
        py::dict d;
        d["status"] = res.status == SearchStatus::found
                          ? "found"
                          : res.status == SearchStatus::none ? "none" : "exhausted";
        d["tried"] = res.tried;
        d["witness"] = res.witness ? py::object(witness_dict(k, *res.witness)) : py::none();
        return d;
      },
      py::arg("field"), py::arg("traces"), py::arg("max_candidates") = 200000000ull);

  m.def("m_of", &m_of);
  m.def("frac_below_threshold", &frac_below_threshold);
  m.def("find_curve_with_trace", [](const Field& k, long long target) {
    return serialize(k, find_curve_with_trace(k, target));
  });
  m.def("construct_defect0", [](int n) { return report_dict(construct_defect0(n)); });
  m.def("construct_defect3", [](int n) { return report_dict(construct_defect3(n)); });
  m.def("nq3", [](int n) { return report_dict(nq3(n)); });
  m.def("m_sequence", [](int count) {
    py::list out;
    for (const auto& e : m_sequence(count)) {
      py::dict d;
      d["n"] = e.n;
      d["m"] = py::int_(py::str(e.m.get_str()));  // exact big integer
      d["eps_half"] = e.eps_half;
      d["residue4"] = e.residue4;
      out.append(d);
    }
    return out;
  });
}

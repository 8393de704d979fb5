#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lensforge/cli.hpp"
#include "lensforge/error.hpp"
#include "lensforge/hj.hpp"
#include "lensforge/lens.hpp"
#include "lensforge/quotient.hpp"
#include "lensforge/torus_cover.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace lensforge;

namespace {

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

py::object to_fraction(const Rational& value) {
  py::int_ num(py::str(boost::multiprecision::numerator(value).str()));
  py::int_ den(py::str(boost::multiprecision::denominator(value).str()));
  return fraction_type()(num, den);
}

Rational from_fraction(const py::handle& value) {
  py::object frac = fraction_type()(value);
  const std::string num = py::str(frac.attr("numerator"));
  const std::string den = py::str(frac.attr("denominator"));
  return Rational(BigInt(num), BigInt(den));
}

// ((modulus, phase), (modulus, phase)), each a Fraction, int or str.
ExactPoint to_point(const py::sequence& point) {
  if (py::len(point) != 2) throw Error(ErrorCode::InvalidInput, "a point has two coordinates");
  auto coord = [](const py::handle& c) {
    const auto pair = c.cast<py::sequence>();
    if (py::len(pair) != 2) throw Error(ErrorCode::InvalidInput, "a coordinate is (modulus, phase)");
    return ExactCoord(from_fraction(pair[0]), from_fraction(pair[1]));
  };
  return ExactPoint{coord(point[0]), coord(point[1])};
}

py::tuple coord_tuple(const ExactCoord& c) {
  return py::make_tuple(to_fraction(c.modulus()), to_fraction(c.phase()));
}

py::list matrix_list(const CoveringMatrix& m) {
  py::list out;
  for (const auto& row : m.entries()) out.append(py::make_tuple(row[0], row[1]));
  return out;
}

CoveringMatrix matrix_from(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
    throw Error(ErrorCode::MalformedMatrix, "expected a 2x2 matrix");
  }
  return CoveringMatrix({{{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}}});
}

std::vector<std::pair<std::int64_t, std::int64_t>> exponents(const std::vector<MonomialExponent>& ms) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& m : ms) out.emplace_back(m.e1, m.e2);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lens spaces, Hopf-link covers and cyclic quotient singularities";

  static py::exception<Error> error_type(m, "LensforgeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<LensSpace>(m, "LensSpace")
      .def_property_readonly("n", &LensSpace::n)
      .def_property_readonly("q", &LensSpace::q)
      .def_property_readonly("name", &LensSpace::name)
      .def("__eq__", [](const LensSpace& a, const LensSpace& b) { return a == b; })
      .def("__hash__", [](const LensSpace& l) { return py::hash(py::make_tuple(l.n(), l.q())); })
      .def("__repr__", [](const LensSpace& l) { return "LensSpace(" + l.name() + ")"; });

  m.def("normalize_lens", &normalize_lens, py::arg("n"), py::arg("q"));
  m.def("mod_inverse", &mod_inverse, py::arg("q"), py::arg("n"));
  m.def("is_homeomorphic", &is_homeomorphic);
  m.def("dehn_fill", [](std::int64_t coeff_m2, std::int64_t coeff_l2) {
    return dehn_fill(TorusCurve(coeff_m2, coeff_l2));
  }, py::arg("coeff_m2"), py::arg("coeff_l2"), "Fill along m1 = coeff_m2*m2 + coeff_l2*l2.");
  m.def("intersection", [](std::pair<std::int64_t, std::int64_t> c1, std::pair<std::int64_t, std::int64_t> c2) {
    return intersection(TorusCurve(c1.first, c1.second), TorusCurve(c2.first, c2.second));
  }, "Intersection of curves given as (coeff_m2, coeff_l2).");

  py::class_<CoveringData>(m, "CoveringData")
      .def(py::init<std::int64_t, std::int64_t, std::int64_t, std::int64_t>(),
           py::arg("n"), py::arg("q"), py::arg("a"), py::arg("b"))
      .def_property_readonly("n", &CoveringData::n)
      .def_property_readonly("q", &CoveringData::q)
      .def_property_readonly("a", &CoveringData::a)
      .def_property_readonly("b", &CoveringData::b)
      .def("__eq__", [](const CoveringData& x, const CoveringData& y) { return x == y; })
      .def("__repr__", [](const CoveringData& d) {
        return "CoveringData(n=" + std::to_string(d.n()) + ", q=" + std::to_string(d.q()) +
               ", a=" + std::to_string(d.a()) + ", b=" + std::to_string(d.b()) + ")";
      });

  m.def("covering_matrix", [](const CoveringData& d) { return matrix_list(covering_matrix(d)); });
  m.def("decompose_matrix", [](const std::vector<std::vector<std::int64_t>>& rows) {
    return decompose_matrix(matrix_from(rows));
  });
  m.def("generic_degree", &generic_degree);
  m.def("swap_coordinates", &swap_coordinates);
  m.def("covering_equivalent", &covering_equivalent);
  m.def("link_of_X", [](std::int64_t n, std::int64_t q) {
    const LinkOfX link = link_of_X(n, q);
    py::dict trace;
    trace["m2_cap_m1"] = link.trace.m2_cap_m1;
    trace["m1_cap_l2"] = link.trace.m1_cap_l2;
    trace["alpha"] = link.trace.alpha;
    trace["beta"] = link.trace.beta;
    trace["l2_prime"] = py::make_tuple(link.trace.l2_prime.coeff_m2(), link.trace.l2_prime.coeff_l2());
    return py::make_tuple(link.lens, link.cover, trace);
  }, py::arg("n"), py::arg("q"));
  m.def("is_normal_X", &is_normal_X);
  m.def("smooth_discriminant_model", &smooth_discriminant_model);

  py::class_<QuotientGerm>(m, "QuotientGerm")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("n"), py::arg("q"))
      .def_property_readonly("n", &QuotientGerm::n)
      .def_property_readonly("q", &QuotientGerm::q);

  m.def("is_invariant", [](const QuotientGerm& g, std::int64_t e1, std::int64_t e2) {
    return is_invariant(g, MonomialExponent{e1, e2});
  });
  m.def("hilbert_basis", [](const QuotientGerm& g, std::optional<std::int64_t> bound) {
    return exponents(hilbert_basis(g, bound.value_or(2 * g.n())).generators);
  }, py::arg("germ"), py::arg("bound") = py::none());
  m.def("nu_components", [](const QuotientGerm& g) { return exponents(nu_components(g)); });
  m.def("act", [](const QuotientGerm& g, std::int64_t k, const py::sequence& p) {
    const ExactPoint moved = act(g, k, to_point(p));
    return py::make_tuple(coord_tuple(moved.z1), coord_tuple(moved.z2));
  });
  m.def("eval_monomial", [](std::int64_t e1, std::int64_t e2, const py::sequence& p) {
    return coord_tuple(eval_monomial(MonomialExponent{e1, e2}, to_point(p)));
  });
  m.def("chain_identity_check", [](const QuotientGerm& g, const py::sequence& p) {
    return chain_identity_check(g, to_point(p));
  });
  m.def("nu_orbit_invariance", [](const QuotientGerm& g, const py::sequence& p) {
    return nu_orbit_invariance(g, to_point(p));
  });
  m.def("orbit_size_census", &orbit_size_census);
  m.def("nu_separates_orbits", &nu_separates_orbits);
  m.def("normal_model", [](const LensSpace& lens) {
    const NormalModel model = normal_model(lens);
    py::object germ = model.germ ? py::cast(*model.germ) : py::none();
    return py::make_tuple(germ, matrix_list(model.matrix));
  });

  m.def("hj_expand", [](std::int64_t n, std::int64_t q) { return hj_expand(n, q).coefficients; });
  m.def("hj_evaluate", [](const std::vector<std::int64_t>& c) { return to_fraction(hj_evaluate(c)); });
  m.def("hj_reverse_dual", [](std::int64_t n, std::int64_t q) {
    const HJChain dual = hj_reverse_dual(hj_expand(n, q));
    return py::make_tuple(dual.q, dual.coefficients);
  });
  m.def("resolution_dot", [](std::int64_t n, std::int64_t q) {
    return resolution_graph(hj_expand(n, q)).to_dot();
  });

  m.def("run_cli", [](const std::string& command, const std::map<std::string, std::int64_t>& params,
                      const std::string& format) {
    cli::JobRequest request;
    const auto parsed = cli::parse_command(command);
    const auto fmt = cli::parse_format(format);
    if (!parsed || !fmt) throw Error(ErrorCode::ParseError, "unknown command or format");
    request.command = *parsed;
    request.parameters = params;
    request.format = *fmt;
    const cli::Report report = cli::run(request);
    return py::make_tuple(report.output, report.exit_code);
  }, py::arg("command"), py::arg("params"), py::arg("format") = "json");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jpcount/bounds.hpp"
#include "jpcount/hickerson.hpp"
#include "jpcount/jordan_polya.hpp"
#include "jpcount/representations.hpp"

namespace py = pybind11;

namespace {

// Arbitrary-precision values cross the boundary as decimal strings.
jp::BigInt from_py(const py::object& o) {
  std::string s = py::str(o);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw py::value_error("expected a non-negative integer, got '" + s + "'");
  }
  return jp::BigInt(s);
}

py::int_ to_py(const jp::BigInt& v) { return py::int_(py::str(v.get_str())); }

jp::Family family_arg(const std::string& tag) {
  auto family = jp::family_from_tag(tag);
  if (!family) throw py::value_error("family must be 'j' or 'jp'");
  return *family;
}

py::dict report_dict(const jp::AuditReport& report) {
  py::dict out;
  out["name"] = report.name;
  out["pass"] = report.pass;
  out["failure"] = report.failure;
  out["lines"] = report.lines;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with Jordan-Polya numbers (products of factorials)";

  m.def(
      "count",
      [](const py::object& limit, const std::string& family) {
        return jp::count_jordan_polya(from_py(limit), family_arg(family));
      },
      py::arg("limit"), py::arg("family") = "j",
      "Number of family members <= limit.");

  m.def(
      "values",
      [](const py::object& limit, const std::string& family) {
        jp::Enumeration e = jp::enumerate_jordan_polya(from_py(limit), family_arg(family));
        py::list out;
        for (const jp::BigInt& v : e.values) out.append(to_py(v));
        return out;
      },
      py::arg("limit"), py::arg("family") = "j",
      "Sorted family members <= limit (python ints).");

  m.def(
      "is_member", [](const py::object& n) { return jp::is_jordan_polya(from_py(n)); },
      py::arg("n"), "True when n is a product of factorials (1 counts).");

  m.def(
      "representations",
      [](const py::object& n, std::optional<uint32_t> max_part) {
        auto reps = jp::enumerate_representations(from_py(n), max_part);
        py::list out;
        for (const auto& rep : reps) out.append(rep.parts());
        return out;
      },
      py::arg("n"), py::arg("max_part") = py::none(),
      "All factorial multisets multiplying to n, as non-increasing part lists.");

  m.def(
      "count_representations",
      [](const py::object& n) { return jp::count_representations(from_py(n)); }, py::arg("n"));

  m.def(
      "multiplicity_witness",
      [](uint32_t k) { return to_py(jp::multiplicity_witness(k)); }, py::arg("k"),
      "2^(3k+3) * 3^(k+1), which has at least k representations.");

  m.def(
      "prime_factorial_decomposition",
      [](const py::object& n) -> py::object {
        auto decomposition = jp::prime_factorial_decomposition(from_py(n));
        if (!decomposition) return py::none();
        py::dict out;
        for (const auto& [p, e] : decomposition->entries()) out[py::int_(p)] = py::int_(e);
        return out;
      },
      py::arg("n"),
      "Exponent of p! per prime p, or None when n has no such product.");

  m.def(
      "hickerson_search",
      [](uint32_t max_n, bool include_trivial) {
        jp::hickerson::SearchOptions options{.include_trivial = include_trivial};
        py::list out;
        for (const auto& sol : jp::hickerson::search(max_n, options)) {
          out.append(py::make_tuple(sol.n, sol.rep.parts(), sol.trivial));
        }
        return out;
      },
      py::arg("max_n"), py::arg("include_trivial") = false,
      "Solutions of n! = a_1! ... a_r! as (n, parts, trivial) tuples.");

  m.def(
      "hickerson_verify",
      [](uint32_t n, const std::vector<uint32_t>& parts, bool trivial) {
        return jp::hickerson::verify({n, jp::FactorialMultiset(parts), trivial});
      },
      py::arg("n"), py::arg("parts"), py::arg("trivial"));

  m.def(
      "primes", [](uint64_t limit) { return jp::sieve(limit).primes(); }, py::arg("limit"));

  m.def("legendre_exponent", &jp::legendre_exponent, py::arg("m"), py::arg("p"),
        "Exponent of prime p in m!.");

  m.def(
      "factorial_exponents",
      [](uint64_t m) {
        jp::ExponentVector ev = jp::factorial_exponents(m);
        py::dict out;
        for (const auto& [p, e] : ev.entries()) out[py::int_(p)] = py::int_(e);
        return out;
      },
      py::arg("m"));

  m.def(
      "simplex_count",
      [](uint64_t k, uint64_t r) { return to_py(jp::simplex_count(k, r)); }, py::arg("k"),
      py::arg("r"), "C(r+k, r): k-tuples of non-negative integers with sum <= r.");

  m.def(
      "theta",
      [](uint64_t x) { return jp::theta(x, jp::sieve(x < 16 ? 16 : x)); }, py::arg("x"),
      "Chebyshev theta: sum of log p over primes p <= x.");

  m.def("psi", &jp::psi, py::arg("x"), py::arg("y"), "Exact friable count Psi(x, y).");

  m.def(
      "ennola_count",
      [](const std::vector<double>& weights, double budget) {
        return jp::ennola_count({.weights = weights, .budget = budget});
      },
      py::arg("weights"), py::arg("budget"),
      "Lattice points nu >= 0 with sum(nu_i * weights_i) <= budget.");

  m.def(
      "thresholds",
      [](double L) {
        jp::ThresholdSet ts = jp::thresholds(L);
        py::dict out;
        out["L"] = ts.L;
        out["r"] = ts.r;
        out["r1"] = ts.r1;
        out["r2"] = ts.r2;
        out["r3"] = ts.r3;
        return out;
      },
      py::arg("log_x"));

  m.def(
      "floor_ratio_sum", [](uint64_t k) { return jp::floor_ratio_sum(k); }, py::arg("k"));

  m.def(
      "bound_eval",
      [](double L, double epsilon) {
        jp::BoundEval eval = jp::bound_eval(L, epsilon);
        py::dict out;
        out["L"] = eval.L;
        out["epsilon"] = eval.epsilon;
        out["log_upper"] = eval.log_upper;
        out["log_lower"] = eval.log_lower;
        return out;
      },
      py::arg("log_x"), py::arg("epsilon") = 0.1);

  m.def(
      "optimize_lower_bound",
      [](double L) {
        jp::OptimizerResult r = jp::optimize_lower_bound(L);
        py::dict out;
        out["s"] = r.s;
        out["log_f"] = r.log_f;
        out["local_max_ok"] = r.local_max_ok;
        out["g_minus"] = r.g_minus;
        out["g_plus"] = r.g_plus;
        return out;
      },
      py::arg("log_x"), "Root of s log s = sqrt(L) with the bound value g(s).");

  // Audits, each returning {name, pass, failure, lines}.
  m.def("audit_exponent_ratio",
        [](uint64_t m) { return report_dict(jp::audit_exponent_ratio(m)); }, py::arg("m") = 500);
  m.def("audit_rosser", [](uint64_t k) { return report_dict(jp::audit_rosser(k)); },
        py::arg("k_max") = 100000);
  m.def("audit_stirling", [](uint64_t n) { return report_dict(jp::audit_stirling(n)); },
        py::arg("n_max") = 100);
  m.def("audit_simplex",
        [](uint64_t k, uint64_t r) { return report_dict(jp::audit_simplex(k, r)); },
        py::arg("k_max") = 8, py::arg("r_max") = 8);
  m.def("audit_ennola",
        [](uint32_t instances) { return report_dict(jp::audit_ennola_suite(instances)); },
        py::arg("instances") = 100);
  m.def("audit_proof_sums",
        [](double L) { return report_dict(jp::audit_proof_sums(L)); }, py::arg("log_x") = 1e4);
  m.def("audit_granville",
        [](uint64_t x, uint64_t y) { return report_dict(jp::audit_granville(x, y)); },
        py::arg("x") = 1000000, py::arg("y") = 5);
  m.def("audit_multiplicity_family",
        [](uint32_t k) { return report_dict(jp::audit_multiplicity_family(k)); },
        py::arg("k_max") = 8);
  m.def("audit_jp_prime_lower",
        [](const py::object& x, uint32_t k) {
          return report_dict(jp::audit_jp_prime_lower(from_py(x), k));
        },
        py::arg("x"), py::arg("k") = 2);

  py::register_exception<jp::ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "costas/array.hpp"
#include "costas/constructions.hpp"
#include "costas/density.hpp"
#include "costas/fpr.hpp"
#include "costas/io.hpp"

namespace py = pybind11;
using namespace costas;
using ff::u64;

namespace {

density::ExpExpr exp_expr(std::pair<long long, long long> ch) { return {ch.first, ch.second}; }

py::list census_rows(const density::CensusResult& r) {
  py::list rows;
  for (const auto& row : r.rows) {
    py::object predicted = row.predicted ? py::object(py::float_(*row.predicted)) : py::object(py::none());
    rows.append(py::make_tuple(row.x, row.count, row.pi_x, row.ratio, predicted));
  }
  return rows;
}

py::dict document_dict(const io::ArrayDocument& doc) {
  py::dict params;
  for (const auto& [name, value] : doc.params) params[py::str(name)] = value;
  py::dict d;
  d["format"] = io::kFormatVersion;
  d["n"] = doc.n;
  d["perm"] = doc.perm;
  d["method"] = doc.method;
  if (doc.q) d["q"] = *doc.q;
  d["params"] = params;
  return d;
}

py::dict build(const std::string& tag, u64 q, std::optional<u64> alpha, std::optional<u64> beta) {
  const auto method = construct::parse_method(tag);
  if (!method) throw Error(ErrorCode::InvalidArgument, "unknown method '" + tag + "'");
  const auto field = ff::make_field_of_order(q);
  std::optional<construct::ConstructionSpec> spec;
  if (!alpha) {
    spec = construct::find_spec(*method, field);
    if (!spec) throw Error(ErrorCode::PreconditionNotMet, construct::inapplicable_reason(*method, field));
  } else {
    if (*alpha >= q || (beta && *beta >= q)) throw Error(ErrorCode::InvalidArgument, "parameters must lie in [0, q)");
    const auto a = field.element(*alpha);
    std::optional<ff::FieldElement> b;
    if (beta) {
      b = field.element(*beta);
    } else if (*method == construct::Method::G2) {
      b = ff::first_primitive_element(field);
    } else if (construct::uses_beta(*method)) {
      b = field.one() - a;
    }
    spec = construct::ConstructionSpec{*method, field, a, b};
  }
  return document_dict(io::make_document(*spec, construct::build(*spec)));
}

}  // namespace

PYBIND11_MODULE(_costas, m) {
  m.doc() = "Costas array constructions, Fibonacci primitive roots and prime censuses";

  static py::exception<Error> costas_error(m, "CostasError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(costas_error, e.what());
    }
  });

  m.def("is_costas", [](std::vector<int> perm) { return is_costas(CostasCandidate(std::move(perm))); }, py::arg("perm"));
  m.def(
      "find_collision",
      [](std::vector<int> perm) -> std::optional<std::tuple<int, int, int>> {
        const auto hit = find_collision(CostasCandidate(std::move(perm)));
        if (!hit) return std::nullopt;
        return std::make_tuple(hit->k, hit->x, hit->y);
      },
      py::arg("perm"), "First repeated displacement as (k, x, y), or None.");
  m.def(
      "enumerate_costas",
      [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& c : enumerate_costas(n)) out.push_back(c.perm());
        return out;
      },
      py::arg("n"));

  m.def("build", &build, py::arg("method"), py::arg("q"), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
        "Array document for a construction; parameters are searched when alpha is omitted.");
  m.def(
      "replay", [](const std::string& json) { return io::replay(io::parse_document(json)).value_or(CostasCandidate{}).perm(); },
      py::arg("json"));
  m.def("methods", [] {
    std::vector<std::string> out;
    for (auto m : construct::kAllMethods) out.emplace_back(construct::method_tag(m));
    return out;
  });

  m.def("fpr_candidates", &fpr::fpr_candidates, py::arg("p"));
  m.def("fpr_set", &fpr::fpr_set, py::arg("p"));
  m.def("fpr_to_t4_root", &fpr::fpr_to_t4_root, py::arg("g"), py::arg("p"));
  m.def("t4_admissible", &fpr::t4_admissible, py::arg("q"));
  m.def("t4_applicable", &fpr::t4_applicable, py::arg("q"));
  m.def("g4_applicable", &fpr::g4_applicable, py::arg("q"));
  m.def("phong_check", &fpr::phong_check, py::arg("p"));

  m.def("artin_constant", [](u64 bound) { return static_cast<double>(density::artin_constant(bound)); }, py::arg("prime_bound"));
  m.def("predicted_constants", [] {
    const auto c = density::predicted_constants();
    return std::make_pair(c.c_t4, c.c_g4);
  });
  m.def(
      "census_t4", [](u64 limit, std::vector<u64> xs) { return census_rows(density::census_t4(limit, xs)); },
      py::arg("limit"), py::arg("checkpoints") = std::vector<u64>{},
      "Rows (x, count, pi_x, ratio, predicted) at each checkpoint.");
  m.def(
      "census_g4", [](u64 limit, std::vector<u64> xs) { return census_rows(density::census_g4(limit, xs)); },
      py::arg("limit"), py::arg("checkpoints") = std::vector<u64>{});
  m.def(
      "trinomial_census",
      [](u64 limit, std::pair<long long, long long> e1, std::pair<long long, long long> e2, std::vector<u64> xs) {
        return census_rows(density::trinomial_census(limit, exp_expr(e1), exp_expr(e2), xs));
      },
      py::arg("limit"), py::arg("e1"), py::arg("e2"), py::arg("checkpoints") = std::vector<u64>{},
      "Exponents are (c, h) pairs meaning c + h(p-1)/2.");
  m.def(
      "exists_primitive_trinomial",
      [](u64 p, std::pair<long long, long long> e1, std::pair<long long, long long> e2) {
        return density::exists_primitive_trinomial(p, exp_expr(e1), exp_expr(e2));
      },
      py::arg("p"), py::arg("e1"), py::arg("e2"));
  m.def(
      "verify_zero_density_claims",
      [](u64 limit, int i_max) {
        const auto r = density::verify_zero_density_claims(limit, i_max);
        auto findings = [](const std::vector<density::ZeroDensityFinding>& xs) {
          py::list out;
          for (const auto& f : xs) out.append(py::make_tuple(std::string(density::claim_tag(f.claim)), f.p, f.i, f.witness));
          return out;
        };
        py::dict d;
        d["violations"] = findings(r.violations);
        d["exceptions"] = findings(r.exceptions);
        d["checked"] = r.checked;
        d["skipped"] = r.skipped;
        return d;
      },
      py::arg("limit"), py::arg("i_max"),
      "Findings are (claim, p, i, witness) tuples.");
}

// costas: build, verify and census tool.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 construction inapplicable,
// 3 not a Costas array, 4 sweep failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "costas/array.hpp"
#include "costas/constructions.hpp"
#include "costas/density.hpp"
#include "costas/fpr.hpp"
#include "costas/io.hpp"
#include "costas/parallel.hpp"

namespace {

using namespace costas;
using ff::u64;

enum Exit : int { kOk = 0, kUsage = 1, kInapplicable = 2, kNotCostas = 3, kSweepFailed = 4 };

bool is_inapplicable(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimitive:
    case ErrorCode::DegenerateSize:
    case ErrorCode::CornerConditionFailed:
    case ErrorCode::WrongCharacteristic:
    case ErrorCode::T4ConditionFailed:
    case ErrorCode::G4ConditionFailed:
      return true;
    default:
      return false;
  }
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kUsage;
  }
  out << text;
  return kOk;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string method;
  u64 q = 0;
  std::optional<u64> alpha;
  std::optional<u64> beta;
  std::string out;
};

int run_build(const BuildArgs& a) {
  const auto method = construct::parse_method(a.method);
  if (!method) {
    std::cerr << "error: unknown method '" << a.method << "'\n";
    return kUsage;
  }
  const auto field = ff::make_field_of_order(a.q);

  std::optional<construct::ConstructionSpec> spec;
  if (!a.alpha) {
    if (a.beta) {
      std::cerr << "error: --beta needs --alpha\n";
      return kUsage;
    }
    spec = construct::find_spec(*method, field);
    if (!spec) {
      std::cout << construct::inapplicable_reason(*method, field) << "\n";
      return kInapplicable;
    }
  } else {
    if (*a.alpha >= a.q || (a.beta && *a.beta >= a.q)) {
      std::cerr << "error: parameters must be field encodings in [0, q)\n";
      return kUsage;
    }
    const auto alpha = field.element(*a.alpha);
    std::optional<ff::FieldElement> beta;
    if (a.beta) {
      beta = field.element(*a.beta);
    } else if (*method == construct::Method::G2) {
      beta = ff::first_primitive_element(field);
    } else if (construct::uses_beta(*method)) {
      beta = field.one() - alpha;
    }
    spec = construct::ConstructionSpec{*method, field, alpha, beta};
  }

  CostasCandidate array;
  try {
    array = construct::build(*spec);
  } catch (const Error& e) {
    if (!is_inapplicable(e.code())) throw;
    std::cout << a.method << ": " << e.what() << "\n";
    return kInapplicable;
  }
  return write_output(a.out, io::to_json(io::make_document(*spec, array)) + "\n");
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string perm;
};

int run_verify(const VerifyArgs& a) {
  if (a.file.empty() == a.perm.empty()) {
    std::cerr << "error: give exactly one of FILE or --perm\n";
    return kUsage;
  }
  std::vector<int> perm;
  if (!a.perm.empty()) {
    perm = io::parse_int_list(a.perm);
  } else {
    std::ifstream in(a.file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << a.file << "\n";
      return kUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    perm = io::parse_document(buffer.str()).perm;
  }
  const CostasCandidate c(std::move(perm));
  if (const auto hit = find_collision(c)) {
    std::cout << "not-costas k=" << hit->k << " x=" << hit->x << " y=" << hit->y << "\n";
    return kNotCostas;
  }
  std::cout << "costas\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct FprArgs {
  std::optional<u64> p;
  std::vector<u64> range;
  std::string format = "csv";
};

std::string join(const std::vector<u64>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

int run_fpr(const FprArgs& a) {
  std::vector<u64> primes;
  if (a.p) {
    if (*a.p < 3 || !ff::is_prime(*a.p)) {
      std::cerr << "error: " << *a.p << " is not an odd prime\n";
      return kUsage;
    }
    primes.push_back(*a.p);
  } else if (a.range.size() == 2 && a.range[0] <= a.range[1]) {
    for (u64 p = std::max<u64>(a.range[0], 3); p <= a.range[1]; ++p) {
      if (ff::is_prime(p)) primes.push_back(p);
    }
  } else {
    std::cerr << "error: give P or --range A B with A <= B\n";
    return kUsage;
  }

  std::string out;
  if (a.format == "csv") out = "p,candidates,fprs,t4_root,t4,g4\n";
  for (u64 p : primes) {
    const auto r = fpr::fpr_report(p);
    if (a.format == "csv") {
      out += std::to_string(p) + ',' + join(r.candidates, ' ') + ',' + join(r.fprs, ' ') + ',' +
             (r.t4_root ? std::to_string(*r.t4_root) : "") + ',' + (r.t4_applicable ? "true" : "false") + ',' +
             (r.g4_applicable ? "true" : "false") + '\n';
    } else {
      nlohmann::ordered_json j;
      j["p"] = p;
      j["candidates"] = r.candidates;
      j["fprs"] = r.fprs;
      j["t4_root"] = r.t4_root ? nlohmann::ordered_json(*r.t4_root) : nlohmann::ordered_json(nullptr);
      j["t4"] = r.t4_applicable;
      j["g4"] = r.g4_applicable;
      out += j.dump() + '\n';
    }
  }
  std::cout << out;
  return kOk;
}

// ---------------------------------------------------------------------------

struct CensusArgs {
  std::string kind;
  u64 limit = 0;
  std::string e1;
  std::string e2;
  std::string checkpoints;
  std::string out;
};

int run_census(const CensusArgs& a) {
  std::vector<u64> xs;
  if (!a.checkpoints.empty()) xs = io::parse_u64_list(a.checkpoints);
  const auto start = std::chrono::steady_clock::now();
  std::cerr << "census " << a.kind << ": limit " << a.limit << ", " << worker_count() << " workers\n";

  density::CensusResult result;
  if (a.kind == "t4") {
    result = density::census_t4(a.limit, xs);
  } else if (a.kind == "g4") {
    result = density::census_g4(a.limit, xs);
  } else {
    if (a.e1.empty() || a.e2.empty()) {
      std::cerr << "error: trinomial census needs --e1 and --e2\n";
      return kUsage;
    }
    const auto e1 = density::parse_exp_expr(a.e1);
    const auto e2 = density::parse_exp_expr(a.e2);
    result = density::trinomial_census(a.limit, e1, e2, xs);
    if (result.skipped) std::cerr << "census trinomial: " << result.skipped << " primes with exponents out of range\n";
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "census " << a.kind << ": done in " << io::fixed6(seconds) << " s\n";
  return write_output(a.out, io::census_csv(result));
}

// ---------------------------------------------------------------------------

inline constexpr u64 kMaxSweepQ = 4096;

int run_sweep(u64 qmax) {
  if (qmax > kMaxSweepQ) {
    std::cerr << "error: --qmax must be <= " << kMaxSweepQ << "\n";
    return kUsage;
  }
  std::map<construct::Method, std::vector<u64>> applicable;
  std::vector<std::string> failures;

  for (u64 q = 2; q <= qmax; ++q) {
    if (!ff::prime_power_decompose(q)) continue;
    const auto field = ff::make_field_of_order(q);
    for (construct::Method m : construct::kAllMethods) {
      const auto spec = construct::find_spec(m, field);
      if (!spec) continue;
      applicable[m].push_back(q);
      const std::string label = std::string(construct::method_tag(m)) + " q=" + std::to_string(q);
      try {
        const auto array = construct::build(*spec);
        if (array.size() != construct::output_size(m, q) || !is_costas(array)) {
          failures.push_back(label + ": not costas");
          continue;
        }
        const auto doc = io::parse_document(io::to_json(io::make_document(*spec, array)));
        if (io::replay(doc) != array || !is_costas(io::candidate_of(doc))) failures.push_back(label + ": round trip differs");
      } catch (const Error& e) {
        failures.push_back(label + ": " + e.what());
      }
    }
    if (q % 512 == 0) std::cerr << "sweep: q = " << q << "\n";
  }

  for (construct::Method m : construct::kAllMethods) {
    std::cout << construct::method_tag(m) << ": " << join(applicable[m], ' ') << "\n";
  }
  for (const auto& f : failures) std::cout << "failure: " << f << "\n";
  std::cout << (failures.empty() ? "PASS" : "FAIL") << "\n";
  return failures.empty() ? kOk : kSweepFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Costas array constructions, verification and prime censuses"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Build an array with one of the algebraic constructions");
  build->add_option("method", build_args.method, "w1, w2, l2, g2, g3, g4c2, t4 or g4")->required();
  build->add_option("q", build_args.q, "Field size (a prime power)")->required();
  build->add_option("--alpha", build_args.alpha, "Generator encoding; searched when omitted");
  build->add_option("--beta", build_args.beta, "Second generator for the Golomb family");
  build->add_option("--out", build_args.out, "Write the JSON document here instead of stdout");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the Costas property");
  verify->add_option("file", verify_args.file, "JSON array document");
  verify->add_option("--perm", verify_args.perm, "Comma-separated permutation, e.g. 2,4,3,1");

  FprArgs fpr_args;
  auto* fpr_cmd = app.add_subcommand("fpr", "Fibonacci primitive roots and T4/G4 applicability");
  fpr_cmd->add_option("p", fpr_args.p, "Odd prime");
  fpr_cmd->add_option("--range", fpr_args.range, "Report every odd prime in [A, B]")->expected(2);
  fpr_cmd->add_option("--format", fpr_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Count primes admitting T4, G4 or a primitive trinomial");
  census->add_option("kind", census_args.kind, "t4, g4 or trinomial")->required()->check(CLI::IsMember({"t4", "g4", "trinomial"}));
  census->add_option("--limit", census_args.limit, "Largest x")->required();
  census->add_option("--e1", census_args.e1, "First exponent c,h meaning c + h(p-1)/2");
  census->add_option("--e2", census_args.e2, "Second exponent c,h");
  census->add_option("--checkpoints", census_args.checkpoints, "Comma-separated x values; default powers of 10");
  census->add_option("--out", census_args.out, "Write the CSV here instead of stdout");

  u64 qmax = 1024;
  auto* sweep = app.add_subcommand("sweep", "Build and verify every applicable construction for q <= qmax");
  sweep->add_option("--qmax", qmax, "Largest field size (<= 4096)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return run_build(build_args);
    if (*verify) return run_verify(verify_args);
    if (*fpr_cmd) return run_fpr(fpr_args);
    if (*census) return run_census(census_args);
    if (*sweep) return run_sweep(qmax);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "hyperweight/bounds.hpp"
#include "hyperweight/codes.hpp"
#include "hyperweight/error.hpp"
#include "hyperweight/torus.hpp"
#include "hyperweight/verify.hpp"
#include "hyperweight/weights.hpp"
#include "json_io.hpp"

namespace hyperweight::cli {
namespace {

struct Common {
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0: take HYPERWEIGHT_BUDGET or the library default
  std::string out_path;
};

struct CodeArgs {
  std::string family = "affine";
  std::uint32_t q = 0;
  unsigned s = 0;
  unsigned d = 0;
};

std::uint64_t resolve_budget(const Common& c, std::uint64_t fallback) {
  if (c.budget != 0) return c.budget;
  if (const char* env = std::getenv("HYPERWEIGHT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, std::string("HYPERWEIGHT_BUDGET is not a number: ") + env);
    }
  }
  return fallback;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--seed", c.seed, "Seed for randomized sweeps");
  cmd->add_option("--budget", c.budget, "Enumeration budget (overrides HYPERWEIGHT_BUDGET)");
  cmd->add_option("--out", c.out_path, "Write the document here instead of stdout");
}

void add_code_args(CLI::App* cmd, CodeArgs& a, bool with_family) {
  if (with_family) {
    cmd->add_option("--family", a.family, "Code family")
        ->check(CLI::IsMember({"affine", "projective", "sfleq", "delta-prime", "proj-dual"}));
  }
  cmd->add_option("--q", a.q, "Field size")->required();
  cmd->add_option("--s", a.s, "Number of variables")->required();
  cmd->add_option("--d", a.d, "Degree")->required();
}

void emit(const Json& doc, const Common& c, std::ostream& out) {
  std::string text;
  if (c.format == "table") {
    text = render_table(doc);
  } else if (c.format == "csv") {
    text = render_csv(doc);
  } else {
    text = doc.dump(2) + "\n";
  }
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParse, "cannot write " + c.out_path);
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParse, "cannot write " + path);
  file << text;
}

int cmd_build(const CodeArgs& a, const Common& c, const std::string& emit_path, std::ostream& out) {
  const FieldPtr field = make_field(a.q);
  const LinearCode code = build_code(parse_code_family(a.family), field, a.s, a.d);
  if (!emit_path.empty()) {
    const bool json = emit_path.size() >= 5 && emit_path.substr(emit_path.size() - 5) == ".json";
    write_file(emit_path, json ? code_json(code, true).dump(2) + "\n" : generator_csv(code));
  }
  emit(code_json(code, false), c, out);
  return kExitOk;
}

int cmd_ghw(const CodeArgs& a, const Common& c, unsigned r_max, const std::string& method, bool timing,
            std::ostream& out, std::ostream& err) {
  const FieldPtr field = make_field(a.q);
  const CodeFamily family = parse_code_family(a.family);
  const LinearCode code = build_code(family, field, a.s, a.d);
  if (r_max == 0 || r_max > code.k()) {
    throw Error(ErrorCode::kBadParameters,
                "--r-max must be in 1.." + std::to_string(code.k()) + " for this code");
  }
  const bool want_brute = method != "formula";
  const bool want_formula = method != "brute";
  const bool has_formulas =
      family == CodeFamily::kAffine || family == CodeFamily::kProjective || family == CodeFamily::kSquarefreeLeq;

  WeightReport report;
  if (want_brute) {
    report = weight_hierarchy(code, r_max, {resolve_budget(c, kDefaultGhwBudget), c.threads});
  } else {
    report.meta = code.meta();
    report.n = code.n();
    report.k = code.k();
  }

  Json doc = {{"schema_version", kSchemaVersion},
              {"family", a.family},
              {"q", a.q},
              {"s", a.s},
              {"d", a.d},
              {"n", code.n()},
              {"k", code.k()},
              {"method", method}};
  Json hierarchy = Json::object();
  Json formulas = Json::object();
  bool mismatch = false;
  for (unsigned r = 1; r <= r_max; ++r) {
    const std::string key = std::to_string(r);
    std::optional<FormulaResult> f;
    if (want_formula && has_formulas) {
      f = ghw_formula(family, a.q, a.s, a.d, r);
      formulas[key] = formula_json(*f);
    }
    const auto brute = report.hierarchy.find(r);
    if (want_brute) {
      if (brute != report.hierarchy.end()) hierarchy[key] = brute->second;
    } else if (f && f->status == FormulaStatus::kExact) {
      hierarchy[key] = *f->value;
    }
    if (want_brute && f && f->value && brute != report.hierarchy.end()) {
      const bool ok = f->status == FormulaStatus::kExact ? brute->second == *f->value : brute->second <= *f->value;
      if (!ok) {
        mismatch = true;
        err << "mismatch at r=" << r << ": brute force " << brute->second << ", " << f->source << " "
            << *f->value << "\n";
      }
    }
  }
  doc["hierarchy"] = std::move(hierarchy);
  if (want_formula) doc["formula"] = has_formulas ? std::move(formulas) : Json(nullptr);
  if (want_brute) {
    doc["complete"] = report.complete();
    doc["monotone"] = is_strictly_increasing(report.hierarchy);
    if (report.budget_required) doc["budget_required"] = *report.budget_required;
  }
  if (timing) doc["elapsed_ms"] = report.elapsed_ms;
  emit(doc, c, out);

  if (!report.complete()) {
    err << "budget exceeded: the next weight needs " << *report.budget_required << " subspaces\n";
    return kExitBudget;
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int cmd_zeros(std::uint32_t q, unsigned s, const std::string& polys_path, bool projective, const Common& c,
              std::ostream& out) {
  const FieldPtr field = make_field(q);
  std::ifstream in(polys_path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + polys_path);
  Json parsed;
  try {
    parsed = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  const auto polys = polynomials_from_json(parsed, field);
  const PointSet pts = projective ? enumerate_projective_torus(field, s) : enumerate_affine_torus(field, s);
  const std::uint64_t zeros = count_common_zeros(polys, pts, c.threads);
  Json doc = {{"schema_version", kSchemaVersion},
              {"q", q},
              {"s", s},
              {"torus", projective ? "projective" : "affine"},
              {"points", pts.size()},
              {"polys", polys.size()},
              {"common_zeros", zeros}};
  emit(doc, c, out);
  return kExitOk;
}

int cmd_dual_check(const CodeArgs& a, bool projective, const Common& c, std::ostream& out) {
  const FieldPtr field = make_field(a.q);
  const LinearCode code = projective ? build_projective_toric(field, a.s, a.d) : build_affine_toric(field, a.s, a.d);
  const LinearCode dual =
      projective ? build_projective_dual_code(field, a.s, a.d) : build_delta_prime_code(field, a.s, a.d);
  const Matrix null = nullspace(code.generator(), *field);
  const bool equal = null == dual.generator();
  const std::string lhs = projective ? "C_U" : "C_Δ′";
  const std::string rhs = projective ? "(C_d^P)^⊥" : "C_d^⊥";
  Json doc = {{"schema_version", kSchemaVersion},
              {"check", projective ? "projective-dual" : "affine-dual"},
              {"q", a.q},
              {"s", a.s},
              {"d", a.d},
              {"n", dual.n()},
              {"k", dual.k()},
              {"expected_k", dual.meta().expected_k},
              {"dual_k", null.rows()},
              {"equal", equal},
              {"summary", lhs + (equal ? " == " : " != ") + rhs + " (k=" + std::to_string(dual.k()) +
                              ", n=" + std::to_string(dual.n()) + ")"}};
  emit(doc, c, out);
  return equal ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& suite, std::uint32_t q_max, unsigned s_max, unsigned samples, const Common& c,
               std::ostream& out) {
  VerifyOptions options;
  options.q_max = q_max;
  options.s_max = s_max;
  options.seed = c.seed;
  options.samples = samples;
  options.threads = c.threads;
  options.budget = resolve_budget(c, options.budget);
  const SuiteReport report = run_suite(suite, options);
  emit(suite_json(report, options), c, out);
  return report.passed() ? kExitOk : kExitMismatch;
}

int cmd_bound(std::uint32_t q, unsigned s, unsigned d, unsigned r, const std::string& variant_name, const Common& c,
              std::ostream& out) {
  const BoundVariant variant = parse_bound_variant(variant_name);
  Json doc = {{"schema_version", kSchemaVersion}, {"q", q},     {"s", s},
              {"d", d},                            {"r", r},     {"variant", variant_name}};
  bool any = false;
  try {
    doc["zero_count_bound"] = zero_bound_json(zero_count_bound(q, s, d, r, variant));
    any = true;
  } catch (const Error& e) {
    doc["zero_count_bound"] = {{"error", e.what()}};
  }
  try {
    doc["shadow_lower_bound"] = {{"value", shadow_lower_bound(q, s, d, r, variant)}};
    any = true;
  } catch (const Error& e) {
    doc["shadow_lower_bound"] = {{"error", e.what()}};
  }
  emit(doc, c, out);
  return any ? kExitOk : kExitUsage;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kSizeCap:
    case ErrorCode::kCapExceeded: return kExitBudget;
    case ErrorCode::kInternalInconsistency:
    case ErrorCode::kInconsistent: return kExitMismatch;
    default: return kExitUsage;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric and square-free evaluation codes: weights, bounds and duals", "hyperweight"};
  app.require_subcommand(1);

  Common common;
  CodeArgs code;

  std::string emit_path;
  auto* build = app.add_subcommand("build", "Build a code and print its parameters");
  add_code_args(build, code, true);
  add_common(build, common);
  build->add_option("--emit-generator", emit_path, "Write the RREF generator (.csv or .json)");

  unsigned r_max = 1;
  std::string method = "brute";
  bool no_timing = false;
  auto* ghw = app.add_subcommand("ghw", "Generalized Hamming weights");
  add_code_args(ghw, code, true);
  add_common(ghw, common);
  ghw->add_option("--r-max", r_max, "Largest r")->required();
  ghw->add_option("--method", method, "brute, formula or both")->check(CLI::IsMember({"brute", "formula", "both"}));
  ghw->add_flag("--no-timing", no_timing, "Omit elapsed_ms for reproducible output");

  std::uint32_t q = 0;
  unsigned s = 0;
  unsigned d = 0;
  unsigned r = 1;
  std::string polys_path;
  bool projective = false;
  auto* zeros = app.add_subcommand("zeros", "Count common zeros on the torus");
  zeros->add_option("--q", q, "Field size")->required();
  zeros->add_option("--s", s, "Number of variables")->required();
  zeros->add_option("--polys", polys_path, "JSON list of polynomials")->required();
  zeros->add_flag("--projective", projective, "Use the projective torus");
  add_common(zeros, common);

  auto* dual = app.add_subcommand("dual-check", "Compare the dual evaluation code with the nullspace");
  add_code_args(dual, code, false);
  dual->add_flag("--projective", projective, "Check the projective construction");
  add_common(dual, common);

  std::string suite;
  std::uint32_t q_max = 4;
  unsigned s_max = 4;
  unsigned samples = VerifyOptions{}.samples;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("--suite", suite, "formulas, bounds, shadows or duals")
      ->required()
      ->check(CLI::IsMember({"formulas", "bounds", "shadows", "duals"}));
  verify->add_option("--q-max", q_max, "Largest field size");
  verify->add_option("--s-max", s_max, "Largest number of variables");
  verify->add_option("--samples", samples, "Random families per configuration (bounds suite)");
  add_common(verify, common);

  std::string variant = "homogeneous";
  auto* bound = app.add_subcommand("bound", "Zero-count and shadow bounds");
  bound->add_option("--q", q, "Field size")->required();
  bound->add_option("--s", s, "Number of variables")->required();
  bound->add_option("--d", d, "Degree")->required();
  bound->add_option("--r", r, "Number of polynomials")->required();
  bound->add_option("--variant", variant, "homogeneous or at-most")
      ->check(CLI::IsMember({"homogeneous", "at-most"}));
  add_common(bound, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(code, common, emit_path, out);
    if (*ghw) return cmd_ghw(code, common, r_max, method, !no_timing, out, err);
    if (*zeros) return cmd_zeros(q, s, polys_path, projective, common, out);
    if (*dual) return cmd_dual_check(code, projective, common, out);
    if (*verify) return cmd_verify(suite, q_max, s_max, samples, common, out);
    if (*bound) return cmd_bound(q, s, d, r, variant, common, out);
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace hyperweight::cli

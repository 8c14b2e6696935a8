#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperweight/bounds.hpp"
#include "hyperweight/poly.hpp"

namespace hyperweight {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view check_status_name(CheckStatus status);

/// One comparison inside a sweep: `actual relation expected`.
struct Check {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string relation;  // "==", "<=", ">=" or "" for informational rows
  std::optional<std::uint64_t> expected;
  std::optional<std::uint64_t> actual;
  CheckStatus status = CheckStatus::kSkipped;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  std::size_t count(CheckStatus status) const;
  bool passed() const { return count(CheckStatus::kFail) == 0; }
};

struct VerifyOptions {
  std::uint32_t q_max = 4;
  unsigned s_max = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;  // per brute-force search
  unsigned samples = 200;            // random families per configuration
  unsigned threads = 1;
};

/// Suites: formulas, bounds, shadows, duals. Output depends only on the
/// options, never on timing or thread count.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& options);

std::vector<std::string_view> suite_names();

/// Prime powers in [lo, hi].
std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi);

/// r random linearly independent square-free polynomials of degree d
/// (homogeneous) or degree <= d (at-most). Roughly half the samples are
/// products of disjoint binomials, which have many torus zeros.
std::vector<Polynomial> random_squarefree_family(std::mt19937_64& rng, const FieldPtr& field, unsigned s, unsigned d,
                                                 unsigned r, BoundVariant variant);

}  // namespace hyperweight

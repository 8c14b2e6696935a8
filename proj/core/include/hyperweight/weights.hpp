#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperweight/codes.hpp"
#include "hyperweight/gf.hpp"
#include "hyperweight/linalg.hpp"

namespace hyperweight {

inline constexpr std::uint64_t kDefaultGhwBudget = 100'000'000;

/// Number of coordinates where some basis vector is nonzero. The basis must
/// be linearly independent (kLinearlyDependent otherwise).
std::size_t support_weight(const std::vector<std::vector<FieldElement>>& basis, const Field& field);

/// Walks the r-dimensional subspaces of F_q^k, one RREF basis each.
/// Pivot profiles come in lexicographic order; within a profile the free
/// entries count like an odometer with the last entry fastest.
class SubspaceIterator {
 public:
  SubspaceIterator(unsigned k, unsigned r, const Field& field);

  /// Current basis as an r x k matrix; valid until next().
  const Matrix& current() const { return basis_; }
  const std::vector<unsigned>& pivots() const { return pivots_; }
  bool done() const { return done_; }
  void next();

 private:
  void load_profile();
  bool advance_free();
  bool advance_profile();

  unsigned k_;
  unsigned r_;
  const Field* field_;
  std::vector<unsigned> pivots_;
  std::vector<std::pair<unsigned, unsigned>> free_slots_;  // (row, col)
  std::vector<std::uint32_t> free_values_;
  Matrix basis_;
  bool done_ = false;
};

struct SearchOptions {
  std::uint64_t budget = kDefaultGhwBudget;
  unsigned threads = 1;
};

/// d_r of the code by exhaustive search over all r-dimensional subcodes,
/// pruning a partial basis once its support reaches the best found. Raises
/// BudgetExceeded up front if the Gaussian binomial [k choose r]_q exceeds
/// the budget.
std::uint64_t ghw_bruteforce(const LinearCode& code, unsigned r, const SearchOptions& options = {});

enum class MinDistanceMethod {
  kAuto,              // exhaustive when q^k fits the budget, else information sets
  kExhaustive,        // every codeword up to scalars
  kInformationSets,   // enumeration over several information sets with a lower bound
};

/// Minimum weight of a nonzero codeword. The information-set method counts
/// enumerated codewords against the budget.
std::uint64_t min_distance(const LinearCode& code, const SearchOptions& options = {},
                           MinDistanceMethod method = MinDistanceMethod::kAuto);

struct WeightReport {
  CodeMeta meta;
  std::size_t n = 0;
  std::size_t k = 0;
  std::map<unsigned, std::uint64_t> hierarchy;
  /// Set when the search stopped early; hierarchy then holds the prefix.
  std::optional<std::uint64_t> budget_required;
  double elapsed_ms = 0;

  bool complete() const { return !budget_required.has_value(); }
};

/// d_1 .. d_{r_max} by brute force, stopping at the first r over budget.
WeightReport weight_hierarchy(const LinearCode& code, unsigned r_max, const SearchOptions& options = {});

/// True when the values strictly increase in r.
bool is_strictly_increasing(const std::map<unsigned, std::uint64_t>& hierarchy);

}  // namespace hyperweight

#include "hyperweight/weights.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>
#include <thread>

#include "hyperweight/combinatorics.hpp"
#include "hyperweight/error.hpp"

namespace hyperweight {

std::size_t support_weight(const std::vector<std::vector<FieldElement>>& basis, const Field& field) {
  if (basis.empty()) return 0;
  const std::size_t n = basis.front().size();
  for (const auto& v : basis) {
    if (v.size() != n) throw Error(ErrorCode::kDimensionMismatch, "basis vectors of different lengths");
  }
  if (rank(Matrix::from_rows(basis), field) != basis.size()) {
    throw Error(ErrorCode::kLinearlyDependent, "basis is not linearly independent");
  }
  std::size_t count = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& v : basis) {
      if (v[c].rep != 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

SubspaceIterator::SubspaceIterator(unsigned k, unsigned r, const Field& field)
    : k_(k), r_(r), field_(&field), basis_(r, k) {
  if (r > k) {
    done_ = true;
    return;
  }
  pivots_.resize(r);
  std::iota(pivots_.begin(), pivots_.end(), 0u);
  load_profile();
}

void SubspaceIterator::load_profile() {
  free_slots_.clear();
  basis_ = Matrix(r_, k_);
  for (unsigned i = 0; i < r_; ++i) {
    basis_(i, pivots_[i]) = field_->one();
    for (unsigned c = pivots_[i] + 1; c < k_; ++c) {
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_slots_.emplace_back(i, c);
    }
  }
  free_values_.assign(free_slots_.size(), 0);
}

bool SubspaceIterator::advance_free() {
  for (std::size_t j = free_slots_.size(); j-- > 0;) {
    const auto [row, col] = free_slots_[j];
    if (++free_values_[j] < field_->q()) {
      basis_(row, col) = {free_values_[j]};
      return true;
    }
    free_values_[j] = 0;
    basis_(row, col) = field_->zero();
  }
  return false;
}

bool SubspaceIterator::advance_profile() {
  for (unsigned i = r_; i-- > 0;) {
    if (pivots_[i] < k_ - r_ + i) {
      ++pivots_[i];
      for (unsigned j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      load_profile();
      return true;
    }
  }
  return false;
}

void SubspaceIterator::next() {
  if (done_) return;
  if (advance_free()) return;
  if (!advance_profile()) done_ = true;
}

namespace {

using Word = std::uint64_t;

// Above this many 64-bit words the message->support table is not built and
// supports are computed on demand.
constexpr std::uint64_t kMaxTableWords = std::uint64_t{1} << 24;

class SupportOracle {
 public:
  explicit SupportOracle(const LinearCode& code)
      : field_(code.field()), g_(code.generator()), k_(code.k()), n_(code.n()), words_((n_ + 63) / 64) {
    const std::uint64_t q = field_.q();
    const std::uint64_t messages = saturating_pow(q, static_cast<unsigned>(k_));
    if (messages >= (std::uint64_t{1} << 62)) {
      throw Error(ErrorCode::kSizeCap, "message space q^k too large to index");
    }
    place_.resize(k_);
    std::uint64_t p = 1;
    for (std::size_t j = 0; j < k_; ++j, p *= q) place_[j] = p;
    if (saturating_mul(messages, words_) <= kMaxTableWords) build_table(messages);
  }

  std::size_t words() const { return words_; }
  std::uint64_t place(std::size_t j) const { return place_[j]; }

  // Support of the codeword with message index idx = sum m_j q^j.
  void mask(std::uint64_t idx, Word* out) const {
    if (!table_.empty()) {
      std::copy_n(table_.data() + idx * words_, words_, out);
      return;
    }
    std::vector<FieldElement> msg(k_);
    for (std::size_t j = 0; j < k_; ++j) {
      msg[j] = {static_cast<std::uint32_t>(idx % field_.q())};
      idx /= field_.q();
    }
    const auto cw = row_times(msg, g_, field_);
    std::fill_n(out, words_, Word{0});
    for (std::size_t c = 0; c < n_; ++c) {
      if (cw[c].rep != 0) out[c / 64] |= Word{1} << (c % 64);
    }
  }

 private:
  // Depth-first over message digits from the top, keeping partial sums per
  // level so each codeword costs about one row addition.
  void build_table(std::uint64_t messages) {
    table_.assign(messages * words_, 0);
    std::vector<std::vector<FieldElement>> partial(k_ + 1, std::vector<FieldElement>(n_, field_.zero()));
    auto walk = [&](auto&& self, std::size_t level, std::uint64_t idx) -> void {
      if (level == 0) {
        Word* out = table_.data() + idx * words_;
        const auto& cw = partial[0];
        for (std::size_t c = 0; c < n_; ++c) {
          if (cw[c].rep != 0) out[c / 64] |= Word{1} << (c % 64);
        }
        return;
      }
      const std::size_t j = level - 1;
      for (std::uint32_t v = 0; v < field_.q(); ++v) {
        auto& dst = partial[j];
        const auto& src = partial[level];
        if (v == 0) {
          dst = src;
        } else {
          for (std::size_t c = 0; c < n_; ++c) dst[c] = field_.add(src[c], field_.mul({v}, g_(j, c)));
        }
        self(self, j, idx + v * place_[j]);
      }
    };
    walk(walk, k_, 0);
  }

  const Field& field_;
  const Matrix& g_;
  std::size_t k_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> place_;
  std::vector<Word> table_;
};

std::size_t popcount(const Word* w, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(w[i]));
  return total;
}

std::size_t nonzero_columns(const LinearCode& code) {
  std::size_t count = 0;
  for (std::size_t c = 0; c < code.n(); ++c) {
    for (std::size_t r = 0; r < code.k(); ++r) {
      if (code.generator()(r, c).rep != 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<std::vector<unsigned>> pivot_profiles(unsigned k, unsigned r) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> p(r);
  std::iota(p.begin(), p.end(), 0u);
  while (true) {
    out.push_back(p);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && p[i] == k - r + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++p[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) p[j] = p[j - 1] + 1;
  }
  return out;
}

// Searches one pivot profile: row i of the RREF basis is a message with a 1
// at pivot i, 0 at the other pivots and free digits right of pivot i.
class ProfileSearch {
 public:
  ProfileSearch(const SupportOracle& oracle, unsigned k, std::uint32_t q, std::atomic<std::uint64_t>& best)
      : oracle_(oracle), k_(k), q_(q), best_(best) {}

  void run(const std::vector<unsigned>& pivots) {
    const unsigned r = static_cast<unsigned>(pivots.size());
    rows_.assign(r, {});
    for (unsigned i = 0; i < r; ++i) {
      std::vector<unsigned> free_cols;
      for (unsigned c = pivots[i] + 1; c < k_; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cols.push_back(c);
      }
      rows_[i] = {oracle_.place(pivots[i]), std::move(free_cols)};
    }
    unions_.assign((r + 1) * oracle_.words(), 0);
    scratch_.assign(oracle_.words(), 0);
    descend(0);
  }

 private:
  struct Row {
    std::uint64_t base;
    std::vector<unsigned> free_cols;
  };

  void descend(unsigned i) {
    const std::size_t w = oracle_.words();
    if (i == rows_.size()) {
      const std::uint64_t support = popcount(unions_.data() + i * w, w);
      std::uint64_t cur = best_.load(std::memory_order_relaxed);
      while (support < cur && !best_.compare_exchange_weak(cur, support, std::memory_order_relaxed)) {
      }
      return;
    }
    const Row& row = rows_[i];
    std::vector<std::uint32_t> digits(row.free_cols.size(), 0);
    const Word* prev = unions_.data() + i * w;
    Word* next = unions_.data() + (i + 1) * w;
    while (true) {
      std::uint64_t idx = row.base;
      for (std::size_t j = 0; j < digits.size(); ++j) idx += digits[j] * oracle_.place(row.free_cols[j]);
      oracle_.mask(idx, scratch_.data());
      for (std::size_t j = 0; j < w; ++j) next[j] = prev[j] | scratch_[j];
      // Supports only grow as rows are added.
      if (popcount(next, w) < best_.load(std::memory_order_relaxed)) descend(i + 1);
      std::size_t j = digits.size();
      while (j > 0 && ++digits[j - 1] == q_) digits[--j] = 0;
      if (j == 0) break;
    }
  }

  const SupportOracle& oracle_;
  unsigned k_;
  std::uint32_t q_;
  std::atomic<std::uint64_t>& best_;
  std::vector<Row> rows_;
  std::vector<Word> unions_;
  std::vector<Word> scratch_;
};

void check_r(const LinearCode& code, unsigned r) {
  if (r < 1 || r > code.k()) {
    throw Error(ErrorCode::kBadParameters,
                "r = " + std::to_string(r) + " outside 1.." + std::to_string(code.k()));
  }
}

}  // namespace

std::uint64_t ghw_bruteforce(const LinearCode& code, unsigned r, const SearchOptions& options) {
  check_r(code, r);
  const unsigned k = static_cast<unsigned>(code.k());
  if (r == k) return nonzero_columns(code);
  const std::uint64_t subspaces = gaussian_binomial(k, r, code.field().q());
  if (subspaces > options.budget) {
    throw BudgetExceeded(subspaces, options.budget,
                         "[" + std::to_string(k) + " choose " + std::to_string(r) + "]_" +
                             std::to_string(code.field().q()) + " subspaces");
  }

  const SupportOracle oracle(code);
  std::atomic<std::uint64_t> best{code.n() + 1};
  const auto profiles = pivot_profiles(k, r);
  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, profiles.size());
  auto work = [&](std::size_t w) {
    ProfileSearch search(oracle, k, code.field().q(), best);
    for (std::size_t i = w; i < profiles.size(); i += workers) search.run(profiles[i]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return best.load();
}

namespace {

std::uint64_t weight_of(const std::vector<FieldElement>& v) {
  return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](FieldElement x) { return x.rep != 0; }));
}

// Every nonzero message whose first nonzero digit is 1.
std::uint64_t min_distance_exhaustive(const LinearCode& code) {
  const Field& f = code.field();
  const std::size_t k = code.k();
  const std::size_t n = code.n();
  const Matrix& g = code.generator();
  std::uint64_t best = n + 1;
  std::vector<std::vector<FieldElement>> partial(k + 1, std::vector<FieldElement>(n, f.zero()));
  auto walk = [&](auto&& self, std::size_t j, bool started) -> void {
    if (j == k) {
      if (started) best = std::min(best, weight_of(partial[k]));
      return;
    }
    const std::uint32_t hi = started ? f.q() : 2;
    for (std::uint32_t v = 0; v < hi; ++v) {
      auto& dst = partial[j + 1];
      const auto& src = partial[j];
      if (v == 0) {
        dst = src;
      } else {
        for (std::size_t c = 0; c < n; ++c) dst[c] = f.add(src[c], f.mul({v}, g(j, c)));
      }
      self(self, j + 1, started || v != 0);
    }
  };
  walk(walk, 0, false);
  return best;
}

struct InformationSet {
  Matrix generator;  // RREF in a permuted column order
  std::size_t rank;  // pivots that landed on previously unused columns
};

std::vector<InformationSet> information_sets(const LinearCode& code) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  std::vector<bool> used(n, false);
  std::vector<InformationSet> out;
  while (true) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < n; ++c) {
      if (!used[c]) order.push_back(c);
    }
    const std::size_t fresh = order.size();
    if (fresh == 0) break;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) order.push_back(c);
    }
    Matrix permuted(k, n);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < n; ++c) permuted(r, c) = code.generator()(r, order[c]);
    }
    RrefResult red = rref(permuted, code.field());
    std::size_t rank_fresh = 0;
    for (std::size_t p : red.pivots) {
      if (p < fresh) {
        ++rank_fresh;
        used[order[p]] = true;
      }
    }
    if (rank_fresh == 0) break;
    out.push_back({std::move(red.matrix), rank_fresh});
  }
  return out;
}

// Codewords whose message on the information set has weight exactly w have
// been seen after round w; an unseen codeword has at least w+1 nonzeros on
// each set's pivots, of which at least w+1-(k-rank) are fresh columns.
std::uint64_t min_distance_information_sets(const LinearCode& code, std::uint64_t budget) {
  const Field& f = code.field();
  const std::size_t k = code.k();
  const std::size_t n = code.n();
  const auto sets = information_sets(code);
  std::uint64_t best = n + 1;
  std::uint64_t enumerated = 0;

  for (std::size_t w = 1; w <= k; ++w) {
    for (const auto& set : sets) {
      const Matrix& g = set.generator;
      std::vector<std::vector<FieldElement>> partial(w + 1, std::vector<FieldElement>(n, f.zero()));
      auto walk = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == w) {
          if (++enumerated > budget) {
            throw BudgetExceeded(enumerated, budget, "information-set enumeration");
          }
          best = std::min(best, weight_of(partial[w]));
          return;
        }
        for (std::size_t j = start; j + (w - depth) <= k; ++j) {
          // The first nonzero digit is fixed to 1 to skip scalar multiples.
          const std::uint32_t last = depth == 0 ? 1 : f.q() - 1;
          for (std::uint32_t v = 1; v <= last; ++v) {
            auto& dst = partial[depth + 1];
            const auto& src = partial[depth];
            for (std::size_t c = 0; c < n; ++c) dst[c] = f.add(src[c], f.mul({v}, g(j, c)));
            self(self, depth + 1, j + 1);
          }
        }
      };
      walk(walk, 0, 0);
    }
    std::uint64_t lower = 0;
    for (const auto& set : sets) {
      const std::size_t missing = k - set.rank;
      if (w + 1 > missing) lower += w + 1 - missing;
    }
    if (lower >= best) break;
  }
  return best;
}

}  // namespace

std::uint64_t min_distance(const LinearCode& code, const SearchOptions& options, MinDistanceMethod method) {
  if (code.k() == 0) throw Error(ErrorCode::kBadParameters, "the zero code has no minimum distance");
  const std::uint64_t q = code.field().q();
  const std::uint64_t codewords = gaussian_binomial(static_cast<unsigned>(code.k()), 1, q);
  if (method == MinDistanceMethod::kAuto) {
    constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 22;
    method = codewords <= std::min(options.budget, kExhaustiveLimit) ? MinDistanceMethod::kExhaustive
                                                                      : MinDistanceMethod::kInformationSets;
  }
  if (method == MinDistanceMethod::kExhaustive) {
    if (codewords > options.budget) throw BudgetExceeded(codewords, options.budget, "codewords up to scalars");
    return min_distance_exhaustive(code);
  }
  return min_distance_information_sets(code, options.budget);
}

WeightReport weight_hierarchy(const LinearCode& code, unsigned r_max, const SearchOptions& options) {
  if (r_max > code.k()) {
    throw Error(ErrorCode::kBadParameters,
                "r_max = " + std::to_string(r_max) + " exceeds k = " + std::to_string(code.k()));
  }
  WeightReport report;
  report.meta = code.meta();
  report.n = code.n();
  report.k = code.k();
  const auto start = std::chrono::steady_clock::now();
  for (unsigned r = 1; r <= r_max; ++r) {
    try {
      report.hierarchy[r] = ghw_bruteforce(code, r, options);
    } catch (const BudgetExceeded& e) {
      report.budget_required = e.required();
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool is_strictly_increasing(const std::map<unsigned, std::uint64_t>& hierarchy) {
  std::optional<std::uint64_t> prev;
  for (const auto& [r, v] : hierarchy) {
    if (prev && v <= *prev) return false;
    prev = v;
  }
  return true;
}

}  // namespace hyperweight

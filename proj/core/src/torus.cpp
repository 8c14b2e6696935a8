#include "hyperweight/torus.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "hyperweight/combinatorics.hpp"
#include "hyperweight/error.hpp"

namespace hyperweight {
namespace {

std::uint64_t checked_torus_size(std::uint32_t q, unsigned s, std::uint64_t cap) {
  const std::uint64_t size = saturating_pow(q - 1, s);
  if (size > cap) {
    throw Error(ErrorCode::kSizeCap, "torus over F_" + std::to_string(q) + " with s=" + std::to_string(s) + " has " +
                                         (size == kSaturated ? std::string("more than 2^64") : std::to_string(size)) +
                                         " points, cap is " + std::to_string(cap));
  }
  return size;
}

// Fills logs/points for the lexicographic exponent tuples of length `free`,
// writing them after `prefix` fixed leading coordinates equal to 1.
void fill_points(const Field& field, unsigned s, unsigned prefix, std::uint64_t count,
                 std::vector<FieldElement>& points, std::vector<std::uint32_t>& logs) {
  const std::uint32_t n = field.q() - 1;
  points.assign(count * s, field.one());
  logs.assign(count * s, 0);
  std::vector<std::uint32_t> tuple(s, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      logs[i * s + j] = tuple[j];
      points[i * s + j] = field.theta_pow(tuple[j]);
    }
    for (unsigned j = s; j-- > prefix;) {
      if (++tuple[j] < n) break;
      tuple[j] = 0;
    }
  }
}

struct CompiledTerm {
  FieldElement coeff;
  std::vector<std::uint32_t> exps;
};

std::vector<CompiledTerm> compile(const Polynomial& f, const PointSet& pts) {
  if (f.num_vars() != pts.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial in " + std::to_string(f.num_vars()) +
                                                   " variables, points in " + std::to_string(pts.num_vars()));
  }
  require_same_field(f.field(), pts.field());
  std::vector<CompiledTerm> out;
  out.reserve(f.num_terms());
  for (const auto& [a, c] : f.terms()) out.push_back({c, a.exps()});
  return out;
}

// On the torus t^a = theta^{<a, e>}, so a term costs one table lookup.
FieldElement eval_at(const std::vector<CompiledTerm>& terms, std::span<const std::uint32_t> e, const Field& field) {
  const std::uint64_t n = field.q() - 1;
  FieldElement acc = field.zero();
  for (const auto& t : terms) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k += static_cast<std::uint64_t>(t.exps[i]) * e[i];
    acc = field.add(acc, field.mul(t.coeff, field.theta_pow(k % n)));
  }
  return acc;
}

}  // namespace

PointSet enumerate_affine_torus(const FieldPtr& field, unsigned s, std::uint64_t cap) {
  if (s < 1) throw Error(ErrorCode::kBadParameters, "affine torus needs s >= 1");
  const std::uint64_t count = checked_torus_size(field->q(), s, cap);
  PointSet out;
  out.kind_ = TorusKind::kAffine;
  out.field_ = field;
  out.s_ = s;
  fill_points(*field, s, 0, count, out.points_, out.logs_);
  return out;
}

PointSet enumerate_projective_torus(const FieldPtr& field, unsigned s, std::uint64_t cap) {
  if (s < 2) throw Error(ErrorCode::kBadParameters, "projective torus needs s >= 2");
  const std::uint64_t count = checked_torus_size(field->q(), s - 1, cap);
  PointSet out;
  out.kind_ = TorusKind::kProjective;
  out.field_ = field;
  out.s_ = s;
  fill_points(*field, s, 1, count, out.points_, out.logs_);
  return out;
}

std::vector<FieldElement> evaluate(const Polynomial& f, const PointSet& pts) {
  const auto terms = compile(f, pts);
  std::vector<FieldElement> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out[i] = eval_at(terms, pts.exponents(i), pts.field());
  return out;
}

std::uint64_t count_common_zeros(const std::vector<Polynomial>& polys, const PointSet& pts, unsigned threads) {
  std::vector<std::vector<CompiledTerm>> compiled;
  compiled.reserve(polys.size());
  for (const auto& f : polys) compiled.push_back(compile(f, pts));

  auto count_range = [&](std::size_t lo, std::size_t hi) {
    std::uint64_t zeros = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto e = pts.exponents(i);
      const bool all_vanish = std::all_of(compiled.begin(), compiled.end(), [&](const auto& terms) {
        return eval_at(terms, e, pts.field()).rep == 0;
      });
      zeros += all_vanish ? 1 : 0;
    }
    return zeros;
  };

  const std::size_t n = pts.size();
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, n / 4096));
  if (workers == 1) return count_range(0, n);

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { partial[w] = count_range(n * w / workers, n * (w + 1) / workers); });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

}  // namespace hyperweight

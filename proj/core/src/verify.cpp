#include "hyperweight/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "hyperweight/codes.hpp"
#include "hyperweight/combinatorics.hpp"
#include "hyperweight/error.hpp"
#include "hyperweight/linalg.hpp"
#include "hyperweight/torus.hpp"
#include "hyperweight/weights.hpp"

namespace hyperweight {

std::string_view check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

std::size_t SuiteReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [status](const Check& c) { return c.status == status; }));
}

std::vector<std::string_view> suite_names() { return {"formulas", "bounds", "shadows", "duals"}; }

std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = std::max<std::uint32_t>(lo, 2); q <= hi; ++q) {
    std::uint32_t n = q;
    std::uint32_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    if (n == 1) out.push_back(q);
  }
  return out;
}

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

Check compare(std::string name, Params params, std::string relation, std::uint64_t expected, std::uint64_t actual) {
  Check c{std::move(name), std::move(params), relation, expected, actual, CheckStatus::kFail, ""};
  const bool ok = relation == "==" ? actual == expected : relation == "<=" ? actual <= expected : actual >= expected;
  c.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  return c;
}

Check skipped(std::string name, Params params, std::string note) {
  return {std::move(name), std::move(params), "", std::nullopt, std::nullopt, CheckStatus::kSkipped, std::move(note)};
}

std::uint32_t random_below(std::mt19937_64& rng, std::uint32_t n) {
  return static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));
}

FieldElement random_nonzero(std::mt19937_64& rng, const Field& f) { return {1 + random_below(rng, f.q() - 1)}; }

Polynomial random_combination(std::mt19937_64& rng, const FieldPtr& field, unsigned s,
                              const std::vector<ExponentVector>& basis, bool sparse) {
  Polynomial f(field, s);
  if (sparse) {
    const unsigned terms = 1 + random_below(rng, 3);
    for (unsigned i = 0; i < terms; ++i) {
      f.add_term(basis[random_below(rng, static_cast<std::uint32_t>(basis.size()))], random_nonzero(rng, *field));
    }
  } else {
    for (const auto& a : basis) f.add_term(a, {random_below(rng, field->q())});
  }
  return f;
}

// Product of disjoint factors drawn from `vars`: binomials t_a - alpha t_b
// (or t_a - alpha when affine factors are allowed) and plain variables,
// with total degree exactly `degree`.
Polynomial random_product(std::mt19937_64& rng, const FieldPtr& field, unsigned s, std::vector<unsigned> vars,
                          unsigned degree, bool allow_affine) {
  std::shuffle(vars.begin(), vars.end(), rng);
  Polynomial out = Polynomial::constant(field, s, field->one());
  std::size_t next = 0;
  for (unsigned placed = 0; placed < degree; ++placed) {
    const std::size_t left = vars.size() - next;
    const unsigned remaining = degree - placed;
    const unsigned a = vars[next++];
    const Polynomial ta = Polynomial::variable(field, s, a + 1);
    const FieldElement alpha = random_nonzero(rng, *field);
    const unsigned kind = random_below(rng, 3);
    if (kind == 0 && left > remaining) {
      const unsigned b = vars[next++];
      out = out * (ta - Polynomial::variable(field, s, b + 1).scaled(alpha));
    } else if (kind == 1 && allow_affine) {
      out = out * (ta - Polynomial::constant(field, s, alpha));
    } else {
      out = out * ta;
    }
  }
  return out;
}

bool independent(const std::vector<Polynomial>& polys) {
  try {
    distinct_lm_reduce(polys);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::vector<Polynomial> random_squarefree_family(std::mt19937_64& rng, const FieldPtr& field, unsigned s, unsigned d,
                                                 unsigned r, BoundVariant variant) {
  const bool homogeneous = variant == BoundVariant::kHomogeneous;
  const auto basis = homogeneous ? hypersimplex_monomials(s, d) : squarefree_monomials_upto(s, d);
  if (r > basis.size()) throw Error(ErrorCode::kBadParameters, "more polynomials than basis monomials");
  std::vector<unsigned> all_vars(s);
  std::iota(all_vars.begin(), all_vars.end(), 0u);

  for (unsigned attempt = 0; attempt < 10'000; ++attempt) {
    std::vector<Polynomial> family;
    const unsigned mode = random_below(rng, 4);
    if (mode == 3) {
      // Shared product factor on some variables, random cofactors on the rest.
      const unsigned m = random_below(rng, d);
      std::vector<unsigned> vars = all_vars;
      std::shuffle(vars.begin(), vars.end(), rng);
      const std::vector<unsigned> head(vars.begin(), vars.begin() + std::min(s, 2 * m));
      const Polynomial g = random_product(rng, field, s, head, m, !homogeneous);
      std::vector<ExponentVector> rest_basis;
      for (const auto& a : basis) {
        const bool avoids_head = std::all_of(head.begin(), head.end(), [&](unsigned v) { return a[v] == 0; });
        if (avoids_head && (homogeneous ? a.degree() == d - m : a.degree() <= d - m)) rest_basis.push_back(a);
      }
      if (rest_basis.size() < r) continue;
      for (unsigned i = 0; i < r; ++i) family.push_back(g * random_combination(rng, field, s, rest_basis, i % 2 == 0));
    } else {
      for (unsigned i = 0; i < r; ++i) {
        if (mode == 2) {
          const unsigned deg = homogeneous ? d : random_below(rng, d + 1);
          family.push_back(random_product(rng, field, s, all_vars, deg, !homogeneous));
        } else {
          family.push_back(random_combination(rng, field, s, basis, mode == 1));
        }
      }
    }
    if (independent(family)) return family;
  }
  throw Error(ErrorCode::kInternalInconsistency, "could not sample an independent family");
}

namespace {

void suite_formulas(const VerifyOptions& opt, SuiteReport& out) {
  SearchOptions search{opt.budget, opt.threads};
  for (std::uint32_t q : prime_powers(2, opt.q_max)) {
    const FieldPtr field = make_field(q);
    for (unsigned s = 2; s <= opt.s_max; ++s) {
      for (unsigned d = 1; d <= s; ++d) {
        for (CodeFamily family : {CodeFamily::kAffine, CodeFamily::kProjective, CodeFamily::kSquarefreeLeq}) {
          const std::string fam(code_family_name(family));
          const Params base{{"q", q}, {"s", s}, {"d", d}};
          const LinearCode code = build_code(family, field, s, d);
          out.checks.push_back(compare("dimension/" + fam, base, "==", code.meta().expected_k, code.k()));

          std::map<unsigned, std::uint64_t> hierarchy;
          const unsigned r_top = static_cast<unsigned>(std::min<std::size_t>(code.k(), 3));
          for (unsigned r = 1; r <= r_top; ++r) {
            Params params = base;
            params.emplace_back("r", r);
            const FormulaResult formula = ghw_formula(family, q, s, d, r);
            std::optional<std::uint64_t> brute;
            try {
              brute = ghw_bruteforce(code, r, search);
              hierarchy[r] = *brute;
            } catch (const BudgetExceeded& e) {
              out.checks.push_back(skipped("ghw/" + fam, params,
                                           "budget: requires " + std::to_string(e.required()) + " subspaces"));
              continue;
            }
            if (formula.status == FormulaStatus::kNotCovered) {
              Check c = skipped("ghw/" + fam, params, "no closed form: " + formula.region);
              c.actual = brute;
              out.checks.push_back(std::move(c));
              continue;
            }
            const bool exact = formula.status == FormulaStatus::kExact;
            Check c = compare("ghw/" + fam, params, exact ? "==" : "<=", *formula.value, *brute);
            c.note = formula.source;
            out.checks.push_back(std::move(c));
          }
          if (hierarchy.size() >= 2) {
            Check c = compare("monotone/" + fam, base, "==", 1, is_strictly_increasing(hierarchy) ? 1 : 0);
            c.note = "strictly increasing prefix";
            out.checks.push_back(std::move(c));
          }
        }
      }
    }
  }
}

std::uint64_t zeros_of(const std::vector<Polynomial>& family, const PointSet& pts, unsigned threads) {
  return count_common_zeros(family, pts, threads);
}

void suite_bounds(const VerifyOptions& opt, SuiteReport& out) {
  std::mt19937_64 rng(opt.seed);
  for (std::uint32_t q : prime_powers(2, opt.q_max)) {
    const FieldPtr field = make_field(q);
    for (unsigned s = 2; s <= opt.s_max; ++s) {
      const PointSet affine = enumerate_affine_torus(field, s);
      const PointSet projective = enumerate_projective_torus(field, s);
      for (unsigned d = 1; d < s; ++d) {
        for (unsigned r = 1; r <= 3; ++r) {
          for (BoundVariant variant : {BoundVariant::kHomogeneous, BoundVariant::kAtMost}) {
            const bool homogeneous = variant == BoundVariant::kHomogeneous;
            const std::uint64_t available =
                homogeneous ? binomial(s, d) : squarefree_monomials_upto(s, d).size();
            if (r > available) continue;
            ZeroBound bound;
            try {
              bound = zero_count_bound(q, s, d, r, variant);
            } catch (const Error&) {
              continue;
            }
            const Params params{{"q", q}, {"s", s}, {"d", d}, {"r", r}};
            const std::string tag(bound_variant_name(variant));
            std::uint64_t worst = 0;
            bool homogeneity_ok = true;
            for (unsigned i = 0; i < opt.samples; ++i) {
              const auto family = random_squarefree_family(rng, field, s, d, r, variant);
              const std::uint64_t z = zeros_of(family, affine, opt.threads);
              worst = std::max(worst, z);
              if (homogeneous && (q - 1) * zeros_of(family, projective, opt.threads) != z) homogeneity_ok = false;
            }
            Check c = compare("zero-bound/" + tag, params, "<=", bound.value, worst);
            for (const auto& src : bound.sources) c.note += (c.note.empty() ? "" : "+") + src;
            out.checks.push_back(std::move(c));
            if (homogeneous) {
              Check h = compare("torus-homogeneity", params, "==", 1, homogeneity_ok ? 1 : 0);
              h.note = "(q-1)|V_proj| = |V_aff| on every sample";
              out.checks.push_back(std::move(h));
            }
          }
        }
      }

      if (q < 3) continue;
      // Achievability: the explicit families realize the closed forms.
      for (unsigned d = 1; d <= s; ++d) {
        for (unsigned r = 1; r <= 3; ++r) {
          const Params params{{"q", q}, {"s", s}, {"d", d}, {"r", r}};
          struct Target {
            ExtremalFamily kind;
            CodeFamily code;
          };
          for (Target t : {Target{ExtremalFamily::kLowDegree, CodeFamily::kAffine},
                           Target{ExtremalFamily::kHighDegree, CodeFamily::kAffine},
                           Target{ExtremalFamily::kShiftedAffine, CodeFamily::kSquarefreeLeq},
                           Target{ExtremalFamily::kPairHalf, CodeFamily::kAffine},
                           Target{ExtremalFamily::kTripleHalfPlusOne, CodeFamily::kAffine},
                           Target{ExtremalFamily::kTripleHalf, CodeFamily::kAffine},
                           Target{ExtremalFamily::kTripleHalfMinusOne, CodeFamily::kAffine}}) {
            std::vector<Polynomial> family;
            try {
              family = extremal_family(t.kind, field, s, d, r);
            } catch (const Error&) {
              continue;
            }
            if (r > dimension_formula(t.code, q, s, d)) continue;
            const std::string name = "extremal/" + std::string(extremal_family_name(t.kind));
            const FormulaResult f = ghw_formula(t.code, q, s, d, r);
            if (!f.value) continue;
            const std::uint64_t support = affine.size() - zeros_of(family, affine, opt.threads);
            Check c = compare(name, params, "==", *f.value, support);
            c.note = "support vs " + f.source;
            out.checks.push_back(std::move(c));
            if (t.code == CodeFamily::kAffine) {
              const FormulaResult fp = ghw_formula(CodeFamily::kProjective, q, s, d, r);
              const std::uint64_t psupport = projective.size() - zeros_of(family, projective, opt.threads);
              Check p = compare(name + "/projective", params, "==", *fp.value, psupport);
              p.note = "support vs " + fp.source;
              out.checks.push_back(std::move(p));
            }
          }
        }
      }
    }
  }
}

// All r-subsets of `pool`, calling visit with the chosen vectors.
template <typename Visit>
void for_each_subset(const std::vector<ExponentVector>& pool, unsigned r, Visit&& visit) {
  if (r > pool.size()) return;
  std::vector<unsigned> idx(r);
  std::iota(idx.begin(), idx.end(), 0u);
  std::vector<ExponentVector> chosen(r);
  const unsigned n = static_cast<unsigned>(pool.size());
  while (true) {
    for (unsigned i = 0; i < r; ++i) chosen[i] = pool[idx[i]];
    visit(chosen);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == n - r + static_cast<unsigned>(i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void suite_shadows(const VerifyOptions& opt, SuiteReport& out) {
  for (std::uint32_t q : prime_powers(3, opt.q_max)) {
    for (unsigned s = 2; s <= opt.s_max; ++s) {
      const unsigned u = s * (q - 2);
      std::vector<ExponentVector> walls;
      for (unsigned i = 0; i < s; ++i) {
        std::vector<std::uint32_t> e(s, 0);
        e[i] = q - 1;
        walls.emplace_back(std::move(e));
      }
      for (unsigned d = 1; d <= s; ++d) {
        for (unsigned r = 1; r <= 3; ++r) {
          if (!(d + r < s + 2)) continue;
          for (BoundVariant variant : {BoundVariant::kHomogeneous, BoundVariant::kAtMost}) {
            const bool homogeneous = variant == BoundVariant::kHomogeneous;
            const auto pool = homogeneous ? hypersimplex_monomials(s, d) : squarefree_monomials_upto(s, d);
            if (r > pool.size()) continue;
            const Params params{{"q", q}, {"s", s}, {"d", d}, {"r", r}};
            const std::uint64_t bound = shadow_lower_bound(q, s, d, r, variant);
            std::uint64_t smallest = kSaturated;
            bool footprint_ok = true;
            bool stable = true;
            for_each_subset(pool, r, [&](const std::vector<ExponentVector>& b) {
              smallest = std::min(smallest, shadow_size(b, q, s));
              std::vector<ExponentVector> gens = b;
              gens.insert(gens.end(), walls.begin(), walls.end());
              const std::uint64_t hf = affine_hilbert_fn(gens, s, u);
              if (footprint_zero_bound(b, q, s) != hf) footprint_ok = false;
              if (affine_hilbert_fn(gens, s, u + 1) != hf) stable = false;
            });
            const std::string tag(bound_variant_name(variant));
            out.checks.push_back(compare("shadow/" + tag, params, ">=", bound, smallest));
            out.checks.push_back(compare("footprint-identity/" + tag, params, "==", 1, footprint_ok ? 1 : 0));
            out.checks.push_back(compare("hilbert-stable/" + tag, params, "==", 1, stable ? 1 : 0));
          }
        }
      }
    }
  }
}

void suite_duals(const VerifyOptions& opt, SuiteReport& out) {
  for (std::uint32_t q : prime_powers(3, opt.q_max)) {
    const FieldPtr field = make_field(q);
    for (unsigned s = 2; s <= opt.s_max; ++s) {
      const PointSet affine = enumerate_affine_torus(field, s);
      for (unsigned d = 1; d <= s; ++d) {
        const Params params{{"q", q}, {"s", s}, {"d", d}};
        const LinearCode code = build_affine_toric(field, s, d);
        const LinearCode dual = build_delta_prime_code(field, s, d);
        out.checks.push_back(compare("delta-prime/dimension", params, "==", dual.meta().expected_k, dual.k()));
        const Matrix null = rref(nullspace(code.generator(), *field), *field).matrix;
        out.checks.push_back(
            compare("delta-prime/equals-dual", params, "==", 1, null == dual.generator() ? 1 : 0));

        const Matrix ev_delta = evaluation_matrix(hypersimplex_monomials(s, d), affine);
        const Matrix ev_prime = evaluation_matrix(hat_complement(*field, s, d).members, affine);
        std::uint64_t nonzero = 0;
        for (std::size_t i = 0; i < ev_delta.rows(); ++i) {
          for (std::size_t j = 0; j < ev_prime.rows(); ++j) {
            if (dot(ev_delta.row(i), ev_prime.row(j), *field).rep != 0) ++nonzero;
          }
        }
        out.checks.push_back(compare("delta-prime/orthogonal", params, "==", 0, nonzero));

        const LinearCode proj = build_projective_toric(field, s, d);
        const LinearCode pdual = build_projective_dual_code(field, s, d);
        Check dim = compare("proj-dual/dimension", params, "==", pdual.meta().expected_k, pdual.k());
        if (pdual.rank_defect()) dim.note = "rank below closed form";
        out.checks.push_back(std::move(dim));
        const Matrix pnull = rref(nullspace(proj.generator(), *field), *field).matrix;
        out.checks.push_back(
            compare("proj-dual/equals-dual", params, "==", 1, pnull == pdual.generator() ? 1 : 0));
      }
    }
  }
}

}  // namespace

SuiteReport run_suite(std::string_view suite, const VerifyOptions& options) {
  SuiteReport out;
  out.suite = std::string(suite);
  if (suite == "formulas") {
    suite_formulas(options, out);
  } else if (suite == "bounds") {
    suite_bounds(options, out);
  } else if (suite == "shadows") {
    suite_shadows(options, out);
  } else if (suite == "duals") {
    suite_duals(options, out);
  } else {
    throw Error(ErrorCode::kBadParameters, "unknown suite '" + std::string(suite) + "'");
  }
  return out;
}

}  // namespace hyperweight

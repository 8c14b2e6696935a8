#include "hyperweight/gf.hpp"

#include <string>

#include "hyperweight/error.hpp"

namespace hyperweight {
namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over F_p as coefficient vectors, low degree first, no trailing zeros.
using PolyP = std::vector<std::uint32_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
PolyP poly_mod(PolyP a, const PolyP& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
    }
    trim(a);
  }
  return a;
}

PolyP monic_from_index(std::uint64_t index, unsigned degree, std::uint32_t p) {
  PolyP out(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  out[degree] = 1;
  return out;
}

bool is_irreducible(const PolyP& f, std::uint32_t p) {
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  for (unsigned dg = 1; 2 * dg <= degree; ++dg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < dg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, dg, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::Make(std::uint64_t q, std::uint64_t cap) {
  if (q < 2) throw Error(ErrorCode::kNotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
  if (q > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "q = " + std::to_string(q) + " exceeds the field cap " + std::to_string(cap));
  }
  const auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw Error(ErrorCode::kNotPrimePower, "q = " + std::to_string(q) + " has several prime factors");
  }
  std::shared_ptr<Field> field(new Field());
  field->q_ = static_cast<std::uint32_t>(q);
  field->p_ = static_cast<std::uint32_t>(factors.front());
  std::uint64_t t = q;
  while (t > 1) {
    t /= field->p_;
    ++field->e_;
  }
  field->find_modulus();
  field->find_theta();
  field->build_tables();
  return field;
}

void Field::find_modulus() {
  if (e_ == 1) return;
  const std::uint64_t count = q_;  // p^e candidates for the lower coefficients
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PolyP candidate = monic_from_index(idx, e_, p_);
    if (candidate[0] == 0) continue;  // divisible by x
    if (is_irreducible(candidate, p_)) {
      modulus_ = candidate;
      return;
    }
  }
  throw Error(ErrorCode::kInternalInconsistency, "no irreducible polynomial found");
}

FieldElement Field::element(std::uint32_t rep) const {
  if (rep >= q_) {
    throw Error(ErrorCode::kBadParameters,
                "rep " + std::to_string(rep) + " out of range for F_" + std::to_string(q_));
  }
  return {rep};
}

FieldElement Field::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::digit_add(FieldElement a, FieldElement b) const {
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.rep;
  std::uint32_t y = b.rep;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (e_ == 1) {
    std::uint32_t s = a.rep + b.rep;
    return {s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return {a.rep ^ b.rep};
  if (a.rep == 0) return b;
  if (b.rep == 0) return a;
  if (!zech_.empty()) {
    // a + b = a * (1 + b/a)
    const std::uint32_t n = q_ - 1;
    const std::uint32_t la = log_[a.rep];
    const std::uint32_t lb = log_[b.rep];
    const std::int32_t z = zech_[(lb + n - la) % n];
    if (z < 0) return {0};
    return {antilog_[la + static_cast<std::uint32_t>(z)]};
  }
  return digit_add(a, b);
}

FieldElement Field::neg(FieldElement a) const {
  if (e_ == 1) return {a.rep == 0 ? 0 : p_ - a.rep};
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.rep;
  for (unsigned i = 0; i < e_; ++i) {
    const std::uint32_t digit = x % p_;
    out += (digit == 0 ? 0 : p_ - digit) * scale;
    x /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement Field::schoolbook_mul(FieldElement a, FieldElement b) const {
  if (e_ == 1) {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.rep) * b.rep % p_)};
  }
  PolyP x(e_, 0);
  PolyP y(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    x[i] = a.rep % p_;
    a.rep /= p_;
    y[i] = b.rep % p_;
    b.rep /= p_;
  }
  PolyP prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
    }
  }
  const PolyP rem = poly_mod(prod, modulus_, p_);
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::size_t i = 0; i < rem.size(); ++i) {
    out += rem[i] * scale;
    scale *= p_;
  }
  return {out};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.rep == 0 || b.rep == 0) return {0};
  if (!log_.empty()) return {antilog_[log_[a.rep] + log_[b.rep]]};
  return schoolbook_mul(a, b);
}

FieldElement Field::slow_pow(FieldElement a, std::uint64_t k) const {
  FieldElement result{1};
  FieldElement base = a;
  while (k > 0) {
    if (k & 1u) result = schoolbook_mul(result, base);
    base = schoolbook_mul(base, base);
    k >>= 1u;
  }
  return result;
}

FieldElement Field::pow(FieldElement a, std::uint64_t k) const {
  if (k == 0) return {1};
  if (a.rep == 0) return {0};
  if (!log_.empty()) {
    const std::uint64_t n = q_ - 1;
    return {antilog_[(static_cast<std::uint64_t>(log_[a.rep]) * (k % n)) % n]};
  }
  return slow_pow(a, k);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.rep == 0) throw Error(ErrorCode::kZeroInverse, "0 has no inverse");
  if (!log_.empty()) {
    const std::uint32_t n = q_ - 1;
    return {antilog_[(n - log_[a.rep]) % n]};
  }
  return slow_pow(a, q_ - 2);
}

std::uint32_t Field::log(FieldElement a) const {
  if (a.rep == 0) throw Error(ErrorCode::kZeroInverse, "log of 0 is undefined");
  if (!log_.empty()) return log_[a.rep];
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    if (theta_powers_[k] == a.rep) return k;
  }
  throw Error(ErrorCode::kInternalInconsistency, "element outside the cyclic group");
}

void Field::find_theta() {
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  for (std::uint32_t rep = 1; rep < q_; ++rep) {
    bool generator = true;
    for (std::uint64_t f : factors) {
      if (slow_pow({rep}, n / f).rep == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      theta_ = {rep};
      return;
    }
  }
  throw Error(ErrorCode::kInternalInconsistency, "no primitive element found");
}

void Field::build_tables() {
  const std::uint32_t n = q_ - 1;
  theta_powers_.resize(n);
  FieldElement acc{1};
  for (std::uint32_t k = 0; k < n; ++k) {
    theta_powers_[k] = acc.rep;
    acc = schoolbook_mul(acc, theta_);
  }
  if (q_ > kLogTableLimit) return;

  log_.assign(q_, 0);
  antilog_.assign(2 * static_cast<std::size_t>(n), 0);
  for (std::uint32_t k = 0; k < 2 * n; ++k) antilog_[k] = theta_powers_[k % n];
  for (std::uint32_t k = 0; k < n; ++k) log_[theta_powers_[k]] = k;

  if (e_ > 1 && p_ != 2) {
    zech_.assign(n, -1);
    for (std::uint32_t k = 0; k < n; ++k) {
      const FieldElement s = digit_add({1}, {theta_powers_[k]});
      zech_[k] = s.rep == 0 ? -1 : static_cast<std::int32_t>(log_[s.rep]);
    }
  }
}

FieldPtr make_field(std::uint64_t q, std::uint64_t cap) { return Field::Make(q, cap); }

FieldElement field_inverse(FieldElement a, const Field& field) { return field.inv(a); }

FieldElement primitive_element(const Field& field) { return field.theta(); }

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFieldMismatch,
                "F_" + std::to_string(a.q()) + " vs F_" + std::to_string(b.q()));
  }
}

}  // namespace hyperweight

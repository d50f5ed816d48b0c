#include "triaut/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "triaut/error.hpp"

namespace triaut {

namespace {

void check_var(std::size_t n, std::size_t var) {
  if (var < 1 || var > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "variable index " + std::to_string(var) + " outside 1.." + std::to_string(n));
}

/// Sums monomial contributions before normalizing into a Polynomial.
class Accumulator {
 public:
  Accumulator(AlgebraMode mode, std::size_t n) : mode_(mode), n_(n) {}

  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }

  void add(Monomial&& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
  }

  void add_scaled(const Polynomial& p, const Scalar& c) {
    for (const auto& t : p.terms()) add(t.monomial, t.coefficient * c);
  }

  std::size_t size() const { return acc_.size(); }

  std::vector<Term> take_sorted() {
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto& [m, c] : acc_)
      if (!c.is_zero()) terms.push_back(Term{m, std::move(c)});
    acc_.clear();
    const AlgebraMode mode = mode_;
    std::sort(terms.begin(), terms.end(), [mode](const Term& a, const Term& b) {
      return ranks_above(mode, a.monomial, b.monomial);
    });
    return terms;
  }

  AlgebraMode mode() const { return mode_; }
  std::size_t n() const { return n_; }

 private:
  AlgebraMode mode_;
  std::size_t n_;
  std::unordered_map<Monomial, Scalar, MonomialHash> acc_;
};

void enforce(const Budget& budget, const Polynomial& p) {
  if (budget.max_terms && p.term_count() > *budget.max_terms)
    throw Error(ErrorCode::BudgetExceeded, "result has " + std::to_string(p.term_count()) +
                                               " terms, budget is " +
                                               std::to_string(*budget.max_terms));
  if (budget.max_degree) {
    auto d = p.total_degree();
    if (!d.is_neg_infinity() && d.value() > *budget.max_degree)
      throw Error(ErrorCode::BudgetExceeded, "result has degree " + std::to_string(d.value()) +
                                                 ", budget is " +
                                                 std::to_string(*budget.max_degree));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::one(AlgebraMode mode, std::size_t n) {
  if (mode == AlgebraMode::Commutative) return Monomial(std::vector<std::uint32_t>(n, 0));
  return Monomial();
}

Monomial Monomial::variable(AlgebraMode mode, std::size_t n, std::size_t var) {
  check_var(n, var);
  if (mode == AlgebraMode::Commutative) {
    std::vector<std::uint32_t> e(n, 0);
    e[var - 1] = 1;
    return Monomial(std::move(e));
  }
  return Monomial({static_cast<std::uint32_t>(var - 1)});
}

std::size_t Monomial::total_degree(AlgebraMode mode) const {
  if (mode == AlgebraMode::Free) return data_.size();
  return std::accumulate(data_.begin(), data_.end(), std::size_t{0});
}

std::size_t Monomial::degree_in(AlgebraMode mode, std::size_t var) const {
  if (mode == AlgebraMode::Commutative) return var - 1 < data_.size() ? data_[var - 1] : 0;
  return static_cast<std::size_t>(
      std::count(data_.begin(), data_.end(), static_cast<std::uint32_t>(var - 1)));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the raw words.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : m.data()) {
    h ^= v + 0x9e3779b9u;
    h *= 1099511628211ull;
  }
  h ^= m.data().size();
  return static_cast<std::size_t>(h);
}

Monomial multiply(AlgebraMode mode, const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> out(a.data().begin(), a.data().end());
  if (mode == AlgebraMode::Commutative) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.data()[i];
  } else {
    out.insert(out.end(), b.data().begin(), b.data().end());
  }
  return Monomial(std::move(out));
}

bool ranks_above(AlgebraMode mode, const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree(mode);
  const auto db = b.total_degree(mode);
  if (da != db) return da > db;
  auto x = a.data();
  auto y = b.data();
  if (mode == AlgebraMode::Commutative)
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(AlgebraMode mode, std::size_t n) : mode_(mode), n_(n) {}

Polynomial Polynomial::constant(AlgebraMode mode, std::size_t n, const Scalar& c) {
  Polynomial p(mode, n);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial::one(mode, n), c});
  return p;
}

Polynomial Polynomial::variable(AlgebraMode mode, std::size_t n, std::size_t var) {
  Polynomial p(mode, n);
  p.terms_.push_back(Term{Monomial::variable(mode, n, var), Scalar(1)});
  return p;
}

Polynomial Polynomial::from_terms(AlgebraMode mode, std::size_t n, std::vector<Term> terms) {
  Accumulator acc(mode, n);
  for (auto& t : terms) {
    const auto data = t.monomial.data();
    if (mode == AlgebraMode::Commutative) {
      if (data.size() != n)
        throw Error(ErrorCode::ArityMismatch, "exponent vector length " +
                                                  std::to_string(data.size()) + " != n = " +
                                                  std::to_string(n));
    } else {
      for (auto letter : data)
        if (letter >= n)
          throw Error(ErrorCode::ArityMismatch,
                      "letter x" + std::to_string(letter + 1) + " outside 1.." + std::to_string(n));
    }
    acc.add(std::move(t.monomial), t.coefficient);
  }
  return from_canonical(mode, n, acc.take_sorted());
}

Polynomial Polynomial::from_canonical(AlgebraMode mode, std::size_t n, std::vector<Term> terms) {
  Polynomial p(mode, n);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one(mode_));
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one(mode_)) return terms_.back().coefficient;
  return Scalar(0);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Scalar(0);
}

Degree Polynomial::total_degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree::of(terms_.front().monomial.total_degree(mode_));
}

Degree Polynomial::lowest_degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree::of(terms_.back().monomial.total_degree(mode_));
}

bool Polynomial::involves(std::size_t var) const {
  check_var(n_, var);
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree_in(mode_, var) > 0; });
}

bool Polynomial::depends_only_on(std::size_t first, std::size_t last) const {
  for (const auto& t : terms_) {
    const auto data = t.monomial.data();
    if (mode_ == AlgebraMode::Commutative) {
      for (std::size_t i = 0; i < data.size(); ++i)
        if (data[i] > 0 && (i + 1 < first || i + 1 > last)) return false;
    } else {
      for (auto letter : data)
        if (letter + 1 < first || letter + 1 > last) return false;
    }
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_algebra(*this, rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->monomial == b->monomial) {
      Scalar c = a->coefficient + b->coefficient;
      if (!c.is_zero()) merged.push_back(Term{std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    } else if (ranks_above(mode_, a->monomial, b->monomial)) {
      merged.push_back(std::move(*a++));
    } else {
      merged.push_back(*b++);
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != rhs.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(mode_, n_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

void require_same_algebra(const Polynomial& a, const Polynomial& b) {
  if (a.mode() != b.mode())
    throw Error(ErrorCode::ModeMismatch, "commutative and free polynomials cannot be combined");
  if (a.n() != b.n())
    throw Error(ErrorCode::ArityMismatch,
                "variable counts differ: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q, const Budget& budget) {
  require_same_algebra(p, q);
  const AlgebraMode mode = p.mode();
  if (p.is_zero() || q.is_zero()) return Polynomial(mode, p.n());
  if (budget.max_degree) {
    // Both algebras are domains, so leading degrees add exactly.
    const auto d = p.total_degree().value() + q.total_degree().value();
    if (d > *budget.max_degree)
      throw Error(ErrorCode::BudgetExceeded, "product degree " + std::to_string(d) +
                                                 " exceeds budget " +
                                                 std::to_string(*budget.max_degree));
  }
  Accumulator acc(mode, p.n());
  for (const auto& s : p.terms())
    for (const auto& t : q.terms())
      acc.add(multiply(mode, s.monomial, t.monomial), s.coefficient * t.coefficient);
  auto out = Polynomial::from_canonical(mode, p.n(), acc.take_sorted());
  enforce(budget, out);
  return out;
}

Polynomial power(const Polynomial& p, std::size_t k, const Budget& budget) {
  Polynomial result = Polynomial::constant(p.mode(), p.n(), Scalar(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1) result = mul(result, base, budget);
    k >>= 1;
    if (k > 0) base = mul(base, base, budget);
  }
  return result;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images,
                      const Budget& budget) {
  const AlgebraMode mode = p.mode();
  const std::size_t n = p.n();
  if (images.size() != n)
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(n) + " images, got " +
                                              std::to_string(images.size()));
  for (const auto& img : images) require_same_algebra(img, p);
  const std::size_t out_n = n;
  // powers[j][e] = images[j]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto image_power = [&](std::size_t j, std::size_t e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(mode, out_n, Scalar(1)));
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images[j], budget));
    return cache[e];
  };

  Accumulator acc(mode, out_n);
  for (const auto& t : p.terms()) {
    const auto data = t.monomial.data();
    Polynomial product = Polynomial::constant(mode, out_n, t.coefficient);
    if (mode == AlgebraMode::Commutative) {
      for (std::size_t j = 0; j < n; ++j)
        if (data[j] > 0) product = mul(product, image_power(j, data[j]), budget);
    } else {
      std::size_t pos = 0;
      while (pos < data.size()) {
        std::size_t run = 1;
        while (pos + run < data.size() && data[pos + run] == data[pos]) ++run;
        product = mul(product, image_power(data[pos], run), budget);
        pos += run;
      }
    }
    acc.add_scaled(product, Scalar(1));
  }
  auto out = Polynomial::from_canonical(mode, out_n, acc.take_sorted());
  enforce(budget, out);
  return out;
}

Polynomial specialize(const Polynomial& p, std::size_t var, const Scalar& value) {
  check_var(p.n(), var);
  const AlgebraMode mode = p.mode();
  Accumulator acc(mode, p.n());
  const auto letter = static_cast<std::uint32_t>(var - 1);
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> data(t.monomial.data().begin(), t.monomial.data().end());
    std::size_t e = 0;
    if (mode == AlgebraMode::Commutative) {
      e = data[letter];
      data[letter] = 0;
    } else {
      e = static_cast<std::size_t>(std::count(data.begin(), data.end(), letter));
      data.erase(std::remove(data.begin(), data.end(), letter), data.end());
    }
    acc.add(Monomial(std::move(data)), t.coefficient * value.pow(static_cast<long>(e)));
  }
  return Polynomial::from_canonical(mode, p.n(), acc.take_sorted());
}

Polynomial abelianize(const Polynomial& p) {
  if (p.mode() != AlgebraMode::Free)
    throw Error(ErrorCode::ModeMismatch, "abelianize expects a free-algebra polynomial");
  Accumulator acc(AlgebraMode::Commutative, p.n());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(p.n(), 0);
    for (auto letter : t.monomial.data()) ++e[letter];
    acc.add(Monomial(std::move(e)), t.coefficient);
  }
  return Polynomial::from_canonical(AlgebraMode::Commutative, p.n(), acc.take_sorted());
}

Degree degree_in_var(const Polynomial& p, std::size_t var) {
  check_var(p.n(), var);
  if (p.is_zero()) return Degree::neg_infinity();
  std::size_t best = 0;
  for (const auto& t : p.terms()) best = std::max(best, t.monomial.degree_in(p.mode(), var));
  return Degree::of(best);
}

SyllableProfile syllable_profile(AlgebraMode mode, std::size_t n, const Monomial& m,
                                 std::size_t var) {
  if (mode != AlgebraMode::Free)
    throw Error(ErrorCode::ModeMismatch, "syllable profiles are defined for free monomials");
  check_var(n, var);
  const auto letter = static_cast<std::uint32_t>(var - 1);
  SyllableProfile prof;
  const auto data = m.data();
  for (std::size_t pos = 0; pos < data.size();) {
    if (data[pos] != letter) {
      ++pos;
      continue;
    }
    std::size_t run = 0;
    while (pos < data.size() && data[pos] == letter) {
      ++run;
      ++pos;
    }
    prof.exponent_vector.push_back(run);
    prof.degree_in_var += run;
  }
  prof.syllable_count = prof.exponent_vector.size();
  return prof;
}

}  // namespace triaut

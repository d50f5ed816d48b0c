#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "triaut/scalar.hpp"

namespace triaut {

/// Commutative: the polynomial algebra P_n. Free: the free associative algebra A_n.
enum class AlgebraMode { Commutative, Free };

/// A monomial without its coefficient.
///
/// Commutative mode stores exactly n exponents; Free mode stores the word as a
/// sequence of 0-based letter indices. The owning Polynomial carries the mode,
/// so the same bits mean different things in the two modes.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> data) : data_(std::move(data)) {}

  static Monomial one(AlgebraMode mode, std::size_t n);
  /// x_var (1-based) as a monomial.
  static Monomial variable(AlgebraMode mode, std::size_t n, std::size_t var);

  std::span<const std::uint32_t> data() const { return data_; }
  std::vector<std::uint32_t>& mutable_data() { return data_; }

  /// Total degree: exponent sum (Commutative) or word length (Free).
  std::size_t total_degree(AlgebraMode mode) const;
  /// Exponent of x_var (1-based) counted with multiplicity.
  std::size_t degree_in(AlgebraMode mode, std::size_t var) const;
  bool is_one(AlgebraMode mode) const { return total_degree(mode) == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> data_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Product of monomials: exponent addition or word concatenation.
Monomial multiply(AlgebraMode mode, const Monomial& a, const Monomial& b);

/// Canonical rank: true when `a` ranks strictly above `b`. Higher total degree
/// ranks first; ties break graded-lexicographically (Commutative, larger
/// exponent of x_1 first) or lexicographically on letters (Free, x_1 first).
bool ranks_above(AlgebraMode mode, const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Total degree of a polynomial, with a distinct value for the zero polynomial.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  static Degree of(std::size_t value) { return Degree(value); }

  bool is_neg_infinity() const { return !value_.has_value(); }
  /// Undefined for NegInfinity.
  std::size_t value() const { return *value_; }

  friend bool operator==(const Degree&, const Degree&) = default;
  // std::optional orders nullopt below every engaged value.
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Degree() = default;
  explicit Degree(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/// Resource guard for operations whose output can blow up.
struct Budget {
  std::optional<std::size_t> max_terms;
  std::optional<std::size_t> max_degree;

  bool unlimited() const { return !max_terms && !max_degree; }
};

/// Sparse polynomial in P_n or A_n over Q.
///
/// Terms are kept in canonical rank order (highest first) with no zero
/// coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  /// The zero polynomial.
  Polynomial(AlgebraMode mode, std::size_t n);

  static Polynomial constant(AlgebraMode mode, std::size_t n, const Scalar& c);
  /// x_var, 1-based. Throws IndexOutOfRange.
  static Polynomial variable(AlgebraMode mode, std::size_t n, std::size_t var);
  /// Merges duplicates, drops zeros, sorts. Throws ArityMismatch for
  /// monomials that do not fit (mode, n).
  static Polynomial from_terms(AlgebraMode mode, std::size_t n, std::vector<Term> terms);
  /// Trusts the caller: terms already sorted by rank, unique and nonzero.
  static Polynomial from_canonical(AlgebraMode mode, std::size_t n, std::vector<Term> terms);

  AlgebraMode mode() const { return mode_; }
  std::size_t n() const { return n_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;

  Degree total_degree() const;
  /// Lowest total degree among the terms; NegInfinity for zero.
  Degree lowest_degree() const;
  bool involves(std::size_t var) const;
  /// True when every variable occurring has index in [first, last] (1-based).
  bool depends_only_on(std::size_t first, std::size_t last) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial scaled(const Scalar& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  AlgebraMode mode_;
  std::size_t n_;
  std::vector<Term> terms_;
};

/// Throws ModeMismatch / ArityMismatch when the two do not share an algebra.
void require_same_algebra(const Polynomial& a, const Polynomial& b);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q, const Budget& budget = {});
Polynomial power(const Polynomial& p, std::size_t k, const Budget& budget = {});

/// Applies the algebra endomorphism x_i -> images[i-1]. In Free mode a word
/// maps to the ordered product of the images of its letters.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images,
                      const Budget& budget = {});

/// Sets x_var to a scalar value.
Polynomial specialize(const Polynomial& p, std::size_t var, const Scalar& value);

/// The quotient map A_n -> P_n. Throws ModeMismatch on commutative input.
Polynomial abelianize(const Polynomial& p);

/// Maximum exponent of x_var over the terms; NegInfinity for zero.
/// Throws IndexOutOfRange unless 1 <= var <= n.
Degree degree_in_var(const Polynomial& p, std::size_t var);

/// Decomposition of a word as b_1 x^{k_1} b_2 ... b_s x^{k_s} b_{s+1} with
/// respect to one variable x.
struct SyllableProfile {
  std::size_t degree_in_var = 0;
  std::size_t syllable_count = 0;
  std::vector<std::size_t> exponent_vector;

  friend bool operator==(const SyllableProfile&, const SyllableProfile&) = default;
};

/// Throws ModeMismatch unless mode is Free; IndexOutOfRange unless 1 <= var <= n.
SyllableProfile syllable_profile(AlgebraMode mode, std::size_t n, const Monomial& m,
                                 std::size_t var);

}  // namespace triaut

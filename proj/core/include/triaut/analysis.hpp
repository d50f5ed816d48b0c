#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triaut/endomorphism.hpp"

namespace triaut {

// ---------------------------------------------------------------------------
// Words in two generators a (phi) and b (psi)

struct Syllable {
  char tag;  // 'a' or 'b'
  long exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

  /// Text such as "a^2 b^-1 a b^3"; "1" is the empty word. Throws ParseError.
  static GroupWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Nonzero exponents, tags in {a, b}, adjacent tags distinct.
  bool is_reduced() const;
  /// Free reduction: merges equal neighbours and drops zero exponents.
  GroupWord reduced() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

std::string to_string(const GroupWord& w);

// ---------------------------------------------------------------------------
// Degree-growth certificate for <sigma(1, alpha, f), sigma(2, beta, g)>

struct FreePairCertificate {
  std::size_t p;  // deg_{x2} f
  std::size_t q;  // deg_{x1} g
  GroupWord input;
  /// Cyclic conjugate of the input of the form a^k1 b^l1 ... a^km b^lm.
  GroupWord normalized;
  std::size_t pairs;  // m
  std::size_t observed_degree;
  std::size_t expected_degree;  // (pq)^m

  bool valid() const { return observed_degree == expected_degree; }
};

/// Evaluates x_1 under the word in phi = sigma(1, alpha, f), psi = sigma(2, beta, g)
/// and reports its x_1-degree. Free inputs are abelianized first.
///
/// With alpha (beta) equal to -1 the generator has order 2: odd exponents
/// count as 1 and even ones make the word unreduced.
/// Throws DegreeTooSmall (pq < 2), UnreducedWord, WordInCyclicFactor (the
/// word is conjugate into <phi> or <psi>), VariableDependence, ZeroAlpha.
FreePairCertificate free_pair_check(const Polynomial& f, const Polynomial& g,
                                    const GroupWord& word, const Scalar& alpha = Scalar(1),
                                    const Scalar& beta = Scalar(1), const Budget& budget = {});

// ---------------------------------------------------------------------------
// Two-generator subgroups

enum class PairClass { FreeProduct, Metabelian, ZxZ, Z, Undetermined };

/// What decided the class.
enum class PairCriterion {
  SameIndexNonUnit,      // same index, alpha != 1 or beta != 1
  Proportional,          // same index, unit, f = c g
  NotProportional,       // same index, unit, f, g independent over Q
  ConstantShift,         // distinct indices, one shift is a constant
  DegreeGrowth,          // distinct indices, pq >= 2
  TrivialPair,           // both generators are the identity
  NoCriterion,
};

struct PairClassification {
  PairClass cls;
  PairCriterion criterion;
};

std::string_view to_string(PairClass c);
std::string_view to_string(PairCriterion c);

/// Indices must be {1, 1} or {1, 2} (either order); throws UnsupportedIndices.
PairClassification classify_pair(const Elementary& e1, const Elementary& e2);

// ---------------------------------------------------------------------------
// Iterated commutator in P_3

/// x_1^w - x_1 for w = [phi_p^l, chi^l psi^l commutator taken m times] with
/// phi_p = sigma(1,1,x2^p), chi = sigma(2,1,x3), psi = sigma(3,1,1), computed
/// literally with commutator().
Polynomial nonlinearity_witness(std::size_t p, std::size_t l, std::size_t m,
                                const Budget& budget = {});
/// The witness polynomial at x_2 = 0.
Scalar nonlinearity_witness_at_zero(std::size_t p, std::size_t l, std::size_t m,
                                    const Budget& budget = {});

// ---------------------------------------------------------------------------
// Single elements

/// Multiplicative order over Q; nullopt for infinite order.
std::optional<long> element_order(const Elementary& e);

struct Diagonalization {
  Elementary conjugator;  // c
  Endomorphism diagonal;  // c^-1 e c
};

/// nullopt when alpha == 1 (not conjugate to a diagonal map).
/// Throws TrivialInput for the identity.
std::optional<Diagonalization> diagonalize_elementary(const Elementary& e,
                                                      const Budget& budget = {});

struct IaLevel {
  enum class Kind { Level, NotIa, Identity };
  Kind kind;
  std::size_t level = 0;
};

/// Lowest total degree among the monomials of x_i^phi - x_i, minus one.
IaLevel ia_level(const Endomorphism& phi);

/// f = f1 + f2 with f1 fixed and f2 negated by the involution phi.
/// Throws NotInvolution.
std::pair<Polynomial, Polynomial> fix_ifix_split(const Polynomial& f, const Endomorphism& phi,
                                                 const Budget& budget = {});

}  // namespace triaut

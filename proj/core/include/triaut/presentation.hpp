#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "triaut/endomorphism.hpp"

namespace triaut {

/// phi(alpha, f) = sigma(1, alpha, f) with f = f(x_2, ..., x_n).
struct PhiGen {
  Scalar alpha;
  Polynomial f;

  friend bool operator==(const PhiGen&, const PhiGen&) = default;
};

/// tau_{ks}: swaps x_k and x_s.
struct TauGen {
  std::size_t k;
  std::size_t s;

  friend bool operator==(const TauGen&, const TauGen&) = default;
};

using BGenerator = std::variant<PhiGen, TauGen>;
using BWord = std::vector<BGenerator>;

/// sigma(1, a, f) -> [phi(a, f)]; sigma(i, a, f) -> [tau_1i, phi(a, f^{tau_1i}), tau_1i].
BWord to_b_generators(const Elementary& e);

/// Left-to-right product. Throws ArityMismatch / ModeMismatch when a generator
/// does not fit C_n, IndexOutOfRange / EqualIndices for bad tau indices.
Endomorphism evaluate_b_word(const BWord& word, AlgebraMode mode, std::size_t n);

/// Tokens `t(k,s)` and `phi(alpha; <poly>)` separated by whitespace.
std::string to_string(const BWord& word);
BWord parse_b_word(std::string_view text, AlgebraMode mode, std::size_t n);

// ---------------------------------------------------------------------------
// Relation families

enum class RelationFamily { R1, R2_1, R2_2, R3, R4, R5, R6, R7 };

inline constexpr RelationFamily kAllRelationFamilies[] = {
    RelationFamily::R1, RelationFamily::R2_1, RelationFamily::R2_2, RelationFamily::R3,
    RelationFamily::R4, RelationFamily::R5,   RelationFamily::R6,   RelationFamily::R7};

std::string_view to_string(RelationFamily family);
std::optional<RelationFamily> parse_relation_family(std::string_view name);

/// Which transposition identity an R4 instance checks.
enum class TauIdentity {
  Square,    // tau_ks tau_ks = 1
  Commute,   // tau_ks tau_lm = tau_lm tau_ks, {k,s} and {l,m} disjoint
  Conjugate  // tau_ks tau_lk tau_ks = tau_ls
};

/// Parameters of one relation instance. Fields a family does not use are ignored.
///
///   R1   sigma(i,a,f) sigma(i,b,g) = sigma(i, ab, f + a g)
///   R2_1 tau_ks sigma(i,a,f) tau_ks = sigma(i, a, f^tau_ks), k,s != i
///   R2_2 tau_is sigma(i,a,f) tau_is = sigma(s, a, f^tau_is)
///   R3   sigma(i,a,f)^-1 sigma(j,b,g) sigma(i,a,f) = sigma(j, b, g^sigma(i,a,f)),
///        f free of x_i and x_j
///   R4   transposition identities, see TauIdentity
///   R5   phi(a,f) phi(b,g) = phi(ab, a g + f)
///   R6   tau_ks phi(a,g) tau_ks = phi(a, g^tau_ks), k,s != 1
///   R7   (tau_1i phi(a,g) tau_1i)^-1 phi(b,f) (tau_1i phi(a,g) tau_1i)
///          = phi(b, f^{tau_1i phi(a,g) tau_1i}), g free of x_1 and x_i
struct RelationInstance {
  RelationInstance(RelationFamily family, AlgebraMode mode, std::size_t n);

  RelationFamily family;
  AlgebraMode mode;
  std::size_t n;
  std::size_t i = 1, j = 2, k = 1, s = 2, l = 3, m = 4;
  TauIdentity tau_identity = TauIdentity::Square;
  Scalar alpha{1};
  Scalar beta{1};
  Polynomial f;
  Polynomial g;
};

struct RelationCheck {
  bool holds;
  Endomorphism lhs;
  Endomorphism rhs;
};

/// Evaluates both sides. Throws SideConditionViolated naming the failed constraint.
RelationCheck check_relation_family(const RelationInstance& instance);

/// A random admissible instance of `family` (n >= 3, or n >= 4 for the R4
/// commuting identity, which is only drawn when n allows it).
RelationInstance random_relation_instance(RelationFamily family, AlgebraMode mode, std::size_t n,
                                          std::mt19937_64& rng);

}  // namespace triaut

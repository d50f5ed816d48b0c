#include "triaut/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "triaut/error.hpp"

namespace triaut {

// ---------------------------------------------------------------------------
// GroupWord

GroupWord GroupWord::parse(std::string_view text) {
  auto skip = [&](std::size_t pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos;
  };
  std::size_t pos = skip(0);
  if (pos < text.size() && text[pos] == '1' && skip(pos + 1) == text.size()) return GroupWord();

  std::vector<Syllable> out;
  while (pos < text.size()) {
    const char tag = text[pos];
    if (tag != 'a' && tag != 'b') throw ParseError(pos + 1, "expected 'a' or 'b'");
    pos = skip(pos + 1);
    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      pos = skip(pos + 1);
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      const std::size_t start = pos;
      exponent = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (pos - start >= 9) throw ParseError(pos + 1, "exponent too large");
        exponent = exponent * 10 + (text[pos] - '0');
        ++pos;
      }
      if (pos == start) throw ParseError(pos + 1, "expected an exponent");
      if (negative) exponent = -exponent;
      pos = skip(pos);
    }
    out.push_back(Syllable{tag, exponent});
  }
  if (out.empty()) throw ParseError(text.size() + 1, "empty word (write 1 for the identity)");
  return GroupWord(std::move(out));
}

bool GroupWord::is_reduced() const {
  for (std::size_t k = 0; k < syllables_.size(); ++k) {
    const auto& s = syllables_[k];
    if ((s.tag != 'a' && s.tag != 'b') || s.exponent == 0) return false;
    if (k > 0 && syllables_[k - 1].tag == s.tag) return false;
  }
  return true;
}

GroupWord GroupWord::reduced() const {
  std::vector<Syllable> out;
  for (const auto& s : syllables_) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().tag == s.tag) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return GroupWord(std::move(out));
}

std::string to_string(const GroupWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << s.tag;
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Degree-growth certificate

namespace {

/// sigma(i, alpha, f)^k = sigma(i, alpha^k, (1 + alpha + ... + alpha^(k-1)) f), any integer k.
Endomorphism elementary_power(const Elementary& e, long k) {
  const Scalar ak = e.alpha.pow(k);
  const Scalar sum = e.alpha.is_one() ? Scalar(k) : (ak - Scalar(1)) / (e.alpha - Scalar(1));
  std::vector<Polynomial> images;
  const auto n = e.f.n();
  for (std::size_t v = 1; v <= n; ++v) images.push_back(Polynomial::variable(e.f.mode(), n, v));
  images[e.index - 1] = images[e.index - 1].scaled(ak) + e.f.scaled(sum);
  return Endomorphism(std::move(images));
}

std::size_t degree_or_zero(const Polynomial& p, std::size_t var) {
  const auto d = degree_in_var(p, var);
  return d.is_neg_infinity() ? 0 : d.value();
}

/// Exponent as an element of the cyclic group; 0 means trivial.
long normalize_exponent(long k, bool order_two) {
  if (!order_two) return k;
  return k % 2 == 0 ? 0 : 1;
}

GroupWord cyclic_normal_form(const GroupWord& word, bool a_order_two, bool b_order_two) {
  if (word.empty()) throw Error(ErrorCode::UnreducedWord, "the empty word is trivial");
  if (!word.is_reduced())
    throw Error(ErrorCode::UnreducedWord,
                "word '" + to_string(word) + "' is not reduced (zero exponent or equal neighbours)");

  auto order_two = [&](char tag) { return tag == 'a' ? a_order_two : b_order_two; };
  std::vector<Syllable> s;
  for (const auto& syl : word.syllables()) {
    const long k = normalize_exponent(syl.exponent, order_two(syl.tag));
    if (k == 0)
      throw Error(ErrorCode::UnreducedWord, std::string("syllable ") + syl.tag + "^" +
                                                std::to_string(syl.exponent) +
                                                " is trivial for an element of order 2");
    s.push_back(Syllable{syl.tag, k});
  }

  // Conjugate away a matching first and last syllable until they differ.
  while (s.size() >= 2 && s.front().tag == s.back().tag) {
    const long k = normalize_exponent(s.front().exponent + s.back().exponent, order_two(s.front().tag));
    s.pop_back();
    if (k == 0)
      s.erase(s.begin());
    else
      s.front().exponent = k;
  }
  if (s.size() < 2)
    throw Error(ErrorCode::WordInCyclicFactor,
                "word '" + to_string(word) + "' is conjugate into a single cyclic factor");
  if (s.front().tag == 'b') std::rotate(s.begin(), s.begin() + 1, s.end());
  return GroupWord(std::move(s));
}

}  // namespace

FreePairCertificate free_pair_check(const Polynomial& f_in, const Polynomial& g_in,
                                    const GroupWord& word, const Scalar& alpha,
                                    const Scalar& beta, const Budget& budget) {
  require_same_algebra(f_in, g_in);
  if (f_in.n() < 2) throw Error(ErrorCode::ArityMismatch, "need n >= 2");
  const bool free = f_in.mode() == AlgebraMode::Free;
  const Polynomial f = free ? abelianize(f_in) : f_in;
  const Polynomial g = free ? abelianize(g_in) : g_in;
  const auto phi = Elementary::make(1, alpha, f);
  const auto psi = Elementary::make(2, beta, g);

  FreePairCertificate cert;
  cert.p = degree_or_zero(f, 2);
  cert.q = degree_or_zero(g, 1);
  if (cert.p * cert.q < 2)
    throw Error(ErrorCode::DegreeTooSmall, "need deg_x2 f * deg_x1 g >= 2, got " +
                                               std::to_string(cert.p) + " * " +
                                               std::to_string(cert.q));
  const Scalar minus_one(-1);
  cert.input = word;
  cert.normalized = cyclic_normal_form(word, alpha == minus_one, beta == minus_one);
  cert.pairs = cert.normalized.syllables().size() / 2;
  cert.expected_degree = 1;
  for (std::size_t k = 0; k < cert.pairs; ++k) cert.expected_degree *= cert.p * cert.q;

  // Built from the right: substituting the small syllable images into the
  // accumulated suffix is much cheaper than pushing a large x_1 image
  // through every syllable.
  Endomorphism suffix = Endomorphism::identity(f.mode(), f.n());
  const auto& syl = cert.normalized.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    const auto step = elementary_power(it->tag == 'a' ? phi : psi, it->exponent);
    suffix = compose(step, suffix, budget);
  }
  cert.observed_degree = degree_or_zero(suffix.image(1), 1);
  return cert;
}

// ---------------------------------------------------------------------------
// Two-generator subgroups

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::FreeProduct: return "free-product";
    case PairClass::Metabelian: return "metabelian";
    case PairClass::ZxZ: return "ZxZ";
    case PairClass::Z: return "Z";
    case PairClass::Undetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(PairCriterion c) {
  switch (c) {
    case PairCriterion::SameIndexNonUnit: return "same index, non-unit coefficient";
    case PairCriterion::Proportional: return "same index, proportional shifts";
    case PairCriterion::NotProportional: return "same index, independent shifts";
    case PairCriterion::ConstantShift: return "distinct indices, constant shift";
    case PairCriterion::DegreeGrowth: return "distinct indices, degree growth";
    case PairCriterion::TrivialPair: return "both generators trivial";
    case PairCriterion::NoCriterion: return "no criterion applies";
  }
  return "?";
}

namespace {

bool proportional(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return true;
  const Scalar c = f.terms().front().coefficient / g.terms().front().coefficient;
  return f == g.scaled(c);
}

}  // namespace

PairClassification classify_pair(const Elementary& e1, const Elementary& e2) {
  require_same_algebra(e1.f, e2.f);
  if (e1.index == 1 && e2.index == 1) {
    if (!e1.alpha.is_one() || !e2.alpha.is_one())
      return {PairClass::Metabelian, PairCriterion::SameIndexNonUnit};
    if (e1.f.is_zero() && e2.f.is_zero()) return {PairClass::Undetermined, PairCriterion::TrivialPair};
    if (proportional(e1.f, e2.f)) return {PairClass::Z, PairCriterion::Proportional};
    return {PairClass::ZxZ, PairCriterion::NotProportional};
  }
  const bool forward = e1.index == 1 && e2.index == 2;
  const bool backward = e1.index == 2 && e2.index == 1;
  if (!forward && !backward)
    throw Error(ErrorCode::UnsupportedIndices,
                "indices must be {1, 1} or {1, 2}, got {" + std::to_string(e1.index) + ", " +
                    std::to_string(e2.index) + "}");
  const auto& phi = forward ? e1 : e2;
  const auto& psi = forward ? e2 : e1;
  if (psi.f.is_constant() || phi.f.is_constant())
    return {PairClass::Metabelian, PairCriterion::ConstantShift};
  const bool free = phi.f.mode() == AlgebraMode::Free;
  const auto p = degree_or_zero(free ? abelianize(phi.f) : phi.f, 2);
  const auto q = degree_or_zero(free ? abelianize(psi.f) : psi.f, 1);
  if (p * q >= 2) return {PairClass::FreeProduct, PairCriterion::DegreeGrowth};
  return {PairClass::Undetermined, PairCriterion::NoCriterion};
}

// ---------------------------------------------------------------------------
// Iterated commutator

Polynomial nonlinearity_witness(std::size_t p, std::size_t l, std::size_t m,
                                const Budget& budget) {
  if (p == 0 || l == 0 || m == 0)
    throw Error(ErrorCode::SideConditionViolated, "p, l and m must be positive");
  constexpr auto mode = AlgebraMode::Commutative;
  constexpr std::size_t n = 3;
  const auto x2p = power(Polynomial::variable(mode, n, 2), p, budget);
  const auto phi = elementary(1, Scalar(1), x2p);
  const auto chi = elementary(2, Scalar(1), Polynomial::variable(mode, n, 3));
  const auto psi = elementary(3, Scalar(1), Polynomial::constant(mode, n, Scalar(1)));

  const auto lk = static_cast<long>(l);
  const auto c = commutator(power(chi, lk, budget), power(psi, lk, budget), budget);
  auto w = power(phi, lk, budget);
  for (std::size_t k = 0; k < m; ++k) w = commutator(w, c, budget);
  return w.image(1) - Polynomial::variable(mode, n, 1);
}

Scalar nonlinearity_witness_at_zero(std::size_t p, std::size_t l, std::size_t m,
                                    const Budget& budget) {
  return specialize(nonlinearity_witness(p, l, m, budget), 2, Scalar(0)).constant_term();
}

// ---------------------------------------------------------------------------
// Single elements

std::optional<long> element_order(const Elementary& e) {
  if (e.alpha.is_one()) return e.f.is_zero() ? std::optional<long>(1) : std::nullopt;
  if (e.alpha == Scalar(-1)) return 2;
  return std::nullopt;
}

std::optional<Diagonalization> diagonalize_elementary(const Elementary& e, const Budget& budget) {
  if (e.alpha.is_one() && e.f.is_zero())
    throw Error(ErrorCode::TrivialInput, "the identity has nothing to diagonalize");
  if (e.alpha.is_one()) return std::nullopt;

  const auto shift = -(e.alpha - Scalar(1)).inverse();
  auto c = Elementary::make(e.index, Scalar(1), e.f.scaled(shift));
  auto d = conjugate(e.to_endomorphism(), c.to_endomorphism(), c.inverse().to_endomorphism(),
                     budget);
  if (!classify(d).contains(Label::Diagonal))
    throw Error(ErrorCode::VerificationFailed, "conjugate is not diagonal");
  return Diagonalization{std::move(c), std::move(d)};
}

IaLevel ia_level(const Endomorphism& phi) {
  std::optional<std::size_t> lowest;
  for (std::size_t i = 1; i <= phi.n(); ++i) {
    const auto diff = phi.image(i) - Polynomial::variable(phi.mode(), phi.n(), i);
    if (diff.is_zero()) continue;
    const auto d = diff.lowest_degree().value();
    if (!lowest || d < *lowest) lowest = d;
  }
  if (!lowest) return {IaLevel::Kind::Identity, 0};
  if (*lowest <= 1) return {IaLevel::Kind::NotIa, 0};
  return {IaLevel::Kind::Level, *lowest - 1};
}

std::pair<Polynomial, Polynomial> fix_ifix_split(const Polynomial& f, const Endomorphism& phi,
                                                 const Budget& budget) {
  if (!compose(phi, phi, budget).is_identity())
    throw Error(ErrorCode::NotInvolution, "phi composed with itself is not the identity");
  const auto image = substitute(f, phi.images(), budget);
  const Scalar half(1, 2);
  return {(f + image).scaled(half), (f - image).scaled(half)};
}

}  // namespace triaut

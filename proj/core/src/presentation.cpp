#include "triaut/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "triaut/error.hpp"
#include "triaut/random.hpp"
#include "triaut/text.hpp"

namespace triaut {

namespace {

Polynomial image_under(const Polynomial& p, const Endomorphism& phi) {
  return substitute(p, phi.images());
}

Endomorphism phi_gen(const Scalar& alpha, const Polynomial& f) {
  return Elementary::make(1, alpha, f).to_endomorphism();
}

Endomorphism tau(const RelationInstance& r, std::size_t a, std::size_t b) {
  return transposition(r.mode, r.n, a, b);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::SideConditionViolated, what);
}

void require_index(const RelationInstance& r, std::size_t v, const char* name) {
  require(v >= 1 && v <= r.n, std::string(name) + " must lie in 1.." + std::to_string(r.n));
}

void require_free_of(const Polynomial& p, std::size_t v, const char* name) {
  require(!p.involves(v), std::string(name) + " must not involve x" + std::to_string(v));
}

void require_fits(const RelationInstance& r, const Polynomial& p, const char* name) {
  require(p.mode() == r.mode && p.n() == r.n,
          std::string(name) + " must live in " + std::string(to_string(r.mode)) + " with n = " +
              std::to_string(r.n));
}

void require_distinct(std::initializer_list<std::size_t> idx, const std::string& what) {
  std::vector<std::size_t> v(idx);
  std::sort(v.begin(), v.end());
  require(std::adjacent_find(v.begin(), v.end()) == v.end(), what + " must be distinct");
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

std::size_t find_or_fail(std::string_view text, std::size_t from, char c) {
  const auto at = text.find(c, from);
  if (at == std::string_view::npos)
    throw ParseError(text.size() + 1, std::string("expected '") + c + "'");
  return at;
}

std::size_t parse_index(std::string_view text, std::size_t begin, std::size_t end) {
  std::size_t a = skip_space(text, begin);
  std::size_t b = end;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  if (a == b || b - a > 9) throw ParseError(a + 1, "expected an index");
  std::size_t value = 0;
  for (std::size_t p = a; p < b; ++p) {
    if (!std::isdigit(static_cast<unsigned char>(text[p]))) throw ParseError(p + 1, "expected a digit");
    value = value * 10 + static_cast<std::size_t>(text[p] - '0');
  }
  return value;
}

}  // namespace

BWord to_b_generators(const Elementary& e) {
  if (e.index == 1) return {PhiGen{e.alpha, e.f}};
  const auto swap = transposition(e.f.mode(), e.f.n(), 1, e.index);
  return {TauGen{1, e.index}, PhiGen{e.alpha, image_under(e.f, swap)}, TauGen{1, e.index}};
}

Endomorphism evaluate_b_word(const BWord& word, AlgebraMode mode, std::size_t n) {
  auto out = Endomorphism::identity(mode, n);
  for (const auto& gen : word) {
    if (const auto* p = std::get_if<PhiGen>(&gen)) {
      if (p->f.mode() != mode) throw Error(ErrorCode::ModeMismatch, "phi generator in the wrong algebra");
      if (p->f.n() != n) throw Error(ErrorCode::ArityMismatch, "phi generator with the wrong n");
      out = compose(out, phi_gen(p->alpha, p->f));
    } else {
      const auto& t = std::get<TauGen>(gen);
      out = compose(out, transposition(mode, n, t.k, t.s));
    }
  }
  return out;
}

std::string to_string(const BWord& word) {
  std::ostringstream os;
  bool first = true;
  for (const auto& gen : word) {
    if (!first) os << ' ';
    first = false;
    if (const auto* p = std::get_if<PhiGen>(&gen))
      os << "phi(" << p->alpha << "; " << p->f << ')';
    else
      os << "t(" << std::get<TauGen>(gen).k << ',' << std::get<TauGen>(gen).s << ')';
  }
  return os.str();
}

BWord parse_b_word(std::string_view text, AlgebraMode mode, std::size_t n) {
  BWord out;
  std::size_t pos = skip_space(text, 0);
  while (pos < text.size()) {
    if (text.substr(pos, 2) == "t(") {
      const auto comma = find_or_fail(text, pos + 2, ',');
      const auto close = find_or_fail(text, comma + 1, ')');
      const auto k = parse_index(text, pos + 2, comma);
      const auto s = parse_index(text, comma + 1, close);
      if (k < 1 || k > n) throw ParseError(pos + 3, "index outside 1.." + std::to_string(n));
      if (s < 1 || s > n) throw ParseError(comma + 2, "index outside 1.." + std::to_string(n));
      out.push_back(TauGen{k, s});
      pos = close + 1;
    } else if (text.substr(pos, 4) == "phi(") {
      const auto semi = find_or_fail(text, pos + 4, ';');
      const auto close = find_or_fail(text, semi + 1, ')');
      auto alpha_text = text.substr(pos + 4, semi - pos - 4);
      const auto lead = skip_space(alpha_text, 0);
      alpha_text.remove_prefix(lead);
      while (!alpha_text.empty() && std::isspace(static_cast<unsigned char>(alpha_text.back())))
        alpha_text.remove_suffix(1);
      const auto alpha = Scalar::parse(alpha_text);
      if (!alpha) throw ParseError(pos + 5 + lead, "expected a rational");
      Polynomial f(mode, n);
      try {
        f = parse_polynomial(text.substr(semi + 1, close - semi - 1), mode, n);
      } catch (const ParseError& e) {
        throw ParseError(semi + 1 + e.offset(), e.what());
      }
      out.push_back(PhiGen{*alpha, std::move(f)});
      pos = close + 1;
    } else {
      throw ParseError(pos + 1, "expected 't(' or 'phi('");
    }
    pos = skip_space(text, pos);
  }
  return out;
}

std::string_view to_string(RelationFamily family) {
  switch (family) {
    case RelationFamily::R1: return "R1";
    case RelationFamily::R2_1: return "R2.1";
    case RelationFamily::R2_2: return "R2.2";
    case RelationFamily::R3: return "R3";
    case RelationFamily::R4: return "R4";
    case RelationFamily::R5: return "R5";
    case RelationFamily::R6: return "R6";
    case RelationFamily::R7: return "R7";
  }
  return "?";
}

std::optional<RelationFamily> parse_relation_family(std::string_view name) {
  for (auto f : kAllRelationFamilies)
    if (to_string(f) == name) return f;
  if (name == "R2_1") return RelationFamily::R2_1;
  if (name == "R2_2") return RelationFamily::R2_2;
  return std::nullopt;
}

RelationInstance::RelationInstance(RelationFamily family, AlgebraMode mode, std::size_t n)
    : family(family), mode(mode), n(n), f(mode, n), g(mode, n) {}

RelationCheck check_relation_family(const RelationInstance& r) {
  const auto mode = r.mode;
  const auto n = r.n;
  require(n >= 1, "n must be positive");
  require_fits(r, r.f, "f");
  require_fits(r, r.g, "g");
  require(!r.alpha.is_zero(), "alpha must be nonzero");
  require(!r.beta.is_zero(), "beta must be nonzero");

  auto result = [](Endomorphism lhs, Endomorphism rhs) {
    const bool holds = lhs == rhs;
    return RelationCheck{holds, std::move(lhs), std::move(rhs)};
  };

  switch (r.family) {
    case RelationFamily::R1: {
      require_index(r, r.i, "i");
      require_free_of(r.f, r.i, "f");
      require_free_of(r.g, r.i, "g");
      return result(compose(elementary(r.i, r.alpha, r.f), elementary(r.i, r.beta, r.g)),
                    elementary(r.i, r.alpha * r.beta, r.f + r.g.scaled(r.alpha)));
    }
    case RelationFamily::R2_1: {
      require_index(r, r.i, "i");
      require_index(r, r.k, "k");
      require_index(r, r.s, "s");
      require_distinct({r.i, r.k, r.s}, "i, k, s");
      require_free_of(r.f, r.i, "f");
      const auto t = tau(r, r.k, r.s);
      return result(compose(compose(t, elementary(r.i, r.alpha, r.f)), t),
                    elementary(r.i, r.alpha, image_under(r.f, t)));
    }
    case RelationFamily::R2_2: {
      require_index(r, r.i, "i");
      require_index(r, r.s, "s");
      require_distinct({r.i, r.s}, "i, s");
      require_free_of(r.f, r.i, "f");
      const auto t = tau(r, r.i, r.s);
      return result(compose(compose(t, elementary(r.i, r.alpha, r.f)), t),
                    elementary(r.s, r.alpha, image_under(r.f, t)));
    }
    case RelationFamily::R3: {
      require_index(r, r.i, "i");
      require_index(r, r.j, "j");
      require_distinct({r.i, r.j}, "i, j");
      require_free_of(r.f, r.i, "f");
      require_free_of(r.f, r.j, "f");
      require_free_of(r.g, r.j, "g");
      const auto by = Elementary::make(r.i, r.alpha, r.f);
      const auto by_e = by.to_endomorphism();
      return result(conjugate(elementary(r.j, r.beta, r.g), by_e, by.inverse().to_endomorphism()),
                    elementary(r.j, r.beta, image_under(r.g, by_e)));
    }
    case RelationFamily::R4: {
      require_index(r, r.k, "k");
      require_index(r, r.s, "s");
      switch (r.tau_identity) {
        case TauIdentity::Square: {
          require_distinct({r.k, r.s}, "k, s");
          const auto t = tau(r, r.k, r.s);
          return result(compose(t, t), Endomorphism::identity(mode, n));
        }
        case TauIdentity::Commute: {
          require_index(r, r.l, "l");
          require_index(r, r.m, "m");
          require_distinct({r.k, r.s, r.l, r.m}, "k, s, l, m");
          const auto a = tau(r, r.k, r.s);
          const auto b = tau(r, r.l, r.m);
          return result(compose(a, b), compose(b, a));
        }
        case TauIdentity::Conjugate: {
          require_index(r, r.l, "l");
          require_distinct({r.k, r.s, r.l}, "k, s, l");
          const auto a = tau(r, r.k, r.s);
          return result(compose(compose(a, tau(r, r.l, r.k)), a), tau(r, r.l, r.s));
        }
      }
      break;
    }
    case RelationFamily::R5: {
      require_free_of(r.f, 1, "f");
      require_free_of(r.g, 1, "g");
      return result(compose(phi_gen(r.alpha, r.f), phi_gen(r.beta, r.g)),
                    phi_gen(r.alpha * r.beta, r.g.scaled(r.alpha) + r.f));
    }
    case RelationFamily::R6: {
      require_index(r, r.k, "k");
      require_index(r, r.s, "s");
      require_distinct({1, r.k, r.s}, "1, k, s");
      require_free_of(r.g, 1, "g");
      const auto t = tau(r, r.k, r.s);
      return result(compose(compose(t, phi_gen(r.alpha, r.g)), t),
                    phi_gen(r.alpha, image_under(r.g, t)));
    }
    case RelationFamily::R7: {
      require_index(r, r.i, "i");
      require_distinct({1, r.i}, "1, i");
      require_free_of(r.f, 1, "f");
      require_free_of(r.g, 1, "g");
      require_free_of(r.g, r.i, "g");
      const auto t = tau(r, 1, r.i);
      const auto inner = Elementary::make(1, r.alpha, r.g);
      const auto c = compose(compose(t, inner.to_endomorphism()), t);
      const auto c_inv = compose(compose(t, inner.inverse().to_endomorphism()), t);
      return result(conjugate(phi_gen(r.beta, r.f), c, c_inv),
                    phi_gen(r.beta, image_under(r.f, c)));
    }
  }
  throw Error(ErrorCode::SideConditionViolated, "unknown relation family");
}

RelationInstance random_relation_instance(RelationFamily family, AlgebraMode mode, std::size_t n,
                                          std::mt19937_64& rng) {
  if (n < 3) throw Error(ErrorCode::ArityMismatch, "relation instances need n >= 3");
  RelationInstance r(family, mode, n);

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  std::shuffle(idx.begin(), idx.end(), rng);
  // Indices other than 1, shuffled, for families pinned to x_1.
  std::vector<std::size_t> rest(idx);
  rest.erase(std::find(rest.begin(), rest.end(), std::size_t{1}));

  auto vars_without = [&](std::initializer_list<std::size_t> banned) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 1; v <= n; ++v)
      if (std::find(banned.begin(), banned.end(), v) == banned.end()) vars.push_back(v);
    return vars;
  };
  auto poly = [&](std::vector<std::size_t> vars) {
    return random_polynomial(rng, RandomPolynomialOptions{mode, n, 3, 3, std::move(vars), true});
  };

  r.alpha = random_scalar(rng);
  r.beta = random_scalar(rng);
  switch (family) {
    case RelationFamily::R1:
      r.i = idx[0];
      r.f = poly(vars_without({r.i}));
      r.g = poly(vars_without({r.i}));
      break;
    case RelationFamily::R2_1:
      r.i = idx[0];
      r.k = idx[1];
      r.s = idx[2];
      r.f = poly(vars_without({r.i}));
      break;
    case RelationFamily::R2_2:
      r.i = idx[0];
      r.s = idx[1];
      r.f = poly(vars_without({r.i}));
      break;
    case RelationFamily::R3:
      r.i = idx[0];
      r.j = idx[1];
      r.f = poly(vars_without({r.i, r.j}));
      r.g = poly(vars_without({r.j}));
      break;
    case RelationFamily::R4: {
      const int pick = std::uniform_int_distribution<int>(0, n >= 4 ? 2 : 1)(rng);
      r.k = idx[0];
      r.s = idx[1];
      r.l = idx[2];
      if (pick == 0) {
        r.tau_identity = TauIdentity::Square;
      } else if (pick == 1) {
        r.tau_identity = TauIdentity::Conjugate;
      } else {
        r.tau_identity = TauIdentity::Commute;
        r.m = idx[3];
      }
      break;
    }
    case RelationFamily::R5:
      r.f = poly(vars_without({1}));
      r.g = poly(vars_without({1}));
      break;
    case RelationFamily::R6:
      r.k = rest[0];
      r.s = rest[1];
      r.g = poly(vars_without({1}));
      break;
    case RelationFamily::R7:
      r.i = rest[0];
      r.f = poly(vars_without({1}));
      r.g = poly(vars_without({1, r.i}));
      break;
  }
  return r;
}

}  // namespace triaut

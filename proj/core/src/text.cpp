#include "triaut/text.hpp"

#include <cctype>
#include <ostream>

#include "triaut/error.hpp"

namespace triaut {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, AlgebraMode mode, std::size_t n)
      : text_(text), mode_(mode), n_(n) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    terms.push_back(term(false));
    for (skip_ws(); pos_ < text_.size(); skip_ws()) {
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+', '-' or end of input");
      ++pos_;
      skip_ws();
      terms.push_back(term(op == '-'));
    }
    return Polynomial::from_terms(mode_, n_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t small_number(const std::string& s, std::size_t start) {
    if (s.size() > 9) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoul(s);
  }

  Term term(bool negated) {
    Scalar coeff(1);
    if (at('-')) {
      negated = !negated;
      ++pos_;
      skip_ws();
    }
    if (pos_ < text_.size() && is_digit(text_[pos_])) {
      const std::size_t start = pos_;
      std::string num = digits();
      std::string den = "1";
      if (at('/')) {
        ++pos_;
        const std::size_t den_start = pos_;
        den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_start;
          fail("zero denominator");
        }
      }
      auto parsed = Scalar::parse(num + "/" + den);
      if (!parsed) {
        pos_ = start;
        fail("malformed rational");
      }
      coeff = *parsed;
      skip_ws();
      if (!at('*')) return Term{Monomial::one(mode_, n_), negated ? -coeff : coeff};
      ++pos_;
      skip_ws();
    }
    return Term{monomial(), negated ? -coeff : coeff};
  }

  Monomial monomial() {
    Monomial m = Monomial::one(mode_, n_);
    auto& data = m.mutable_data();
    while (true) {
      if (!at('x')) fail("expected variable 'x<index>'");
      const std::size_t var_pos = pos_;
      ++pos_;
      const std::size_t var = small_number(digits(), var_pos);
      if (var < 1 || var > n_) {
        pos_ = var_pos;
        fail("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n_));
      }
      std::size_t exponent = 1;
      skip_ws();
      if (at('^')) {
        ++pos_;
        skip_ws();
        const std::size_t exp_pos = pos_;
        exponent = small_number(digits(), exp_pos);
        skip_ws();
      }
      if (mode_ == AlgebraMode::Commutative)
        data[var - 1] += static_cast<std::uint32_t>(exponent);
      else
        data.insert(data.end(), exponent, static_cast<std::uint32_t>(var - 1));
      if (!at('*')) break;
      ++pos_;
      skip_ws();
    }
    return m;
  }

  std::string_view text_;
  AlgebraMode mode_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

void append_power(std::string& out, std::size_t var, std::size_t exponent) {
  if (!out.empty()) out += '*';
  out += 'x';
  out += std::to_string(var);
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
}

std::string render_term(AlgebraMode mode, const Monomial& m, const Scalar& c) {
  if (m.is_one(mode)) return c.to_string();
  const std::string mono = to_string(mode, m);
  if (c.is_one()) return mono;
  if (c == Scalar(-1)) return "-" + mono;
  return c.to_string() + "*" + mono;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, AlgebraMode mode, std::size_t n) {
  return PolynomialParser(text, mode, n).parse();
}

std::string to_string(AlgebraMode mode, const Monomial& m) {
  std::string out;
  const auto data = m.data();
  if (mode == AlgebraMode::Commutative) {
    for (std::size_t i = 0; i < data.size(); ++i)
      if (data[i] > 0) append_power(out, i + 1, data[i]);
  } else {
    for (std::size_t pos = 0; pos < data.size();) {
      std::size_t run = 1;
      while (pos + run < data.size() && data[pos + run] == data[pos]) ++run;
      append_power(out, data[pos] + 1, run);
      pos += run;
    }
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      out = render_term(p.mode(), t.monomial, t.coefficient);
      first = false;
    } else if (t.coefficient.sign() < 0) {
      out += " - " + render_term(p.mode(), t.monomial, -t.coefficient);
    } else {
      out += " + " + render_term(p.mode(), t.monomial, t.coefficient);
    }
  }
  return out;
}

std::string_view to_string(AlgebraMode mode) {
  return mode == AlgebraMode::Commutative ? "poly" : "free";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace triaut

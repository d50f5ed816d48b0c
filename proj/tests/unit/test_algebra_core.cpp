#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "triaut/error.hpp"
#include "triaut/random.hpp"
#include "triaut/text.hpp"

using namespace triaut;

namespace {

constexpr auto kPoly = AlgebraMode::Commutative;
constexpr auto kFree = AlgebraMode::Free;

Polynomial P(const char* text, std::size_t n = 3, AlgebraMode mode = kPoly) {
  return parse_polynomial(text, mode, n);
}

Polynomial F(const char* text, std::size_t n = 3) { return parse_polynomial(text, kFree, n); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Parse;
}

RandomPolynomialOptions opts(AlgebraMode mode, std::size_t n, std::size_t deg = 3,
                             std::size_t terms = 4) {
  return {mode, n, deg, terms, variable_range(1, n), true};
}

}  // namespace

TEST_CASE("scalar stays in lowest terms") {
  CHECK(Scalar(6, -4).to_string() == "-3/2");
  CHECK(Scalar(0, 5).to_string() == "0");
  CHECK(Scalar(4, 2).is_integer());
  CHECK(Scalar::parse("-10/4")->to_string() == "-5/2");
  CHECK_FALSE(Scalar::parse("1/0"));
  CHECK_FALSE(Scalar::parse("abc"));
  CHECK(code_of([] { Scalar(1, 0); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { Scalar(0).inverse(); }) == ErrorCode::DivisionByZero);
  CHECK(Scalar(2, 3).pow(-2) == Scalar(9, 4));
}

TEST_CASE("add") {
  CHECK(P("x1 + x2") + P("-x1") == P("x2"));
  CHECK(Polynomial(kPoly, 3) + P("x1*x2 - 3") == P("x1*x2 - 3"));
  CHECK(to_string(P("1/2*x1") + P("1/3*x1")) == "5/6*x1");
  CHECK(code_of([] { add(P("x1"), F("x1")); }) == ErrorCode::ModeMismatch);
  CHECK(code_of([] { add(P("x1", 2), P("x1", 3)); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("mul") {
  CHECK(mul(F("x1"), F("x2")) == F("x1*x2"));
  CHECK(mul(F("x2"), F("x1")) == F("x2*x1"));
  CHECK(mul(F("x1"), F("x2")) != mul(F("x2"), F("x1")));
  CHECK(mul(P("x1"), P("x2")) == mul(P("x2"), P("x1")));
  CHECK(mul(P("x1 + 1"), P("x1 - 1")) == P("x1^2 - 1"));
  CHECK(code_of([] { mul(P("x1"), F("x1")); }) == ErrorCode::ModeMismatch);
}

TEST_CASE("substitute") {
  const std::vector<Polynomial> imgs{P("x1 + x2^2", 2), P("x2", 2)};
  CHECK(substitute(P("x1 + x2^2", 2), imgs) == P("x1 + 2*x2^2", 2));

  const auto p = P("3*x1^2*x3 - x2 + 7/2");
  const std::vector<Polynomial> id{P("x1"), P("x2"), P("x3")};
  CHECK(substitute(p, id) == p);

  const std::vector<Polynomial> swap{F("x2", 2), F("x1", 2)};
  CHECK(substitute(F("x1*x2", 2), swap) == F("x2*x1", 2));

  const std::vector<Polynomial> short_list{P("x1")};
  CHECK(code_of([&] { substitute(p, short_list); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("abelianize") {
  CHECK(abelianize(F("x1*x2 - x2*x1")).is_zero());
  CHECK(abelianize(F("x1*x2 + x1")) == P("x1*x2 + x1"));
  CHECK(abelianize(F("2*x2*x1*x2")) == P("2*x1*x2^2"));
  CHECK(code_of([] { abelianize(P("x1")); }) == ErrorCode::ModeMismatch);
}

TEST_CASE("degree_in_var") {
  CHECK(degree_in_var(P("x1^2*x2 + x2^3"), 1) == Degree::of(2));
  CHECK(degree_in_var(Polynomial(kPoly, 3), 1).is_neg_infinity());
  CHECK(degree_in_var(F("x1*x2*x1"), 1) == Degree::of(2));
  CHECK(code_of([] { degree_in_var(P("x1"), 4); }) == ErrorCode::IndexOutOfRange);
  CHECK(Degree::neg_infinity() < Degree::of(0));
}

TEST_CASE("syllable_profile") {
  auto mono = [](const char* text) { return F(text).terms().front().monomial; };
  auto prof = syllable_profile(kFree, 3, mono("x2*x1^2*x3*x1"), 1);
  CHECK(prof.degree_in_var == 3);
  CHECK(prof.syllable_count == 2);
  CHECK(prof.exponent_vector == std::vector<std::size_t>{2, 1});

  prof = syllable_profile(kFree, 3, mono("x2*x3"), 1);
  CHECK(prof.degree_in_var == 0);
  CHECK(prof.syllable_count == 0);
  CHECK(prof.exponent_vector.empty());

  prof = syllable_profile(kFree, 3, mono("x1"), 1);
  CHECK(prof.degree_in_var == 1);
  CHECK(prof.exponent_vector == std::vector<std::size_t>{1});

  const auto pm = P("x1").terms().front().monomial;
  CHECK(code_of([&] { syllable_profile(kPoly, 3, pm, 1); }) == ErrorCode::ModeMismatch);
}

TEST_CASE("canonical printing") {
  CHECK(to_string(P("x2 + x1", 2)) == "x1 + x2");
  CHECK(to_string(P("x2^2 + x1*x2 + x1^2", 2)) == "x1^2 + x1*x2 + x2^2");
  CHECK(to_string(P("1 + x1^2 - 1/2*x1", 1)) == "x1^2 - 1/2*x1 + 1");
  CHECK(to_string(F("x2*x1 + x1*x2", 2)) == "x1*x2 + x2*x1");
  CHECK(to_string(F("x1*x1*x2*x1", 2)) == "x1^2*x2*x1");
  CHECK(to_string(Polynomial(kPoly, 2)) == "0");
  CHECK(to_string(P("-1*x1", 1)) == "-x1");
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset = [](const char* text, std::size_t n = 2) {
    try {
      parse_polynomial(text, kPoly, n);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::size_t{0};
  };
  CHECK(offset("x1 + x3") == 6);
  CHECK(offset("x1 +* 2") == 5);
  CHECK(offset("x0") == 1);
  CHECK(offset("1/0*x1") == 3);
  CHECK(offset("x1 +") == 5);
  CHECK(offset("") == 1);
  CHECK(offset("x1^") == 4);
}

TEST_CASE("budget guard") {
  const auto p = P("x1 + x2 + x3 + 1");
  Budget small;
  small.max_terms = 10;
  CHECK(code_of([&] { power(p, 4, small); }) == ErrorCode::BudgetExceeded);
  Budget shallow;
  shallow.max_degree = 3;
  CHECK(code_of([&] { power(p, 4, shallow); }) == ErrorCode::BudgetExceeded);
  CHECK_NOTHROW(power(p, 3, shallow));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(11);
  for (auto mode : {kPoly, kFree}) {
    for (int t = 0; t < 40; ++t) {
      const auto a = random_polynomial(rng, opts(mode, 3));
      const auto b = random_polynomial(rng, opts(mode, 3));
      const auto c = random_polynomial(rng, opts(mode, 3));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
      CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
      CHECK(a + b == b + a);
      CHECK(a - a == Polynomial(mode, 3));
      if (mode == kPoly) CHECK(mul(a, b) == mul(b, a));
    }
  }
}

TEST_CASE("mul agrees with evaluation") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_polynomial(rng, opts(kPoly, 3));
    const auto b = random_polynomial(rng, opts(kPoly, 3));
    const auto v = oracle::random_point(rng, 3);
    CHECK(oracle::eval(mul(a, b), v) == oracle::eval(a, v) * oracle::eval(b, v));
    const auto fa = random_polynomial(rng, opts(kFree, 3));
    const auto fb = random_polynomial(rng, opts(kFree, 3));
    const auto m = oracle::random_matrix_point(rng, 3);
    CHECK(oracle::eval(mul(fa, fb), m) == oracle::eval(fa, m) * oracle::eval(fb, m));
  }
}

TEST_CASE("substitute is a homomorphism and matches evaluation") {
  std::mt19937_64 rng(13);
  for (auto mode : {kPoly, kFree}) {
    for (int t = 0; t < 30; ++t) {
      const auto p = random_polynomial(rng, opts(mode, 3));
      const auto q = random_polynomial(rng, opts(mode, 3));
      std::vector<Polynomial> imgs;
      for (int k = 0; k < 3; ++k) imgs.push_back(random_polynomial(rng, opts(mode, 3, 2, 3)));
      CHECK(substitute(p + q, imgs) == substitute(p, imgs) + substitute(q, imgs));
      CHECK(substitute(mul(p, q), imgs) == mul(substitute(p, imgs), substitute(q, imgs)));
      if (mode == kPoly) {
        const auto v = oracle::random_point(rng, 3);
        std::vector<oracle::Q> w;
        for (const auto& img : imgs) w.push_back(oracle::eval(img, v));
        CHECK(oracle::eval(substitute(p, imgs), v) == oracle::eval(p, w));
      } else {
        const auto v = oracle::random_matrix_point(rng, 3);
        std::vector<oracle::Mat2> w;
        for (const auto& img : imgs) w.push_back(oracle::eval(img, v));
        CHECK(oracle::eval(substitute(p, imgs), v) == oracle::eval(p, w));
      }
    }
  }
}

TEST_CASE("abelianize is a homomorphism commuting with substitute") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    const auto p = random_polynomial(rng, opts(kFree, 3));
    const auto q = random_polynomial(rng, opts(kFree, 3));
    CHECK(abelianize(mul(p, q)) == mul(abelianize(p), abelianize(q)));
    CHECK(abelianize(p + q) == abelianize(p) + abelianize(q));
    std::vector<Polynomial> imgs, ab;
    for (int k = 0; k < 3; ++k) {
      imgs.push_back(random_polynomial(rng, opts(kFree, 3, 2, 3)));
      ab.push_back(abelianize(imgs.back()));
    }
    CHECK(abelianize(substitute(p, imgs)) == substitute(abelianize(p), ab));
  }
}

TEST_CASE("print then parse is a fixed point") {
  std::mt19937_64 rng(15);
  for (auto mode : {kPoly, kFree}) {
    for (int t = 0; t < 60; ++t) {
      const auto p = random_polynomial(rng, opts(mode, 4, 4, 5));
      const auto text = to_string(p);
      const auto back = parse_polynomial(text, mode, 4);
      CHECK(back == p);
      CHECK(to_string(back) == text);
    }
  }
}

TEST_CASE("specialize") {
  CHECK(specialize(P("x1*x2 + x2^2 + 3"), 2, Scalar(2)) == P("2*x1 + 7"));
  CHECK(specialize(F("x1*x2*x1 + x2", 2), 2, Scalar(0)).is_zero());
}

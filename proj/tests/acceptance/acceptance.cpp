// Acceptance gate: every criterion runs exactly (no tolerance) and prints one
// PASS/FAIL line. Exit status is nonzero when any criterion fails.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "triaut/analysis.hpp"
#include "triaut/document.hpp"
#include "triaut/error.hpp"
#include "triaut/presentation.hpp"
#include "triaut/random.hpp"
#include "triaut/structure.hpp"
#include "triaut/text.hpp"

using namespace triaut;

namespace {

constexpr AlgebraMode kModes[] = {AlgebraMode::Commutative, AlgebraMode::Free};
constexpr auto kPoly = AlgebraMode::Commutative;
constexpr auto kFree = AlgebraMode::Free;

// Collects failures of one criterion; the first few are reported.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (notes.size() < 5) notes.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Polynomial shifted(const Polynomial& f, std::size_t var, const Scalar& a) {
  std::vector<Polynomial> imgs;
  for (std::size_t v = 1; v <= f.n(); ++v) imgs.push_back(Polynomial::variable(f.mode(), f.n(), v));
  imgs[var - 1] += Polynomial::constant(f.mode(), f.n(), a);
  return substitute(f, imgs);
}

std::string show(const Endomorphism& phi) { return to_document(phi); }

std::string mode_name(AlgebraMode m) { return m == kPoly ? "poly" : "free"; }

// ---------------------------------------------------------------------------

void antidifference(Tally& t, std::string& detail) {
  const Scalar shifts[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2)};
  std::mt19937_64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  for (auto mode : kModes) {
    for (int k = 0; k < 200; ++k) {
      const auto n = pick(rng, 1, 3);
      const auto g = random_polynomial(rng, {mode, n, 6, 5, variable_range(1, n), true});
      const auto var = pick(rng, 1, n);
      const auto a = shifts[pick(rng, 0, 3)];
      const auto f = solve_difference(g, var, a);
      t.expect(shifted(f, var, a) - f == g,
               mode_name(mode) + " g = " + to_string(g) + ", shift " + a.to_string());
    }
  }
  const double secs = seconds_since(start);
  t.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
  detail = std::to_string(secs) + " s";
}

void factorization(Tally& t, std::string&) {
  std::mt19937_64 rng(1002);
  for (auto mode : kModes) {
    for (int k = 0; k < 100; ++k) {
      const auto n = pick(rng, 1, 4);
      const auto phi = random_unitriangular(rng, mode, n, 4);
      const auto fac = factorize_unitriangular(phi);
      t.expect(fac.recompose() == phi, mode_name(mode) + " " + show(phi));
    }
  }
}

void layer_commutators(Tally& t, std::string&) {
  std::mt19937_64 rng(1003);
  for (auto mode : kModes) {
    for (int k = 0; k < 50; ++k) {
      const auto n = pick(rng, 2, 4);
      const auto i = pick(rng, 1, n - 1);
      const auto j = pick(rng, i + 1, n);
      const auto g = random_polynomial(rng, {mode, n, 4, 4, variable_range(i + 1, n), true});
      const auto target = Elementary::make(i, Scalar(1), g);
      const auto h = random_scalar(rng);
      const auto res = express_in_layer_commutator(target, j, h);
      t.expect(in_layer(res.phi, i) && res.psi.index == j && res.psi.f.is_constant() &&
                   commutator(res.phi.to_endomorphism(), res.psi.to_endomorphism()) ==
                       target.to_endomorphism(),
               mode_name(mode) + " target " + show(target.to_endomorphism()));
    }
  }
}

void single_commutators(Tally& t, std::string&) {
  std::mt19937_64 rng(1004);
  for (auto mode : kModes) {
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = pick(rng, 2, 3);
      // Unitriangular with x_n fixed.
      std::vector<Polynomial> imgs;
      for (std::size_t v = 1; v <= n; ++v) {
        auto img = Polynomial::variable(mode, n, v);
        if (v < n) img += random_polynomial(rng, {mode, n, 3, 3, variable_range(v + 1, n), true});
        imgs.push_back(std::move(img));
      }
      const Endomorphism omega(std::move(imgs));
      const auto ex = express_as_single_commutator(omega);
      bool ok = commutator(ex.left, ex.right) == omega && ex.parts.size() == n;
      for (std::size_t p = 0; ok && p < n; ++p) ok = in_layer(ex.parts[p], p + 1);
      if (ok) {
        auto right = Endomorphism::identity(mode, n);
        for (std::size_t p = 0; p + 1 < n; ++p) right = compose(right, ex.parts[p].to_endomorphism());
        ok = right == ex.right && ex.left == ex.parts[n - 1].to_endomorphism();
      }
      t.expect(ok, mode_name(mode) + " omega " + show(omega));
    }
  }
}

void witness(Tally& t, std::string& detail) {
  double slowest = 0;
  for (unsigned long l = 1; l <= 2; ++l) {
    for (unsigned long p = 1; p <= 4; ++p) {
      for (unsigned long m = p; m <= 4; ++m) {
        const auto start = std::chrono::steady_clock::now();
        const auto value = oracle::to_q(nonlinearity_witness_at_zero(p, l, m));
        const double secs = seconds_since(start);
        slowest = std::max(slowest, secs);
        if (p == m) {
          mpz_class expected;
          mpz_ui_pow_ui(expected.get_mpz_t(), l, 2 * p + 1);
          mpz_class fact;
          mpz_fac_ui(fact.get_mpz_t(), m);
          expected *= fact;
          t.expect(value == mpq_class(expected),
                   "p = m = " + std::to_string(p) + ", l = " + std::to_string(l) + ": got " +
                       value.get_str());
          if (p == 4) t.expect(secs < 30.0, "p = m = 4 took " + std::to_string(secs) + " s");
        }
      }
      // p < m: the m-th difference of a degree-p polynomial vanishes.
      for (unsigned long m = p + 1; m <= 4; ++m) {
        const auto value = oracle::to_q(nonlinearity_witness_at_zero(p, l, m));
        t.expect(value == 0, "p = " + std::to_string(p) + " < m = " + std::to_string(m) +
                                 ", l = " + std::to_string(l) + ": got " + value.get_str());
      }
    }
  }
  detail = "slowest " + std::to_string(slowest) + " s";
}

void translation(Tally& t, std::string&) {
  std::mt19937_64 rng(1006);
  for (auto mode : kModes) {
    for (int k = 0; k < 100; ++k) {
      const auto n = pick(rng, 2, 4);
      const auto i = pick(rng, 1, n);
      std::vector<std::size_t> vars;
      for (std::size_t v = 1; v <= n; ++v)
        if (v != i) vars.push_back(v);
      const auto e =
          Elementary::make(i, random_scalar(rng), random_polynomial(rng, {mode, n, 4, 4, vars, true}));
      t.expect(evaluate_b_word(to_b_generators(e), mode, n) == e.to_endomorphism(),
               mode_name(mode) + " " + show(e.to_endomorphism()));
    }
    for (auto fam : kAllRelationFamilies) {
      for (int k = 0; k < 100; ++k) {
        const auto n = pick(rng, 3, 4);
        const auto inst = random_relation_instance(fam, mode, n, rng);
        t.expect(check_relation_family(inst).holds,
                 mode_name(mode) + " " + std::string(to_string(fam)) + " instance " +
                     std::to_string(k));
      }
    }
  }
}

// All alternating words a^k1 b^l1 ... a^km b^lm with exponents from `a_exps`
// and `b_exps`.
void for_each_word(std::size_t m, const std::vector<long>& a_exps, const std::vector<long>& b_exps,
                   const std::function<void(const GroupWord&)>& fn) {
  std::vector<Syllable> syl(2 * m);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == syl.size()) {
      fn(GroupWord(syl));
      return;
    }
    const bool is_a = pos % 2 == 0;
    for (long e : is_a ? a_exps : b_exps) {
      syl[pos] = {is_a ? 'a' : 'b', e};
      rec(pos + 1);
    }
  };
  rec(0);
}

void degree_growth(Tally& t, std::string& detail) {
  const std::pair<std::size_t, std::size_t> pq[] = {{2, 1}, {1, 2}, {2, 2}, {3, 1}};
  const std::vector<long> all{-2, -1, 1, 2};
  const std::vector<long> odd{-1, 1};
  std::size_t words = 0;
  for (const auto& [p, q] : pq) {
    // Commutative inputs with lower-order terms: f in x2, g in x1.
    const auto x1 = Polynomial::variable(kPoly, 2, 1);
    const auto x2 = Polynomial::variable(kPoly, 2, 2);
    const auto f = power(x2, p).scaled(Scalar(2)) + x2.scaled(Scalar(-1, 2)) +
                   Polynomial::constant(kPoly, 2, Scalar(1));
    auto g = power(x1, q) + Polynomial::constant(kPoly, 2, Scalar(-1));
    if (q > 1) g += x1.scaled(Scalar(3));
    // Free inputs in three variables whose abelianizations are x2^p and x1^q.
    const auto y1 = Polynomial::variable(kFree, 3, 1);
    const auto y2 = Polynomial::variable(kFree, 3, 2);
    const auto y3 = Polynomial::variable(kFree, 3, 3);
    const auto ff = power(y2, p) + mul(y2, y3) - mul(y3, y2);
    const auto gf = power(y1, q) + mul(mul(y1, y3), y1) - mul(mul(y1, y1), y3);

    for (std::size_t m = 1; m <= 3; ++m) {
      std::size_t expected = 1;
      for (std::size_t k = 0; k < m; ++k) expected *= p * q;
      const auto label = [&](const char* what, const GroupWord& w) {
        return std::string(what) + " (p,q) = (" + std::to_string(p) + "," + std::to_string(q) +
               ") word " + to_string(w);
      };
      for_each_word(m, all, all, [&](const GroupWord& w) {
        ++words;
        const auto c = free_pair_check(f, g, w);
        t.expect(c.observed_degree == expected && c.valid(), label("poly", w));
        const auto cf = free_pair_check(ff, gf, w);
        const auto ca = free_pair_check(abelianize(ff), abelianize(gf), w);
        t.expect(cf.observed_degree == expected && cf.observed_degree == ca.observed_degree,
                 label("free", w));
      });
      // Order caps: an order-2 generator only takes odd exponents.
      for_each_word(m, odd, all, [&](const GroupWord& w) {
        ++words;
        const auto c = free_pair_check(f, g, w, Scalar(-1), Scalar(1));
        t.expect(c.observed_degree == expected, label("alpha = -1", w));
      });
      for_each_word(m, all, odd, [&](const GroupWord& w) {
        ++words;
        const auto c = free_pair_check(f, g, w, Scalar(1), Scalar(-1));
        t.expect(c.observed_degree == expected, label("beta = -1", w));
      });
    }
  }
  detail = std::to_string(words) + " words";
}

Elementary elem(std::size_t i, Scalar alpha, const char* f) {
  return Elementary::make(i, alpha, parse_polynomial(f, kPoly, 3));
}

void single_elements(Tally& t, std::string&) {
  t.expect(classify_pair(elem(1, 1, "x2"), elem(1, 1, "2*x2")).cls == PairClass::Z,
           "sigma(1,1,x2), sigma(1,1,2x2) is not Z");
  t.expect(classify_pair(elem(1, 1, "x2"), elem(1, 1, "x3")).cls == PairClass::ZxZ,
           "sigma(1,1,x2), sigma(1,1,x3) is not ZxZ");
  t.expect(classify_pair(elem(1, 2, "x2^3"), elem(2, 1, "5")).cls == PairClass::Metabelian,
           "sigma(1,2,x2^3), sigma(2,1,5) is not metabelian");

  std::mt19937_64 rng(1008);
  for (int k = 0; k < 60; ++k) {
    const auto n = pick(rng, 2, 3);
    const auto i = pick(rng, 1, n);
    std::vector<std::size_t> vars;
    for (std::size_t v = 1; v <= n; ++v)
      if (v != i) vars.push_back(v);
    const Scalar alphas[] = {Scalar(-1), Scalar(1), random_scalar(rng)};
    const auto e = Elementary::make(i, alphas[k % 3],
                                    random_polynomial(rng, {kPoly, n, 3, 3, vars, k % 5 != 0}));
    const auto phi = e.to_endomorphism();
    const auto order = element_order(e);
    if (order) {
      bool ok = power(phi, *order).is_identity();
      for (long d = 1; ok && d < *order; ++d) ok = !power(phi, d).is_identity();
      t.expect(ok, "order " + std::to_string(*order) + " wrong for " + show(phi));
    } else {
      bool ok = true;
      for (long d = 1; ok && d <= 12; ++d) ok = !power(phi, d).is_identity();
      t.expect(ok, "infinite order wrong for " + show(phi));
    }
  }

  for (auto mode : kModes) {
    for (int k = 0; k < 50; ++k) {
      const auto n = pick(rng, 2, 4);
      const auto i = pick(rng, 1, n);
      std::vector<std::size_t> vars;
      for (std::size_t v = 1; v <= n; ++v)
        if (v != i) vars.push_back(v);
      Scalar alpha = random_scalar(rng);
      if (alpha.is_one()) alpha = Scalar(-1);
      const auto e = Elementary::make(i, alpha, random_polynomial(rng, {mode, n, 3, 3, vars, true}));
      const auto d = diagonalize_elementary(e);
      bool ok = d.has_value();
      if (ok) {
        const auto c = d->conjugator.to_endomorphism();
        const auto ci = d->conjugator.inverse().to_endomorphism();
        ok = classify(d->diagonal).contains(Label::Diagonal) &&
             d->diagonal == compose(compose(ci, e.to_endomorphism()), c) &&
             d->diagonal.image(i) == Polynomial::variable(mode, n, i).scaled(alpha);
      }
      t.expect(ok, mode_name(mode) + " " + show(e.to_endomorphism()));

      const auto unit =
          Elementary::make(i, Scalar(1), random_nonzero_polynomial(rng, {mode, n, 3, 3, vars, true}));
      t.expect(!diagonalize_elementary(unit).has_value(),
               "alpha = 1 diagonalized: " + show(unit.to_endomorphism()));
    }
  }
}

void kernel_soundness(Tally& t, std::string&) {
  std::mt19937_64 rng(1009);
  for (int k = 0; k < 500; ++k) {
    const auto mode = kModes[k % 2];
    const auto n = pick(rng, 1, 4);
    const RandomPolynomialOptions o{mode, n, 3, 4, variable_range(1, n), true};
    const auto p = random_polynomial(rng, o);
    const auto q = random_polynomial(rng, o);
    std::vector<Polynomial> imgs;
    for (std::size_t v = 0; v < n; ++v)
      imgs.push_back(random_polynomial(rng, {mode, n, 2, 3, variable_range(1, n), true}));
    const auto sp = substitute(p, imgs);
    bool ok = substitute(p + q, imgs) == sp + substitute(q, imgs) &&
              substitute(mul(p, q), imgs) == mul(sp, substitute(q, imgs));
    // Independent check: substitution commutes with evaluation.
    if (mode == kPoly) {
      const auto v = oracle::random_point(rng, n);
      std::vector<oracle::Q> w;
      for (const auto& img : imgs) w.push_back(oracle::eval(img, v));
      ok = ok && oracle::eval(sp, v) == oracle::eval(p, w);
    } else {
      const auto v = oracle::random_matrix_point(rng, n);
      std::vector<oracle::Mat2> w;
      for (const auto& img : imgs) w.push_back(oracle::eval(img, v));
      ok = ok && oracle::eval(sp, v) == oracle::eval(p, w);
    }
    t.expect(ok, "substitute " + mode_name(mode) + " p = " + to_string(p));
  }
  for (int k = 0; k < 500; ++k) {
    const auto n = pick(rng, 1, 4);
    const RandomPolynomialOptions o{kFree, n, 3, 4, variable_range(1, n), true};
    const auto p = random_polynomial(rng, o);
    const auto q = random_polynomial(rng, o);
    std::vector<Polynomial> imgs, ab;
    for (std::size_t v = 0; v < n; ++v) {
      imgs.push_back(random_polynomial(rng, {kFree, n, 2, 3, variable_range(1, n), true}));
      ab.push_back(abelianize(imgs.back()));
    }
    const bool ok = abelianize(substitute(p, imgs)) == substitute(abelianize(p), ab) &&
                    abelianize(mul(p, q)) == mul(abelianize(p), abelianize(q)) &&
                    abelianize(p + q) == abelianize(p) + abelianize(q);
    t.expect(ok, "abelianize p = " + to_string(p));
  }
}

struct Criterion {
  const char* name;
  void (*run)(Tally&, std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"antidifference solver", antidifference},
      {"unitriangular factorization round-trip", factorization},
      {"layer elements as commutators", layer_commutators},
      {"derived subgroup elements as single commutators", single_commutators},
      {"nonlinearity witness values", witness},
      {"generator translation and defining relations", translation},
      {"degree growth of two-generator words", degree_growth},
      {"pair classification, orders, diagonalization", single_elements},
      {"substitute and abelianize homomorphisms", kernel_soundness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Tally tally;
    std::string detail;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(tally, detail);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = seconds_since(start);
    const bool pass = error.empty() && tally.failed == 0;
    if (!pass) ++failures;
    std::printf("criterion %d %s: %s (%zu checks, %zu failed, %.1f s%s%s)\n", index, c.name,
                pass ? "PASS" : "FAIL", tally.checked, tally.failed, secs,
                detail.empty() ? "" : ", ", detail.c_str());
    if (!error.empty()) std::printf("  exception: %s\n", error.c_str());
    for (const auto& note : tally.notes) std::printf("  failed: %s\n", note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

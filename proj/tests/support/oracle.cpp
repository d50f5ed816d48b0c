#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

using triaut::AlgebraMode;
using triaut::Endomorphism;
using triaut::Polynomial;

Q to_q(const triaut::Scalar& s) { return s.raw(); }

Q eval(const Polynomial& p, const std::vector<Q>& point) {
  if (p.mode() != AlgebraMode::Commutative) throw std::logic_error("commutative eval on free input");
  Q total = 0;
  for (const auto& t : p.terms()) {
    Q value = to_q(t.coefficient);
    const auto exps = t.monomial.data();
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (std::uint32_t e = 0; e < exps[v]; ++e) value *= point[v];
    total += value;
  }
  return total;
}

Mat2 eval(const Polynomial& p, const std::vector<Mat2>& point) {
  if (p.mode() != AlgebraMode::Free) throw std::logic_error("matrix eval on commutative input");
  Mat2 total{0, 0, 0, 0};
  for (const auto& t : p.terms()) {
    Mat2 value = Mat2::scalar(to_q(t.coefficient));
    for (const auto letter : t.monomial.data()) value = value * point[letter];
    total = total + value;
  }
  return total;
}

std::vector<Q> apply(const Endomorphism& phi, const std::vector<Q>& point) {
  std::vector<Q> out;
  for (const auto& img : phi.images()) out.push_back(eval(img, point));
  return out;
}

std::vector<Mat2> apply(const Endomorphism& phi, const std::vector<Mat2>& point) {
  std::vector<Mat2> out;
  for (const auto& img : phi.images()) out.push_back(eval(img, point));
  return out;
}

namespace {

Q random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 5);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

std::vector<Q> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Q> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_q(rng));
  return out;
}

std::vector<Mat2> random_matrix_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Mat2> out;
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(Mat2{random_q(rng), random_q(rng), random_q(rng), random_q(rng)});
  return out;
}

bool composes_to(const Endomorphism& phi, const Endomorphism& psi, const Endomorphism& product,
                 std::mt19937_64& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    if (phi.mode() == AlgebraMode::Commutative) {
      const auto v = random_point(rng, phi.n());
      if (oracle::apply(product, v) != oracle::apply(phi, oracle::apply(psi, v))) return false;
    } else {
      const auto v = random_matrix_point(rng, phi.n());
      if (oracle::apply(product, v) != oracle::apply(phi, oracle::apply(psi, v))) return false;
    }
  }
  return true;
}

bool is_antidifference(const Polynomial& f, const Polynomial& g, std::size_t var, const Q& shift,
                       std::mt19937_64& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    if (f.mode() == AlgebraMode::Commutative) {
      auto v = random_point(rng, f.n());
      const Q base = eval(f, v);
      const Q rhs = eval(g, v);
      v[var - 1] += shift;
      if (eval(f, v) - base != rhs) return false;
    } else {
      auto v = random_matrix_point(rng, f.n());
      const Mat2 base = eval(f, v);
      const Mat2 rhs = eval(g, v);
      v[var - 1] = v[var - 1] + Mat2::scalar(shift);
      const Mat2 moved = eval(f, v);
      const Mat2 minus_one = Mat2::scalar(-1);
      if (!(moved + minus_one * base == rhs)) return false;
    }
  }
  return true;
}

std::vector<Q> univariate_antidifference(const std::vector<Q>& g, const Q& a) {
  // Unknowns c_1..c_N, N = deg g + 1; equation for x^r: sum_k c_k C(k,r) a^(k-r) = g_r.
  const std::size_t N = g.size();
  std::vector<std::vector<Q>> rows(N, std::vector<Q>(N + 1, 0));
  auto binom = [](std::size_t k, std::size_t r) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), k, r);
    return Q(b);
  };
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t k = r + 1; k <= N; ++k) {
      Q apow = 1;
      for (std::size_t e = 0; e < k - r; ++e) apow *= a;
      rows[r][k - 1] = binom(k, r) * apow;
    }
    rows[r][N] = g[r];
  }
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (piv < N && rows[piv][col] == 0) ++piv;
    if (piv == N) throw std::logic_error("singular antidifference system");
    std::swap(rows[piv], rows[col]);
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      const Q factor = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c <= N; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  std::vector<Q> out(N);
  for (std::size_t k = 0; k < N; ++k) out[k] = rows[k][N] / rows[k][k];
  return out;
}

Q witness_value(unsigned long p, unsigned long l, unsigned long m) {
  mpz_class sum = 0;
  for (unsigned long k = 0; k <= m; ++k) {
    mpz_class c, pw;
    mpz_bin_uiui(c.get_mpz_t(), m, k);
    mpz_ui_pow_ui(pw.get_mpz_t(), m - k, p);
    sum += (k % 2 == 0 ? 1 : -1) * c * pw;
  }
  mpz_class lp;
  mpz_ui_pow_ui(lp.get_mpz_t(), l, 2 * p + 1);
  return Q(lp * sum);
}

}  // namespace oracle

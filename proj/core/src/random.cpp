#include "triaut/random.hpp"

namespace triaut {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Scalar random_scalar(std::mt19937_64& rng) {
  static constexpr long kNumerators[] = {-3, -2, -1, 1, 2, 3};
  const long num = kNumerators[uniform(rng, 0, 5)];
  const long den = static_cast<long>(uniform(rng, 1, 3));
  return Scalar(num, den);
}

std::vector<std::size_t> variable_range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t v = first; v <= last; ++v) out.push_back(v);
  return out;
}

Polynomial random_polynomial(std::mt19937_64& rng, const RandomPolynomialOptions& options) {
  const auto mode = options.mode;
  const auto n = options.n;
  std::vector<Term> terms;
  const std::size_t count = uniform(rng, 1, std::max<std::size_t>(options.max_terms, 1));
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t degree = options.variables.empty() ? 0 : uniform(rng, 0, options.max_degree);
    if (degree == 0 && !options.allow_constant) {
      if (options.variables.empty() || options.max_degree == 0) continue;
      degree = uniform(rng, 1, options.max_degree);
    }
    Monomial m = Monomial::one(mode, n);
    auto& data = m.mutable_data();
    for (std::size_t d = 0; d < degree; ++d) {
      const auto var = options.variables[uniform(rng, 0, options.variables.size() - 1)];
      if (mode == AlgebraMode::Commutative)
        ++data[var - 1];
      else
        data.push_back(static_cast<std::uint32_t>(var - 1));
    }
    terms.push_back(Term{std::move(m), random_scalar(rng)});
  }
  return Polynomial::from_terms(mode, n, std::move(terms));
}

Polynomial random_nonzero_polynomial(std::mt19937_64& rng, const RandomPolynomialOptions& options) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto p = random_polynomial(rng, options);
    if (!p.is_zero()) return p;
  }
  return Polynomial::constant(options.mode, options.n, Scalar(1));
}

Endomorphism random_unitriangular(std::mt19937_64& rng, AlgebraMode mode, std::size_t n,
                                  std::size_t max_degree, std::size_t max_terms) {
  TriangularShape shape;
  for (std::size_t i = 1; i <= n; ++i) {
    RandomPolynomialOptions opts{mode, n, max_degree, max_terms, variable_range(i + 1, n), true};
    shape.alphas.emplace_back(1);
    shape.fs.push_back(random_polynomial(rng, opts));
  }
  return from_shape(mode, shape);
}

}  // namespace triaut

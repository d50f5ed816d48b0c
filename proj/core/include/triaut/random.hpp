#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "triaut/endomorphism.hpp"

namespace triaut {

// Seeded generators shared by the CLI verifier, the tests and the benchmarks.

struct RandomPolynomialOptions {
  AlgebraMode mode = AlgebraMode::Commutative;
  std::size_t n = 2;
  std::size_t max_degree = 3;
  std::size_t max_terms = 3;
  /// Allowed variables (1-based); empty means none, so only constants.
  std::vector<std::size_t> variables;
  bool allow_constant = true;
};

/// Small nonzero rational: numerator in [-3, 3], denominator in {1, 2, 3}.
Scalar random_scalar(std::mt19937_64& rng);
/// Variables first..last inclusive (1-based); empty when first > last.
std::vector<std::size_t> variable_range(std::size_t first, std::size_t last);
Polynomial random_polynomial(std::mt19937_64& rng, const RandomPolynomialOptions& options);
/// Nonzero whenever options allow a nonconstant or constant term.
Polynomial random_nonzero_polynomial(std::mt19937_64& rng, const RandomPolynomialOptions& options);

/// Random unitriangular automorphism x_i -> x_i + f_i(x_{i+1}, ..., x_n).
Endomorphism random_unitriangular(std::mt19937_64& rng, AlgebraMode mode, std::size_t n,
                                  std::size_t max_degree, std::size_t max_terms = 3);

}  // namespace triaut

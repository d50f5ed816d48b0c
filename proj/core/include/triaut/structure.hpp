#pragma once

#include <cstddef>
#include <vector>

#include "triaut/endomorphism.hpp"

namespace triaut {

/// Antidifference: returns f with f(.., x_var + shift, ..) - f = g exactly.
///
/// Works in both algebras. The leading monomial of the remainder is reduced
/// one step at a time (raise the first x_var block by one, divide by
/// (k+1) * shift), so every monomial of the result involves x_var.
/// Throws ZeroShift for shift == 0, IndexOutOfRange for a bad variable.
Polynomial solve_difference(const Polynomial& g, std::size_t var, const Scalar& shift,
                            const Budget& budget = {});

/// G_i membership: alpha == 1 and f = f(x_{i+1}, ..., x_n).
bool in_layer(const Elementary& e, std::size_t layer);

/// Unitriangular phi written as sigma(i_1,1,f_1) ... sigma(i_r,1,f_r) with
/// i_1 > ... > i_r; empty layers are omitted.
struct LayerFactorization {
  AlgebraMode mode;
  std::size_t n;
  std::vector<Elementary> factors;

  /// Left-to-right product of the factors.
  Endomorphism recompose(const Budget& budget = {}) const;
};

/// Throws NotUnitriangular.
LayerFactorization factorize_unitriangular(const Endomorphism& phi, const Budget& budget = {});

struct LayerCommutator {
  Elementary phi;  // in G_i
  Elementary psi;  // sigma(j, 1, h), h constant
};

/// Writes target = sigma(i, 1, g) as [phi, psi] with phi in G_i and
/// psi = sigma(j, 1, h). Throws LayerViolation, BadIndices, ZeroShift.
LayerCommutator express_in_layer_commutator(const Elementary& target, std::size_t j,
                                            const Scalar& h, const Budget& budget = {});

/// omega = [left, right] with left = parts[n-1] = sigma(n, 1, 1) and
/// right = parts[0] ... parts[n-2].
struct CommutatorExpression {
  Endomorphism left;
  Endomorphism right;
  std::vector<Elementary> parts;
};

/// Requires omega unitriangular with x_n fixed; throws NotInDerivedSubgroup.
CommutatorExpression express_as_single_commutator(const Endomorphism& omega,
                                                  const Budget& budget = {});

}  // namespace triaut

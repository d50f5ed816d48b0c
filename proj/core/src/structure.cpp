#include "triaut/structure.hpp"

#include <algorithm>
#include <string>

#include "triaut/error.hpp"

namespace triaut {

namespace {

/// Reduction order on monomials for the antidifference recursion: degree in
/// the variable, then number of syllables, then the block exponents compared
/// from the last block backwards.
struct ReductionKey {
  std::size_t degree;
  std::size_t syllables;
  std::vector<std::size_t> reversed_blocks;

  friend auto operator<=>(const ReductionKey&, const ReductionKey&) = default;
};

ReductionKey reduction_key(AlgebraMode mode, std::size_t n, const Monomial& m, std::size_t var) {
  if (mode == AlgebraMode::Commutative) {
    const auto d = m.degree_in(mode, var);
    return {d, d > 0 ? 1u : 0u, {d}};
  }
  auto prof = syllable_profile(mode, n, m, var);
  std::reverse(prof.exponent_vector.begin(), prof.exponent_vector.end());
  return {prof.degree_in_var, prof.syllable_count, std::move(prof.exponent_vector)};
}

/// The monomial with the first x_var block raised by one, plus that block's
/// original length. Words free of x_var get x_var prepended.
std::pair<Monomial, std::size_t> raise_first_block(AlgebraMode mode, const Monomial& m,
                                                   std::size_t var) {
  std::vector<std::uint32_t> data(m.data().begin(), m.data().end());
  const auto letter = static_cast<std::uint32_t>(var - 1);
  if (mode == AlgebraMode::Commutative) {
    const std::size_t k = data[letter]++;
    return {Monomial(std::move(data)), k};
  }
  auto first = std::find(data.begin(), data.end(), letter);
  auto end = std::find_if(first, data.end(), [&](std::uint32_t l) { return l != letter; });
  const auto k = static_cast<std::size_t>(end - first);
  data.insert(first == data.end() ? data.begin() : first, letter);
  return {Monomial(std::move(data)), k};
}

Endomorphism compose_all(AlgebraMode mode, std::size_t n, std::span<const Elementary> factors,
                         const Budget& budget) {
  auto out = Endomorphism::identity(mode, n);
  for (const auto& f : factors) out = compose(out, f.to_endomorphism(), budget);
  return out;
}

}  // namespace

Polynomial solve_difference(const Polynomial& g, std::size_t var, const Scalar& shift,
                            const Budget& budget) {
  if (shift.is_zero()) throw Error(ErrorCode::ZeroShift, "shift must be nonzero");
  if (var < 1 || var > g.n())
    throw Error(ErrorCode::IndexOutOfRange, "variable x" + std::to_string(var) + " outside 1.." +
                                                std::to_string(g.n()));
  const AlgebraMode mode = g.mode();
  const std::size_t n = g.n();

  const auto id = Endomorphism::identity(mode, n);
  std::vector<Polynomial> shifted(id.images().begin(), id.images().end());
  shifted[var - 1] += Polynomial::constant(mode, n, shift);

  Polynomial f(mode, n);
  Polynomial rest = g;
  while (!rest.is_zero()) {
    const Term* lead = nullptr;
    ReductionKey lead_key;
    for (const auto& t : rest.terms()) {
      auto key = reduction_key(mode, n, t.monomial, var);
      if (lead == nullptr || lead_key < key) {
        lead = &t;
        lead_key = std::move(key);
      }
    }
    auto [raised, k] = raise_first_block(mode, lead->monomial, var);
    const Scalar coeff = lead->coefficient / (Scalar(static_cast<long>(k + 1)) * shift);
    const auto step = Polynomial::from_terms(mode, n, {Term{std::move(raised), coeff}});
    rest -= substitute(step, shifted, budget) - step;
    f += step;
  }
  return f;
}

bool in_layer(const Elementary& e, std::size_t layer) {
  return e.index == layer && e.alpha.is_one() && e.f.depends_only_on(layer + 1, e.f.n());
}

Endomorphism LayerFactorization::recompose(const Budget& budget) const {
  return compose_all(mode, n, factors, budget);
}

LayerFactorization factorize_unitriangular(const Endomorphism& phi, const Budget& budget) {
  auto shape = triangular_shape(phi);
  if (!shape || !shape->unitriangular())
    throw Error(ErrorCode::NotUnitriangular, "factorization needs a unitriangular automorphism");
  const auto mode = phi.mode();
  const auto n = phi.n();
  LayerFactorization out{mode, n, {}};
  // Invariant: residual fixes x_{i+1}, ..., x_n and phi = factors * residual.
  Endomorphism residual = phi;
  for (std::size_t i = n; i >= 1; --i) {
    Polynomial g = residual.image(i) - Polynomial::variable(mode, n, i);
    if (g.is_zero()) continue;
    auto layer = Elementary::make(i, Scalar(1), std::move(g));
    residual = compose(invert_triangular(layer.to_endomorphism(), budget), residual, budget);
    out.factors.push_back(std::move(layer));
  }
  return out;
}

LayerCommutator express_in_layer_commutator(const Elementary& target, std::size_t j,
                                            const Scalar& h, const Budget& budget) {
  const auto mode = target.f.mode();
  const auto n = target.f.n();
  const auto i = target.index;
  if (!(i < j && j <= n))
    throw Error(ErrorCode::BadIndices, "need i < j <= n, got i = " + std::to_string(i) +
                                           ", j = " + std::to_string(j));
  if (!in_layer(target, i))
    throw Error(ErrorCode::LayerViolation,
                "target must be sigma(" + std::to_string(i) + ", 1, g) with g in x_" +
                    std::to_string(i + 1) + "..x_" + std::to_string(n));
  if (h.is_zero()) throw Error(ErrorCode::ZeroShift, "h must be nonzero");

  // [sigma(i,1,f), sigma(j,1,h)] moves x_i by f(.., x_j + h, ..) - f.
  LayerCommutator out{Elementary::make(i, Scalar(1), solve_difference(target.f, j, h, budget)),
                      Elementary::make(j, Scalar(1), Polynomial::constant(mode, n, h))};
  if (commutator(out.phi.to_endomorphism(), out.psi.to_endomorphism(), budget) !=
      target.to_endomorphism())
    throw Error(ErrorCode::VerificationFailed, "layer commutator does not reproduce the target");
  return out;
}

CommutatorExpression express_as_single_commutator(const Endomorphism& omega,
                                                  const Budget& budget) {
  const auto mode = omega.mode();
  const auto n = omega.n();
  auto shape = triangular_shape(omega);
  if (!shape || !shape->unitriangular() ||
      omega.image(n) != Polynomial::variable(mode, n, n))
    throw Error(ErrorCode::NotInDerivedSubgroup,
                "need a unitriangular automorphism fixing x_" + std::to_string(n));

  // parts[k-1] = sigma(k, 1, f_k); f_n = 1 and f_{n-1}, ..., f_1 are found in turn.
  std::vector<Elementary> parts;
  for (std::size_t k = 1; k < n; ++k)
    parts.push_back(Elementary{k, Scalar(1), Polynomial(mode, n)});
  parts.push_back(Elementary{n, Scalar(1), Polynomial::constant(mode, n, Scalar(1))});

  // With y_m = x_m^{phi_{k+1} ... phi_{n-1}} (m > k), the k-th equation reads
  // g_k(x(y)) = f_k(y) - f_k(y + e_n).
  for (std::size_t k = n - 1; k >= 1; --k) {
    const auto& g = shape->fs[k - 1];
    if (g.is_zero()) continue;
    const auto tail = compose_all(mode, n, std::span(parts).subspan(k, n - 1 - k), budget);
    const auto in_y = substitute(g, invert_triangular(tail, budget).images(), budget);
    parts[k - 1].f = -solve_difference(in_y, n, Scalar(1), budget);
  }

  CommutatorExpression out{parts.back().to_endomorphism(),
                           compose_all(mode, n, std::span(parts).first(n - 1), budget), parts};
  if (commutator(out.left, out.right, budget) != omega)
    throw Error(ErrorCode::VerificationFailed, "commutator expression does not reproduce omega");
  return out;
}

}  // namespace triaut

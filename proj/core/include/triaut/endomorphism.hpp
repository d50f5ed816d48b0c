#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "triaut/polynomial.hpp"
#include "triaut/scalar.hpp"

namespace triaut {

/// Algebra endomorphism of C_n given by the images of the generators.
///
/// Composition is left to right: x^{phi psi} = (x^phi)^psi, so
/// compose(phi, psi).image(i) = substitute(phi.image(i), psi.images()).
class Endomorphism {
 public:
  /// Throws ArityMismatch on an empty list, ModeMismatch / ArityMismatch when
  /// the images do not share one algebra C_n with n == images.size().
  explicit Endomorphism(std::vector<Polynomial> images);

  static Endomorphism identity(AlgebraMode mode, std::size_t n);

  AlgebraMode mode() const { return images_.front().mode(); }
  std::size_t n() const { return images_.size(); }
  std::span<const Polynomial> images() const { return images_; }
  /// Image of x_var, 1-based.
  const Polynomial& image(std::size_t var) const;

  bool is_identity() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Polynomial> images_;
};

/// sigma(i, alpha, f): x_i -> alpha x_i + f, every other generator fixed.
struct Elementary {
  std::size_t index;
  Scalar alpha;
  Polynomial f;

  /// Throws ZeroAlpha, VariableDependence (f involves x_index) or IndexOutOfRange.
  static Elementary make(std::size_t index, const Scalar& alpha, Polynomial f);

  Endomorphism to_endomorphism() const;
  /// sigma(i, alpha^-1, -alpha^-1 f).
  Elementary inverse() const;

  friend bool operator==(const Elementary&, const Elementary&) = default;
};

/// Shape x_i -> alphas[i] x_i + fs[i](x_{i+1}, ..., x_n), fs.back() constant.
struct TriangularShape {
  std::vector<Scalar> alphas;
  std::vector<Polynomial> fs;

  bool unitriangular() const;
};

Endomorphism elementary(std::size_t index, const Scalar& alpha, const Polynomial& f);
/// tau_{ks}: swaps x_k and x_s. Throws IndexOutOfRange, EqualIndices.
Endomorphism transposition(AlgebraMode mode, std::size_t n, std::size_t k, std::size_t s);
/// x_i -> alphas[i] x_i. Throws ZeroAlpha.
Endomorphism diagonal(AlgebraMode mode, std::span<const Scalar> alphas);
Endomorphism from_shape(AlgebraMode mode, const TriangularShape& shape);

/// Reads phi as sigma(i, alpha, f) when it has that form; the identity reads as
/// sigma(1, 1, 0).
std::optional<Elementary> as_elementary(const Endomorphism& phi);
std::optional<TriangularShape> triangular_shape(const Endomorphism& phi);

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi, const Budget& budget = {});

/// Back-substitution from x_n down to x_1. Throws NotTriangular.
Endomorphism invert_triangular(const Endomorphism& phi, const Budget& budget = {});

/// k-fold composition; negative k inverts first (triangular input only).
Endomorphism power(const Endomorphism& phi, long k, const Budget& budget = {});

/// [phi, psi] = phi^-1 psi^-1 phi psi. Throws NotTriangular.
Endomorphism commutator(const Endomorphism& phi, const Endomorphism& psi,
                        const Budget& budget = {});

/// Same, with the inverses supplied by the caller (any invertible input).
Endomorphism commutator(const Endomorphism& phi, const Endomorphism& phi_inverse,
                        const Endomorphism& psi, const Endomorphism& psi_inverse,
                        const Budget& budget = {});

/// by^-1 phi by. Throws NotTriangular when `by` is not triangular.
Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& by, const Budget& budget = {});
/// by^-1 phi by with by^-1 supplied by the caller.
Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& by,
                       const Endomorphism& by_inverse, const Budget& budget = {});

enum class Label { Identity, Elementary, Diagonal, Permutation, Unitriangular, Triangular, Affine };

std::string_view to_string(Label label);

class LabelSet {
 public:
  void insert(Label l) { bits_ |= bit(l); }
  bool contains(Label l) const { return (bits_ & bit(l)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::vector<Label> labels() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  static unsigned bit(Label l) { return 1u << static_cast<unsigned>(l); }
  unsigned bits_ = 0;
};

LabelSet classify(const Endomorphism& phi);

/// phi = compose(u, d) with d diagonal and u unitriangular. Throws NotTriangular.
std::pair<Endomorphism, Endomorphism> split_triangular(const Endomorphism& phi,
                                                       const Budget& budget = {});

}  // namespace triaut

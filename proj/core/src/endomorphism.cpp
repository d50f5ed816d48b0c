#include "triaut/endomorphism.hpp"

#include <algorithm>
#include <string>

#include "triaut/error.hpp"

namespace triaut {

namespace {

Polynomial var_poly(AlgebraMode mode, std::size_t n, std::size_t var) {
  return Polynomial::variable(mode, n, var);
}

void require_same_algebra(const Endomorphism& a, const Endomorphism& b) {
  if (a.mode() != b.mode())
    throw Error(ErrorCode::ModeMismatch, "endomorphisms of different algebras");
  if (a.n() != b.n())
    throw Error(ErrorCode::ArityMismatch, "endomorphisms on " + std::to_string(a.n()) + " and " +
                                              std::to_string(b.n()) + " variables");
}

TriangularShape require_triangular(const Endomorphism& phi) {
  auto shape = triangular_shape(phi);
  if (!shape) throw Error(ErrorCode::NotTriangular, "endomorphism is not upper triangular");
  return *shape;
}

/// Rank of a square matrix over Q by Gaussian elimination.
std::size_t rank(std::vector<std::vector<Scalar>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

Endomorphism::Endomorphism(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorCode::ArityMismatch, "an endomorphism needs n >= 1 images");
  for (const auto& img : images_) {
    triaut::require_same_algebra(img, images_.front());
    if (img.n() != images_.size())
      throw Error(ErrorCode::ArityMismatch, "image count " + std::to_string(images_.size()) +
                                                " differs from n = " + std::to_string(img.n()));
  }
}

Endomorphism Endomorphism::identity(AlgebraMode mode, std::size_t n) {
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) images.push_back(var_poly(mode, n, i));
  return Endomorphism(std::move(images));
}

const Polynomial& Endomorphism::image(std::size_t var) const {
  if (var < 1 || var > n())
    throw Error(ErrorCode::IndexOutOfRange, "no generator x" + std::to_string(var));
  return images_[var - 1];
}

bool Endomorphism::is_identity() const {
  for (std::size_t i = 1; i <= n(); ++i)
    if (images_[i - 1] != var_poly(mode(), n(), i)) return false;
  return true;
}

Elementary Elementary::make(std::size_t index, const Scalar& alpha, Polynomial f) {
  if (index < 1 || index > f.n())
    throw Error(ErrorCode::IndexOutOfRange, "elementary index " + std::to_string(index) +
                                                " outside 1.." + std::to_string(f.n()));
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroAlpha, "alpha must be nonzero");
  if (f.involves(index))
    throw Error(ErrorCode::VariableDependence,
                "f must not involve x" + std::to_string(index));
  return Elementary{index, alpha, std::move(f)};
}

Endomorphism Elementary::to_endomorphism() const {
  auto e = Endomorphism::identity(f.mode(), f.n());
  std::vector<Polynomial> images(e.images().begin(), e.images().end());
  images[index - 1] = var_poly(f.mode(), f.n(), index).scaled(alpha) + f;
  return Endomorphism(std::move(images));
}

Elementary Elementary::inverse() const {
  const Scalar inv = alpha.inverse();
  return Elementary{index, inv, f.scaled(-inv)};
}

bool TriangularShape::unitriangular() const {
  return std::all_of(alphas.begin(), alphas.end(), [](const Scalar& a) { return a.is_one(); });
}

Endomorphism elementary(std::size_t index, const Scalar& alpha, const Polynomial& f) {
  return Elementary::make(index, alpha, f).to_endomorphism();
}

Endomorphism transposition(AlgebraMode mode, std::size_t n, std::size_t k, std::size_t s) {
  if (k < 1 || k > n || s < 1 || s > n)
    throw Error(ErrorCode::IndexOutOfRange, "transposition indices outside 1.." + std::to_string(n));
  if (k == s) throw Error(ErrorCode::EqualIndices, "transposition needs k != s");
  std::vector<Polynomial> images;
  for (std::size_t i = 1; i <= n; ++i)
    images.push_back(var_poly(mode, n, i == k ? s : (i == s ? k : i)));
  return Endomorphism(std::move(images));
}

Endomorphism diagonal(AlgebraMode mode, std::span<const Scalar> alphas) {
  const std::size_t n = alphas.size();
  std::vector<Polynomial> images;
  for (std::size_t i = 1; i <= n; ++i) {
    if (alphas[i - 1].is_zero()) throw Error(ErrorCode::ZeroAlpha, "diagonal entry is zero");
    images.push_back(var_poly(mode, n, i).scaled(alphas[i - 1]));
  }
  return Endomorphism(std::move(images));
}

Endomorphism from_shape(AlgebraMode mode, const TriangularShape& shape) {
  const std::size_t n = shape.alphas.size();
  std::vector<Polynomial> images;
  for (std::size_t i = 1; i <= n; ++i) {
    if (shape.alphas[i - 1].is_zero()) throw Error(ErrorCode::ZeroAlpha, "diagonal entry is zero");
    if (!shape.fs[i - 1].depends_only_on(i + 1, n))
      throw Error(ErrorCode::VariableDependence,
                  "f_" + std::to_string(i) + " must only involve x_" + std::to_string(i + 1) +
                      "..x_" + std::to_string(n));
    images.push_back(var_poly(mode, n, i).scaled(shape.alphas[i - 1]) + shape.fs[i - 1]);
  }
  return Endomorphism(std::move(images));
}

std::optional<Elementary> as_elementary(const Endomorphism& phi) {
  const auto mode = phi.mode();
  const auto n = phi.n();
  std::optional<std::size_t> moved;
  for (std::size_t i = 1; i <= n; ++i) {
    if (phi.image(i) == var_poly(mode, n, i)) continue;
    if (moved) return std::nullopt;
    moved = i;
  }
  if (!moved) return Elementary{1, Scalar(1), Polynomial(mode, n)};
  const auto i = *moved;
  const Scalar alpha = phi.image(i).coefficient(Monomial::variable(mode, n, i));
  Polynomial f = phi.image(i) - var_poly(mode, n, i).scaled(alpha);
  if (alpha.is_zero() || f.involves(i)) return std::nullopt;
  return Elementary{i, alpha, std::move(f)};
}

std::optional<TriangularShape> triangular_shape(const Endomorphism& phi) {
  const auto mode = phi.mode();
  const auto n = phi.n();
  TriangularShape shape;
  for (std::size_t i = 1; i <= n; ++i) {
    const Scalar alpha = phi.image(i).coefficient(Monomial::variable(mode, n, i));
    if (alpha.is_zero()) return std::nullopt;
    Polynomial f = phi.image(i) - var_poly(mode, n, i).scaled(alpha);
    if (!f.depends_only_on(i + 1, n)) return std::nullopt;
    shape.alphas.push_back(alpha);
    shape.fs.push_back(std::move(f));
  }
  return shape;
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi, const Budget& budget) {
  require_same_algebra(phi, psi);
  std::vector<Polynomial> images;
  images.reserve(phi.n());
  for (const auto& img : phi.images()) images.push_back(substitute(img, psi.images(), budget));
  return Endomorphism(std::move(images));
}

Endomorphism invert_triangular(const Endomorphism& phi, const Budget& budget) {
  const auto shape = require_triangular(phi);
  const auto mode = phi.mode();
  const auto n = phi.n();
  const auto id = Endomorphism::identity(mode, n);
  std::vector<Polynomial> inverse(id.images().begin(), id.images().end());
  // x_i^{psi} = alpha_i^{-1} (x_i - f_i(x_{i+1}^psi, ..., x_n^psi)); f_i ignores x_1..x_i.
  for (std::size_t i = n; i >= 1; --i) {
    const Polynomial shifted = substitute(shape.fs[i - 1], inverse, budget);
    inverse[i - 1] = (var_poly(mode, n, i) - shifted).scaled(shape.alphas[i - 1].inverse());
  }
  return Endomorphism(std::move(inverse));
}

Endomorphism power(const Endomorphism& phi, long k, const Budget& budget) {
  if (k < 0) return power(invert_triangular(phi, budget), -k, budget);
  Endomorphism result = Endomorphism::identity(phi.mode(), phi.n());
  Endomorphism base = phi;
  auto e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) result = compose(result, base, budget);
    e >>= 1;
    if (e > 0) base = compose(base, base, budget);
  }
  return result;
}

Endomorphism commutator(const Endomorphism& phi, const Endomorphism& psi, const Budget& budget) {
  require_same_algebra(phi, psi);
  return commutator(phi, invert_triangular(phi, budget), psi, invert_triangular(psi, budget),
                    budget);
}

Endomorphism commutator(const Endomorphism& phi, const Endomorphism& phi_inverse,
                        const Endomorphism& psi, const Endomorphism& psi_inverse,
                        const Budget& budget) {
  require_same_algebra(phi, psi);
  auto out = compose(phi_inverse, psi_inverse, budget);
  out = compose(out, phi, budget);
  return compose(out, psi, budget);
}

Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& by, const Budget& budget) {
  require_same_algebra(phi, by);
  return conjugate(phi, by, invert_triangular(by, budget), budget);
}

Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& by,
                       const Endomorphism& by_inverse, const Budget& budget) {
  require_same_algebra(phi, by);
  require_same_algebra(by, by_inverse);
  return compose(compose(by_inverse, phi, budget), by, budget);
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::Identity: return "Identity";
    case Label::Elementary: return "Elementary";
    case Label::Diagonal: return "Diagonal";
    case Label::Permutation: return "Permutation";
    case Label::Unitriangular: return "Unitriangular";
    case Label::Triangular: return "Triangular";
    case Label::Affine: return "Affine";
  }
  return "?";
}

std::vector<Label> LabelSet::labels() const {
  std::vector<Label> out;
  for (auto l : {Label::Identity, Label::Elementary, Label::Diagonal, Label::Permutation,
                 Label::Unitriangular, Label::Triangular, Label::Affine})
    if (contains(l)) out.push_back(l);
  return out;
}

LabelSet classify(const Endomorphism& phi) {
  const auto mode = phi.mode();
  const auto n = phi.n();
  LabelSet labels;
  if (phi.is_identity()) labels.insert(Label::Identity);
  if (as_elementary(phi)) labels.insert(Label::Elementary);

  bool diagonal = true;
  bool permutation = true;
  std::vector<bool> hit(n, false);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& img = phi.image(i);
    if (img.term_count() != 1) {
      diagonal = permutation = false;
      break;
    }
    const auto& term = img.terms().front();
    if (term.monomial != Monomial::variable(mode, n, i)) diagonal = false;
    if (!term.coefficient.is_one() || term.monomial.total_degree(mode) != 1) {
      permutation = false;
    } else {
      for (std::size_t j = 1; j <= n; ++j)
        if (term.monomial == Monomial::variable(mode, n, j)) {
          if (hit[j - 1]) permutation = false;
          hit[j - 1] = true;
        }
    }
  }
  if (diagonal) labels.insert(Label::Diagonal);
  if (permutation) labels.insert(Label::Permutation);

  if (auto shape = triangular_shape(phi)) {
    labels.insert(Label::Triangular);
    if (shape->unitriangular()) labels.insert(Label::Unitriangular);
  }

  bool affine = true;
  std::vector<std::vector<Scalar>> linear(n, std::vector<Scalar>(n));
  for (std::size_t i = 1; i <= n && affine; ++i) {
    const auto deg = phi.image(i).total_degree();
    if (deg.is_neg_infinity() || deg.value() > 1) {
      affine = false;
      break;
    }
    for (std::size_t j = 1; j <= n; ++j)
      linear[i - 1][j - 1] = phi.image(i).coefficient(Monomial::variable(mode, n, j));
  }
  if (affine && rank(linear) == n) labels.insert(Label::Affine);
  return labels;
}

std::pair<Endomorphism, Endomorphism> split_triangular(const Endomorphism& phi,
                                                       const Budget& budget) {
  const auto shape = require_triangular(phi);
  auto d = diagonal(phi.mode(), shape.alphas);
  auto u = compose(phi, invert_triangular(d, budget), budget);
  return {std::move(u), std::move(d)};
}

}  // namespace triaut

#pragma once

// Exact linear algebra over a field scalar (Rat in practice): reduced row
// echelon form, null spaces, and subspaces kept in canonical echelon form so
// that subspace equality is literal matrix equality.

#include <ucz/errors.hpp>
#include <ucz/rational.hpp>

#include <Eigen/Core>

#include <cassert>
#include <optional>
#include <string>
#include <vector>

namespace ucz {

using Eigen::Index;

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row, ascending
};

/// Gauss-Jordan elimination. Zero rows are kept at the bottom so the shape
/// matches the input.
template <typename Derived>
Echelon<typename Derived::Scalar> echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = m;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = row;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      const Scalar factor = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <typename Derived>
MatrixX<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  return echelon(m).reduced;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(echelon(m).pivots.size());
}

/// A linear subspace of Scalar^ambient, stored as the nonzero rows of its
/// reduced row echelon basis. Two subspaces are equal iff their bases are
/// identical.
template <typename Scalar>
class Subspace {
 public:
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  explicit Subspace(Index ambient_dim = 0) : basis_(0, ambient_dim) {}

  /// Span of the rows of `generators`.
  template <typename Derived>
  static Subspace span(const Eigen::MatrixBase<Derived>& generators) {
    auto e = echelon(generators);
    Subspace s;
    s.basis_ = e.reduced.topRows(static_cast<Index>(e.pivots.size()));
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace span(const std::vector<Vector>& generators, Index ambient_dim) {
    Matrix rows(static_cast<Index>(generators.size()), ambient_dim);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].size() != ambient_dim)
        throw DimensionError("Subspace::span: generator length mismatch");
      rows.row(static_cast<Index>(i)) = generators[i].transpose();
    }
    return span(rows);
  }

  static Subspace full(Index ambient_dim) {
    return span(Matrix::Identity(ambient_dim, ambient_dim));
  }

  Index ambient_dim() const { return basis_.cols(); }
  Index dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(Index k) const { return basis_.row(k).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<Vector> try_coordinates(const Vector& v) const {
    check_ambient(v.size(), "Subspace::coordinates");
    Vector c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<std::size_t>(k)]);
    Vector residual = v;
    if (dim() > 0) residual -= basis_.transpose() * c;
    if (!is_zero(residual)) return std::nullopt;
    return c;
  }

  Vector coordinates(const Vector& v) const {
    auto c = try_coordinates(v);
    if (!c) throw DomainError("Subspace::coordinates: vector not in subspace");
    return *c;
  }

  bool contains(const Vector& v) const { return try_coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_dim(), "Subspace::contains");
    for (Index k = 0; k < other.dim(); ++k)
      if (!contains(other.vector(k))) return false;
    return true;
  }

  /// Element with the given coordinates in the echelon basis.
  Vector combine(const Vector& coords) const { return basis_.transpose() * coords; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() &&
           a.basis_ == b.basis_;
  }

 private:
  void check_ambient(Index n, const char* where) const {
    if (n != ambient_dim())
      throw DimensionError(std::string(where) + ": ambient dimension mismatch");
  }

  Matrix basis_;
  std::vector<Index> pivots_;
};

/// Null space {v : m v = 0}.
template <typename Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = echelon(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> gens(cols - static_cast<Index>(e.pivots.size()), cols);
  gens.setZero();
  Index g = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    gens(g, free) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      gens(g, e.pivots[r]) = -e.reduced(static_cast<Index>(r), free);
    ++g;
  }
  return Subspace<Scalar>::span(gens);
}

/// Linear functionals vanishing on s, as a subspace of the same coordinate space.
template <typename Scalar>
Subspace<Scalar> annihilator(const Subspace<Scalar>& s) {
  if (s.dim() == 0) return Subspace<Scalar>::full(s.ambient_dim());
  return kernel(s.basis());
}

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("sum: ambient dimension mismatch");
  MatrixX<Scalar> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return Subspace<Scalar>::span(rows);
}

template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("intersect: ambient dimension mismatch");
  const auto ann = sum(annihilator(a), annihilator(b));
  Subspace<Scalar> out = ann.dim() == 0 ? Subspace<Scalar>::full(a.ambient_dim())
                                        : kernel(ann.basis());
  assert(out.dim() + sum(a, b).dim() == a.dim() + b.dim());
  return out;
}

/// True iff a + b is the whole ambient space and a ∩ b = 0.
template <typename Scalar>
bool is_direct_complement(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("is_direct_complement: ambient dimension mismatch");
  return a.dim() + b.dim() == a.ambient_dim() && sum(a, b).dim() == a.ambient_dim();
}

/// Particular solution of a x = b, or nullopt when inconsistent.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  if (a.rows() != b.size()) throw DimensionError("solve: row count mismatch");
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = echelon(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(static_cast<Index>(r), a.cols());
  }
  return x;
}

template <typename Scalar>
MatrixX<Scalar> inverse(const MatrixX<Scalar>& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
  const Index n = a.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << a, MatrixX<Scalar>::Identity(n, n);
  const auto e = echelon(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n)
    throw DomainError("inverse: matrix is singular");
  return e.reduced.rightCols(n);
}

template <typename Scalar>
Scalar determinant(MatrixX<Scalar> a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant: matrix not square");
  Scalar det(1);
  const Index n = a.rows();
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && a(p, c) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Component of v in `onto` for the decomposition ambient = onto ⊕ along.
template <typename Scalar>
VectorX<Scalar> project_along(const VectorX<Scalar>& v, const Subspace<Scalar>& onto,
                              const Subspace<Scalar>& along) {
  if (v.size() != onto.ambient_dim() || onto.ambient_dim() != along.ambient_dim())
    throw DimensionError("project_along: ambient dimension mismatch");
  if (!is_direct_complement(onto, along))
    throw DecompositionError("project_along: subspaces are not complementary");
  const Index n = v.size();
  MatrixX<Scalar> cols(n, n);
  cols << onto.basis().transpose(), along.basis().transpose();
  const auto c = solve(cols, v);
  assert(c.has_value());
  return onto.basis().transpose() * c->head(onto.dim());
}

using RatSubspace = Subspace<Rat>;

}  // namespace ucz

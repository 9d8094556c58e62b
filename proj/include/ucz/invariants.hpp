#pragma once

// Adjoint-invariant polynomials for type A, read off the characteristic
// polynomial of the defining representation, and the adjoint-quotient
// machinery built on them.

#include <ucz/kostant.hpp>

#include <vector>

namespace ucz {

/// Sparse polynomial with rational coefficients in a fixed set of variables.
class Polynomial {
 public:
  struct Term {
    Rat coef;
    std::vector<int> vars;  // sorted multiset of variable indices
  };

  void add_term(Rat coef, std::vector<int> vars);
  const std::vector<Term>& terms() const { return terms_; }
  Rat evaluate(const Vec& values) const;
  Polynomial derivative(int var) const;
  /// Total degree of the highest term (0 for the zero polynomial).
  int degree() const;

 private:
  std::vector<Term> terms_;
};

/// Coefficients c_2, …, c_{l+1} of det(λ - X) = λ^{l+1} + Σ_k c_k λ^{l+1-k},
/// returned negated: invariants_eval(x)[k-2] = -c_k, so the sl2 element
/// [[0, c], [1, 0]] evaluates to (c). The trace coefficient c_1 is always 0.
/// Throws UnsupportedError without a matrix realization.
Vec invariants_eval(const LieAlgebra& L, const Vec& x);

/// The same invariants as explicit polynomials in the matrix entries
/// x_{ab} (variable a·m + b), with exact gradients in algebra coordinates.
class InvariantSystem {
 public:
  explicit InvariantSystem(const LieAlgebra& L);

  int count() const { return static_cast<int>(polys_.size()); }
  /// Degree of the k-th invariant (k + 2).
  int degree(int k) const { return polys_[static_cast<std::size_t>(k)].degree(); }
  const Polynomial& polynomial(int k) const { return polys_[static_cast<std::size_t>(k)]; }

  Vec evaluate(const Vec& x) const;
  /// l × n matrix of ∂f_k/∂(coordinate j) at x.
  Mat gradient(const Vec& x) const;

 private:
  std::vector<Polynomial> polys_;
  std::vector<std::vector<Polynomial>> partials_;  // [k][entry]
  Mat entries_of_basis_;                           // m² × n, row-major entries
};

/// The point of S with prescribed invariants, by graded back-substitution
/// over the homogeneous slice coordinates. Throws ConstructionError if a
/// pivot vanishes.
Vec slice_from_invariants(const LieAlgebra& L, const KostantSlice& S, const Vec& c);

/// f_i(x) = f_i(y) for all i.
bool in_fiber_product(const LieAlgebra& L, const Vec& x, const Vec& y);

/// Rank of the l × 2n Jacobian of g_i(x, y) = f_i(x) - f_i(y).
Index jacobian_rank_at(const InvariantSystem& inv, const Vec& x, const Vec& y);

}  // namespace ucz

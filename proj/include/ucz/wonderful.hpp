#pragma once

// Boundary combinatorics of the wonderful compactification: parabolic data
// for each subset of simple roots, the orbit poset, isotropy algebras at the
// basepoints and their translates.

#include <ucz/liealg.hpp>

#include <string>
#include <vector>

namespace ucz {

/// Subset of simple roots; bit i stands for the simple root α_{i+1}.
using RootSubset = unsigned;

inline RootSubset full_subset(int rank) { return (1u << rank) - 1u; }
int subset_size(RootSubset I);
/// "{}" or "{1,3}" with 1-based simple root labels.
std::string subset_label(RootSubset I);

struct ParabolicData {
  RootSubset subset = 0;
  RatSubspace p, p_minus, levi, u, u_minus, center, derived;
  /// [l_I, l_I], so that g = z(l_I) ⊕ [l_I, l_I] ⊕ u_I ⊕ u_I⁻.
  RatSubspace levi_derived;
  /// Coordinates of x in the basis of that decomposition, in that order.
  Mat adapted_coordinates;

  /// z(l_I) coordinates of x along [l_I, l_I] ⊕ u_I ⊕ u_I⁻.
  Vec center_part(const Vec& x) const;
  /// l_I component of x along u_I ⊕ u_I⁻.
  Vec levi_part(const Vec& x) const;
  /// True iff (a, b) ∈ p_I × p_I⁻ with equal l_I components.
  bool fiber_contains(const Vec& a, const Vec& b) const;
};

/// p_I is spanned by the Cartan, every e_α and the f_α with α supported in I;
/// p_I⁻ swaps the roles of e and f.
ParabolicData build_parabolic(const LieAlgebra& L, RootSubset I);

// Elements of g × g are stacked vectors (x, y) of length 2n.
Vec pair_vector(const Vec& x, const Vec& y);
Vec first_component(const LieAlgebra& L, const Vec& pair);
Vec second_component(const LieAlgebra& L, const Vec& pair);
Vec pair_bracket(const LieAlgebra& L, const Vec& a, const Vec& b);
/// True iff the subspace of g × g is closed under the componentwise bracket.
bool is_pair_subalgebra(const LieAlgebra& L, const RatSubspace& s);

/// p_I ×_{l_I} p_I⁻ = {(u + x, v + x) : u ∈ u_I, v ∈ u_I⁻, x ∈ l_I}.
RatSubspace fiber_algebra(const LieAlgebra& L, const ParabolicData& P);
/// {(u + x, v + y) : x - y ∈ z(l_I)}.
RatSubspace stabilizer_algebra(const LieAlgebra& L, const ParabolicData& P);

/// 2(n - dim p_I) + dim l_I - dim z(l_I).
Index orbit_dim(const LieAlgebra& L, const ParabolicData& P);
/// closure(O_I) ⊇ O_J.
inline bool closure_contains(RootSubset I, RootSubset J) { return (J & ~I) == 0; }

struct OrbitInfo {
  RootSubset subset;
  Index dim;
  /// Boundary divisors D_i (1-based) containing the orbit: i ∉ I.
  std::vector<int> divisors;
};

/// All 2^l orbits, ordered by subset bitmask.
struct OrbitPoset {
  std::vector<OrbitInfo> orbits;
  /// Number of boundary divisor components (orbits of codimension one).
  int num_divisors(const LieAlgebra& L) const;
};

OrbitPoset build_orbit_poset(const LieAlgebra& L);

/// The matrix of Ad_g on algebra coordinates (type A).
Mat adjoint_matrix(const LieAlgebra& L, const GroupElement& g);

/// A point of the compactification on the orbit O_I, represented by the
/// translate (Ad_{g1} × Ad_{g2}) of the isotropy algebra at the basepoint.
/// Two points are equal iff their realized fibers are equal.
class BoundaryPoint {
 public:
  RootSubset subset() const { return subset_; }
  const GroupElement& g1() const { return g1_; }
  const GroupElement& g2() const { return g2_; }
  const RatSubspace& realized_fiber() const { return fiber_; }

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    return a.fiber_ == b.fiber_;
  }

 private:
  friend BoundaryPoint make_boundary_point(const LieAlgebra& L, RootSubset I,
                                           const GroupElement& g1, const GroupElement& g2);
  friend std::vector<BoundaryPoint> torus_fixed_fiber_points(const LieAlgebra& L, const Vec& xi,
                                                             const GroupElement& diagonalizer);
  BoundaryPoint(RootSubset I, GroupElement g1, GroupElement g2, RatSubspace fiber)
      : subset_(I), g1_(std::move(g1)), g2_(std::move(g2)), fiber_(std::move(fiber)) {}

  RootSubset subset_;
  GroupElement g1_, g2_;
  RatSubspace fiber_;
};

/// Throws UnsupportedError without a matrix realization.
BoundaryPoint make_boundary_point(const LieAlgebra& L, RootSubset I, const GroupElement& g1,
                                  const GroupElement& g2);

/// (ξ1, ξ2) ∈ realized fiber of p.
bool translate_contains(const BoundaryPoint& p, const Vec& xi1, const Vec& xi2);

/// Signed permutation matrices representing the Weyl group S_{l+1}: the
/// permutation matrix, with its first column negated when the sign is odd.
/// Ordered lexicographically by permutation.
std::vector<GroupElement> weyl_representatives(Index size);

/// d ∈ SL with Ad_{d⁻¹} x = diag(eigenvalues), for x with these distinct
/// eigenvalues. Throws DomainError if some eigenspace is not a line.
GroupElement diagonalizer(const LieAlgebra& L, const Vec& x, const std::vector<Rat>& eigenvalues);

/// Boundary points (I, d·w1, d·w2) with I ≠ Δ whose translate contains
/// (ξ, ξ), deduplicated by realized fiber, in enumeration order
/// (I ascending, then w1, then w2). The interior point I = Δ is excluded.
/// Throws DomainError unless Ad_{d⁻¹} ξ is a regular element of the Cartan.
std::vector<BoundaryPoint> torus_fixed_fiber_points(const LieAlgebra& L, const Vec& xi,
                                                    const GroupElement& diagonalizer);

}  // namespace ucz

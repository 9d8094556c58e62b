#pragma once

#include <ucz/liealg.hpp>

#include <vector>

namespace ucz {

/// {e, h, f} with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
struct PrincipalTriple {
  Vec e, h, f;
};

/// e = Σ e_{α_i}; h the Cartan element with α_i(h) = 2; f = Σ c_i f_{α_i}
/// with [e, f] = h. Throws ConstructionError if the linear solve fails.
PrincipalTriple build_principal_triple(const LieAlgebra& L);

/// Eigenspace decomposition of ad(h) for a semisimple h with integer spectrum.
class Grading {
 public:
  /// Throws DomainError unless ad(h) is diagonalizable over ℚ with integer
  /// eigenvalues (checked by exhausting the spectral bound).
  Grading(const LieAlgebra& L, const Vec& h);

  const std::vector<int>& degrees() const { return degrees_; }
  int max_degree() const { return degrees_.back(); }
  /// Eigenspace for eigenvalue `degree` (zero subspace if absent).
  RatSubspace component_space(int degree) const;
  /// Degree-`degree` component of x.
  Vec component(const Vec& x, int degree) const;
  bool all_even() const;

 private:
  std::vector<int> degrees_;
  std::vector<RatSubspace> spaces_;
  Mat eigenbasis_inverse_;
  std::vector<Index> offsets_;
};

/// Sanity of a triple: sl2 relations, regularity of e, h, f and the integral
/// even grading by ad(h).
bool is_principal_triple(const LieAlgebra& L, const PrincipalTriple& t);

enum class BasisOrder;
struct Normalization;
class KostantSlice;
Normalization slice_normalize(const LieAlgebra& L, const KostantSlice& S, const Vec& xi,
                              BasisOrder order);

/// S = f + gᵉ with an ad(h)-homogeneous basis of gᵉ.
class KostantSlice {
 public:
  const PrincipalTriple& triple() const { return triple_; }
  const Grading& grading() const { return grading_; }
  const RatSubspace& centralizer_e() const { return ge_; }
  /// Basis of gᵉ, ad(h)-homogeneous, ordered by degree.
  const std::vector<Vec>& basis() const { return basis_; }
  /// Invariant degrees d_1 ≤ … ≤ d_l; basis()[i] has ad(h)-weight 2d_i - 2.
  const std::vector<int>& degrees() const { return degrees_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  /// f + Σ t_i v_i.
  Vec point(const Vec& coords) const;
  bool contains(const Vec& x) const { return ge_.contains(Vec(x - triple_.f)); }
  /// t with x = point(t). Throws DomainError when x ∉ S.
  Vec coordinates(const Vec& x) const;

 private:
  friend KostantSlice build_slice(const LieAlgebra& L, PrincipalTriple t);
  friend Normalization slice_normalize(const LieAlgebra& L, const KostantSlice& S, const Vec& xi,
                                       BasisOrder order);
  KostantSlice(PrincipalTriple t, Grading g) : triple_(std::move(t)), grading_(std::move(g)) {}

  // Per even degree δ ≥ 0: bases of gᵉ ∩ g_δ, of g_{δ+2}, and [g_{δ+2}, f].
  struct DegreeStep {
    int degree;
    std::vector<Vec> kept, lifts, images;
  };
  std::vector<DegreeStep> steps_;

  PrincipalTriple triple_;
  Grading grading_;
  RatSubspace ge_;
  std::vector<Vec> basis_;
  std::vector<int> degrees_;
  Mat coordinate_solve_;
};

KostantSlice build_slice(const LieAlgebra& L, PrincipalTriple t);

/// Order in which basis vectors enter the per-degree solves. The result of
/// slice_normalize does not depend on it.
enum class BasisOrder { Forward, Reversed };

struct Normalization {
  /// u_1, …, u_m ∈ 𝔫 with normal_form = exp(ad u_1) ∘ … ∘ exp(ad u_m) (ξ);
  /// u_m is the first correction applied. Zero corrections are omitted.
  std::vector<Vec> witness;
  Vec normal_form;
  /// Number of graded sweeps performed.
  int sweeps = 0;
};

/// Moves ξ ∈ f + 𝔟 into f + gᵉ along its N-orbit. At each ad(h)-degree
/// δ = 0, 2, … the degree-δ part of (ξ - f) is split as gᵉ ⊕ [g_{δ+2}, f]
/// and the second summand is removed by exp(ad u) with u ∈ g_{δ+2}.
/// Throws DomainError if ξ - f ∉ 𝔟.
Normalization slice_normalize(const LieAlgebra& L, const KostantSlice& S, const Vec& xi,
                              BasisOrder order);
inline Normalization slice_normalize(const LieAlgebra& L, const KostantSlice& S, const Vec& xi) {
  return slice_normalize(L, S, xi, BasisOrder::Forward);
}

/// exp(ad u_1) ∘ … ∘ exp(ad u_m) as a matrix on algebra coordinates.
Mat witness_action(const LieAlgebra& L, const std::vector<Vec>& witness);

/// Group element exp(u_1)···exp(u_m) in the defining representation (type A).
GroupElement witness_group_element(const LieAlgebra& L, const std::vector<Vec>& witness);

}  // namespace ucz

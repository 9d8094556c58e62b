#pragma once

// The local coordinate model near a basepoint of the compactified cotangent
// bundle: the logarithmic symplectic form, its Poisson bivector, symplectic
// leaves on fiber algebras, and the level-set reduction to the universal
// centralizer.

#include <ucz/kostant.hpp>
#include <ucz/sampling.hpp>
#include <ucz/wonderful.hpp>

#include <string>
#include <vector>

namespace ucz {

/// Coordinates (x⁺_1..x⁺_m, x⁻_1..x⁻_m, z_1..z_l, α⁺_1..α⁺_m, α⁻_1..α⁻_m,
/// σ_1..σ_l) with m = (n - l)/2. The pairs (x^±_j, α^±_j) and (z_i, σ_i) are
/// conjugate; z_i = 0 cuts out the divisor for i ∈ I.
class Chart {
 public:
  Chart(const LieAlgebra& L, RootSubset I);

  RootSubset subset() const { return subset_; }
  int positive_count() const { return m_; }
  int rank() const { return l_; }
  Index size() const { return 4 * m_ + 2 * l_; }

  Index x_plus(int j) const { return j; }
  Index x_minus(int j) const { return m_ + j; }
  Index z(int i) const { return 2 * m_ + i; }
  Index alpha_plus(int j) const { return 2 * m_ + l_ + j; }
  Index alpha_minus(int j) const { return 3 * m_ + l_ + j; }
  Index sigma(int i) const { return 4 * m_ + l_ + i; }
  /// Conjugate momentum of a position coordinate (and vice versa).
  Index partner(Index k) const;
  bool is_position(Index k) const { return k < 2 * m_ + l_; }

  std::vector<std::string> labels() const;

 private:
  RootSubset subset_;
  int m_, l_;
};

class ChartPoint {
 public:
  /// Throws DimensionError unless values.size() == chart.size().
  ChartPoint(Chart chart, Vec values);
  /// z_i = 0 for i ∈ I, z_i = 1 otherwise, all other coordinates 0.
  static ChartPoint basepoint(const Chart& chart);

  const Chart& chart() const { return chart_; }
  const Vec& values() const { return values_; }

 private:
  Chart chart_;
  Vec values_;
};

/// Pairing coefficient of the block (z_i, σ_i): 1/z_i for i ∈ I, else 1.
/// Throws PoleError at z_i = 0 for i ∈ I.
Mat omega_matrix(const ChartPoint& p);
/// Inverse structure of omega_matrix, defined on the whole chart:
/// Π(momentum, position) = c⁻¹ and Π(position, momentum) = -c⁻¹.
Mat bivector_matrix(const ChartPoint& p);

/// Random point with z_i = 0 exactly for i ∈ S. Throws DomainError if S ⊄ I.
ChartPoint stratum_point(const Chart& chart, RootSubset S, Sampler& rng);
/// Rank of the bivector on the stratum {z_i = 0 : i ∈ S}, evaluated at the
/// point with z_i = 1 off S. Throws DomainError if S ⊄ I.
Index stratum_rank(const Chart& chart, RootSubset S);
/// {σ_i, ·} = 0 for every i ∈ S at `samples` seeded points of the stratum.
bool casimir_check(const Chart& chart, RootSubset S, Sampler& rng, int samples);

/// Coordinates in the basis of z(l_I) of the projection of ξ1 along [p_I, p_I].
/// Throws DomainError unless ξ1 ∈ p_I.
Vec leaf_label(const LieAlgebra& L, const ParabolicData& P, const Vec& xi1);
/// Leaf predicate on fiber-algebra pairs (stacked vectors of length 2n).
/// Throws DomainError if either pair is outside fiber_algebra(I).
bool same_leaf(const LieAlgebra& L, const ParabolicData& P, const Vec& a, const Vec& b);
/// The σ data of a fiber-algebra pair: the Levi component of the second
/// entry (along u_I⁻) projected onto z(l_I) along [l_I, l_I].
Vec fiber_sigma_coordinates(const LieAlgebra& L, const ParabolicData& P, const Vec& pair);

/// ξ1 - f ∈ 𝔟 and ξ2 - f ∈ 𝔟.
bool level_set_contains(const LieAlgebra& L, const KostantSlice& S, const Vec& xi1,
                        const Vec& xi2);
/// 𝔫 ∩ centralizer(ξ_k) = 0 for both entries.
bool nxn_freeness(const LieAlgebra& L, const Vec& xi1, const Vec& xi2);

struct ReducedPoint {
  GroupElement g;
  Vec xi;
};

/// (g, ξ) with ξ, Ad_g ξ ∈ f + 𝔟 goes to (n1 g n2⁻¹, Ad_{n2} ξ), where n2 and
/// n1 normalize ξ and Ad_g ξ into the slice. The result centralizes.
/// Throws DomainError on the level-set precondition (type A only).
ReducedPoint level_set_normalize(const LieAlgebra& L, const KostantSlice& S,
                                 const GroupElement& g, const Vec& xi);

}  // namespace ucz

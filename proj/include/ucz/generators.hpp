#pragma once

// Seeded generators for property sweeps: random rational points of
// subspaces and random determinant-one matrices.

#include <ucz/kostant.hpp>
#include <ucz/liealg.hpp>
#include <ucz/sampling.hpp>

#include <vector>

namespace ucz {

/// Random rational combination of the basis of `s`.
Vec random_in(Sampler& rng, const RatSubspace& s, int max_num = 3, int max_den = 2);

/// Random element of SL_size(ℚ): lower unipotent · torus · upper unipotent,
/// with small entries so conjugation keeps coefficients readable.
GroupElement random_group_element(Sampler& rng, Index size);

/// Random element of the upper unitriangular group N (type A realization).
GroupElement random_unipotent(Sampler& rng, Index size);

/// Slice point conjugate to diag(eigenvalues), with distinct rational
/// eigenvalues summing to zero (type A).
struct SplitSlicePoint {
  Vec xi;
  std::vector<Rat> eigenvalues;
};
SplitSlicePoint random_split_slice_point(Sampler& rng, const LieAlgebra& L, const KostantSlice& S);

/// Random element d·diag(t)·d⁻¹ of the centralizer of a split slice point.
GroupElement random_split_centralizer(Sampler& rng, const LieAlgebra& L, const SplitSlicePoint& p);

/// Random element of the centralizer of f: ±exp(Σ_k a_k F^k), the sign only
/// when it keeps the determinant 1.
GroupElement random_nilpotent_centralizer(Sampler& rng, const LieAlgebra& L, const Vec& f);

}  // namespace ucz

#include <ucz/generators.hpp>

#include <ucz/invariants.hpp>
#include <ucz/wonderful.hpp>

#include <algorithm>

namespace ucz {

Vec random_in(Sampler& rng, const RatSubspace& s, int max_num, int max_den) {
  Vec coords(s.dim());
  for (Index k = 0; k < s.dim(); ++k) coords(k) = rng.rational(max_num, max_den);
  return s.combine(coords);
}

GroupElement random_unipotent(Sampler& rng, Index size) {
  Mat u = Mat::Identity(size, size);
  for (Index i = 0; i < size; ++i)
    for (Index j = i + 1; j < size; ++j) u(i, j) = rng.rational(2, 2);
  return GroupElement(std::move(u));
}

GroupElement random_group_element(Sampler& rng, Index size) {
  Mat lower = Mat::Identity(size, size);
  for (Index i = 0; i < size; ++i)
    for (Index j = 0; j < i; ++j) lower(i, j) = rng.rational(2, 2);
  Mat torus = Mat::Identity(size, size);
  Rat product = 1;
  for (Index i = 0; i + 1 < size; ++i) {
    torus(i, i) = rng.nonzero_rational(3, 2);
    product *= torus(i, i);
  }
  torus(size - 1, size - 1) = Rat(1) / product;
  return GroupElement(lower * torus * random_unipotent(rng, size).matrix());
}

SplitSlicePoint random_split_slice_point(Sampler& rng, const LieAlgebra& L, const KostantSlice& S) {
  const Index m = L.realization_size();
  std::vector<Rat> lambda;
  for (;;) {
    lambda.clear();
    Rat total = 0;
    for (Index i = 0; i + 1 < m; ++i) {
      lambda.push_back(rng.rational(6, 2));
      total += lambda.back();
    }
    lambda.push_back(-total);
    std::vector<Rat> sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }
  Mat d = Mat::Zero(m, m);
  for (Index i = 0; i < m; ++i) d(i, i) = lambda[static_cast<std::size_t>(i)];
  const Vec xi = slice_from_invariants(L, S, invariants_eval(L, L.from_matrix(d)));
  return {xi, std::move(lambda)};
}

GroupElement random_split_centralizer(Sampler& rng, const LieAlgebra& L, const SplitSlicePoint& p) {
  const GroupElement d = diagonalizer(L, p.xi, p.eigenvalues);
  const Index m = L.realization_size();
  Mat t = Mat::Identity(m, m);
  Rat product = 1;
  for (Index i = 0; i + 1 < m; ++i) {
    t(i, i) = rng.nonzero_rational(3, 2);
    product *= t(i, i);
  }
  t(m - 1, m - 1) = 1 / product;
  return d * GroupElement(std::move(t)) * d.inverse();
}

GroupElement random_nilpotent_centralizer(Sampler& rng, const LieAlgebra& L, const Vec& f) {
  const Mat F = L.realize(f);
  const Index m = F.rows();
  Mat sum = Mat::Zero(m, m), power = F;
  for (Index k = 1; k < m; ++k, power = power * F) sum += rng.rational(3, 2) * power;
  Mat g = exp_nilpotent(sum).matrix();
  if (m % 2 == 0 && rng.coin()) g = -g;
  return GroupElement(std::move(g));
}

}  // namespace ucz

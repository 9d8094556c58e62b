#pragma once

#include <ucz/wonderful.hpp>

#include <cstddef>
#include <vector>

namespace ucz::oracle {

// Independent count of torus-fixed points: realized fibers computed as
// spans of conjugated matrix pairs in gl × gl, compared by rank.
inline std::size_t brute_force_fixed_points(const LieAlgebra& L, const Mat& xi, const Mat& d) {
  const Index m = L.realization_size();
  const auto weyl = weyl_representatives(m);
  auto flatten = [&](const Mat& a, const Mat& b) {
    Vec v(2 * m * m);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) v(i * m + j) = a(i, j), v(m * m + i * m + j) = b(i, j);
    return v;
  };
  std::vector<Mat> found;
  for (RootSubset I = 0; I < full_subset(L.rank()); ++I) {
    const ParabolicData P = build_parabolic(L, I);
    const RatSubspace fiber = fiber_algebra(L, P);
    for (const auto& w1 : weyl) {
      for (const auto& w2 : weyl) {
        const Mat g1 = d * w1.matrix(), g2 = d * w2.matrix();
        const Mat g1i = inverse<Rat>(g1), g2i = inverse<Rat>(g2);
        Mat rows(fiber.dim() + 1, 2 * m * m);
        for (Index k = 0; k < fiber.dim(); ++k) {
          const Vec b = fiber.vector(k);
          rows.row(k) = flatten(g1 * L.realize(first_component(L, b)) * g1i,
                                g2 * L.realize(second_component(L, b)) * g2i)
                            .transpose();
        }
        rows.row(fiber.dim()) = flatten(xi, xi).transpose();
        if (rank(rows) != fiber.dim()) continue;
        const Mat span = rows.topRows(fiber.dim());
        bool seen = false;
        for (const Mat& other : found) {
          Mat both(2 * fiber.dim(), 2 * m * m);
          both << span, other;
          if (other.rows() == span.rows() && rank(both) == fiber.dim()) seen = true;
        }
        if (!seen) found.push_back(span);
      }
    }
  }
  return found.size();
}

}  // namespace ucz::oracle

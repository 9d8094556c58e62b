#include <ucz/wonderful.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace ucz {

int subset_size(RootSubset I) { return std::popcount(I); }

std::string subset_label(RootSubset I) {
  std::string out = "{";
  for (int i = 0; (I >> i) != 0; ++i) {
    if (!(I & (1u << i))) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(i + 1);
  }
  return out + "}";
}

namespace {

RatSubspace span_of(const std::vector<Vec>& vs, Index n) { return RatSubspace::span(vs, n); }

// Stacks the products ad(b_j) · Bᵀ for every basis vector b_j of `s`.
Mat brackets_with(const LieAlgebra& L, const RatSubspace& s, const RatSubspace& t) {
  const Index n = L.dim();
  Mat out(n, s.dim() * t.dim());
  const Mat tt = t.basis().transpose();
  for (Index j = 0; j < s.dim(); ++j) out.middleCols(j * t.dim(), t.dim()) = L.ad(s.vector(j)) * tt;
  return out;
}

}  // namespace

ParabolicData build_parabolic(const LieAlgebra& L, RootSubset I) {
  const Index n = L.dim();
  const RootSystem& rs = L.roots();
  if (I > full_subset(L.rank())) throw DimensionError("build_parabolic: subset out of range");
  std::vector<Vec> cartan, e_in, e_out, f_in, f_out;
  for (int i = 0; i < L.rank(); ++i) cartan.push_back(L.h(i));
  for (int k = 0; k < L.num_positive(); ++k) {
    const bool inside = rs.supported_in(k, I);
    (inside ? e_in : e_out).push_back(L.e(k));
    (inside ? f_in : f_out).push_back(L.f(k));
  }
  auto join = [](std::vector<Vec> a, const std::vector<Vec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  ParabolicData P;
  P.subset = I;
  P.levi = span_of(join(join(cartan, e_in), f_in), n);
  P.u = span_of(e_out, n);
  P.u_minus = span_of(f_out, n);
  P.p = sum(P.levi, P.u);
  P.p_minus = sum(P.levi, P.u_minus);

  // z(l_I): coordinates c on l_I with Σ c_j [b_j, b_i] = 0 for all i.
  const Index k = P.levi.dim();
  Mat system(n * k, k);
  for (Index j = 0; j < k; ++j) {
    const Mat adj = L.ad(P.levi.vector(j));
    for (Index i = 0; i < k; ++i) system.block(i * n, j, n, 1) = adj * P.levi.vector(i);
  }
  const RatSubspace coords = kernel(system);
  std::vector<Vec> center;
  for (Index c = 0; c < coords.dim(); ++c) center.push_back(P.levi.combine(coords.vector(c)));
  P.center = span_of(center, n);

  P.derived = RatSubspace::span(Mat(brackets_with(L, P.p, P.p).transpose()));
  P.levi_derived = RatSubspace::span(Mat(brackets_with(L, P.levi, P.levi).transpose()));

  Mat adapted(n, n);
  Index col = 0;
  for (const RatSubspace* s : {&P.center, &P.levi_derived, &P.u, &P.u_minus})
    for (Index k = 0; k < s->dim(); ++k) adapted.col(col++) = s->vector(k);
  if (col != n) throw ConstructionError("build_parabolic: Levi decomposition has wrong dimension");
  P.adapted_coordinates = inverse<Rat>(adapted);
  return P;
}

Vec ParabolicData::center_part(const Vec& x) const {
  return adapted_coordinates.topRows(center.dim()) * x;
}

Vec ParabolicData::levi_part(const Vec& x) const {
  const Vec c = adapted_coordinates * x;
  Vec out = center.combine(c.head(center.dim()));
  out += levi_derived.combine(c.segment(center.dim(), levi_derived.dim()));
  return out;
}

bool ParabolicData::fiber_contains(const Vec& a, const Vec& b) const {
  return p.contains(a) && p_minus.contains(b) && levi_part(a) == levi_part(b);
}

Vec pair_vector(const Vec& x, const Vec& y) {
  Vec out(x.size() + y.size());
  out << x, y;
  return out;
}

Vec first_component(const LieAlgebra& L, const Vec& pair) { return pair.head(L.dim()); }
Vec second_component(const LieAlgebra& L, const Vec& pair) { return pair.tail(L.dim()); }

Vec pair_bracket(const LieAlgebra& L, const Vec& a, const Vec& b) {
  if (a.size() != 2 * L.dim() || b.size() != 2 * L.dim())
    throw DimensionError("pair_bracket: wrong vector length");
  return pair_vector(L.bracket(first_component(L, a), first_component(L, b)),
                     L.bracket(second_component(L, a), second_component(L, b)));
}

bool is_pair_subalgebra(const LieAlgebra& L, const RatSubspace& s) {
  for (Index i = 0; i < s.dim(); ++i)
    for (Index j = i + 1; j < s.dim(); ++j)
      if (!s.contains(pair_bracket(L, s.vector(i), s.vector(j)))) return false;
  return true;
}

RatSubspace fiber_algebra(const LieAlgebra& L, const ParabolicData& P) {
  const Vec zero = L.zero();
  std::vector<Vec> gens;
  for (Index k = 0; k < P.u.dim(); ++k) gens.push_back(pair_vector(P.u.vector(k), zero));
  for (Index k = 0; k < P.u_minus.dim(); ++k) gens.push_back(pair_vector(zero, P.u_minus.vector(k)));
  for (Index k = 0; k < P.levi.dim(); ++k)
    gens.push_back(pair_vector(P.levi.vector(k), P.levi.vector(k)));
  return RatSubspace::span(gens, 2 * L.dim());
}

RatSubspace stabilizer_algebra(const LieAlgebra& L, const ParabolicData& P) {
  std::vector<Vec> gens;
  const RatSubspace fiber = fiber_algebra(L, P);
  for (Index k = 0; k < fiber.dim(); ++k) gens.push_back(fiber.vector(k));
  for (Index k = 0; k < P.center.dim(); ++k) gens.push_back(pair_vector(P.center.vector(k), L.zero()));
  return RatSubspace::span(gens, 2 * L.dim());
}

Index orbit_dim(const LieAlgebra& L, const ParabolicData& P) {
  return 2 * (L.dim() - P.p.dim()) + P.levi.dim() - P.center.dim();
}

int OrbitPoset::num_divisors(const LieAlgebra& L) const {
  return static_cast<int>(std::count_if(orbits.begin(), orbits.end(), [&](const OrbitInfo& o) {
    return o.dim == L.dim() - 1;
  }));
}

OrbitPoset build_orbit_poset(const LieAlgebra& L) {
  OrbitPoset poset;
  for (RootSubset I = 0; I <= full_subset(L.rank()); ++I) {
    OrbitInfo info{I, orbit_dim(L, build_parabolic(L, I)), {}};
    for (int i = 0; i < L.rank(); ++i)
      if (!(I & (1u << i))) info.divisors.push_back(i + 1);
    poset.orbits.push_back(std::move(info));
  }
  return poset;
}

Mat adjoint_matrix(const LieAlgebra& L, const GroupElement& g) {
  if (!L.has_matrix_realization()) throw UnsupportedError("adjoint_matrix requires type A");
  if (g.size() != L.realization_size()) throw DimensionError("adjoint_matrix: group element size");
  const Mat gm = g.matrix(), gi = inverse<Rat>(g.matrix());
  Mat out(L.dim(), L.dim());
  for (Index j = 0; j < L.dim(); ++j)
    out.col(j) = L.from_matrix(gm * L.realize(L.basis_vector(j)) * gi);
  return out;
}

namespace {

RatSubspace translate(const LieAlgebra& L, const RatSubspace& fiber, const GroupElement& g1,
                      const GroupElement& g2) {
  const Index n = L.dim();
  Mat act = Mat::Zero(2 * n, 2 * n);
  act.topLeftCorner(n, n) = adjoint_matrix(L, g1);
  act.bottomRightCorner(n, n) = adjoint_matrix(L, g2);
  return RatSubspace::span(Mat(fiber.basis() * act.transpose()));
}

}  // namespace

BoundaryPoint make_boundary_point(const LieAlgebra& L, RootSubset I, const GroupElement& g1,
                                  const GroupElement& g2) {
  const RatSubspace fiber = fiber_algebra(L, build_parabolic(L, I));
  return BoundaryPoint(I, g1, g2, translate(L, fiber, g1, g2));
}

bool translate_contains(const BoundaryPoint& p, const Vec& xi1, const Vec& xi2) {
  return p.realized_fiber().contains(pair_vector(xi1, xi2));
}

std::vector<GroupElement> weyl_representatives(Index size) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GroupElement> out;
  do {
    Mat m = Mat::Zero(size, size);
    for (Index c = 0; c < size; ++c) m(perm[static_cast<std::size_t>(c)], c) = 1;
    if (determinant<Rat>(m) == -1) m.col(0) = -m.col(0);
    out.emplace_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GroupElement diagonalizer(const LieAlgebra& L, const Vec& x, const std::vector<Rat>& eigenvalues) {
  const Mat a = L.realize(x);
  const Index m = a.rows();
  if (static_cast<Index>(eigenvalues.size()) != m)
    throw DimensionError("diagonalizer: wrong number of eigenvalues");
  Mat p(m, m);
  for (Index i = 0; i < m; ++i) {
    const RatSubspace line =
        kernel(Mat(a - eigenvalues[static_cast<std::size_t>(i)] * Mat::Identity(m, m)));
    if (line.dim() != 1) throw DomainError("diagonalizer: eigenspace is not a line");
    p.col(i) = line.vector(0);
  }
  p.col(0) /= determinant<Rat>(p);
  return GroupElement(std::move(p));
}

std::vector<BoundaryPoint> torus_fixed_fiber_points(const LieAlgebra& L, const Vec& xi,
                                                    const GroupElement& diagonalizer) {
  if (!L.has_matrix_realization())
    throw UnsupportedError("torus_fixed_fiber_points requires type A");
  const Vec base = conjugate(L, diagonalizer.inverse(), xi);
  if (!L.cartan().contains(base) || !is_regular(L, base))
    throw DomainError("torus_fixed_fiber_points: ξ is not regular semisimple for this diagonalizer");

  const auto weyl = weyl_representatives(L.realization_size());
  std::vector<BoundaryPoint> out;
  std::vector<Vec> pulled;  // Ad_{(d w)⁻¹} ξ for each representative
  for (const auto& w : weyl) pulled.push_back(conjugate(L, (diagonalizer * w).inverse(), xi));
  for (RootSubset I = 0; I < full_subset(L.rank()); ++I) {
    const RatSubspace fiber = fiber_algebra(L, build_parabolic(L, I));
    for (std::size_t a = 0; a < weyl.size(); ++a) {
      for (std::size_t b = 0; b < weyl.size(); ++b) {
        if (!fiber.contains(pair_vector(pulled[a], pulled[b]))) continue;
        const GroupElement g1 = diagonalizer * weyl[a], g2 = diagonalizer * weyl[b];
        BoundaryPoint p(I, g1, g2, translate(L, fiber, g1, g2));
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace ucz

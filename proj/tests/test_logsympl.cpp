#include <catch_amalgamated.hpp>

#include <ucz/generators.hpp>
#include <ucz/invariants.hpp>
#include <ucz/logsympl.hpp>

using namespace ucz;

namespace {

RootSubset subset(std::initializer_list<int> roots) {
  RootSubset I = 0;
  for (int r : roots) I |= 1u << (r - 1);
  return I;
}

ChartPoint with_z(const Chart& chart, std::initializer_list<Rat> z) {
  ChartPoint base = ChartPoint::basepoint(chart);
  Vec v = base.values();
  int i = 0;
  for (const Rat& value : z) v(chart.z(i++)) = value;
  return ChartPoint(chart, v);
}

// Random point off the divisor.
ChartPoint generic_point(const Chart& chart, Sampler& rng) { return stratum_point(chart, 0, rng); }

}  // namespace

TEST_CASE("chart layout", "[logsympl]") {
  const LieAlgebra L = LieAlgebra::build("A2");
  const Chart c(L, subset({1}));
  CHECK(c.size() == 2 * L.dim());
  CHECK(2 * c.positive_count() + c.rank() == L.dim());
  const auto labels = c.labels();
  REQUIRE(labels.size() == 16);
  CHECK(labels[0] == "x+1");
  CHECK(labels[6] == "z1");
  CHECK(labels[15] == "s2");
  CHECK(c.partner(c.z(1)) == c.sigma(1));
  CHECK(c.partner(c.alpha_minus(2)) == c.x_minus(2));
  CHECK_THROWS_AS(ChartPoint(c, Vec::Zero(3)), DimensionError);
  CHECK_THROWS_AS(Chart(L, 4), DimensionError);
}

TEST_CASE("omega examples", "[logsympl]") {
  const LieAlgebra L = LieAlgebra::build("A1");
  const Chart c(L, subset({1}));
  const Mat w1 = omega_matrix(with_z(c, {1}));
  CHECK(rank(w1) == 6);
  CHECK(w1 == Mat(-w1.transpose()));
  Mat standard = Mat::Zero(6, 6);
  standard.topRightCorner(3, 3) = Mat::Identity(3, 3);
  standard.bottomLeftCorner(3, 3) = -Mat::Identity(3, 3);
  CHECK(w1 == standard);
  CHECK(omega_matrix(with_z(c, {Rat(1, 2)}))(c.z(0), c.sigma(0)) == 2);
  CHECK_THROWS_AS(omega_matrix(with_z(c, {0})), PoleError);
  // Off I the z block is regular at z = 0.
  const Chart open(L, 0);
  CHECK(omega_matrix(with_z(open, {0}))(open.z(0), open.sigma(0)) == 1);
}

TEST_CASE("bivector inverts omega off the divisor", "[logsympl]") {
  Sampler rng(1);
  for (const char* d : {"A1", "A2"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    for (RootSubset I = 0; I <= full_subset(L.rank()); ++I) {
      const Chart c(L, I);
      for (int trial = 0; trial < 50; ++trial) {
        const ChartPoint p = generic_point(c, rng);
        const Mat pi = bivector_matrix(p);
        CHECK(pi == Mat(-pi.transpose()));
        CHECK(pi * omega_matrix(p) == Mat::Identity(c.size(), c.size()));
      }
    }
  }
}

TEST_CASE("bivector entries on the divisor", "[logsympl]") {
  const LieAlgebra A1 = LieAlgebra::build("A1");
  const Chart c1(A1, subset({1}));
  const ChartPoint half = with_z(c1, {Rat(1, 3)});
  CHECK(bivector_matrix(half)(c1.sigma(0), c1.z(0)) == Rat(1, 3));
  CHECK(bivector_matrix(half)(c1.alpha_plus(0), c1.x_plus(0)) == 1);
  CHECK(rank(bivector_matrix(with_z(c1, {0}))) == 4);
  const LieAlgebra A2 = LieAlgebra::build("A2");
  const Chart c2(A2, subset({1, 2}));
  CHECK(rank(bivector_matrix(with_z(c2, {0, 0}))) == 12);
}

TEST_CASE("stratum ranks", "[logsympl]") {
  Sampler rng(2);
  for (const char* d : {"A1", "A2", "A3", "B2", "G2"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    const Index n = L.dim();
    for (RootSubset I = 0; I <= full_subset(L.rank()); ++I) {
      const Chart c(L, I);
      for (RootSubset S = 0; S <= I; ++S) {
        if (S & ~I) {
          CHECK_THROWS_AS(stratum_rank(c, S), DomainError);
          continue;
        }
        INFO(d << " I=" << subset_label(I) << " S=" << subset_label(S));
        CHECK(stratum_rank(c, S) == 2 * n - 2 * subset_size(S));
        for (int trial = 0; trial < 5; ++trial)
          CHECK(rank(bivector_matrix(stratum_point(c, S, rng))) == 2 * n - 2 * subset_size(S));
        CHECK(casimir_check(c, S, rng, 5));
      }
    }
  }
  const LieAlgebra A1 = LieAlgebra::build("A1");
  CHECK(stratum_rank(Chart(A1, 1), 0) == 6);
  CHECK(stratum_rank(Chart(A1, 1), 1) == 4);
  const LieAlgebra A2 = LieAlgebra::build("A2");
  CHECK(stratum_rank(Chart(A2, 3), 1) == 14);
  // Off the stratum σ is no Casimir.
  Sampler fresh(3);
  const Mat pi = bivector_matrix(stratum_point(Chart(A2, 3), 0, fresh));
  CHECK_FALSE(is_zero(pi.row(Chart(A2, 3).sigma(0))));
}

TEST_CASE("leaf labels", "[logsympl]") {
  const LieAlgebra L = LieAlgebra::build("A1");
  const ParabolicData P = build_parabolic(L, 0);
  // Label coordinates are taken in the basis of z(l_I) = span{h}.
  const Rat h_coord = P.center.coordinates(L.h(0))(0);
  CHECK(leaf_label(L, P, Vec(L.h(0) + 3 * L.e(0))) == Vec::Constant(1, h_coord));
  CHECK(is_zero(leaf_label(L, P, L.e(0))));
  CHECK_THROWS_AS(leaf_label(L, P, L.f(0)), DomainError);
  const ParabolicData full = build_parabolic(L, 1);
  CHECK(leaf_label(L, full, L.f(0)).size() == 0);

  const Vec h = L.h(0), e = L.e(0), f = L.f(0);
  CHECK(same_leaf(L, P, pair_vector(Vec(h + e), h), pair_vector(Vec(h + 3 * e), Vec(h - f))));
  CHECK_FALSE(same_leaf(L, P, pair_vector(h, h), pair_vector(Vec(2 * h), Vec(2 * h))));
  CHECK(same_leaf(L, P, pair_vector(h, h), pair_vector(h, h)));
  CHECK_THROWS_AS(same_leaf(L, P, pair_vector(h, Vec(-h)), pair_vector(h, h)), DomainError);
}

TEST_CASE("leaf labels vanish on the derived algebra", "[logsympl]") {
  Sampler rng(4);
  for (const char* d : {"A2", "B2", "G2"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    for (RootSubset I = 0; I <= full_subset(L.rank()); ++I) {
      const ParabolicData P = build_parabolic(L, I);
      CHECK(leaf_label(L, P, random_in(rng, P.derived)).size() == L.rank() - subset_size(I));
      CHECK(is_zero(leaf_label(L, P, random_in(rng, P.derived))));
      const Vec z = random_in(rng, P.center);
      CHECK(P.center.combine(leaf_label(L, P, z)) == z);
    }
  }
}

TEST_CASE("leaf predicate and chart data agree", "[logsympl]") {
  Sampler rng(5);
  for (const char* d : {"A1", "A2", "A3", "B2", "G2"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    for (RootSubset I = 0; I <= full_subset(L.rank()); ++I) {
      const ParabolicData P = build_parabolic(L, I);
      const RatSubspace fiber = fiber_algebra(L, P);
      for (int trial = 0; trial < 10; ++trial) {
        const Vec a = random_in(rng, fiber);
        // Half the time b shares a's center component.
        Vec b = random_in(rng, fiber);
        if (rng.coin()) {
          const Vec shift = P.center.combine(fiber_sigma_coordinates(L, P, a) -
                                             fiber_sigma_coordinates(L, P, b));
          b += pair_vector(shift, shift);
        }
        CHECK(same_leaf(L, P, a, b) ==
              (fiber_sigma_coordinates(L, P, a) == fiber_sigma_coordinates(L, P, b)));
        CHECK(fiber_sigma_coordinates(L, P, a) == leaf_label(L, P, first_component(L, a)));
      }
    }
  }
}

TEST_CASE("level set and freeness", "[logsympl]") {
  const LieAlgebra A1 = LieAlgebra::build("A1");
  const KostantSlice S1 = build_slice(A1, build_principal_triple(A1));
  const Vec& f = S1.triple().f;
  CHECK(level_set_contains(A1, S1, f, f));
  CHECK(nxn_freeness(A1, f, f));
  CHECK_FALSE(level_set_contains(A1, S1, S1.triple().h, f));
  CHECK_FALSE(nxn_freeness(A1, S1.triple().e, f));

  Sampler rng(6);
  for (const char* d : {"A1", "A2", "A3", "B2", "G2"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    const KostantSlice S = build_slice(L, build_principal_triple(L));
    for (int trial = 0; trial < 20; ++trial) {
      const Vec x = S.triple().f + random_in(rng, L.borel());
      const Vec y = S.triple().f + random_in(rng, L.borel());
      CHECK(level_set_contains(L, S, x, y));
      CHECK(nxn_freeness(L, x, y));
    }
  }
}

TEST_CASE("level set normalization examples", "[logsympl]") {
  const LieAlgebra L = LieAlgebra::build("A1");
  const KostantSlice S = build_slice(L, build_principal_triple(L));
  const Vec xi = S.point(Vec::Constant(1, Rat(4)));
  const ReducedPoint same = level_set_normalize(L, S, GroupElement::identity(2), xi);
  CHECK(same.g == GroupElement::identity(2));
  CHECK(same.xi == xi);

  const GroupElement minus(Mat(-Mat::Identity(2, 2)));
  const ReducedPoint r = level_set_normalize(L, S, minus, xi);
  CHECK(r.g == minus);
  CHECK(conjugate(L, r.g, r.xi) == r.xi);

  Mat t = Mat::Identity(2, 2);
  t(0, 0) = 2, t(1, 1) = Rat(1, 2);
  CHECK_THROWS_AS(level_set_normalize(L, S, GroupElement(t), xi), DomainError);
  CHECK_THROWS_AS(level_set_normalize(L, S, minus, S.triple().h), DomainError);
}

TEST_CASE("level set normalization roundtrip", "[logsympl]") {
  Sampler rng(7);
  for (const char* d : {"A1", "A2", "A3"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    const KostantSlice S = build_slice(L, build_principal_triple(L));
    const Index m = L.realization_size();
    for (int trial = 0; trial < 20; ++trial) {
      Vec xi_s;
      GroupElement gamma = GroupElement::identity(m);
      if (trial % 4 == 0) {
        xi_s = S.triple().f;
        gamma = random_nilpotent_centralizer(rng, L, xi_s);
      } else {
        const SplitSlicePoint p = random_split_slice_point(rng, L, S);
        xi_s = p.xi;
        gamma = random_split_centralizer(rng, L, p);
      }
      REQUIRE(conjugate(L, gamma, xi_s) == xi_s);
      const GroupElement n1 = random_unipotent(rng, m), n2 = random_unipotent(rng, m);
      const Vec xi = conjugate(L, n2, xi_s);
      const GroupElement g = n1 * gamma * n2.inverse();
      const ReducedPoint r = level_set_normalize(L, S, g, xi);
      CHECK(r.g == gamma);
      CHECK(r.xi == xi_s);
      CHECK(invariants_eval(L, xi) == invariants_eval(L, r.xi));
      // Invariant under a further N × N action.
      const GroupElement a = random_unipotent(rng, m), b = random_unipotent(rng, m);
      const ReducedPoint again = level_set_normalize(L, S, a * g * b.inverse(), conjugate(L, b, xi));
      CHECK(again.g == r.g);
      CHECK(again.xi == r.xi);
    }
  }
}

TEST_CASE("boundary of the centralizer closure lies in the fiber", "[logsympl]") {
  Sampler rng(8);
  for (const char* d : {"A1", "A2"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    const KostantSlice S = build_slice(L, build_principal_triple(L));
    for (int trial = 0; trial < 3; ++trial) {
      const SplitSlicePoint p = random_split_slice_point(rng, L, S);
      const GroupElement dz = diagonalizer(L, p.xi, p.eigenvalues);
      const auto points = torus_fixed_fiber_points(L, p.xi, dz);
      CHECK(points.size() == (L.rank() == 1 ? 2u : 12u));
      for (const auto& b : points) CHECK(translate_contains(b, p.xi, p.xi));
    }
  }
}

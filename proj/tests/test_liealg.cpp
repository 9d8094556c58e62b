#include <catch_amalgamated.hpp>

#include <ucz/generators.hpp>
#include <ucz/liealg.hpp>

using namespace ucz;

namespace {

const char* const kAlgebras[] = {"A1", "A2", "A3", "B2", "G2"};

// diag(d) in the type-A realization, as an algebra element.
Vec diagonal(const LieAlgebra& L, std::initializer_list<int> d) {
  Mat m = Mat::Zero(L.realization_size(), L.realization_size());
  Index i = 0;
  for (int v : d) m(i, i) = v, ++i;
  return L.from_matrix(m);
}

}  // namespace

TEST_CASE("root systems", "[liealg]") {
  CHECK(make_root_system(Family::A, 1).num_positive() == 1);
  CHECK(make_root_system(Family::A, 2).num_positive() == 3);
  CHECK(make_root_system(Family::A, 3).num_positive() == 6);
  CHECK(make_root_system(Family::B, 2).num_positive() == 4);
  CHECK(make_root_system(Family::G, 2).num_positive() == 6);
  CHECK(make_root_system(Family::D, 4).num_positive() == 12);

  for (const char* d : kAlgebras) {
    const LieAlgebra L = LieAlgebra::build(d);
    const RootSystem& rs = L.roots();
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 0; j < rs.rank; ++j)
        if (i != j) CHECK(rs.cartan(i, j) <= 0);
    }
  }
  const RootSystem g2 = make_root_system(Family::G, 2);
  CHECK(g2.positive_roots.back() == Eigen::Vector2i(3, 2));
  CHECK_THROWS_AS(make_root_system(Family::G, 3), UnsupportedError);
  CHECK_THROWS_AS(LieAlgebra::build("E8"), UnsupportedError);
  CHECK_THROWS_AS(LieAlgebra::build("A"), UnsupportedError);
}

TEST_CASE("sl2 relations in A1", "[liealg]") {
  const LieAlgebra L = LieAlgebra::build("A1");
  REQUIRE(L.dim() == 3);
  const Vec e = L.e(0), h = L.h(0), f = L.f(0);
  CHECK(L.bracket(e, f) == h);
  CHECK(L.bracket(h, e) == 2 * e);
  CHECK(L.bracket(h, f) == -2 * f);
  CHECK(is_zero(L.bracket(e, e)));
  CHECK(L.realize(e) == (Mat(2, 2) << 0, 1, 0, 0).finished());
}

TEST_CASE("dimensions", "[liealg]") {
  CHECK(LieAlgebra::build("A2").dim() == 8);
  CHECK(LieAlgebra::build("A3").dim() == 15);
  CHECK(LieAlgebra::build("B2").dim() == 10);
  CHECK(LieAlgebra::build("G2").dim() == 14);
  for (const char* d : kAlgebras) {
    const LieAlgebra L = LieAlgebra::build(d);
    CHECK(L.dim() == L.rank() + 2 * L.num_positive());
  }
}

// Jacobi, antisymmetry and integrality checked on every basis pair and triple.
TEST_CASE("structure constants form a Chevalley basis", "[liealg]") {
  for (const char* d : {"A1", "A2", "A3", "B2", "G2", "C3"}) {
    INFO(d);
    const LieAlgebra L = LieAlgebra::build(d);
    const Index n = L.dim();
    std::vector<Mat> ads;
    for (Index k = 0; k < n; ++k) ads.push_back(L.ad(L.basis_vector(k)));
    bool antisymmetric = true, integral = true, jacobi = true, magnitudes = true;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const Vec xy = L.bracket(L.basis_vector(i), L.basis_vector(j));
        antisymmetric &= xy == -L.bracket(L.basis_vector(j), L.basis_vector(i));
        for (Index k = 0; k < n; ++k) integral &= is_integer(xy(k));
        // ad([x, y]) = [ad x, ad y] is Jacobi on all triples at once.
        jacobi &= L.ad(xy) == ads[i] * ads[j] - ads[j] * ads[i];
      }
    }
    const RootSystem& rs = L.roots();
    for (const auto& a : rs.positive_roots)
      for (const auto& b : rs.positive_roots) {
        if (!rs.is_root(a + b)) continue;
        int p = 0;
        while (rs.is_root(b - (p + 1) * a)) ++p;
        magnitudes &= abs(L.structure_constant(a, b)) == p + 1;
        magnitudes &= L.structure_constant(-a, -b) == -L.structure_constant(a, b);
      }
    CHECK(jacobi_holds(L));
    CHECK(antisymmetric);
    CHECK(integral);
    CHECK(jacobi);
    CHECK(magnitudes);
  }
}

TEST_CASE("Killing form is symmetric, invariant and nondegenerate", "[liealg]") {
  for (const char* d : kAlgebras) {
    INFO(d);
    const LieAlgebra L = LieAlgebra::build(d);
    const Mat& K = L.killing_form();
    CHECK(K == K.transpose());
    CHECK(rank(K) == L.dim());
    bool invariant = true;
    for (Index i = 0; i < L.dim(); ++i)
      for (Index j = 0; j < L.dim(); ++j) {
        const Vec xy = L.bracket(L.basis_vector(i), L.basis_vector(j));
        for (Index k = 0; k < L.dim(); ++k)
          invariant &= L.killing(xy, L.basis_vector(k)) ==
                       L.killing(L.basis_vector(i), L.bracket(L.basis_vector(j), L.basis_vector(k)));
      }
    CHECK(invariant);
  }
  // κ(h, h) = 8 for sl2.
  const LieAlgebra A1 = LieAlgebra::build("A1");
  CHECK(A1.killing(A1.h(0), A1.h(0)) == 8);
}

TEST_CASE("matrix realization is a homomorphism", "[liealg]") {
  for (const char* d : {"A1", "A2", "A3"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    REQUIRE(L.has_matrix_realization());
    for (Index i = 0; i < L.dim(); ++i)
      for (Index j = 0; j < L.dim(); ++j) {
        const Mat x = L.realize(L.basis_vector(i)), y = L.realize(L.basis_vector(j));
        REQUIRE(L.realize(L.bracket(L.basis_vector(i), L.basis_vector(j))) == x * y - y * x);
        REQUIRE(x.trace() == 0);
      }
  }
  const LieAlgebra B2 = LieAlgebra::build("B2");
  CHECK_FALSE(B2.has_matrix_realization());
  CHECK_THROWS_AS(B2.realize(B2.e(0)), UnsupportedError);
}

TEST_CASE("A2 bracket of simple root vectors matches the commutator", "[liealg]") {
  const LieAlgebra L = LieAlgebra::build("A2");
  const Vec e1 = L.e(0), e2 = L.e(1);
  const Vec e12 = L.bracket(e1, e2);
  const Mat commutator =
      L.realize(e1) * L.realize(e2) - L.realize(e2) * L.realize(e1);
  CHECK(commutator == (Mat(3, 3) << 0, 0, 1, 0, 0, 0, 0, 0, 0).finished());
  CHECK(L.realize(e12) == commutator);
  CHECK(e12 == L.e(2));  // extraspecial sign +1
}

TEST_CASE("from_matrix rejects non-traceless input", "[liealg]") {
  const LieAlgebra L = LieAlgebra::build("A2");
  CHECK_THROWS_AS(L.from_matrix(Mat::Identity(3, 3)), DomainError);
  CHECK_THROWS_AS(L.from_matrix(Mat::Zero(2, 2)), DimensionError);
}

TEST_CASE("centralizer and regularity", "[liealg]") {
  const LieAlgebra A1 = LieAlgebra::build("A1");
  CHECK(centralizer(A1, A1.zero()) == RatSubspace::full(3));
  CHECK(centralizer(A1, A1.e(0)) == RatSubspace::span(Mat(A1.e(0).transpose())));
  CHECK(is_regular(A1, A1.e(0)));

  const LieAlgebra A2 = LieAlgebra::build("A2");
  const Vec x = diagonal(A2, {1, 2, -3});
  CHECK(centralizer(A2, x) == A2.cartan());
  CHECK(centralizer(A2, x).contains(x));
  CHECK(is_regular(A2, x));
  CHECK_FALSE(is_regular(A2, A2.zero()));
  CHECK(centralizer(A2, diagonal(A2, {1, 1, -2})).dim() == 4);
  CHECK_FALSE(is_regular(A2, diagonal(A2, {1, 1, -2})));
}

TEST_CASE("regularity is Ad-invariant", "[liealg][property]") {
  for (const char* d : {"A2", "A3"}) {
    const LieAlgebra L = LieAlgebra::build(d);
    Sampler rng(99);
    for (int t = 0; t < 100; ++t) {
      const GroupElement g = random_group_element(rng, L.realization_size());
      // Mix sparse and dense samples so both outcomes occur.
      Vec x = L.zero();
      const int terms = static_cast<int>(rng.uniform_int(1, 3));
      for (int k = 0; k < terms; ++k)
        x(rng.uniform_int(0, L.dim() - 1)) = rng.nonzero_rational(3, 1);
      REQUIRE(is_regular(L, x) == is_regular(L, conjugate(L, g, x)));
    }
  }
}

TEST_CASE("exp_ad and conjugation", "[liealg]") {
  const LieAlgebra L = LieAlgebra::build("A1");
  CHECK(exp_ad(L, L.zero()) == Mat::Identity(3, 3));
  CHECK_THROWS_AS(exp_ad(L, L.h(0)), DomainError);

  // exp(ad t·e) f = f + t h - t² e
  const Rat t = Rat(3) / 2;
  const Vec image = exp_ad(L, Vec(t * L.e(0))) * L.f(0);
  CHECK(image == L.f(0) + t * L.h(0) - t * t * L.e(0));

  const GroupElement u((Mat(2, 2) << 1, t, 0, 1).finished());
  CHECK(conjugate(L, u, L.f(0)) == image);
  CHECK_THROWS_AS(GroupElement((Mat(2, 2) << 2, 0, 0, 1).finished()), DomainError);

  // exp_ad(x) agrees with conjugation by exp of the realized matrix.
  const LieAlgebra A3 = LieAlgebra::build("A3");
  Sampler rng(7);
  for (int k = 0; k < 20; ++k) {
    const Vec n = random_in(rng, A3.nilradical());
    const Vec y = rng.vector(A3.dim(), 3, 2);
    REQUIRE(exp_ad(A3, n) * y == conjugate(A3, exp_nilpotent(A3.realize(n)), y));
  }
}

#include <ucz/logsympl.hpp>

namespace ucz {

Chart::Chart(const LieAlgebra& L, RootSubset I)
    : subset_(I), m_(L.num_positive()), l_(L.rank()) {
  if (I > full_subset(L.rank())) throw DimensionError("Chart: subset out of range");
}

Index Chart::partner(Index k) const {
  const Index half = 2 * m_ + l_;
  return k < half ? k + half : k - half;
}

std::vector<std::string> Chart::labels() const {
  std::vector<std::string> out;
  auto add = [&](const char* name, int count) {
    for (int j = 1; j <= count; ++j) out.push_back(name + std::to_string(j));
  };
  add("x+", m_);
  add("x-", m_);
  add("z", l_);
  add("a+", m_);
  add("a-", m_);
  add("s", l_);
  return out;
}

ChartPoint::ChartPoint(Chart chart, Vec values) : chart_(std::move(chart)), values_(std::move(values)) {
  if (values_.size() != chart_.size()) throw DimensionError("ChartPoint: wrong coordinate count");
}

ChartPoint ChartPoint::basepoint(const Chart& chart) {
  Vec v = Vec::Zero(chart.size());
  for (int i = 0; i < chart.rank(); ++i) v(chart.z(i)) = (chart.subset() & (1u << i)) ? 0 : 1;
  return ChartPoint(chart, std::move(v));
}

namespace {

// Pairing coefficient c_k of the position coordinate k, as c_k⁻¹ (never a pole).
Rat inverse_coefficient(const ChartPoint& p, Index k) {
  const Chart& c = p.chart();
  for (int i = 0; i < c.rank(); ++i)
    if (k == c.z(i) && (c.subset() & (1u << i))) return p.values()(k);
  return 1;
}

void check_stratum(const Chart& chart, RootSubset S) {
  if (S & ~chart.subset()) throw DomainError("stratum: S is not contained in I");
}

}  // namespace

Mat omega_matrix(const ChartPoint& p) {
  const Chart& c = p.chart();
  const Index half = c.size() / 2;
  Mat w = Mat::Zero(c.size(), c.size());
  for (Index k = 0; k < half; ++k) {
    const Rat inv = inverse_coefficient(p, k);
    if (inv == 0) throw PoleError("omega_matrix: z_i = 0 on the divisor");
    w(k, c.partner(k)) = 1 / inv;
    w(c.partner(k), k) = -1 / inv;
  }
  return w;
}

Mat bivector_matrix(const ChartPoint& p) {
  const Chart& c = p.chart();
  const Index half = c.size() / 2;
  Mat pi = Mat::Zero(c.size(), c.size());
  for (Index k = 0; k < half; ++k) {
    const Rat inv = inverse_coefficient(p, k);
    pi(k, c.partner(k)) = -inv;
    pi(c.partner(k), k) = inv;
  }
  return pi;
}

ChartPoint stratum_point(const Chart& chart, RootSubset S, Sampler& rng) {
  check_stratum(chart, S);
  Vec v = rng.vector(chart.size());
  for (int i = 0; i < chart.rank(); ++i)
    v(chart.z(i)) = (S & (1u << i)) ? Rat(0) : rng.nonzero_rational();
  return ChartPoint(chart, std::move(v));
}

Index stratum_rank(const Chart& chart, RootSubset S) {
  check_stratum(chart, S);
  Vec v = Vec::Zero(chart.size());
  for (int i = 0; i < chart.rank(); ++i) v(chart.z(i)) = (S & (1u << i)) ? 0 : 1;
  return rank(bivector_matrix(ChartPoint(chart, std::move(v))));
}

bool casimir_check(const Chart& chart, RootSubset S, Sampler& rng, int samples) {
  check_stratum(chart, S);
  for (int s = 0; s < samples; ++s) {
    const Mat pi = bivector_matrix(stratum_point(chart, S, rng));
    for (int i = 0; i < chart.rank(); ++i) {
      if (!(S & (1u << i))) continue;
      // {σ_i, x_k} = Π(σ_i, k) for every coordinate function x_k.
      if (!is_zero(pi.row(chart.sigma(i)))) return false;
    }
  }
  return true;
}

namespace {

Vec center_coordinates(const ParabolicData& P, const Vec& v, const RatSubspace& along) {
  return P.center.coordinates(project_along<Rat>(v, P.center, along));
}

}  // namespace

Vec leaf_label(const LieAlgebra& L, const ParabolicData& P, const Vec& xi1) {
  if (xi1.size() != L.dim()) throw DimensionError("leaf_label: wrong vector length");
  if (!P.p.contains(xi1)) throw DomainError("leaf_label: ξ1 is not in the parabolic");
  return center_coordinates(P, xi1, sum(P.derived, P.u_minus));
}

bool same_leaf(const LieAlgebra& L, const ParabolicData& P, const Vec& a, const Vec& b) {
  if (a.size() != 2 * L.dim() || b.size() != 2 * L.dim())
    throw DimensionError("same_leaf: wrong vector length");
  if (!P.fiber_contains(first_component(L, a), second_component(L, a)) ||
      !P.fiber_contains(first_component(L, b), second_component(L, b)))
    throw DomainError("same_leaf: pair is not in the fiber algebra");
  return leaf_label(L, P, first_component(L, a)) == leaf_label(L, P, first_component(L, b));
}

Vec fiber_sigma_coordinates(const LieAlgebra& L, const ParabolicData& P, const Vec& pair) {
  if (pair.size() != 2 * L.dim()) throw DimensionError("fiber_sigma_coordinates: wrong vector length");
  const Vec second = second_component(L, pair);
  if (!P.fiber_contains(first_component(L, pair), second))
    throw DomainError("fiber_sigma_coordinates: pair is not in the fiber algebra");
  return P.center_part(P.levi_part(second));
}

bool level_set_contains(const LieAlgebra& L, const KostantSlice& S, const Vec& xi1,
                        const Vec& xi2) {
  const Vec& f = S.triple().f;
  return L.borel().contains(Vec(xi1 - f)) && L.borel().contains(Vec(xi2 - f));
}

bool nxn_freeness(const LieAlgebra& L, const Vec& xi1, const Vec& xi2) {
  return intersect(L.nilradical(), centralizer(L, xi1)).dim() == 0 &&
         intersect(L.nilradical(), centralizer(L, xi2)).dim() == 0;
}

ReducedPoint level_set_normalize(const LieAlgebra& L, const KostantSlice& S,
                                 const GroupElement& g, const Vec& xi) {
  if (!L.has_matrix_realization())
    throw UnsupportedError("level_set_normalize requires a matrix realization");
  const Vec moved = conjugate(L, g, xi);
  if (!level_set_contains(L, S, xi, moved))
    throw DomainError("level_set_normalize: (Ad_g ξ, ξ) is not in the level set");
  const Normalization second = slice_normalize(L, S, xi);
  const Normalization first = slice_normalize(L, S, moved);
  if (first.normal_form != second.normal_form)
    throw ConstructionError("level_set_normalize: normal forms differ");
  const GroupElement n1 = witness_group_element(L, first.witness);
  const GroupElement n2 = witness_group_element(L, second.witness);
  ReducedPoint out{n1 * g * n2.inverse(), second.normal_form};
  if (conjugate(L, out.g, out.xi) != out.xi)
    throw ConstructionError("level_set_normalize: result does not centralize");
  return out;
}

}  // namespace ucz

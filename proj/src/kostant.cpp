#include <ucz/kostant.hpp>

#include <algorithm>

namespace ucz {

PrincipalTriple build_principal_triple(const LieAlgebra& L) {
  const int l = L.rank();
  const RootSystem& rs = L.roots();
  // h = Σ c_i h_i with α_j(h) = Σ_i c_i cartan(i, j) = 2.
  Mat a(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) a(j, i) = rs.cartan(i, j);
  const auto c = solve<Rat>(a, Vec::Constant(l, Rat(2)));
  if (!c) throw ConstructionError("build_principal_triple: singular Cartan matrix");

  PrincipalTriple t{L.zero(), L.zero(), L.zero()};
  for (int i = 0; i < l; ++i) {
    t.e(L.e_index(i)) = 1;
    t.h(L.h_index(i)) = (*c)(i);
  }
  // [e_{α_i}, f_{α_j}] = δ_ij h_i, so [e, Σ c_i f_{α_i}] = Σ c_i h_i.
  Mat images(L.dim(), l);
  for (int i = 0; i < l; ++i) images.col(i) = L.bracket(t.e, L.f(i));
  const auto fc = solve<Rat>(images, t.h);
  if (!fc) throw ConstructionError("build_principal_triple: [e, f] = h has no solution");
  for (int i = 0; i < l; ++i) t.f(L.f_index(i)) = (*fc)(i);
  return t;
}

// ---------------------------------------------------------------------------
// Grading

Grading::Grading(const LieAlgebra& L, const Vec& h) {
  const Mat adh = L.ad(h);
  const Index n = L.dim();
  // Every eigenvalue is bounded by the largest absolute row sum.
  Rat bound = 0;
  for (Index i = 0; i < n; ++i) {
    Rat row = 0;
    for (Index j = 0; j < n; ++j) row += abs(adh(i, j));
    bound = std::max(bound, row);
  }
  const int limit = static_cast<int>(boost::multiprecision::numerator(bound) /
                                     boost::multiprecision::denominator(bound));
  Index total = 0;
  for (int d = -limit; d <= limit; ++d) {
    RatSubspace space = kernel(Mat(adh - Rat(d) * Mat::Identity(n, n)));
    if (space.dim() == 0) continue;
    offsets_.push_back(total);
    total += space.dim();
    degrees_.push_back(d);
    spaces_.push_back(std::move(space));
  }
  if (total != n)
    throw DomainError("Grading: ad(h) is not diagonalizable with integer eigenvalues");
  Mat eigenbasis(n, n);
  for (std::size_t k = 0; k < spaces_.size(); ++k)
    eigenbasis.middleCols(offsets_[k], spaces_[k].dim()) = spaces_[k].basis().transpose();
  eigenbasis_inverse_ = inverse<Rat>(eigenbasis);
}

RatSubspace Grading::component_space(int degree) const {
  const auto it = std::find(degrees_.begin(), degrees_.end(), degree);
  if (it == degrees_.end()) return RatSubspace(spaces_.front().ambient_dim());
  return spaces_[static_cast<std::size_t>(it - degrees_.begin())];
}

Vec Grading::component(const Vec& x, int degree) const {
  const auto it = std::find(degrees_.begin(), degrees_.end(), degree);
  if (it == degrees_.end()) return Vec::Zero(x.size());
  const auto k = static_cast<std::size_t>(it - degrees_.begin());
  const Vec coords = eigenbasis_inverse_ * x;
  return spaces_[k].combine(coords.segment(offsets_[k], spaces_[k].dim()));
}

bool Grading::all_even() const {
  return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d % 2 == 0; });
}

bool is_principal_triple(const LieAlgebra& L, const PrincipalTriple& t) {
  if (L.bracket(t.h, t.e) != 2 * t.e) return false;
  if (L.bracket(t.h, t.f) != -2 * t.f) return false;
  if (L.bracket(t.e, t.f) != t.h) return false;
  if (!is_regular(L, t.e) || !is_regular(L, t.h) || !is_regular(L, t.f)) return false;
  try {
    return Grading(L, t.h).all_even();
  } catch (const DomainError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// KostantSlice

KostantSlice build_slice(const LieAlgebra& L, PrincipalTriple t) {
  Grading grading(L, t.h);
  KostantSlice s(std::move(t), std::move(grading));
  s.ge_ = centralizer(L, s.triple_.e);
  for (int degree : s.grading_.degrees()) {
    const RatSubspace part = intersect(s.ge_, s.grading_.component_space(degree));
    for (Index k = 0; k < part.dim(); ++k) {
      s.basis_.push_back(part.vector(k));
      s.degrees_.push_back(degree / 2 + 1);
    }
  }
  if (static_cast<Index>(s.basis_.size()) != s.ge_.dim())
    throw ConstructionError("build_slice: gᵉ is not ad(h)-graded");
  Mat cols(L.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) cols.col(i) = s.basis_[static_cast<std::size_t>(i)];
  const Mat ct = cols.transpose();
  s.coordinate_solve_ = inverse<Rat>(Mat(ct * cols)) * ct;

  for (int degree = 0; degree <= s.grading_.max_degree(); degree += 2) {
    KostantSlice::DegreeStep step{degree, {}, {}, {}};
    const RatSubspace kept = intersect(s.ge_, s.grading_.component_space(degree));
    for (Index k = 0; k < kept.dim(); ++k) step.kept.push_back(kept.vector(k));
    const RatSubspace up = s.grading_.component_space(degree + 2);
    for (Index k = 0; k < up.dim(); ++k) {
      step.lifts.push_back(up.vector(k));
      step.images.push_back(L.bracket(up.vector(k), s.triple_.f));
    }
    s.steps_.push_back(std::move(step));
  }
  return s;
}

Vec KostantSlice::point(const Vec& coords) const {
  if (coords.size() != dim()) throw DimensionError("KostantSlice::point: wrong coordinate count");
  Vec x = triple_.f;
  for (int i = 0; i < dim(); ++i) x += coords(i) * basis_[static_cast<std::size_t>(i)];
  return x;
}

Vec KostantSlice::coordinates(const Vec& x) const {
  if (!contains(x)) throw DomainError("KostantSlice::coordinates: point not on the slice");
  return coordinate_solve_ * (x - triple_.f);
}

// ---------------------------------------------------------------------------
// Normalization

Normalization slice_normalize(const LieAlgebra& L, const KostantSlice& S, const Vec& xi,
                              BasisOrder order) {
  const Vec& f = S.triple().f;
  if (xi.size() != L.dim()) throw DimensionError("slice_normalize: element has wrong length");
  if (!L.borel().contains(Vec(xi - f)))
    throw DomainError("slice_normalize: ξ - f is not in the Borel subalgebra");

  const Grading& grading = S.grading();
  Normalization out;
  Vec current = xi;
  for (const auto& step : S.steps_) {
    ++out.sweeps;
    const Vec part = grading.component(Vec(current - f), step.degree);
    if (is_zero(part)) continue;

    std::vector<Vec> kept = step.kept, lifts = step.lifts, images = step.images;
    if (order == BasisOrder::Reversed) {
      std::reverse(kept.begin(), kept.end());
      std::reverse(lifts.begin(), lifts.end());
      std::reverse(images.begin(), images.end());
    }

    // part = Σ a_k kept_k + Σ b_j [lift_j, f]; then u = -Σ b_j lift_j.
    Mat system(L.dim(), static_cast<Index>(kept.size() + images.size()));
    Index col = 0;
    for (const auto& v : kept) system.col(col++) = v;
    for (const auto& v : images) system.col(col++) = v;
    const auto sol = solve<Rat>(system, part);
    if (!sol) throw ConstructionError("slice_normalize: degree component is not reachable");
    Vec u = L.zero();
    for (std::size_t j = 0; j < lifts.size(); ++j)
      u -= (*sol)(static_cast<Index>(kept.size() + j)) * lifts[j];
    if (is_zero(u)) continue;
    // exp(ad u) current, summed until the brackets vanish (u is nilpotent).
    Vec term = current;
    for (int k = 1; !is_zero(term = L.bracket(u, term) / Rat(k)); ++k) current += term;
    out.witness.insert(out.witness.begin(), u);
  }
  if (!S.contains(current)) throw ConstructionError("slice_normalize: sweep did not reach S");
  out.normal_form = std::move(current);
  return out;
}

Mat witness_action(const LieAlgebra& L, const std::vector<Vec>& witness) {
  Mat m = Mat::Identity(L.dim(), L.dim());
  for (const auto& u : witness) m = m * exp_ad(L, u);
  return m;
}

GroupElement witness_group_element(const LieAlgebra& L, const std::vector<Vec>& witness) {
  GroupElement g = GroupElement::identity(L.realization_size());
  for (const auto& u : witness) g = g * exp_nilpotent(L.realize(u));
  return g;
}

}  // namespace ucz

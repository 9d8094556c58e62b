#include <ucz/invariants.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace ucz {

void Polynomial::add_term(Rat coef, std::vector<int> vars) {
  if (coef == 0) return;
  std::sort(vars.begin(), vars.end());
  for (auto& t : terms_) {
    if (t.vars == vars) {
      t.coef += coef;
      if (t.coef == 0) terms_.erase(terms_.begin() + (&t - terms_.data()));
      return;
    }
  }
  terms_.push_back({std::move(coef), std::move(vars)});
}

Rat Polynomial::evaluate(const Vec& values) const {
  Rat total = 0;
  for (const auto& t : terms_) {
    Rat p = t.coef;
    for (int v : t.vars) {
      p *= values(v);
      if (p == 0) break;
    }
    total += p;
  }
  return total;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial d;
  for (const auto& t : terms_) {
    const auto first = std::find(t.vars.begin(), t.vars.end(), var);
    if (first == t.vars.end()) continue;
    const auto mult = std::count(t.vars.begin(), t.vars.end(), var);
    std::vector<int> rest = t.vars;
    rest.erase(rest.begin() + (first - t.vars.begin()));
    d.add_term(t.coef * Rat(mult), std::move(rest));
  }
  return d;
}

int Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.vars.size());
  return static_cast<int>(d);
}

Vec invariants_eval(const LieAlgebra& L, const Vec& x) {
  const Mat a = L.realize(x);
  const Index m = a.rows();
  // Faddeev–LeVerrier: M_k = A M_{k-1} + c_{m-k+1} I, c_{m-k} = -tr(A M_k)/k.
  std::vector<Rat> c(static_cast<std::size_t>(m + 1));
  c[static_cast<std::size_t>(m)] = 1;
  Mat mk = Mat::Zero(m, m);
  for (Index k = 1; k <= m; ++k) {
    mk = a * mk + c[static_cast<std::size_t>(m - k + 1)] * Mat::Identity(m, m);
    c[static_cast<std::size_t>(m - k)] = -(a * mk).trace() / Rat(k);
  }
  Vec out(m - 1);
  for (Index k = 2; k <= m; ++k) out(k - 2) = -c[static_cast<std::size_t>(m - k)];
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

InvariantSystem::InvariantSystem(const LieAlgebra& L) {
  if (!L.has_matrix_realization())
    throw UnsupportedError("invariant polynomials require a matrix realization");
  const int m = static_cast<int>(L.realization_size());
  // Coefficient of λ^{m-k} in det(λ - X) is (-1)^k Σ_{|S|=k} det X_S, and
  // each principal minor expands over permutations of S.
  for (int k = 2; k <= m; ++k) {
    Polynomial p;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<int> rows;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) rows.push_back(i);
      std::vector<int> perm = rows;
      do {
        std::vector<int> vars;
        for (std::size_t t = 0; t < rows.size(); ++t) vars.push_back(rows[t] * m + perm[t]);
        // f_k = -c_k = (-1)^{k+1} Σ det X_S
        const int sign = permutation_sign(perm) * ((k % 2 == 0) ? -1 : 1);
        p.add_term(Rat(sign), std::move(vars));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    polys_.push_back(std::move(p));
  }
  partials_.resize(polys_.size());
  for (std::size_t k = 0; k < polys_.size(); ++k)
    for (int v = 0; v < m * m; ++v) partials_[k].push_back(polys_[k].derivative(v));

  entries_of_basis_.resize(m * m, L.dim());
  for (Index j = 0; j < L.dim(); ++j) {
    const Mat b = L.realize(L.basis_vector(j));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) entries_of_basis_(r * m + c, j) = b(r, c);
  }
}

Vec InvariantSystem::evaluate(const Vec& x) const {
  const Vec entries = entries_of_basis_ * x;
  Vec out(count());
  for (int k = 0; k < count(); ++k) out(k) = polys_[static_cast<std::size_t>(k)].evaluate(entries);
  return out;
}

Mat InvariantSystem::gradient(const Vec& x) const {
  const Vec entries = entries_of_basis_ * x;
  Mat grad_entries(count(), entries.size());
  for (int k = 0; k < count(); ++k)
    for (Index v = 0; v < entries.size(); ++v)
      grad_entries(k, v) =
          partials_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)].evaluate(entries);
  return grad_entries * entries_of_basis_;
}

Vec slice_from_invariants(const LieAlgebra& L, const KostantSlice& S, const Vec& c) {
  if (!L.has_matrix_realization())
    throw UnsupportedError("slice_from_invariants requires a matrix realization");
  if (c.size() != S.dim()) throw DimensionError("slice_from_invariants: wrong vector length");
  // f_{d_i} restricted to S is c·t_i + P(t_1..t_{i-1}) for a constant c ≠ 0,
  // by weighted homogeneity with weight d_j on t_j.
  Vec t = Vec::Zero(S.dim());
  for (int i = 0; i < S.dim(); ++i) {
    const int target = S.degrees()[static_cast<std::size_t>(i)] - 2;
    t(i) = 0;
    const Rat base = invariants_eval(L, S.point(t))(target);
    t(i) = 1;
    const Rat slope = invariants_eval(L, S.point(t))(target) - base;
    if (slope == 0) throw ConstructionError("slice_from_invariants: zero pivot");
    t(i) = (c(target) - base) / slope;
  }
  return S.point(t);
}

bool in_fiber_product(const LieAlgebra& L, const Vec& x, const Vec& y) {
  return invariants_eval(L, x) == invariants_eval(L, y);
}

Index jacobian_rank_at(const InvariantSystem& inv, const Vec& x, const Vec& y) {
  const Mat gx = inv.gradient(x), gy = inv.gradient(y);
  Mat jac(gx.rows(), gx.cols() + gy.cols());
  jac << gx, -gy;
  return rank(jac);
}

}  // namespace ucz

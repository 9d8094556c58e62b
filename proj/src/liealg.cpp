#include <ucz/liealg.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ucz {

namespace {

Eigen::MatrixXi gram_matrix(Family family, int l) {
  Eigen::MatrixXi g = Eigen::MatrixXi::Zero(l, l);
  auto chain = [&](int last) {
    for (int i = 0; i + 1 < last; ++i) g(i, i + 1) = g(i + 1, i) = -1;
  };
  switch (family) {
    case Family::A:
      g.diagonal().setConstant(2);
      chain(l);
      break;
    case Family::B:  // α_l short
      g.diagonal().setConstant(2);
      g(l - 1, l - 1) = 1;
      chain(l);
      break;
    case Family::C:  // α_l long
      g.diagonal().setConstant(2);
      g(l - 1, l - 1) = 4;
      chain(l - 1);
      g(l - 2, l - 1) = g(l - 1, l - 2) = -2;
      break;
    case Family::D:
      g.diagonal().setConstant(2);
      chain(l - 1);
      g(l - 3, l - 1) = g(l - 1, l - 3) = -1;
      break;
    case Family::G:  // α_1 short, α_2 long
      g << 2, -3, -3, 6;
      break;
  }
  return g;
}

bool root_order(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  if (a.sum() != b.sum()) return a.sum() < b.sum();
  return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(),
                                      a.data() + a.size());
}

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
  }
  return '?';
}

}  // namespace

// ---------------------------------------------------------------------------
// RootSystem

std::string RootSystem::label() const {
  return std::string(1, family_char(family)) + std::to_string(rank);
}

int RootSystem::inner(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
  return a.dot(gram * b);
}

int RootSystem::pairing(const Eigen::VectorXi& root, int i) const {
  return cartan.row(i).dot(root);
}

int RootSystem::find_positive(const Eigen::VectorXi& root) const {
  auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), root, root_order);
  if (it != positive_roots.end() && *it == root)
    return static_cast<int>(it - positive_roots.begin());
  return -1;
}

bool RootSystem::is_root(const Eigen::VectorXi& root) const {
  if (root.isZero()) return false;
  return find_positive(root) >= 0 || find_positive(-root) >= 0;
}

bool RootSystem::supported_in(int k, unsigned mask) const {
  const auto& r = positive_roots[static_cast<std::size_t>(k)];
  for (int i = 0; i < rank; ++i)
    if (r(i) != 0 && !(mask & (1u << i))) return false;
  return true;
}

RootSystem make_root_system(Family family, int l) {
  const bool ok = (family == Family::A && l >= 1 && l <= 7) ||
                  (family == Family::B && l >= 2 && l <= 4) ||
                  (family == Family::C && l >= 2 && l <= 4) ||
                  (family == Family::D && l >= 4 && l <= 5) ||
                  (family == Family::G && l == 2);
  if (!ok)
    throw UnsupportedError("unsupported root system " + std::string(1, family_char(family)) +
                           std::to_string(l));
  RootSystem rs;
  rs.family = family;
  rs.rank = l;
  rs.gram = gram_matrix(family, l);
  rs.cartan.resize(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.cartan(i, j) = 2 * rs.gram(i, j) / rs.gram(i, i);

  // Grow the positive roots height by height using root strings:
  // β + α_i is a root iff q = p - <β, α_i^∨> > 0.
  std::vector<Eigen::VectorXi> all;
  std::vector<Eigen::VectorXi> layer;
  for (int i = 0; i < l; ++i) layer.push_back(Eigen::VectorXi::Unit(l, i));
  auto known = [&](const Eigen::VectorXi& v) {
    return std::find(all.begin(), all.end(), v) != all.end();
  };
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Eigen::VectorXi> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < l; ++i) {
        const Eigen::VectorXi ai = Eigen::VectorXi::Unit(l, i);
        int p = 0;
        while (known(beta - (p + 1) * ai)) ++p;
        const int q = p - rs.pairing(beta, i);
        const Eigen::VectorXi up = beta + ai;
        if (q > 0 && !known(up) && std::find(next.begin(), next.end(), up) == next.end())
          next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), root_order);
  rs.positive_roots = std::move(all);
  return rs;
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

/// N_{x,y} for roots of either sign, computed from the table of positive
/// pairs through N_{-x,-y} = -N_{x,y} and the cyclic rule
/// N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y) for x + y + z = 0.
class ConstantTable {
 public:
  explicit ConstantTable(const RootSystem& rs)
      : rs_(rs),
        p_(rs.num_positive()),
        value_(static_cast<std::size_t>(p_ * p_)),
        known_(static_cast<std::size_t>(p_ * p_), false) {}

  void set(int a, int b, const Rat& v) {
    value_[idx(a, b)] = v;
    value_[idx(b, a)] = -v;
    known_[idx(a, b)] = known_[idx(b, a)] = true;
  }

  Rat get(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const {
    const bool xp = x.sum() > 0, yp = y.sum() > 0;
    if (xp && yp) {
      const int a = rs_.find_positive(x), b = rs_.find_positive(y);
      if (a < 0 || b < 0 || !known_[idx(a, b)])
        throw ConstructionError("structure constant requested before it was fixed");
      return value_[idx(a, b)];
    }
    if (!xp && !yp) return -get(-x, -y);
    if (!xp) return -get(y, x);
    // x positive, y negative.
    const Eigen::VectorXi z = -(x + y);
    const Rat zz = rs_.inner(z, z);
    if (z.sum() > 0) return zz / Rat(rs_.inner(y, y)) * get(z, x);
    return zz / Rat(rs_.inner(x, x)) * -get(-y, -z);
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * p_ + b); }
  const RootSystem& rs_;
  int p_;
  std::vector<Rat> value_;
  std::vector<bool> known_;
};

int string_below(const RootSystem& rs, const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  int p = 0;
  while (true) {
    const Eigen::VectorXi next = b - (p + 1) * a;
    if (next.isZero() || !rs.is_root(next)) return p;
    ++p;
  }
}

ConstantTable chevalley_constants(const RootSystem& rs) {
  ConstantTable table(rs);
  const int P = rs.num_positive();
  for (int s = 0; s < P; ++s) {
    const Eigen::VectorXi& xi = rs.positive_roots[static_cast<std::size_t>(s)];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < s; ++a) {
      const int b = rs.find_positive(xi - rs.positive_roots[static_cast<std::size_t>(a)]);
      if (b > a) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    const auto& [a0, b0] = pairs.front();
    const Eigen::VectorXi& alpha = rs.positive_roots[static_cast<std::size_t>(a0)];
    const Eigen::VectorXi& beta = rs.positive_roots[static_cast<std::size_t>(b0)];
    table.set(a0, b0, Rat(string_below(rs, alpha, beta) + 1));

    // Remaining decompositions ξ = γ + δ: the e_δ-component of the Jacobi
    // identity for (e_{-γ}, e_α, e_β) determines N_{-γ,ξ}, hence N_{γ,δ}.
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [c, d] = pairs[k];
      const Eigen::VectorXi& gamma = rs.positive_roots[static_cast<std::size_t>(c)];
      const Eigen::VectorXi& delta = rs.positive_roots[static_cast<std::size_t>(d)];
      Rat rhs = 0;
      if (rs.is_root(alpha - gamma))
        rhs += table.get(-gamma, alpha) * table.get(alpha - gamma, beta);
      if (rs.is_root(beta - gamma))
        rhs += table.get(-gamma, beta) * table.get(alpha, beta - gamma);
      const Rat n_minus_gamma_xi = rhs / table.get(alpha, beta);
      const Rat n_gamma_delta =
          n_minus_gamma_xi * Rat(rs.inner(xi, xi)) / Rat(rs.inner(delta, delta));
      const Rat expected = string_below(rs, gamma, delta) + 1;
      if (abs(n_gamma_delta) != expected)
        throw ConstructionError("Jacobi-forced structure constant has wrong magnitude");
      table.set(c, d, n_gamma_delta);
    }
  }
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra LieAlgebra::build(std::string_view descriptor) {
  if (descriptor.size() < 2) throw UnsupportedError("bad algebra descriptor");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(descriptor[0]))) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    case 'G': family = Family::G; break;
    default: throw UnsupportedError("bad algebra descriptor: " + std::string(descriptor));
  }
  int rank = 0;
  const auto tail = descriptor.substr(1);
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), rank);
  if (ec != std::errc() || ptr != tail.data() + tail.size())
    throw UnsupportedError("bad algebra descriptor: " + std::string(descriptor));
  return build(family, rank);
}

LieAlgebra LieAlgebra::build(Family family, int rank) {
  LieAlgebra L;
  L.roots_ = make_root_system(family, rank);
  const RootSystem& rs = L.roots_;
  const int P = rs.num_positive();
  const int l = rs.rank;
  const Index n = l + 2 * P;
  L.dim_ = n;

  const ConstantTable constants = chevalley_constants(rs);

  // Signed root of a root-space basis vector; zero vector for the Cartan.
  auto root_of = [&](Index k) -> Eigen::VectorXi {
    if (k < P) return rs.positive_roots[static_cast<std::size_t>(k)];
    if (k >= P + l) return -rs.positive_roots[static_cast<std::size_t>(k - P - l)];
    return Eigen::VectorXi::Zero(l);
  };
  auto index_of = [&](const Eigen::VectorXi& r) -> Index {
    const int k = rs.find_positive(r);
    if (k >= 0) return L.e_index(k);
    return L.f_index(rs.find_positive(-r));
  };

  L.table_.assign(static_cast<std::size_t>(n * n), {});
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      auto& out = L.table_[static_cast<std::size_t>(i * n + j)];
      const bool hi = i >= P && i < P + l, hj = j >= P && j < P + l;
      if (hi && hj) continue;
      if (hi || hj) {
        const Index cartan_idx = hi ? i : j;
        const Index root_idx = hi ? j : i;
        const int w = rs.pairing(root_of(root_idx), static_cast<int>(cartan_idx - P));
        if (w != 0) out.push_back({root_idx, Rat(hi ? w : -w)});
        continue;
      }
      const Eigen::VectorXi x = root_of(i), y = root_of(j);
      const Eigen::VectorXi s = x + y;
      if (s.isZero()) {
        // [e_α, e_{-α}] = h_α = Σ c_i (α_i,α_i)/(α,α) h_i, sign flipped for [e_{-α}, e_α].
        const Eigen::VectorXi alpha = i < P ? x : y;
        const Rat aa = rs.inner(alpha, alpha);
        const int sign = i < P ? 1 : -1;
        for (int t = 0; t < l; ++t) {
          if (alpha(t) == 0) continue;
          out.push_back({L.h_index(t), Rat(sign * alpha(t) * rs.gram(t, t)) / aa});
        }
        continue;
      }
      if (!rs.is_root(s)) continue;
      out.push_back({index_of(s), constants.get(x, y)});
    }
  }

  std::vector<Mat> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) ads.push_back(L.ad(L.basis_vector(k)));
  L.killing_.resize(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      L.killing_(i, j) = L.killing_(j, i) =
          (ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();

  Mat cartan_rows = Mat::Zero(l, n), nil_rows = Mat::Zero(P, n), opp_rows = Mat::Zero(P, n);
  for (int i = 0; i < l; ++i) cartan_rows(i, L.h_index(i)) = 1;
  for (int k = 0; k < P; ++k) {
    nil_rows(k, L.e_index(k)) = 1;
    opp_rows(k, L.f_index(k)) = 1;
  }
  L.cartan_ = RatSubspace::span(cartan_rows);
  L.nilradical_ = RatSubspace::span(nil_rows);
  L.opposite_nilradical_ = RatSubspace::span(opp_rows);
  L.borel_ = sum(L.cartan_, L.nilradical_);

  if (family == Family::A) {
    const Index m = rank + 1;
    L.realization_.assign(static_cast<std::size_t>(n), Mat::Zero(m, m));
    auto rho = [&](Index k) -> Mat& { return L.realization_[static_cast<std::size_t>(k)]; };
    for (int i = 0; i < l; ++i) {
      rho(L.e_index(i))(i, i + 1) = 1;
      rho(L.f_index(i))(i + 1, i) = 1;
      rho(L.h_index(i))(i, i) = 1;
      rho(L.h_index(i))(i + 1, i + 1) = -1;
    }
    // Non-simple root vectors from their extraspecial pairs, in root order.
    for (int s = l; s < P; ++s) {
      const Eigen::VectorXi& xi = rs.positive_roots[static_cast<std::size_t>(s)];
      for (int a = 0; a < s; ++a) {
        const int b = rs.find_positive(xi - rs.positive_roots[static_cast<std::size_t>(a)]);
        if (b < 0) continue;
        const Eigen::VectorXi& ra = rs.positive_roots[static_cast<std::size_t>(a)];
        const Eigen::VectorXi& rb = rs.positive_roots[static_cast<std::size_t>(b)];
        const Mat& ea = rho(L.e_index(a));
        const Mat& eb = rho(L.e_index(b));
        const Mat& fa = rho(L.f_index(a));
        const Mat& fb = rho(L.f_index(b));
        rho(L.e_index(s)) = (ea * eb - eb * ea) / constants.get(ra, rb);
        rho(L.f_index(s)) = (fa * fb - fb * fa) / constants.get(-ra, -rb);
        break;
      }
    }
    Mat vectorized(m * m, n);
    for (Index k = 0; k < n; ++k)
      vectorized.col(k) = Eigen::Map<const Vec>(rho(k).data(), m * m);
    const Mat rt = vectorized.transpose();
    L.from_matrix_ = inverse<Rat>(rt * vectorized) * rt;
  }
  return L;
}

std::string LieAlgebra::basis_label(Index k) const {
  const int P = num_positive();
  auto coords = [&](int r) {
    std::ostringstream os;
    const auto& v = roots_.positive_roots[static_cast<std::size_t>(r)];
    for (Index i = 0; i < v.size(); ++i) os << v(i);
    return os.str();
  };
  if (k < P) return "e" + coords(static_cast<int>(k));
  if (k < P + rank()) return "h" + std::to_string(k - P + 1);
  return "f" + coords(static_cast<int>(k - P - rank()));
}

Vec LieAlgebra::basis_vector(Index k) const {
  Vec v = Vec::Zero(dim_);
  v(k) = 1;
  return v;
}

int LieAlgebra::principal_degree(Index k) const {
  const int P = num_positive();
  if (k < P) return 2 * roots_.height(static_cast<int>(k));
  if (k < P + rank()) return 0;
  return -2 * roots_.height(static_cast<int>(k - P - rank()));
}

Rat LieAlgebra::structure_constant(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
  if (!roots_.is_root(a) || !roots_.is_root(b) || !roots_.is_root(a + b)) return Rat(0);
  auto index_of = [&](const Eigen::VectorXi& r) -> Index {
    const int k = roots_.find_positive(r);
    return k >= 0 ? e_index(k) : f_index(roots_.find_positive(-r));
  };
  const auto& terms = bracket_terms(index_of(a), index_of(b));
  return terms.empty() ? Rat(0) : terms.front().coef;
}

void LieAlgebra::check_element(const Vec& x, const char* where) const {
  if (x.size() != dim_) throw DimensionError(std::string(where) + ": element has wrong length");
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  check_element(x, "bracket");
  check_element(y, "bracket");
  Vec out = Vec::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dim_; ++j) {
      if (y(j) == 0) continue;
      const Rat xy = x(i) * y(j);
      for (const auto& t : bracket_terms(i, j)) out(t.k) += xy * t.coef;
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  check_element(x, "ad");
  Mat out = Mat::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dim_; ++j)
      for (const auto& t : bracket_terms(i, j)) out(t.k, j) += x(i) * t.coef;
  }
  return out;
}

Mat LieAlgebra::realize(const Vec& x) const {
  if (!has_matrix_realization())
    throw UnsupportedError("matrix realization is only available for type A");
  check_element(x, "realize");
  const Index m = realization_size();
  Mat out = Mat::Zero(m, m);
  for (Index k = 0; k < dim_; ++k)
    if (x(k) != 0) out += x(k) * realization_[static_cast<std::size_t>(k)];
  return out;
}

Vec LieAlgebra::from_matrix(const Mat& m) const {
  if (!has_matrix_realization())
    throw UnsupportedError("matrix realization is only available for type A");
  const Index s = realization_size();
  if (m.rows() != s || m.cols() != s) throw DimensionError("from_matrix: wrong matrix size");
  const Vec v = Eigen::Map<const Vec>(m.data(), s * s);
  Vec coords = from_matrix_ * v;
  if (realize(coords) != m) throw DomainError("from_matrix: matrix is not traceless");
  return coords;
}

// ---------------------------------------------------------------------------
// Group elements and adjoint actions

GroupElement::GroupElement(Mat m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionError("GroupElement: not square");
  if (determinant<Rat>(matrix_) != 1) throw DomainError("GroupElement: determinant is not 1");
}

GroupElement GroupElement::identity(Index size) {
  return GroupElement(Mat::Identity(size, size));
}

GroupElement GroupElement::inverse() const { return GroupElement(ucz::inverse<Rat>(matrix_)); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size()) throw DimensionError("GroupElement product: size mismatch");
  return GroupElement(a.matrix_ * b.matrix_);
}

namespace {

// Σ x^k / k! for nilpotent x; nullopt if x^size ≠ 0.
std::optional<Mat> exp_series(const Mat& x) {
  const Index n = x.rows();
  Mat term = Mat::Identity(n, n);
  Mat out = term;
  for (Index k = 1; k <= n; ++k) {
    term = (term * x) / Rat(k);
    if (is_zero(term)) return out;
    out += term;
  }
  return std::nullopt;
}

}  // namespace

GroupElement exp_nilpotent(const Mat& x) {
  auto e = exp_series(x);
  if (!e) throw DomainError("exp_nilpotent: matrix is not nilpotent");
  return GroupElement(std::move(*e));
}

bool jacobi_holds(const LieAlgebra& L) {
  const Index n = L.dim();
  // [b_i, v] for sparse v, accumulated into out.
  auto bracket_into = [&](Index i, const std::vector<BracketTerm>& v, const Rat& scale, Vec& out) {
    for (const auto& t : v)
      for (const auto& s : L.bracket_terms(i, t.k)) out(s.k) += scale * t.coef * s.coef;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        Vec sum = Vec::Zero(n);
        bracket_into(i, L.bracket_terms(j, k), Rat(1), sum);
        bracket_into(j, L.bracket_terms(k, i), Rat(1), sum);
        bracket_into(k, L.bracket_terms(i, j), Rat(1), sum);
        if (!is_zero(sum)) return false;
      }
  return true;
}

RatSubspace centralizer(const LieAlgebra& L, const Vec& x) { return kernel(L.ad(x)); }

bool is_regular(const LieAlgebra& L, const Vec& x) {
  return centralizer(L, x).dim() == L.rank();
}

bool is_ad_nilpotent(const LieAlgebra& L, const Vec& x) {
  return exp_series(L.ad(x)).has_value();
}

Mat exp_ad(const LieAlgebra& L, const Vec& x) {
  auto e = exp_series(L.ad(x));
  if (!e) throw DomainError("exp_ad: ad(x) is not nilpotent");
  return std::move(*e);
}

Vec conjugate(const LieAlgebra& L, const GroupElement& g, const Vec& y) {
  if (g.size() != L.realization_size()) throw DimensionError("conjugate: group element size");
  return L.from_matrix(g.matrix() * L.realize(y) * ucz::inverse<Rat>(g.matrix()));
}

}  // namespace ucz

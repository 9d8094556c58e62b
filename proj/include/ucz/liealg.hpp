#pragma once

#include <ucz/exactlin.hpp>

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ucz {

enum class Family { A, B, C, D, G };

/// Root data of a reduced irreducible root system. Roots are integer vectors
/// in the simple-root basis; positive roots are sorted by height and then
/// lexicographically, which fixes the Chevalley basis order.
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  Eigen::MatrixXi gram;    // (α_i, α_j), scaled to integers
  Eigen::MatrixXi cartan;  // cartan(i, j) = α_j(h_i) = 2(α_i, α_j)/(α_i, α_i)
  std::vector<Eigen::VectorXi> positive_roots;

  std::string label() const;
  int num_positive() const { return static_cast<int>(positive_roots.size()); }
  int height(int k) const { return positive_roots[static_cast<std::size_t>(k)].sum(); }
  int max_height() const { return height(num_positive() - 1); }
  int inner(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const;
  /// α(h_i) for a root α in simple-root coordinates.
  int pairing(const Eigen::VectorXi& root, int i) const;
  /// Index of a positive root, or -1.
  int find_positive(const Eigen::VectorXi& root) const;
  /// True iff `root` (of either sign) is a root.
  bool is_root(const Eigen::VectorXi& root) const;
  /// Positive roots whose support lies inside the simple-root subset `mask`.
  bool supported_in(int k, unsigned mask) const;
};

RootSystem make_root_system(Family family, int rank);

/// Sparse bracket table entry: [b_i, b_j] = Σ coef · b_k.
struct BracketTerm {
  Index k;
  Rat coef;
};

/// Chevalley basis of a split semisimple Lie algebra over ℚ.
///
/// Basis order: e_α for the positive roots (root order), then h_1..h_l, then
/// f_α = e_{-α} in root order. Structure constants satisfy [e_α, e_{-α}] = h_α
/// (the coroot), [e_α, e_β] = N_{α,β} e_{α+β} with N_{α,β} = ±(p+1); the sign
/// is +1 on extraspecial pairs and every other sign is forced by Jacobi.
///
/// Type A algebras carry the defining representation on ℚ^{l+1}, with
/// e_{α_i} ↦ E_{i,i+1}, f_{α_i} ↦ E_{i+1,i}, h_i ↦ E_{ii} - E_{i+1,i+1}.
class LieAlgebra {
 public:
  static LieAlgebra build(Family family, int rank);
  /// Descriptor such as "A2" or "G2". Throws UnsupportedError.
  static LieAlgebra build(std::string_view descriptor);

  const RootSystem& roots() const { return roots_; }
  std::string label() const { return roots_.label(); }
  Index dim() const { return dim_; }
  int rank() const { return roots_.rank; }
  int num_positive() const { return roots_.num_positive(); }

  Index e_index(int root) const { return root; }
  Index h_index(int i) const { return num_positive() + i; }
  Index f_index(int root) const { return num_positive() + rank() + root; }
  std::string basis_label(Index k) const;

  Vec zero() const { return Vec::Zero(dim_); }
  Vec basis_vector(Index k) const;
  Vec e(int root) const { return basis_vector(e_index(root)); }
  Vec h(int i) const { return basis_vector(h_index(i)); }
  Vec f(int root) const { return basis_vector(f_index(root)); }

  /// ad(h)-weight of a basis vector for the principal grading element
  /// (α_i(h) = 2): 2·height for e_α, 0 on the Cartan, -2·height for f_α.
  int principal_degree(Index k) const;

  const std::vector<BracketTerm>& bracket_terms(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i * dim_ + j)];
  }
  /// N_{α,β} for roots given in simple-root coordinates (either sign).
  Rat structure_constant(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;
  const Mat& killing_form() const { return killing_; }
  Rat killing(const Vec& x, const Vec& y) const { return x.dot(killing_ * y); }

  const RatSubspace& cartan() const { return cartan_; }
  const RatSubspace& borel() const { return borel_; }
  const RatSubspace& nilradical() const { return nilradical_; }
  const RatSubspace& opposite_nilradical() const { return opposite_nilradical_; }

  bool has_matrix_realization() const { return !realization_.empty(); }
  Index realization_size() const { return rank() + 1; }
  /// Defining representation matrix of x (type A only).
  Mat realize(const Vec& x) const;
  /// Inverse of realize on traceless matrices (type A only).
  Vec from_matrix(const Mat& m) const;

 private:
  LieAlgebra() = default;
  void check_element(const Vec& x, const char* where) const;

  RootSystem roots_;
  Index dim_ = 0;
  std::vector<std::vector<BracketTerm>> table_;
  Mat killing_;
  RatSubspace cartan_, borel_, nilradical_, opposite_nilradical_;
  std::vector<Mat> realization_;
  Mat from_matrix_;  // left inverse of the vectorized realization
};

/// Determinant-one matrix acting through the defining representation.
class GroupElement {
 public:
  /// Throws DomainError unless det(m) = 1.
  explicit GroupElement(Mat m);
  static GroupElement identity(Index size);

  const Mat& matrix() const { return matrix_; }
  Index size() const { return matrix_.rows(); }
  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  Mat matrix_;
};

/// exp of a nilpotent matrix (finite series). Throws DomainError otherwise.
GroupElement exp_nilpotent(const Mat& x);

/// Jacobi identity on every triple of basis vectors.
bool jacobi_holds(const LieAlgebra& L);

/// ker ad(x).
RatSubspace centralizer(const LieAlgebra& L, const Vec& x);
bool is_regular(const LieAlgebra& L, const Vec& x);
/// True iff ad(x) is nilpotent.
bool is_ad_nilpotent(const LieAlgebra& L, const Vec& x);
/// Σ_k ad(x)^k / k!. Throws DomainError if ad(x) is not nilpotent.
Mat exp_ad(const LieAlgebra& L, const Vec& x);
/// Ad_g(y) via the defining representation (type A only).
Vec conjugate(const LieAlgebra& L, const GroupElement& g, const Vec& y);

}  // namespace ucz

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <vector>

namespace ucz {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator. Expression templates are disabled so the type
/// behaves like a plain value inside Eigen kernels.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rat>;
using Vec = VectorX<Rat>;

inline std::string to_string(const Rat& r) { return r.str(); }

inline std::vector<std::string> to_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

/// Exact zero test. Eigen's isZero() compares against a precision
/// threshold, which is meaningless for rationals.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

inline bool is_integer(const Rat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace ucz

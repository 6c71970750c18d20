#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace leibniz {

/// Exact field scalar: arbitrary-precision rational, always stored reduced
/// with positive denominator.
using Rational = boost::multiprecision::mpq_rational;

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

/// "p" for integers, "p/q" otherwise. Never emits a float token.
std::string to_fraction_string(const Rational& r);

/// Accepts "p" and "p/q" with optional sign on the numerator.
/// Throws std::invalid_argument on anything else (including q == 0).
Rational rational_from_string(std::string_view text);

inline bool is_zero_vec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool is_zero_mat(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace leibniz

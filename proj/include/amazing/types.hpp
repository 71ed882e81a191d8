#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace amazing {

// Exact scalars. Expression templates are off so that `auto` and Eigen
// coefficient-wise kernels always see concrete values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using IntegerVector = Vector<Integer>;
using RationalVector = Vector<Rational>;

/// Decimal for integers, "p/q" for non-integral rationals.
inline std::string to_string(const Integer& value) { return value.str(); }
inline std::string to_string(const Rational& value) { return value.str(); }

}  // namespace amazing

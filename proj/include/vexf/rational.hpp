#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace vexf {

/// Exact arbitrary-precision rational. Expression templates are disabled so
/// that the type composes cleanly with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VectorX<Rational>;
using Mat = MatrixX<Rational>;
using Index = Eigen::Index;

/// a -= b * c, in place for Rational.
template <class Scalar>
inline void sub_mul(Scalar& a, const Scalar& b, const Scalar& c) {
  a -= b * c;
}

inline void sub_mul(Rational& a, const Rational& b, const Rational& c) {
  thread_local Rational tmp;
  mpq_mul(tmp.backend().data(), b.backend().data(), c.backend().data());
  mpq_sub(a.backend().data(), a.backend().data(), tmp.backend().data());
}

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). The result is
/// canonical. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses a comma separated list of rationals, e.g. "1,-2,3/4".
Vec parse_vector(std::string_view csv);

std::string to_string(const Vec& v);

Vec from_ints(std::initializer_list<long> values);
Vec unit_vector(Index dim, Index i);

/// Strict lexicographic order on equal-length vectors.
bool lex_less(const Vec& a, const Vec& b);

/// Rows of `points` sorted lexicographically with exact duplicates removed.
Mat sorted_unique_rows(const Mat& points);

Mat stack_rows(const std::vector<Vec>& rows, Index dim);

}  // namespace vexf

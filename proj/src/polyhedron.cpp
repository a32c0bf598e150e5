#include "vexf/polyhedron.hpp"

#include "vexf/errors.hpp"

namespace vexf {

namespace {

void append_row(Mat& lhs, Vec& rhs, const Vec& a, const Rational& b) {
  const Index r = lhs.rows();
  lhs.conservativeResize(r + 1, Eigen::NoChange);
  rhs.conservativeResize(r + 1);
  lhs.row(r) = a.transpose();
  rhs(r) = b;
}

}  // namespace

void HPolyhedron::add_inequality(const Vec& a, const Rational& b) {
  if (a.size() != dim) throw DimensionError("inequality length does not match dimension");
  append_row(ineq_lhs, ineq_rhs, a, b);
}

void HPolyhedron::add_equality(const Vec& a, const Rational& b) {
  if (a.size() != dim) throw DimensionError("equality length does not match dimension");
  append_row(eq_lhs, eq_rhs, a, b);
}

bool HPolyhedron::satisfied_by(const Vec& x) const {
  if (x.size() != dim) throw DimensionError("point length does not match dimension");
  for (Index i = 0; i < ineq_lhs.rows(); ++i) {
    if (ineq_lhs.row(i).dot(x.transpose()) > ineq_rhs(i)) return false;
  }
  for (Index i = 0; i < eq_lhs.rows(); ++i) {
    if (eq_lhs.row(i).dot(x.transpose()) != eq_rhs(i)) return false;
  }
  return true;
}

}  // namespace vexf

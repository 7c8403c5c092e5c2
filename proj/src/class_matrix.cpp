#include "dgalab/class_matrix.hpp"

#include <stdexcept>

namespace dgalab {

bool multipliable(const DegreeMatrix& a, const DegreeMatrix& b) {
  if (a.cols() != b.rows()) return false;
  if (a.cols() == 0) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < b.cols(); ++k) {
      const int d0 = a(i, 0) + b(0, k);
      for (Eigen::Index j = 1; j < a.cols(); ++j)
        if (a(i, j) + b(j, k) != d0) return false;
    }
  return true;
}

DegreeMatrix degree_star(const DegreeMatrix& a, const DegreeMatrix& b) {
  if (!multipliable(a, b)) throw std::invalid_argument("degree_star: matrices are not multipliable");
  DegreeMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < b.cols(); ++k) out(i, k) = a(i, 0) + b(0, k);
  return out;
}

DegreeMatrix add_all(DegreeMatrix a, int shift) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) += shift;
  return a;
}

bool ClassMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

ClassMatrix scalar_class_matrix(const CohClass& u) {
  ClassMatrix m;
  m.rows = m.cols = 1;
  m.entries = {u};
  m.degrees = DegreeMatrix::Constant(1, 1, u.degree);
  return m;
}

ClassMatrix zero_class_matrix(const Model& m, int rows, int cols, const DegreeMatrix& degrees) {
  ClassMatrix out;
  out.rows = rows;
  out.cols = cols;
  out.degrees = degrees;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.entries.push_back(zero_class(m, degrees(i, j)));
  return out;
}

ClassMatrix class_bar(const ClassMatrix& a) {
  ClassMatrix out = a;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.degrees(i, j) % 2 != 0) out.at(i, j) = -out.at(i, j);
  return out;
}

ClassMatrix class_add(const ClassMatrix& a, const ClassMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.degrees != b.degrees)
    throw std::invalid_argument("class_add: shape or degree mismatch");
  ClassMatrix out = a;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = out.at(i, j) + b.at(i, j);
  return out;
}

ClassMatrix class_negate(const ClassMatrix& a) {
  ClassMatrix out = a;
  for (auto& e : out.entries) e = -e;
  return out;
}

ClassMatrix class_cup(const Model& m, const ClassMatrix& a, const ClassMatrix& b) {
  if (!multipliable(a.degrees, b.degrees))
    throw std::invalid_argument("class_cup: matrices are not multipliable");
  ClassMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.degrees = degree_star(a.degrees, b.degrees);
  for (int i = 0; i < out.rows; ++i)
    for (int k = 0; k < out.cols; ++k) {
      CohClass acc = zero_class(m, out.degrees(i, k));
      for (int j = 0; j < a.cols; ++j) acc = acc + cup(m, a.at(i, j), b.at(j, k));
      out.entries.push_back(acc);
    }
  return out;
}

bool class_equal(const ClassMatrix& a, const ClassMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

bool ElementMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

ElementMatrix element_bar(const GeneratorTable& t, const ElementMatrix& a) {
  ElementMatrix out(a.rows, a.cols);
  for (size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = bar_involution(t, a.entries[i]);
  return out;
}

ElementMatrix element_mul(const GeneratorTable& t, const ElementMatrix& a, const ElementMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("element_mul: shape mismatch");
  ElementMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < b.cols; ++k) {
      Element acc;
      for (int j = 0; j < a.cols; ++j) acc += multiply(t, a.at(i, j), b.at(j, k));
      out.at(i, k) = std::move(acc);
    }
  return out;
}

ElementMatrix element_add(const ElementMatrix& a, const ElementMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("element_add: shape mismatch");
  ElementMatrix out(a.rows, a.cols);
  for (size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = a.entries[i] + b.entries[i];
  return out;
}

ElementMatrix element_sub(const ElementMatrix& a, const ElementMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("element_sub: shape mismatch");
  ElementMatrix out(a.rows, a.cols);
  for (size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = a.entries[i] - b.entries[i];
  return out;
}

ElementMatrix element_d(const DgaPresentation& p, const ElementMatrix& a) {
  ElementMatrix out(a.rows, a.cols);
  for (size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = differential(p, a.entries[i]);
  return out;
}

ElementMatrix element_scale(const Rational& c, ElementMatrix a) {
  for (auto& e : a.entries) e *= c;
  return a;
}

ElementMatrix element_left_mul(const GeneratorTable& t, const Element& e, const ElementMatrix& a) {
  ElementMatrix out(a.rows, a.cols);
  for (size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = multiply(t, e, a.entries[i]);
  return out;
}

ElementMatrix representative_matrix(const Model& m, const ClassMatrix& a) {
  ElementMatrix out(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = representative(m, a.at(i, j));
  return out;
}

ClassMatrix class_of_matrix(const Model& m, const ElementMatrix& a, const DegreeMatrix& degrees) {
  if (degrees.rows() != a.rows || degrees.cols() != a.cols)
    throw std::invalid_argument("class_of_matrix: degree matrix shape mismatch");
  ClassMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  out.degrees = degrees;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.entries.push_back(class_of(m, a.at(i, j), degrees(i, j)));
  return out;
}

RationalVector flatten(const Model& m, const ClassMatrix& a) {
  RationalVector v(flat_dim(m, a.degrees));
  Eigen::Index pos = 0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const CohClass& u = a.at(i, j);
      for (Eigen::Index k = 0; k < u.coords.rows(); ++k) v(pos++) = u.coords(k);
    }
  return v;
}

Eigen::Index flat_dim(const Model& m, const DegreeMatrix& degrees) {
  Eigen::Index d = 0;
  for (Eigen::Index i = 0; i < degrees.rows(); ++i)
    for (Eigen::Index j = 0; j < degrees.cols(); ++j) d += m.cohomology(degrees(i, j)).dim();
  return d;
}

}  // namespace dgalab

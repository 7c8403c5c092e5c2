#pragma once

#include "dgalab/cohomology.hpp"

namespace dgalab {

using DegreeMatrix = Eigen::MatrixXi;

/// Degree-matrix product D(X) * D(Y) = (deg x_ij + deg y_jk); defined only
/// for multipliable shapes.  add_all shifts every entry.
bool multipliable(const DegreeMatrix& a, const DegreeMatrix& b);
DegreeMatrix degree_star(const DegreeMatrix& a, const DegreeMatrix& b);
DegreeMatrix add_all(DegreeMatrix a, int shift);

/// Rectangular matrix of homogeneous cohomology classes with its degree
/// matrix; entries are positive-degree classes.
struct ClassMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<CohClass> entries;  // row-major
  DegreeMatrix degrees;

  const CohClass& at(int i, int j) const { return entries[static_cast<size_t>(i * cols + j)]; }
  CohClass& at(int i, int j) { return entries[static_cast<size_t>(i * cols + j)]; }
  bool is_zero() const;
};

ClassMatrix scalar_class_matrix(const CohClass& u);
ClassMatrix zero_class_matrix(const Model& m, int rows, int cols, const DegreeMatrix& degrees);
ClassMatrix class_bar(const ClassMatrix& a);
ClassMatrix class_add(const ClassMatrix& a, const ClassMatrix& b);
ClassMatrix class_negate(const ClassMatrix& a);
ClassMatrix class_cup(const Model& m, const ClassMatrix& a, const ClassMatrix& b);
bool class_equal(const ClassMatrix& a, const ClassMatrix& b);

/// Rectangular matrix of Elements (blocks of defining systems).
struct ElementMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Element> entries;  // row-major

  ElementMatrix() = default;
  ElementMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r * c)) {}

  const Element& at(int i, int j) const { return entries[static_cast<size_t>(i * cols + j)]; }
  Element& at(int i, int j) { return entries[static_cast<size_t>(i * cols + j)]; }
  bool is_zero() const;

  friend bool operator==(const ElementMatrix& a, const ElementMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

ElementMatrix element_bar(const GeneratorTable& t, const ElementMatrix& a);
ElementMatrix element_mul(const GeneratorTable& t, const ElementMatrix& a, const ElementMatrix& b);
ElementMatrix element_add(const ElementMatrix& a, const ElementMatrix& b);
ElementMatrix element_sub(const ElementMatrix& a, const ElementMatrix& b);
ElementMatrix element_d(const DgaPresentation& p, const ElementMatrix& a);
ElementMatrix element_scale(const Rational& c, ElementMatrix a);

/// Entrywise wedge with a fixed Element on the left.
ElementMatrix element_left_mul(const GeneratorTable& t, const Element& e, const ElementMatrix& a);

/// Chosen representatives of a class matrix.
ElementMatrix representative_matrix(const Model& m, const ClassMatrix& a);

/// Entrywise classes of a closed Element matrix with the stated degrees.
ClassMatrix class_of_matrix(const Model& m, const ElementMatrix& a, const DegreeMatrix& degrees);

/// Flattened coordinates of a class matrix: entry coordinate blocks
/// concatenated in row-major order.  Used for spans of matrix classes.
RationalVector flatten(const Model& m, const ClassMatrix& a);
Eigen::Index flat_dim(const Model& m, const DegreeMatrix& degrees);

}  // namespace dgalab

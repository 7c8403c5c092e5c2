#pragma once

#include "dgalab/rational.hpp"

#include <optional>
#include <vector>

namespace dgalab {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Result of solving A x = b exactly.  When consistent, `particular` has
/// zeros in all free coordinates and `kernel` columns form a basis of the
/// null space (one column per free column of A, in increasing column order,
/// with the free coordinate set to 1).
struct LinearSolution {
  bool consistent = false;
  RationalVector particular;
  RationalMatrix kernel;
};

/// In-place reduced row echelon form.  Pivot choice is deterministic:
/// leftmost unpivoted column, lowest row index with a nonzero entry.
/// Returns the pivot columns in order.
std::vector<Eigen::Index> reduced_row_echelon(RationalMatrix& m);

LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& rhs);

RationalMatrix kernel_basis(const RationalMatrix& a);

Eigen::Index rank(const RationalMatrix& a);

/// Deterministic basis of the column space: the pivot columns of `a`
/// (original vectors, not their echelon images).
RationalMatrix column_space_basis(const RationalMatrix& a);

bool in_column_span(const RationalMatrix& a, const RationalVector& v);

/// Incremental span used for basis extension and membership tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(Eigen::Index dim);

  /// Returns true (and keeps the vector) iff it enlarges the span.
  bool add(const RationalVector& v);
  bool contains(const RationalVector& v) const;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index dim() const { return dim_; }

  /// The kept original vectors, as matrix columns.
  RationalMatrix basis() const;

 private:
  RationalVector reduce(RationalVector v) const;

  Eigen::Index dim_;
  // Echelonized copies (row space view) plus the original kept vectors.
  std::vector<RationalVector> rows_;
  std::vector<Eigen::Index> pivots_;
  std::vector<RationalVector> kept_;
};

}  // namespace dgalab

#include "dgalab/linalg.hpp"

#include <stdexcept>

namespace dgalab {

std::vector<Eigen::Index> reduced_row_echelon(RationalMatrix& m) {
  const Eigen::Index nrows = m.rows(), ncols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < ncols && row < nrows; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = row; r < nrows; ++r) {
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index c = col; c < ncols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < nrows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = col; c < ncols; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& rhs) {
  if (a.rows() != rhs.rows())
    throw std::invalid_argument("solve_linear: inconsistent dimensions");
  const Eigen::Index n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = rhs;
  const auto pivots = reduced_row_echelon(aug);

  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == n) {
    sol.consistent = false;
    return sol;
  }
  sol.consistent = true;

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  sol.particular = RationalVector::Zero(n);
  for (size_t i = 0; i < pivots.size(); ++i)
    sol.particular(pivots[i]) = aug(static_cast<Eigen::Index>(i), n);

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

  sol.kernel = RationalMatrix::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    sol.kernel(f, static_cast<Eigen::Index>(k)) = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      sol.kernel(pivots[i], static_cast<Eigen::Index>(k)) =
          -aug(static_cast<Eigen::Index>(i), f);
  }
  return sol;
}

RationalMatrix kernel_basis(const RationalMatrix& a) {
  return solve_linear(a, RationalVector::Zero(a.rows())).kernel;
}

Eigen::Index rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return static_cast<Eigen::Index>(reduced_row_echelon(m).size());
}

RationalMatrix column_space_basis(const RationalMatrix& a) {
  RationalMatrix m = a;
  const auto pivots = reduced_row_echelon(m);
  RationalMatrix basis(a.rows(), static_cast<Eigen::Index>(pivots.size()));
  for (size_t i = 0; i < pivots.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = a.col(pivots[i]);
  return basis;
}

bool in_column_span(const RationalMatrix& a, const RationalVector& v) {
  return solve_linear(a, v).consistent;
}

SpanBuilder::SpanBuilder(Eigen::Index dim) : dim_(dim) {}

RationalVector SpanBuilder::reduce(RationalVector v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational c = v(pivots_[i]);
    if (!c.is_zero()) v -= c * rows_[i];
  }
  return v;
}

bool SpanBuilder::add(const RationalVector& v) {
  if (v.rows() != dim_) throw std::invalid_argument("SpanBuilder: bad dimension");
  RationalVector r = reduce(v);
  Eigen::Index p = -1;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    if (!r(i).is_zero()) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  r /= r(p);
  rows_.push_back(r);
  pivots_.push_back(p);
  kept_.push_back(v);
  return true;
}

bool SpanBuilder::contains(const RationalVector& v) const {
  RationalVector r = reduce(v);
  for (Eigen::Index i = 0; i < dim_; ++i)
    if (!r(i).is_zero()) return false;
  return true;
}

RationalMatrix SpanBuilder::basis() const {
  RationalMatrix b(dim_, static_cast<Eigen::Index>(kept_.size()));
  for (size_t i = 0; i < kept_.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = kept_[i];
  return b;
}

}  // namespace dgalab

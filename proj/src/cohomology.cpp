#include "dgalab/cohomology.hpp"

#include <stdexcept>

namespace dgalab {

CohClass operator+(const CohClass& a, const CohClass& b) {
  if (a.degree != b.degree || a.coords.rows() != b.coords.rows())
    throw std::invalid_argument("CohClass: degree mismatch in addition");
  return {a.degree, a.coords + b.coords};
}

CohClass operator-(const CohClass& a, const CohClass& b) {
  if (a.degree != b.degree || a.coords.rows() != b.coords.rows())
    throw std::invalid_argument("CohClass: degree mismatch in subtraction");
  return {a.degree, a.coords - b.coords};
}

const LinearSlice& Model::slice(int degree) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = slices_.find(degree);
  if (it == slices_.end())
    it = slices_.emplace(degree, monomial_basis(pres_.table(), degree)).first;
  return it->second;
}

const RationalMatrix& Model::diff_matrix(int degree) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = diff_.find(degree);
    if (it != diff_.end()) return it->second;
  }
  const LinearSlice& from = slice(degree);
  const LinearSlice& to = slice(degree + 1);
  RationalMatrix d(to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    Element img = differential(pres_, Element::monomial(from.basis[static_cast<size_t>(j)]));
    d.col(j) = coordinates(to, img);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return diff_.emplace(degree, std::move(d)).first->second;
}

const CohomologySlice& Model::cohomology(int degree) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = coh_.find(degree);
    if (it != coh_.end()) return it->second;
  }
  const LinearSlice& here = slice(degree);
  CohomologySlice c;
  c.degree = degree;
  if (here.dim() == 0) {
    c.image_cols = RationalMatrix::Zero(0, 0);
    c.rep_cols = RationalMatrix::Zero(0, 0);
  } else {
    const RationalMatrix ker = kernel_basis(diff_matrix(degree));
    RationalMatrix img;
    if (degree >= 1) {
      img = column_space_basis(diff_matrix(degree - 1));
    } else {
      img = RationalMatrix::Zero(here.dim(), 0);
    }
    // Extend the image basis by kernel vectors; the added ones represent H.
    SpanBuilder span(here.dim());
    for (Eigen::Index j = 0; j < img.cols(); ++j) span.add(img.col(j));
    std::vector<RationalVector> reps;
    for (Eigen::Index j = 0; j < ker.cols(); ++j)
      if (span.add(ker.col(j))) reps.push_back(ker.col(j));
    c.image_cols = img;
    c.rep_cols = RationalMatrix(here.dim(), static_cast<Eigen::Index>(reps.size()));
    for (size_t j = 0; j < reps.size(); ++j) c.rep_cols.col(static_cast<Eigen::Index>(j)) = reps[j];
    for (size_t j = 0; j < reps.size(); ++j)
      c.representatives.push_back(element_from_coordinates(here, reps[j]));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return coh_.emplace(degree, std::move(c)).first->second;
}

bool is_closed(const Model& m, const Element& e) {
  return differential(m.presentation(), e).is_zero();
}

CohClass class_of(const Model& m, const Element& e) {
  if (!is_closed(m, e)) throw std::invalid_argument("class_of: element is not closed");
  if (e.is_zero()) {
    // Degree of the zero element is ambiguous; callers wanting a typed zero
    // should use zero_class.
    return CohClass{0, RationalVector::Zero(m.cohomology(0).dim())};
  }
  auto deg = e.homogeneous_degree();
  if (!deg) throw std::invalid_argument("class_of: element is not homogeneous");
  const CohomologySlice& c = m.cohomology(*deg);
  const LinearSlice& s = m.slice(*deg);
  RationalMatrix a(s.dim(), c.image_cols.cols() + c.rep_cols.cols());
  a.leftCols(c.image_cols.cols()) = c.image_cols;
  a.rightCols(c.rep_cols.cols()) = c.rep_cols;
  const LinearSolution sol = solve_linear(a, coordinates(s, e));
  if (!sol.consistent)
    throw std::logic_error("class_of: closed element outside Ker(d) decomposition");
  return CohClass{*deg, sol.particular.tail(c.rep_cols.cols())};
}

CohClass class_of(const Model& m, const Element& e, int degree) {
  if (e.is_zero()) return zero_class(m, degree);
  auto deg = e.homogeneous_degree();
  if (!deg || *deg != degree)
    throw std::invalid_argument("class_of: element is not homogeneous of the stated degree");
  return class_of(m, e);
}

std::optional<Element> primitive_of(const Model& m, const Element& e) {
  if (!is_closed(m, e)) throw std::invalid_argument("primitive_of: element is not closed");
  if (e.is_zero()) return Element::zero();
  auto deg = e.homogeneous_degree();
  if (!deg) throw std::invalid_argument("primitive_of: element is not homogeneous");
  if (*deg == 0) {
    // Constants: only 0 is exact, and that was handled above.
    return std::nullopt;
  }
  const LinearSolution sol = solve_linear(m.diff_matrix(*deg - 1), coordinates(m.slice(*deg), e));
  if (!sol.consistent) return std::nullopt;
  return element_from_coordinates(m.slice(*deg - 1), sol.particular);
}

Element representative(const Model& m, const CohClass& u) {
  const CohomologySlice& c = m.cohomology(u.degree);
  if (u.coords.rows() != c.dim())
    throw std::invalid_argument("representative: coordinate length mismatch");
  Element e;
  for (int i = 0; i < c.dim(); ++i) {
    Element r = c.representatives[static_cast<size_t>(i)];
    r *= u.coords(i);
    e += r;
  }
  return e;
}

CohClass zero_class(const Model& m, int degree) {
  return CohClass{degree, RationalVector::Zero(m.cohomology(degree).dim())};
}

CohClass cup(const Model& m, const CohClass& u, const CohClass& v) {
  Element prod = multiply(m.table(), representative(m, u), representative(m, v));
  if (prod.is_zero()) return zero_class(m, u.degree + v.degree);
  return class_of(m, prod);
}

bool CohSubspace::contains(const CohClass& u) const {
  if (u.degree != degree) return false;
  if (u.is_zero()) return true;
  return in_column_span(basis, u.coords);
}

CohSubspace decomposable_subspace(const Model& m, int degree) {
  if (degree < 2) throw std::invalid_argument("decomposable_subspace: degree must be >= 2");
  const int h_dim = m.cohomology(degree).dim();
  SpanBuilder span(h_dim);
  for (int p = 1; p <= degree - 1; ++p) {
    const int q = degree - p;
    if (q < p) break;  // products commute up to sign; (p,q) with p<=q covers all
    const CohomologySlice& hp = m.cohomology(p);
    const CohomologySlice& hq = m.cohomology(q);
    for (int i = 0; i < hp.dim(); ++i) {
      for (int j = 0; j < hq.dim(); ++j) {
        Element prod = multiply(m.table(), hp.representatives[static_cast<size_t>(i)],
                                hq.representatives[static_cast<size_t>(j)]);
        if (prod.is_zero()) continue;
        span.add(class_of(m, prod).coords);
      }
    }
  }
  return CohSubspace{degree, span.basis()};
}

}  // namespace dgalab

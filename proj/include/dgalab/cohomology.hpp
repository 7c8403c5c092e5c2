#pragma once

#include "dgalab/presentation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace dgalab {

/// A cohomology class, held as coordinates in the chosen representative
/// basis of H^degree.
struct CohClass {
  int degree = 0;
  RationalVector coords;

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coords.rows(); ++i)
      if (!coords(i).is_zero()) return false;
    return true;
  }
  friend bool operator==(const CohClass& a, const CohClass& b) {
    if (a.degree != b.degree || a.coords.rows() != b.coords.rows()) return false;
    for (Eigen::Index i = 0; i < a.coords.rows(); ++i)
      if (a.coords(i) != b.coords(i)) return false;
    return true;
  }
  CohClass operator-() const { return {degree, -coords}; }
  friend CohClass operator+(const CohClass& a, const CohClass& b);
  friend CohClass operator-(const CohClass& a, const CohClass& b);
  friend CohClass operator*(const Rational& c, const CohClass& u) { return {u.degree, c * u.coords}; }
};

/// Basis data of H^degree: chosen cocycle representatives plus the linear
/// data needed to express any cocycle as image + representative combination.
struct CohomologySlice {
  int degree = 0;
  std::vector<Element> representatives;
  RationalMatrix image_cols;  // basis of Im(d) in slice coordinates
  RationalMatrix rep_cols;    // representative coordinates
  int dim() const { return static_cast<int>(representatives.size()); }
};

/// Immutable presentation plus lazily computed, internally cached slice and
/// cohomology data.  Safe for concurrent use.
class Model {
 public:
  explicit Model(DgaPresentation p) : pres_(std::move(p)) {}

  const DgaPresentation& presentation() const { return pres_; }
  const GeneratorTable& table() const { return pres_.table(); }

  const LinearSlice& slice(int degree) const;
  /// Matrix of d : A^degree -> A^(degree+1) in the slice bases.
  const RationalMatrix& diff_matrix(int degree) const;
  const CohomologySlice& cohomology(int degree) const;

 private:
  DgaPresentation pres_;
  mutable std::mutex mu_;
  mutable std::map<int, LinearSlice> slices_;
  mutable std::map<int, RationalMatrix> diff_;
  mutable std::map<int, CohomologySlice> coh_;
};

bool is_closed(const Model& m, const Element& e);

/// Cohomology class of a closed element.  Throws if not closed.
CohClass class_of(const Model& m, const Element& e);

/// As above with an explicit degree, so the zero element gets a typed zero
/// class.  Throws if e is nonzero of a different degree.
CohClass class_of(const Model& m, const Element& e, int degree);

/// Solves d b = e.  Returns the deterministic particular solution, or
/// nullopt when e is not exact.  Throws if e is not closed.
std::optional<Element> primitive_of(const Model& m, const Element& e);

Element representative(const Model& m, const CohClass& u);

CohClass zero_class(const Model& m, int degree);
CohClass cup(const Model& m, const CohClass& u, const CohClass& v);

/// A linear subspace of H^degree with a membership test.
struct CohSubspace {
  int degree = 0;
  RationalMatrix basis;  // columns, in H^degree coordinates
  int dim() const { return static_cast<int>(basis.cols()); }
  bool contains(const CohClass& u) const;
};

/// Span of all cup products of positive-degree classes landing in H^degree.
CohSubspace decomposable_subspace(const Model& m, int degree);

}  // namespace dgalab

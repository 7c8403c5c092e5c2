#pragma once

#include "dgalab/massey.hpp"

namespace dgalab {

/// The cohomological model of a tubular neighborhood in a symplectic
/// blow-up: base model extended by x (degree 2) and y (degree 2m-1) with
/// d y = x^m + c_1 x^{m-1} + ... + c_m.
class BlowupModel {
 public:
  BlowupModel(const DgaPresentation& base, int m, std::vector<Element> chern);

  const Model& base() const { return base_; }
  const Model& total() const { return total_; }
  int half_codim() const { return m_; }
  const std::string& x_name() const { return x_name_; }
  const std::string& y_name() const { return y_name_; }
  int x_index() const { return total_.table().find(x_name_); }

  /// Injection of base elements into the extension.
  Element inject(const Element& e) const;
  ElementMatrix inject(const ElementMatrix& e) const;
  /// Inverse on x- and y-free elements; throws otherwise.
  Element restrict_to_base(const Element& e) const;

  Element x() const { return generator_element(total_.table(), x_name_); }
  Element x_power(int k) const { return power(total_.table(), x(), k); }

 private:
  // Note the order: the names are assigned while total_ is constructed.
  Model base_;
  std::string x_name_, y_name_;
  Model total_;
  int m_ = 0;
  std::vector<Element> chern_;
  std::vector<int> base_to_total_;  // canonical index map
};

BlowupModel build_neighborhood(const DgaPresentation& base, int m,
                               std::vector<Element> chern = {});

/// Degree-wise check that { a^i cup (basis of H(base)) : i < m } is a basis
/// of H(extension), per the free-module decomposition.
struct ModuleDecomposition {
  int degree_cap = 0;
  std::vector<int> extension_dims;          // dim H^l(total), l = 0..cap
  std::vector<int> expected_dims;           // sum of base dims
  bool ok = true;
  std::string failure;
};
ModuleDecomposition module_decomposition(const BlowupModel& bm, int degree_cap);

/// Lifted class matrices a cup S_i = [x ^ R_i].
std::vector<ClassMatrix> lift_classes(const BlowupModel& bm,
                                      const std::vector<ClassMatrix>& s);

/// Lifted defining system with blocks x^{j-i+1} ^ X(i,j); valid by the
/// multiplicativity of x.
DefiningSystem lift_defining_system(const BlowupModel& bm, const DefiningSystem& sys);

/// Unique expansion e = sum_l x^l ^ X_l with X_l in the base, for elements
/// free of y.  Index l in the result is the x-power.
std::vector<Element> expand_in_x(const BlowupModel& bm, const Element& e);

/// Top-coefficient reduction: extract the top x-coefficient system
/// A_1 = (X_{j-i+1}(i,j)) of a lifted-degree defining system and check it
/// defines the base product; if the lifted cocycle is exact the base one
/// must be too.
struct LiftReductionReport {
  bool hypothesis_ok = true;       // arity < m
  bool extraction_valid = true;    // A_1 satisfies conditions 1-3 over the base
  bool top_coefficient_matches = true;  // x^n-coefficient of c(A) equals c(A_1)
  bool lifted_cocycle_exact = false;
  bool base_cocycle_exact = false;
  std::string detail;
  DefiningSystem extracted;

  /// The contrapositive reading: a vanishing lifted certificate forces a
  /// vanishing base certificate.
  bool reduction_holds() const {
    return extraction_valid && top_coefficient_matches &&
           (!lifted_cocycle_exact || base_cocycle_exact);
  }
};
LiftReductionReport verify_lift_reduction(const BlowupModel& bm,
                                   const std::vector<ClassMatrix>& base_classes,
                                   const DefiningSystem& lifted);

/// Desk verification of the lifted-triple obstruction on concrete data:
/// the lifted value is a^3 cup [c(A_1)], and it lies outside the lifted
/// indeterminacy precisely because [c(A_1)] misses the base indeterminacy
/// span (the a^3-coefficient equation has no solution).
struct LiftedTripleReport {
  bool hypothesis_ok = true;  // m >= 4
  bool base_value_outside_base_indeterminacy = false;
  bool lifted_value_outside_lifted_indeterminacy = false;
  bool lifted_value_matches_a3_cup = false;  // [c(lift)] = a^3 cup [c(A_1)]
  ClassMatrix lifted_value;  // curvature-signed
  bool lifted_nontrivial() const {
    return base_value_outside_base_indeterminacy && lifted_value_outside_lifted_indeterminacy;
  }
};
LiftedTripleReport verify_lifted_triple(const BlowupModel& bm, const ClassMatrix& s1,
                                   const ClassMatrix& s2, const ClassMatrix& s3);

/// Desk verification of the lifted-quadruple obstruction on concrete data:
/// checks the x-expansion equations of the lifted system blockwise and the
/// reducibility contradiction on the a^4-coefficient.
struct LiftedQuadrupleReport {
  bool hypothesis_ok = true;  // 2m > 2 sdeg of the product value
  bool equations_ok = false;  // the four expansion equation families hold
  bool extraction_valid = false;
  bool base_value_not_reducible = false;  // [c(A_1)] outside N(H+.H+)
  bool lifted_nontrivial() const {
    return equations_ok && extraction_valid && base_value_not_reducible;
  }
};
LiftedQuadrupleReport verify_lifted_quadruple(const BlowupModel& bm,
                                   const std::vector<ClassMatrix>& base_classes,
                                   const DefiningSystem& base_system);

}  // namespace dgalab

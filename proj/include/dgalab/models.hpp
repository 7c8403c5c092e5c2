#pragma once

#include "dgalab/cohomology.hpp"

#include <optional>

namespace dgalab {

/// A finite-dimensional Lie algebra by structure constants:
/// [e_i, e_j] = sum_k c(k,i,j) e_k, with c antisymmetric in (i, j).
/// Indices are 0-based here; bracket(k) is the n-by-n matrix c(k,.,.).
struct LieAlgebraSpec {
  int dimension = 0;
  std::vector<RationalMatrix> brackets;  // brackets[k](i,j) = c_k^{ij}

  Rational c(int k, int i, int j) const { return brackets[static_cast<size_t>(k)](i, j); }
};

struct LieAlgebraCheck {
  bool antisymmetric = true;
  bool jacobi = true;
  bool nilpotent = true;
  std::string witness;
  bool ok() const { return antisymmetric && jacobi && nilpotent; }
};

LieAlgebraCheck check_lie_algebra(const LieAlgebraSpec& g);

/// Chevalley-Eilenberg presentation: n degree-1 generators with
/// d a_k = sum_{i<j} c_k^{ij} a_i ^ a_j.  Throws (with a witness) when the
/// structure constants fail antisymmetry, Jacobi, or nilpotency.
DgaPresentation chevalley_eilenberg(const LieAlgebraSpec& g,
                                    const std::string& name_prefix = "a");

LieAlgebraSpec heisenberg_brackets();
LieAlgebraSpec witt_brackets(int n);

/// Minimal model of the 3-dimensional Heisenberg nilmanifold:
/// a1, a2, a3 of degree 1 with d a3 = a1 ^ a2.
DgaPresentation heisenberg_model();

/// 2n+1 degree-1 generators ap1..apn, am1..amn, b with
/// d b = ap1 ^ am1 + ... + apn ^ amn.
DgaPresentation generalized_heisenberg_model(int n);

/// Witt quotient model: generators w1..wn of degree 1,
/// d wk = sum_{i < k/2} (k - 2i) wi ^ w(k-i).
DgaPresentation witt_model(int n);

/// Minimal model of the n-sphere.
DgaPresentation sphere_model(int n);

/// One closed degree-1 generator t; the minimal model of the circle.
DgaPresentation circle_model();

/// The symplectic form (2m-1) w1^w(2m) + (2m-3) w2^w(2m-1) + ... + wm^w(m+1)
/// over a Witt model with at least 2m generators.
Element witt_symplectic_form(const GeneratorTable& witt, int m);

/// Second grading and filtration data for Witt-style models, where the k-th
/// declared generator carries weight k.
struct BigradedView {
  Element element;
  int deg1 = 0;                      // word-length grading (ordinary degree)
  std::optional<int> deg2;           // weight, when homogeneous
  std::vector<int> deg2_values;      // multiset of weights otherwise
  int filtration = 0;                // smallest k with e in Lambda(w1..wk); 0 for 0
};

/// Weight of a monomial: sum of generator weights (1-based declared index).
int weight_of(const GeneratorTable& t, const Monomial& m);

/// Filtration level f(e): the largest generator index used; f(0) = 0.
int filtration_level(const Element& e);

BigradedView bigrade(const GeneratorTable& t, const Element& e);

}  // namespace dgalab

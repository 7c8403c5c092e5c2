#pragma once

#include "dgalab/homomorphism.hpp"

#include <map>
#include <utility>

namespace dgalab {

/// Strictly upper triangular matrix of Elements: the finite slice M_n(A) of
/// the algebra of upper triangular matrices over A.  Entries use 1-based (row, col) positions to match
/// the positions quoted throughout ((1, n+1) corners and so on).
class FormMatrix {
 public:
  FormMatrix() = default;
  explicit FormMatrix(int size) : n_(size), entries_(static_cast<size_t>(size * size)) {}

  int size() const { return n_; }

  const Element& at(int i, int j) const;
  /// Sets an entry; throws unless 1 <= i < j <= size.
  void set(int i, int j, Element e);

  bool is_zero() const;

  /// Copy padded to at least `size`.
  FormMatrix padded(int size) const;

  friend bool operator==(const FormMatrix& a, const FormMatrix& b);

 private:
  int n_ = 0;
  std::vector<Element> entries_;  // row-major
};

FormMatrix single_entry_matrix(int size, int i, int j, Element e);

FormMatrix add(const FormMatrix& a, const FormMatrix& b);
FormMatrix subtract(const FormMatrix& a, const FormMatrix& b);
FormMatrix matrix_multiply(const GeneratorTable& t, const FormMatrix& a, const FormMatrix& b);
FormMatrix matrix_bar(const GeneratorTable& t, const FormMatrix& a);
FormMatrix matrix_d(const DgaPresentation& p, const FormMatrix& a);

/// The superdiagonal bigrading M^{p,k}: supported on the p-th superdiagonal
/// with entries homogeneous of degree k.  Returns nullopt for inhomogeneous
/// matrices the zero matrix included (no canonical bidegree).
struct MatrixBidegree {
  int diag = 0;  // p
  int form = 0;  // k
};
std::optional<MatrixBidegree> bidegree(const FormMatrix& a);

/// [A,B] = A.B - (-1)^{kl} B.A on bigraded matrices.  Throws on
/// inhomogeneous input.
FormMatrix lie_bracket(const GeneratorTable& t, const FormMatrix& a, const FormMatrix& b);

/// Ker A data.  Generating positions (i, j) are those whose unit matrix
/// annihilates A on both sides; the strict part Ker'A uses the
/// first-nonzero-column / last-nonzero-row rule.
struct KernelSubmodule {
  int size = 0;
  std::vector<std::pair<int, int>> generating;
  std::vector<std::pair<int, int>> strict;

  bool is_generating(int i, int j) const;
};
KernelSubmodule kernel_submodule(const FormMatrix& a);

/// Maurer-Cartan operator mu(A) = dA - bar(A).A.
FormMatrix maurer_cartan(const DgaPresentation& p, const FormMatrix& a);

struct FormalConnectionCheck {
  bool formal = false;
  /// First offending position in row-major order when not formal.
  std::optional<std::pair<int, int>> witness;
};

/// A is a formal connection iff mu(A) vanishes outside the generating
/// positions of Ker A.
FormalConnectionCheck is_formal_connection(const DgaPresentation& p, const FormMatrix& a);

/// Exact check of d mu(A) = bar(mu(A)).A - A.mu(A); for formal connections
/// additionally checks that mu(A) is entrywise closed.
bool bianchi_check(const DgaPresentation& p, const FormMatrix& a);

/// Classes of the nonzero entries of mu(A) for a formal connection.  Note
/// the sign: these are the classes of dA - bar(A).A; the classical product
/// conventions of the massey module differ by a global sign.
std::map<std::pair<int, int>, CohClass> curvature_classes(const Model& m, const FormMatrix& a);

/// The initial-data move A' = A + (db)_{ij} + A.(b)_{ij} - (bar b)_{ij}.A.
FormMatrix initial_data_move(const DgaPresentation& p, const FormMatrix& a, int i, int j,
                             const Element& b);

/// Entrywise application of a homomorphism; maps Maurer-Cartan solutions to
/// solutions.
FormMatrix pushforward(const DgaHomomorphism& f, const FormMatrix& a);

}  // namespace dgalab

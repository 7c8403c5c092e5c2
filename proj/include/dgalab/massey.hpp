#pragma once

#include "dgalab/class_matrix.hpp"
#include "dgalab/form_matrix.hpp"

#include <functional>

namespace dgalab {

/// Thrown when a product's defining obstruction fails (for triples: a
/// nonzero cup product among consecutive inputs).
struct UndefinedProductError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a budgeted search gives out before an answer is certain.
struct BudgetExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A defining system for an n-tuple (matrix) Massey product: blocks X(i,j)
/// for 1 <= i <= j <= n, (i,j) != (1,n), satisfying
///   1. [X(i,i)] = V_i,
///   2. D(X(i,j)) = (D(V_i)-1) * ... * (D(V_j)-1) + 1,
///   3. d X(i,j) = sum_{r=i}^{j-1} bar(X(i,r)) . X(r+1,j).
struct DefiningSystem {
  int arity = 0;
  bool matrix_flavor = false;
  std::vector<ClassMatrix> inputs;
  std::map<std::pair<int, int>, ElementMatrix> blocks;

  const ElementMatrix& block(int i, int j) const { return blocks.at({i, j}); }
};

/// Degree matrix mandated for block (i, j) by condition 2.
DegreeMatrix block_degrees(const std::vector<ClassMatrix>& inputs, int i, int j);

/// Checks that consecutive class matrices are multipliable with
/// positive-degree entries; throws UndefinedProductError when violated.
void require_multipliable_chain(const std::vector<ClassMatrix>& inputs);

/// The cocycle c(A) = sum_{r=1}^{n-1} bar(X(1,r)) . X(r+1,n).  This is the
/// cocycle convention; the curvature-signed product value is -[c(A)].
ElementMatrix system_cocycle(const Model& m, const DefiningSystem& sys);

DegreeMatrix cocycle_degrees(const std::vector<ClassMatrix>& inputs);

struct SystemCheck {
  bool ok = true;
  std::string failure;
  std::pair<int, int> position{0, 0};
};

/// Exact verification of conditions 1-3.
SystemCheck check_defining_system(const Model& m, const DefiningSystem& sys);

/// The membership certificate checker: the system is valid for `inputs`
/// and [c(A)] equals `claimed`.
bool verify_membership(const Model& m, const ClassMatrix& claimed,
                       const std::vector<ClassMatrix>& inputs, const DefiningSystem& sys,
                       std::string* diagnostics = nullptr);

struct SearchOptions {
  std::vector<Rational> grid{Rational(1), Rational(-1), Rational(2), Rational(-2)};
  int max_perturbation_weight = 1;  // nonzero kernel coefficients per block
  long node_budget = 200000;        // total candidate blocks examined
};

enum class SearchStatus { found, exhausted, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<DefiningSystem> system;
  long systems_seen = 0;
};

/// Deterministic budgeted search: fills diagonals in increasing j-i with the
/// deterministic particular solution, backtracking over kernel-basis
/// perturbations drawn from the grid.  Returns the first defining system.
SearchResult find_defining_system(const Model& m, const std::vector<ClassMatrix>& inputs,
                                  const SearchOptions& opts = {});

/// Visits every defining system reachable within the options; the callback
/// returns false to stop.  Returns exhausted when the parametrized tree was
/// fully explored.
SearchResult enumerate_defining_systems(const Model& m, const std::vector<ClassMatrix>& inputs,
                                        const SearchOptions& opts,
                                        const std::function<bool(const DefiningSystem&)>& visit);

/// Scalar triple product, Example-2 signs: value = [(-1)^{p+1} a^g +
/// (-1)^{p+q} f^c] = -[c(A)].  Indeterminacy is the exact affine description
/// alpha.H^{q+r-1} + H^{p+q-1}.gamma.
struct TripleProduct {
  CohClass value;
  CohSubspace indeterminacy;
  bool trivial = false;
  DefiningSystem system;
};
TripleProduct triple_product(const Model& m, const CohClass& alpha, const CohClass& beta,
                             const CohClass& gamma);

/// Span of matrix classes, used for indeterminacies of matrix products.
struct ClassMatrixSpan {
  int rows = 0;
  int cols = 0;
  DegreeMatrix degrees;
  RationalMatrix basis;  // columns = flattened generators
  int dim() const { return static_cast<int>(basis.cols()); }
  bool contains(const Model& m, const ClassMatrix& v) const;
};

/// Triple-product indeterminacy In<V1,V2,V3> = { bar(V1).X2 + bar(X1).V3 },
/// an exact linear span over all admissible class matrices X1, X2.
ClassMatrixSpan matrix_triple_indeterminacy(const Model& m, const ClassMatrix& v1,
                                            const ClassMatrix& v2, const ClassMatrix& v3);

struct MatrixTripleProduct {
  ClassMatrix value;  // curvature-signed: -[c(A)]
  ClassMatrixSpan indeterminacy;
  bool trivial = false;
  DefiningSystem system;
};
MatrixTripleProduct matrix_triple_product(const Model& m, const ClassMatrix& v1,
                                          const ClassMatrix& v2, const ClassMatrix& v3);

/// Entrywise membership in the decomposable ideal H+.H+.
bool is_completely_reducible(const Model& m, const ClassMatrix& value);

/// The affine value set (value + span) misses the decomposable ideal.
bool is_strictly_irreducible(const Model& m, const ClassMatrix& value,
                             const ClassMatrixSpan& indeterminacy);

enum class TriState { yes, no, inconclusive };

/// Strict definedness: every proper sub-product <V_i..V_j> with
/// 1 <= j-i <= n-2 contains only zero.  Pairs and triples are decided exactly; longer
/// sub-products by budgeted enumeration.
TriState is_strictly_defined(const Model& m, const std::vector<ClassMatrix>& inputs,
                             const SearchOptions& opts = {});

/// Filtration bookkeeping for systems of degree-1 class matrices over a
/// Witt model: each block must satisfy f(X(i,j)) <= j-i+2, and the cocycle
/// bound implied by f(a^b) <= max is at most the arity.
struct WeightBound {
  int arity = 0;
  int block_bound = 0;   // max over r of max(f(X(1,r)), f(X(r+1,n)))
  int actual = 0;        // f(c(A))
  bool blocks_ok = true;  // every f(X(i,j)) <= j-i+2
  bool ok() const { return blocks_ok && actual <= block_bound && block_bound <= arity; }
};
WeightBound strict_weight_bound(const Model& m, const DefiningSystem& sys);

/// The flattened strictly-upper-triangular matrix of a defining system (zero
/// corner block); satisfies the Maurer-Cartan equation iff the system is
/// valid, and -mu picks out c(A) at the corner block.
FormMatrix to_form_matrix(const Model& m, const DefiningSystem& sys);

/// The explicit (2m+2)x(2m+2) Maurer-Cartan solution over witt_model(2m)
/// whose curvature is the symplectic form, and the same data carved into
/// the defining system for the 2m-tuple product of degree-1 class matrices.
FormMatrix witt_connection_matrix(const Model& witt, int m);
DefiningSystem witt_connection_system(const Model& witt, int m);

}  // namespace dgalab

#pragma once

#include "dgalab/cohomology.hpp"

#include <map>
#include <vector>

namespace dgalab {

/// A basis word of the reduced bar construction: letters are positive-degree
/// basis monomials.  Bidegree (-length, internal degree).
struct BarWord {
  std::vector<Monomial> letters;

  int length() const { return static_cast<int>(letters.size()); }
  int internal_degree() const;
  int total_degree() const { return internal_degree() - length(); }

  friend bool operator<(const BarWord& a, const BarWord& b) { return a.letters < b.letters; }
  friend bool operator==(const BarWord& a, const BarWord& b) { return a.letters == b.letters; }
};

/// Exact chain in the bar construction; all maps are multilinear over basis
/// words.
class BarChain {
 public:
  using Terms = std::map<BarWord, Rational>;

  BarChain() = default;
  static BarChain word(BarWord w, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  BarChain& add(const BarWord& w, const Rational& c);
  BarChain& operator+=(const BarChain& o);
  BarChain& operator-=(const BarChain& o);
  friend bool operator==(const BarChain& a, const BarChain& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// [e] as a chain of basis words (expands the element's monomials); e must
/// lie in the augmentation ideal.
BarChain suspension_chain(const Element& e);

/// Inner differential: sum_i (-1)^i [bar a_1|...|bar a_{i-1}|d a_i|...|a_n];
/// preserves word length, raises internal degree by 1.
BarChain inner_differential(const Model& m, const BarChain& c);

/// Combinatorial differential: the reduced-bar adjacent merge
/// sum_{i=2}^{n} (-1)^i [bar a_1|...|bar a_{i-1} a_i|...|a_n];
/// shortens word length by 1, preserves internal degree.
BarChain combinatorial_differential(const Model& m, const BarChain& c);

BarChain total_differential(const Model& m, const BarChain& c);

/// Shuffle product with the signature rule: a simple transposition of
/// letters of degrees p, q carries (-1)^{(p-1)(q-1)}.
BarChain shuffle_product(const Model& m, const BarChain& a, const BarChain& b);

/// Tensor chain for the diagonal.
using BarTensor = std::map<std::pair<BarWord, BarWord>, Rational>;
BarTensor diagonal(const BarWord& w);

/// Finite window of the bar construction: words of length <= max_length and
/// internal degree <= degree_cap.
struct BarSlice {
  int max_length = 0;
  int degree_cap = 0;
  // words[n] lists basis words of length n grouped by internal degree.
  std::map<std::pair<int, int>, std::vector<BarWord>> words;  // (length, q) -> basis

  const std::vector<BarWord>& basis(int length, int q) const;
};

BarSlice bar_slice(const Model& m, int max_length, int degree_cap);

/// Dimension tables of the first two pages of the word-length filtration
/// spectral sequence.  Keys are (word length n, internal degree q), shown as
/// column -n of the second-quadrant layout.  E1 = H(inner), E2 = H(E1, d1)
/// with d1 induced by the combinatorial differential.
struct PageTable {
  int r = 1;
  std::map<std::pair<int, int>, int> dims;
  int dim(int length, int q) const;
};

/// Computes E_r (r = 1, 2) on the window where the slice suffices:
/// length <= max_length - (r - 1), q <= degree_cap - 1.  Throws when the
/// requested window does not fit.
PageTable page(const Model& m, const BarSlice& slice, int r, int max_len_wanted, int max_q_wanted);

/// E2^{-1,q} coordinates of a positive class: the projection
/// H+ -> H+ / H+.H+ in the deterministic quotient basis.
RationalVector suspension_to_e2(const Model& m, const CohClass& u);

/// dim (H+/H+.H+)^q.
int indecomposable_dim(const Model& m, int q);

}  // namespace dgalab

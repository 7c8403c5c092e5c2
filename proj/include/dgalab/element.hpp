#pragma once

#include "dgalab/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgalab {

struct GeneratorSpec {
  std::string name;
  int degree = 0;
};

/// Generators of a free graded-commutative algebra, held in the canonical
/// order: ascending degree, ties broken by declaration order.  Monomials
/// index generators by their canonical position.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  explicit GeneratorTable(std::vector<GeneratorSpec> declared);

  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorSpec& gen(int canonical) const { return gens_[static_cast<size_t>(canonical)]; }
  int degree(int canonical) const { return gens_[static_cast<size_t>(canonical)].degree; }
  bool odd(int canonical) const { return degree(canonical) % 2 != 0; }
  const std::string& name(int canonical) const { return gens_[static_cast<size_t>(canonical)].name; }

  /// Canonical index for a name, or -1.
  int find(const std::string& name) const;
  int declaration_index(int canonical) const { return decl_of_canon_[static_cast<size_t>(canonical)]; }
  int canonical_index_of_declared(int decl) const { return canon_of_decl_[static_cast<size_t>(decl)]; }

  const std::vector<GeneratorSpec>& generators() const { return gens_; }

 private:
  std::vector<GeneratorSpec> gens_;
  std::vector<int> decl_of_canon_;
  std::vector<int> canon_of_decl_;
  std::map<std::string, int> by_name_;
};

/// A sign-normalized monomial: factors sorted by canonical generator index,
/// exponents >= 1, odd generators with exponent exactly 1.  The empty factor
/// list is the unit.  Total degree is cached.
class Monomial {
 public:
  struct Factor {
    int gen = 0;
    int exp = 1;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  Monomial(int degree, std::vector<Factor> factors)
      : degree_(degree), factors_(std::move(factors)) {}

  static Monomial unit() { return Monomial(); }
  static Monomial generator(const GeneratorTable& t, int canonical);

  int degree() const { return degree_; }
  bool is_unit() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Graded-lexicographic order: total degree first, then the factor
  /// sequence compared lexicographically.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.factors_ < b.factors_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }

 private:
  int degree_ = 0;
  std::vector<Factor> factors_;
};

/// Product of two monomials.  Returns the Koszul sign (+1/-1) and the
/// sorted monomial, or sign 0 when an odd generator repeats.
struct MonomialProduct {
  int sign = 0;
  Monomial monomial;
};
MonomialProduct monomial_multiply(const GeneratorTable& t, const Monomial& a, const Monomial& b);

/// Exact linear combination of monomials; the universal value type.
/// Invariant: no zero coefficients are stored.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;

  static Element zero() { return Element(); }
  static Element constant(const Rational& c);
  static Element monomial(const Monomial& m, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Degree when homogeneous (zero counts as homogeneous of any degree and
  /// reports nullopt together with is_zero() == true).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  int max_degree() const;

  /// Component of the given degree.
  Element component(int degree) const;

  Element& add_term(const Monomial& m, const Rational& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element e) { return e *= c; }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

Element multiply(const GeneratorTable& t, const Element& a, const Element& b);

/// Degree-wise involution a -> (-1)^deg a; an algebra automorphism.
Element bar_involution(const GeneratorTable& t, const Element& a);

Element generator_element(const GeneratorTable& t, int canonical);
Element generator_element(const GeneratorTable& t, const std::string& name);

/// Wedge power e^k (k >= 0).
Element power(const GeneratorTable& t, const Element& e, int k);

/// Coordinatization of one homogeneous degree of the free algebra.
struct LinearSlice {
  int degree = 0;
  std::vector<Monomial> basis;
  std::map<Monomial, int> index;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Complete, duplicate-free, deterministically ordered monomial basis of
/// the given degree.
LinearSlice monomial_basis(const GeneratorTable& t, int degree);

RationalVector coordinates(const LinearSlice& s, const Element& e);
Element element_from_coordinates(const LinearSlice& s, const RationalVector& v);

std::string to_string(const GeneratorTable& t, const Monomial& m);
std::string to_string(const GeneratorTable& t, const Element& e);

}  // namespace dgalab

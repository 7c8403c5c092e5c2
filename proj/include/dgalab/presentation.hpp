#pragma once

#include "dgalab/element.hpp"

#include <string>
#include <vector>

namespace dgalab {

/// A finitely generated graded-commutative DGA: generators with degrees plus
/// the differential image of each generator.  The augmentation is the
/// positive-degree ideal.
class DgaPresentation {
 public:
  DgaPresentation() = default;
  DgaPresentation(std::vector<GeneratorSpec> generators, std::vector<Element> differentials_by_declaration);

  const GeneratorTable& table() const { return table_; }
  int generator_count() const { return table_.size(); }

  /// Differential image of a generator, by canonical index.
  const Element& differential_of(int canonical) const { return diff_[static_cast<size_t>(canonical)]; }

 private:
  GeneratorTable table_;
  std::vector<Element> diff_;  // canonical order
};

/// Extends d by the Leibniz rule d(a^b) = da^b + (-1)^deg(a) a^db.
Element differential(const DgaPresentation& p, const Element& e);

struct ValidationReport {
  bool d_squared_zero = true;
  std::string d_squared_witness;
  bool homogeneous = true;
  std::string homogeneity_witness;
  bool minimal = true;
  std::string minimality_witness;
  bool connected = true;       // H^0 = k
  bool simply_connected = true;  // H^1 = 0
  int h1_dim = 0;

  bool ok() const { return d_squared_zero && homogeneous; }
};

ValidationReport validate(const DgaPresentation& p);

/// Tensor product of presentations.  Colliding generator names from `b` are
/// renamed deterministically with numeric suffixes.
DgaPresentation tensor_product(const DgaPresentation& a, const DgaPresentation& b);

}  // namespace dgalab

#pragma once

#include "dgalab/cohomology.hpp"

namespace dgalab {

/// A DGA homomorphism given by generator images in a target presentation.
/// Images are indexed by the source's canonical generator order.
struct DgaHomomorphism {
  const Model* source = nullptr;
  const Model* target = nullptr;
  std::vector<Element> images;
};

struct HomomorphismCheck {
  bool degrees_ok = true;
  bool commutes_with_d = true;
  std::string witness;
  bool ok() const { return degrees_ok && commutes_with_d; }
};

HomomorphismCheck check_homomorphism(const DgaHomomorphism& f);

/// Multiplicative linear extension of the generator images.
Element apply(const DgaHomomorphism& f, const Element& e);

/// Induced map on cohomology: f*[e] = [f(e)].
CohClass induced_map(const DgaHomomorphism& f, const CohClass& u);

DgaHomomorphism identity_homomorphism(const Model& m);

/// A degree-respecting multiplicative map into the cohomology ring of a
/// model, seen as a DGA with zero differential.  Generator images are
/// cohomology classes (possibly zero).  This is the shape of the
/// formality-test maps: valid iff every generator differential maps to the
/// zero class.
struct CohomologyValuedMap {
  const Model* source = nullptr;
  const Model* target = nullptr;    // classes live in H*(target)
  std::vector<CohClass> images;     // canonical order of source generators
};

HomomorphismCheck check_cohomology_valued(const CohomologyValuedMap& f);

/// Image of a homogeneous element under the multiplicative extension,
/// computed with cup products in H*(target).
CohClass apply_to_cohomology(const CohomologyValuedMap& f, const Element& e, int degree);

}  // namespace dgalab

#include "dgalab/homomorphism.hpp"

#include <stdexcept>

namespace dgalab {

HomomorphismCheck check_homomorphism(const DgaHomomorphism& f) {
  HomomorphismCheck r;
  const GeneratorTable& ts = f.source->table();
  if (static_cast<int>(f.images.size()) != ts.size())
    throw std::invalid_argument("check_homomorphism: one image per generator required");
  for (int g = 0; g < ts.size(); ++g) {
    const Element& img = f.images[static_cast<size_t>(g)];
    if (img.is_zero()) continue;
    auto deg = img.homogeneous_degree();
    if (!deg || *deg != ts.degree(g)) {
      r.degrees_ok = false;
      r.witness = "image of " + ts.name(g) + " is not homogeneous of degree " +
                  std::to_string(ts.degree(g));
      return r;
    }
  }
  for (int g = 0; g < ts.size(); ++g) {
    const Element lhs = differential(f.target->presentation(), f.images[static_cast<size_t>(g)]);
    const Element rhs = apply(f, f.source->presentation().differential_of(g));
    if (!(lhs == rhs)) {
      r.commutes_with_d = false;
      r.witness = "d f(" + ts.name(g) + ") != f(d " + ts.name(g) + ")";
      return r;
    }
  }
  return r;
}

Element apply(const DgaHomomorphism& f, const Element& e) {
  const GeneratorTable& tt = f.target->table();
  Element out;
  for (const auto& [m, coeff] : e.terms()) {
    Element prod = Element::constant(coeff);
    for (const auto& fac : m.factors()) {
      const Element& img = f.images[static_cast<size_t>(fac.gen)];
      for (int k = 0; k < fac.exp; ++k) {
        prod = multiply(tt, prod, img);
        if (prod.is_zero()) break;
      }
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

CohClass induced_map(const DgaHomomorphism& f, const CohClass& u) {
  Element img = apply(f, representative(*f.source, u));
  return class_of(*f.target, img, u.degree);
}

DgaHomomorphism identity_homomorphism(const Model& m) {
  DgaHomomorphism f;
  f.source = &m;
  f.target = &m;
  for (int g = 0; g < m.table().size(); ++g) f.images.push_back(generator_element(m.table(), g));
  return f;
}

HomomorphismCheck check_cohomology_valued(const CohomologyValuedMap& f) {
  HomomorphismCheck r;
  const GeneratorTable& ts = f.source->table();
  if (static_cast<int>(f.images.size()) != ts.size())
    throw std::invalid_argument("check_cohomology_valued: one image per generator required");
  for (int g = 0; g < ts.size(); ++g) {
    const CohClass& img = f.images[static_cast<size_t>(g)];
    if (!img.is_zero() && img.degree != ts.degree(g)) {
      r.degrees_ok = false;
      r.witness = "image of " + ts.name(g) + " has wrong degree";
      return r;
    }
  }
  // The target differential is zero, so commuting with d means every
  // generator differential maps to the zero class.
  for (int g = 0; g < ts.size(); ++g) {
    const Element& dg = f.source->presentation().differential_of(g);
    if (dg.is_zero()) continue;
    CohClass img = apply_to_cohomology(f, dg, ts.degree(g) + 1);
    if (!img.is_zero()) {
      r.commutes_with_d = false;
      r.witness = "f(d " + ts.name(g) + ") != 0 in H*(target)";
      return r;
    }
  }
  return r;
}

CohClass apply_to_cohomology(const CohomologyValuedMap& f, const Element& e, int degree) {
  const Model& tgt = *f.target;
  CohClass out = zero_class(tgt, degree);
  for (const auto& [m, coeff] : e.terms()) {
    if (m.degree() != degree)
      throw std::invalid_argument("apply_to_cohomology: element is not homogeneous of the stated degree");
    CohClass prod{0, RationalVector::Zero(tgt.cohomology(0).dim())};
    // Unit class of H^0.
    if (prod.coords.rows() != 1)
      throw std::logic_error("apply_to_cohomology: target H^0 is not one-dimensional");
    prod.coords(0) = coeff;
    bool zero = false;
    for (const auto& fac : m.factors()) {
      const CohClass& img = f.images[static_cast<size_t>(fac.gen)];
      for (int k = 0; k < fac.exp && !zero; ++k) {
        if (img.is_zero()) {
          zero = true;
          break;
        }
        prod = cup(tgt, prod, img);
        if (prod.is_zero()) zero = true;
      }
      if (zero) break;
    }
    if (!zero) out = out + prod;
  }
  return out;
}

}  // namespace dgalab

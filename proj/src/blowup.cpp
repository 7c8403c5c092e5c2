#include "dgalab/blowup.hpp"

#include <stdexcept>

namespace dgalab {

namespace {

DgaPresentation extend_presentation(const Model& base, int m, const std::vector<Element>& chern,
                                    std::string* x_name, std::string* y_name) {
  if (m < 2) throw std::invalid_argument("build_neighborhood: m must be >= 2");
  const GeneratorTable& tb = base.table();
  for (size_t i = 0; i < chern.size(); ++i) {
    const Element& c = chern[i];
    if (c.is_zero()) continue;
    auto deg = c.homogeneous_degree();
    if (!deg || *deg != 2 * static_cast<int>(i + 1))
      throw std::invalid_argument("build_neighborhood: c_" + std::to_string(i + 1) +
                                  " must be homogeneous of degree " + std::to_string(2 * (i + 1)));
    if (!differential(base.presentation(), c).is_zero())
      throw std::invalid_argument("build_neighborhood: c_" + std::to_string(i + 1) +
                                  " must be closed");
  }

  auto fresh = [&](std::string want) {
    std::string name = want;
    int k = 2;
    while (tb.find(name) >= 0) name = want + std::to_string(k++);
    return name;
  };
  *x_name = fresh("x");
  *y_name = fresh("y");

  std::vector<GeneratorSpec> gens;
  std::vector<Element> diffs;
  for (int d = 0; d < tb.size(); ++d) {
    const int c = tb.canonical_index_of_declared(d);
    gens.push_back(tb.gen(c));
  }
  gens.push_back(GeneratorSpec{*x_name, 2});
  gens.push_back(GeneratorSpec{*y_name, 2 * m - 1});

  GeneratorTable merged(gens);
  auto remap = [&](const Element& e) {
    Element out;
    for (const auto& [mon, coeff] : e.terms()) {
      std::vector<Monomial::Factor> fs;
      for (const auto& f : mon.factors())
        fs.push_back(Monomial::Factor{merged.find(tb.name(f.gen)), f.exp});
      std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.gen < b.gen; });
      out.add_term(Monomial(mon.degree(), std::move(fs)), coeff);
    }
    return out;
  };

  diffs.resize(gens.size());
  for (int d = 0; d < tb.size(); ++d) {
    const int c = tb.canonical_index_of_declared(d);
    diffs[static_cast<size_t>(d)] = remap(base.presentation().differential_of(c));
  }
  // d y = x^m + c_1 x^{m-1} + ... + c_m.
  Element x = generator_element(merged, *x_name);
  Element dy = power(merged, x, m);
  for (size_t i = 0; i < chern.size(); ++i) {
    if (chern[i].is_zero()) continue;
    Element term = multiply(merged, remap(chern[i]), power(merged, x, m - static_cast<int>(i) - 1));
    dy += term;
  }
  diffs[static_cast<size_t>(tb.size() + 1)] = dy;
  return DgaPresentation(std::move(gens), std::move(diffs));
}

}  // namespace

BlowupModel::BlowupModel(const DgaPresentation& base, int m, std::vector<Element> chern)
    : base_(base),
      total_(extend_presentation(base_, m, chern, &x_name_, &y_name_)),
      m_(m),
      chern_(std::move(chern)) {
  const GeneratorTable& tb = base_.table();
  base_to_total_.resize(static_cast<size_t>(tb.size()));
  for (int c = 0; c < tb.size(); ++c)
    base_to_total_[static_cast<size_t>(c)] = total_.table().find(tb.name(c));
}

Element BlowupModel::inject(const Element& e) const {
  Element out;
  for (const auto& [mon, coeff] : e.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& f : mon.factors())
      fs.push_back(Monomial::Factor{base_to_total_[static_cast<size_t>(f.gen)], f.exp});
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.gen < b.gen; });
    out.add_term(Monomial(mon.degree(), std::move(fs)), coeff);
  }
  return out;
}

ElementMatrix BlowupModel::inject(const ElementMatrix& e) const {
  ElementMatrix out(e.rows, e.cols);
  for (size_t i = 0; i < e.entries.size(); ++i) out.entries[i] = inject(e.entries[i]);
  return out;
}

Element BlowupModel::restrict_to_base(const Element& e) const {
  const GeneratorTable& tt = total_.table();
  const GeneratorTable& tb = base_.table();
  Element out;
  for (const auto& [mon, coeff] : e.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& f : mon.factors()) {
      const int idx = tb.find(tt.name(f.gen));
      if (idx < 0)
        throw std::invalid_argument("restrict_to_base: element involves the extension generators");
      fs.push_back(Monomial::Factor{idx, f.exp});
    }
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.gen < b.gen; });
    out.add_term(Monomial(mon.degree(), std::move(fs)), coeff);
  }
  return out;
}

BlowupModel build_neighborhood(const DgaPresentation& base, int m, std::vector<Element> chern) {
  return BlowupModel(base, m, std::move(chern));
}

ModuleDecomposition module_decomposition(const BlowupModel& bm, int degree_cap) {
  ModuleDecomposition out;
  out.degree_cap = degree_cap;
  const Model& total = bm.total();
  const Model& base = bm.base();
  for (int l = 0; l <= degree_cap; ++l) {
    const int ext_dim = total.cohomology(l).dim();
    out.extension_dims.push_back(ext_dim);
    int expected = 0;
    SpanBuilder span(ext_dim);
    for (int i = 0; i < bm.half_codim() && 2 * i <= l; ++i) {
      const CohomologySlice& hb = base.cohomology(l - 2 * i);
      expected += hb.dim();
      for (const Element& rep : hb.representatives) {
        Element lifted = multiply(total.table(), bm.x_power(i), bm.inject(rep));
        const CohClass cls = class_of(total, lifted, l);
        if (cls.is_zero()) {
          out.ok = false;
          if (out.failure.empty())
            out.failure = "a^i cup class vanishes in degree " + std::to_string(l);
          continue;
        }
        if (!span.add(cls.coords)) {
          out.ok = false;
          if (out.failure.empty())
            out.failure = "a-power lifts are dependent in degree " + std::to_string(l);
        }
      }
    }
    out.expected_dims.push_back(expected);
    if (expected != ext_dim) {
      out.ok = false;
      if (out.failure.empty())
        out.failure = "dimension mismatch in degree " + std::to_string(l) + ": expected " +
                      std::to_string(expected) + ", extension has " + std::to_string(ext_dim);
    }
  }
  return out;
}

std::vector<ClassMatrix> lift_classes(const BlowupModel& bm, const std::vector<ClassMatrix>& s) {
  const Model& total = bm.total();
  std::vector<ClassMatrix> out;
  for (const auto& v : s) {
    ClassMatrix lifted;
    lifted.rows = v.rows;
    lifted.cols = v.cols;
    lifted.degrees = add_all(v.degrees, 2);
    for (int i = 0; i < v.rows; ++i)
      for (int j = 0; j < v.cols; ++j) {
        Element rep = bm.inject(representative(bm.base(), v.at(i, j)));
        Element xr = multiply(total.table(), bm.x_power(1), rep);
        lifted.entries.push_back(class_of(total, xr, v.degrees(i, j) + 2));
      }
    out.push_back(std::move(lifted));
  }
  return out;
}

DefiningSystem lift_defining_system(const BlowupModel& bm, const DefiningSystem& sys) {
  const Model& total = bm.total();
  DefiningSystem out;
  out.arity = sys.arity;
  out.matrix_flavor = sys.matrix_flavor;
  out.inputs = lift_classes(bm, sys.inputs);
  for (const auto& [pos, block] : sys.blocks) {
    const int p = pos.second - pos.first + 1;
    out.blocks.emplace(pos,
                       element_left_mul(total.table(), bm.x_power(p), bm.inject(block)));
  }
  return out;
}

std::vector<Element> expand_in_x(const BlowupModel& bm, const Element& e) {
  const GeneratorTable& tt = bm.total().table();
  const int xi = bm.x_index();
  const int yi = tt.find(bm.y_name());
  std::vector<Element> coeffs;
  for (const auto& [mon, c] : e.terms()) {
    int xexp = 0;
    std::vector<Monomial::Factor> rest;
    int rest_deg = mon.degree();
    for (const auto& f : mon.factors()) {
      if (f.gen == yi)
        throw std::invalid_argument("expand_in_x: element depends on the generator y");
      if (f.gen == xi) {
        xexp = f.exp;
        rest_deg -= 2 * f.exp;
      } else {
        rest.push_back(f);
      }
    }
    if (static_cast<size_t>(xexp) >= coeffs.size()) coeffs.resize(static_cast<size_t>(xexp) + 1);
    // x is even and central, so no sign is picked up extracting its powers.
    Element base_mon = Element::monomial(Monomial(rest_deg, std::move(rest)), c);
    coeffs[static_cast<size_t>(xexp)] += bm.restrict_to_base(base_mon);
  }
  return coeffs;
}

namespace {

ElementMatrix x_coefficient(const BlowupModel& bm, const ElementMatrix& e, int power) {
  ElementMatrix out(e.rows, e.cols);
  for (int i = 0; i < e.rows; ++i)
    for (int j = 0; j < e.cols; ++j) {
      const auto coeffs = expand_in_x(bm, e.at(i, j));
      if (static_cast<size_t>(power) < coeffs.size()) out.at(i, j) = coeffs[static_cast<size_t>(power)];
    }
  return out;
}

}  // namespace

LiftReductionReport verify_lift_reduction(const BlowupModel& bm,
                                   const std::vector<ClassMatrix>& base_classes,
                                   const DefiningSystem& lifted) {
  LiftReductionReport v;
  const int n = lifted.arity;
  if (n >= bm.half_codim()) {
    v.hypothesis_ok = false;
    v.detail = "hypothesis n < m fails";
    return v;
  }
  // Extract A_1 = (X_{j-i+1}(i,j)).
  DefiningSystem a1;
  a1.arity = n;
  a1.matrix_flavor = lifted.matrix_flavor;
  a1.inputs = base_classes;
  for (const auto& [pos, block] : lifted.blocks)
    a1.blocks.emplace(pos, x_coefficient(bm, block, pos.second - pos.first + 1));
  v.extracted = a1;

  const SystemCheck chk = check_defining_system(bm.base(), a1);
  v.extraction_valid = chk.ok;
  if (!chk.ok) v.detail = chk.failure;

  const ElementMatrix c_lift = system_cocycle(bm.total(), lifted);
  const ElementMatrix c_base = system_cocycle(bm.base(), a1);
  v.top_coefficient_matches = (x_coefficient(bm, c_lift, n) == c_base);

  bool lifted_exact = true;
  for (const auto& e : c_lift.entries)
    if (!primitive_of(bm.total(), e)) lifted_exact = false;
  v.lifted_cocycle_exact = lifted_exact;
  bool base_exact = true;
  for (const auto& e : c_base.entries)
    if (!primitive_of(bm.base(), e)) base_exact = false;
  v.base_cocycle_exact = base_exact;
  return v;
}

LiftedTripleReport verify_lifted_triple(const BlowupModel& bm, const ClassMatrix& s1,
                                   const ClassMatrix& s2, const ClassMatrix& s3) {
  LiftedTripleReport v;
  if (bm.half_codim() < 4) {
    v.hypothesis_ok = false;
    return v;
  }
  const Model& base = bm.base();
  const Model& total = bm.total();

  const MatrixTripleProduct base_prod = matrix_triple_product(base, s1, s2, s3);
  v.base_value_outside_base_indeterminacy = !base_prod.trivial;

  const auto lifted_classes = lift_classes(bm, {s1, s2, s3});
  const DefiningSystem lifted = lift_defining_system(bm, base_prod.system);
  const SystemCheck chk = check_defining_system(total, lifted);
  if (!chk.ok) throw std::logic_error("verify_lifted_triple: lifted system invalid: " + chk.failure);

  const ElementMatrix c_lift = system_cocycle(total, lifted);
  v.lifted_value = class_negate(class_of_matrix(total, c_lift, cocycle_degrees(lifted_classes)));

  // [c(lift)] must equal a^3 cup [c(A_1)] computed entrywise.
  const ElementMatrix c_base = system_cocycle(base, base_prod.system);
  ElementMatrix a3c = element_left_mul(total.table(), bm.x_power(3), bm.inject(c_base));
  const ClassMatrix a3c_class = class_of_matrix(total, a3c, cocycle_degrees(lifted_classes));
  v.lifted_value_matches_a3_cup = class_equal(a3c_class, class_negate(v.lifted_value));

  const ClassMatrixSpan lifted_ind =
      matrix_triple_indeterminacy(total, lifted_classes[0], lifted_classes[1], lifted_classes[2]);
  v.lifted_value_outside_lifted_indeterminacy = !lifted_ind.contains(total, v.lifted_value);
  return v;
}

LiftedQuadrupleReport verify_lifted_quadruple(const BlowupModel& bm,
                                   const std::vector<ClassMatrix>& base_classes,
                                   const DefiningSystem& base_system) {
  LiftedQuadrupleReport v;
  if (base_classes.size() != 4)
    throw std::invalid_argument("verify_lifted_quadruple: quadruple data required");
  const Model& base = bm.base();
  const Model& total = bm.total();

  // sdeg of the product value: max entry degree of c(A).
  const DegreeMatrix vdegs = cocycle_degrees(base_classes);
  int sdeg = 0;
  for (Eigen::Index i = 0; i < vdegs.rows(); ++i)
    for (Eigen::Index j = 0; j < vdegs.cols(); ++j) sdeg = std::max(sdeg, vdegs(i, j));
  v.hypothesis_ok = 2 * bm.half_codim() > 2 * sdeg;

  const DefiningSystem lifted = lift_defining_system(bm, base_system);
  const SystemCheck chk = check_defining_system(total, lifted);
  if (!chk.ok) throw std::logic_error("verify_lifted_quadruple: lifted system invalid: " + chk.failure);

  // The expansion equations on the lifted system, blockwise over the base:
  //   1) d X_2(i,i+1) = bar(R_i) . R_{i+1}
  //   2) d X_l(i,i+1) = 0 for l != 2
  //   3) d X_{l+1}(i,i+2) = bar(R_i) . X_l(i+1,i+2) + bar(X_l(i,i+1)) . R_{i+2}
  //   4) d X_0(i,i+2) = 0
  v.equations_ok = true;
  const GeneratorTable& tb = base.table();
  auto xcoef = [&](int i, int j, int l) { return x_coefficient(bm, lifted.block(i, j), l); };
  std::vector<ElementMatrix> r(5);
  for (int i = 1; i <= 4; ++i) r[static_cast<size_t>(i)] = xcoef(i, i, 1);
  const int max_l = 2 * bm.half_codim();
  for (int i = 1; i <= 3; ++i) {
    for (int l = 0; l <= max_l; ++l) {
      const ElementMatrix lhs = element_d(base.presentation(), xcoef(i, i + 1, l));
      if (l == 2) {
        const ElementMatrix rhs = element_mul(tb, element_bar(tb, r[static_cast<size_t>(i)]),
                                              r[static_cast<size_t>(i + 1)]);
        if (!(lhs == rhs)) v.equations_ok = false;
      } else if (!lhs.is_zero()) {
        v.equations_ok = false;
      }
    }
  }
  for (int i = 1; i <= 2; ++i) {
    if (!element_d(base.presentation(), xcoef(i, i + 2, 0)).is_zero()) v.equations_ok = false;
    for (int l = 0; l + 1 <= max_l; ++l) {
      const ElementMatrix lhs = element_d(base.presentation(), xcoef(i, i + 2, l + 1));
      ElementMatrix rhs = element_mul(tb, element_bar(tb, r[static_cast<size_t>(i)]),
                                      xcoef(i + 1, i + 2, l));
      rhs = element_add(rhs, element_mul(tb, element_bar(tb, xcoef(i, i + 1, l)),
                                         r[static_cast<size_t>(i + 2)]));
      if (!(lhs == rhs)) v.equations_ok = false;
    }
  }

  // Extraction of the a^4 coefficient system and the reducibility check.
  DefiningSystem a1;
  a1.arity = 4;
  a1.matrix_flavor = true;
  a1.inputs = base_classes;
  for (const auto& [pos, block] : lifted.blocks)
    a1.blocks.emplace(pos, x_coefficient(bm, block, pos.second - pos.first + 1));
  v.extraction_valid = check_defining_system(base, a1).ok;

  const ElementMatrix c1 = system_cocycle(base, a1);
  const ClassMatrix c1_class = class_of_matrix(base, c1, cocycle_degrees(base_classes));
  v.base_value_not_reducible = !is_completely_reducible(base, c1_class);
  return v;
}

}  // namespace dgalab

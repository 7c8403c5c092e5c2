#include "dgalab/presentation.hpp"

#include <set>
#include <stdexcept>

namespace dgalab {

DgaPresentation::DgaPresentation(std::vector<GeneratorSpec> generators,
                                 std::vector<Element> differentials_by_declaration)
    : table_(std::move(generators)) {
  if (differentials_by_declaration.size() != static_cast<size_t>(table_.size()))
    throw std::invalid_argument("DgaPresentation: one differential image per generator required");
  diff_.resize(differentials_by_declaration.size());
  for (int c = 0; c < table_.size(); ++c)
    diff_[static_cast<size_t>(c)] =
        differentials_by_declaration[static_cast<size_t>(table_.declaration_index(c))];
}

Element differential(const DgaPresentation& p, const Element& e) {
  const GeneratorTable& t = p.table();
  Element out;
  for (const auto& [m, coeff] : e.terms()) {
    const auto& factors = m.factors();
    // d over one factor at a time, with the Koszul sign of the skipped prefix.
    int prefix_degree = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      const Element& dg = p.differential_of(f.gen);
      if (!dg.is_zero()) {
        // prefix * g^(exp-1) * dg * suffix, times exp.
        Element term = Element::constant(Rational(1));
        {
          std::vector<Monomial::Factor> pre(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(i));
          int pre_deg = 0;
          for (const auto& pf : pre) pre_deg += pf.exp * t.degree(pf.gen);
          if (f.exp > 1) {
            pre.push_back(Monomial::Factor{f.gen, f.exp - 1});
            pre_deg += (f.exp - 1) * t.degree(f.gen);
          }
          term = Element::monomial(Monomial(pre_deg, std::move(pre)));
        }
        term = multiply(t, term, dg);
        {
          std::vector<Monomial::Factor> suf(factors.begin() + static_cast<std::ptrdiff_t>(i) + 1, factors.end());
          int suf_deg = 0;
          for (const auto& sf : suf) suf_deg += sf.exp * t.degree(sf.gen);
          term = multiply(t, term, Element::monomial(Monomial(suf_deg, std::move(suf))));
        }
        const int sign = (prefix_degree % 2 == 0) ? 1 : -1;
        term *= coeff * Rational(sign * f.exp);
        out += term;
      }
      prefix_degree += f.exp * t.degree(f.gen);
    }
  }
  return out;
}

ValidationReport validate(const DgaPresentation& p) {
  const GeneratorTable& t = p.table();
  ValidationReport r;
  for (int g = 0; g < t.size(); ++g) {
    const Element& dg = p.differential_of(g);
    if (!dg.is_zero()) {
      auto deg = dg.homogeneous_degree();
      if (!deg || *deg != t.degree(g) + 1) {
        r.homogeneous = false;
        if (r.homogeneity_witness.empty())
          r.homogeneity_witness = "d " + t.name(g) + " is not homogeneous of degree " +
                                  std::to_string(t.degree(g) + 1);
      }
    }
  }
  if (r.homogeneous) {
    for (int g = 0; g < t.size(); ++g) {
      if (!differential(p, p.differential_of(g)).is_zero()) {
        r.d_squared_zero = false;
        if (r.d_squared_witness.empty()) r.d_squared_witness = "d(d " + t.name(g) + ") != 0";
      }
    }
  }
  // Minimality: d of each generator lies in the subalgebra on strictly
  // earlier generators in the canonical order.
  for (int g = 0; g < t.size() && r.minimal; ++g) {
    for (const auto& [m, c] : p.differential_of(g).terms()) {
      for (const auto& f : m.factors()) {
        if (f.gen >= g) {
          r.minimal = false;
          r.minimality_witness = "d " + t.name(g) + " involves " + t.name(f.gen);
          break;
        }
      }
      if (!r.minimal) break;
    }
  }
  // H^0 = k holds for every free connected presentation; H^1 is the span of
  // closed degree-1 generators (nothing of degree 1 is exact).
  r.connected = true;
  int h1 = 0;
  {
    const LinearSlice s1 = monomial_basis(t, 1);
    if (s1.dim() > 0 && r.homogeneous) {
      const LinearSlice s2 = monomial_basis(t, 2);
      RationalMatrix d1(s2.dim(), s1.dim());
      for (int j = 0; j < s1.dim(); ++j) {
        Element img = differential(p, Element::monomial(s1.basis[static_cast<size_t>(j)]));
        d1.col(j) = coordinates(s2, img);
      }
      h1 = static_cast<int>(s1.dim() - rank(d1));
    }
  }
  r.h1_dim = h1;
  r.simply_connected = (h1 == 0);
  return r;
}

DgaPresentation tensor_product(const DgaPresentation& a, const DgaPresentation& b) {
  const GeneratorTable& ta = a.table();
  const GeneratorTable& tb = b.table();

  std::set<std::string> used;
  std::vector<GeneratorSpec> gens;
  std::vector<Element> diffs;
  gens.reserve(static_cast<size_t>(ta.size() + tb.size()));

  for (int d = 0; d < ta.size(); ++d) {
    const int c = ta.canonical_index_of_declared(d);
    gens.push_back(ta.gen(c));
    used.insert(ta.gen(c).name);
  }
  std::vector<std::string> renamed(static_cast<size_t>(tb.size()));
  for (int d = 0; d < tb.size(); ++d) {
    const int c = tb.canonical_index_of_declared(d);
    std::string name = tb.gen(c).name;
    int suffix = 2;
    while (used.count(name)) name = tb.gen(c).name + "_" + std::to_string(suffix++);
    used.insert(name);
    renamed[static_cast<size_t>(c)] = name;
    gens.push_back(GeneratorSpec{name, tb.gen(c).degree});
  }

  GeneratorTable merged(gens);

  auto remap_a = [&](const Element& e) {
    Element out;
    for (const auto& [m, coeff] : e.terms()) {
      std::vector<Monomial::Factor> fs;
      for (const auto& f : m.factors())
        fs.push_back(Monomial::Factor{merged.find(ta.name(f.gen)), f.exp});
      std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) { return x.gen < y.gen; });
      out.add_term(Monomial(m.degree(), std::move(fs)), coeff);
    }
    return out;
  };
  auto remap_b = [&](const Element& e) {
    Element out;
    for (const auto& [m, coeff] : e.terms()) {
      std::vector<Monomial::Factor> fs;
      for (const auto& f : m.factors())
        fs.push_back(Monomial::Factor{merged.find(renamed[static_cast<size_t>(f.gen)]), f.exp});
      std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) { return x.gen < y.gen; });
      out.add_term(Monomial(m.degree(), std::move(fs)), coeff);
    }
    return out;
  };

  diffs.resize(gens.size());
  for (int d = 0; d < ta.size(); ++d) {
    const int c = ta.canonical_index_of_declared(d);
    diffs[static_cast<size_t>(d)] = remap_a(a.differential_of(c));
  }
  for (int d = 0; d < tb.size(); ++d) {
    const int c = tb.canonical_index_of_declared(d);
    diffs[static_cast<size_t>(ta.size() + d)] = remap_b(b.differential_of(c));
  }
  return DgaPresentation(std::move(gens), std::move(diffs));
}

}  // namespace dgalab

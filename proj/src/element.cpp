#include "dgalab/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dgalab {

GeneratorTable::GeneratorTable(std::vector<GeneratorSpec> declared) {
  const int n = static_cast<int>(declared.size());
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return declared[static_cast<size_t>(a)].degree < declared[static_cast<size_t>(b)].degree;
  });
  gens_.reserve(declared.size());
  decl_of_canon_.resize(declared.size());
  canon_of_decl_.resize(declared.size());
  for (int c = 0; c < n; ++c) {
    const int d = order[static_cast<size_t>(c)];
    const GeneratorSpec& g = declared[static_cast<size_t>(d)];
    if (g.degree < 1) throw std::invalid_argument("generator '" + g.name + "': degree must be >= 1");
    if (by_name_.count(g.name)) throw std::invalid_argument("duplicate generator name '" + g.name + "'");
    gens_.push_back(g);
    decl_of_canon_[static_cast<size_t>(c)] = d;
    canon_of_decl_[static_cast<size_t>(d)] = c;
    by_name_[g.name] = c;
  }
}

int GeneratorTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

Monomial Monomial::generator(const GeneratorTable& t, int canonical) {
  return Monomial(t.degree(canonical), {Factor{canonical, 1}});
}

MonomialProduct monomial_multiply(const GeneratorTable& t, const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();

  // Suffix counts of odd factors in a; odd generators always have exp 1.
  std::vector<int> odd_suffix(fa.size() + 1, 0);
  for (size_t i = fa.size(); i-- > 0;)
    odd_suffix[i] = odd_suffix[i + 1] + (t.odd(fa[i].gen) ? 1 : 0);

  std::vector<Monomial::Factor> out;
  out.reserve(fa.size() + fb.size());
  int sign = 1;
  size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].gen < fb[j].gen)) {
      out.push_back(fa[i]);
      ++i;
    } else if (i == fa.size() || fb[j].gen < fa[i].gen) {
      if (t.odd(fb[j].gen) && (odd_suffix[i] % 2) != 0) sign = -sign;
      out.push_back(fb[j]);
      ++j;
    } else {
      // Same generator on both sides.
      if (t.odd(fa[i].gen)) return {0, Monomial()};
      out.push_back(Monomial::Factor{fa[i].gen, fa[i].exp + fb[j].exp});
      ++i;
      ++j;
    }
  }
  return {sign, Monomial(a.degree() + b.degree(), std::move(out))};
}

Element Element::constant(const Rational& c) {
  Element e;
  e.add_term(Monomial::unit(), c);
  return e;
}

Element Element::monomial(const Monomial& m, const Rational& c) {
  Element e;
  e.add_term(m, c);
  return e;
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

int Element::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Element Element::component(int degree) const {
  Element out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.add_term(m, c);
  return out;
}

Element& Element::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Element Element::operator-() const {
  Element out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element multiply(const GeneratorTable& t, const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      MonomialProduct p = monomial_multiply(t, ma, mb);
      if (p.sign == 0) continue;
      out.add_term(p.monomial, Rational(p.sign) * ca * cb);
    }
  }
  return out;
}

Element bar_involution(const GeneratorTable&, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms())
    out.add_term(m, m.degree() % 2 == 0 ? c : -c);
  return out;
}

Element generator_element(const GeneratorTable& t, int canonical) {
  return Element::monomial(Monomial::generator(t, canonical));
}

Element generator_element(const GeneratorTable& t, const std::string& name) {
  const int i = t.find(name);
  if (i < 0) throw std::invalid_argument("unknown generator '" + name + "'");
  return generator_element(t, i);
}

Element power(const GeneratorTable& t, const Element& e, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  Element out = Element::constant(Rational(1));
  for (int i = 0; i < k; ++i) out = multiply(t, out, e);
  return out;
}

namespace {

void enumerate_monomials(const GeneratorTable& t, int gen, int remaining,
                         std::vector<Monomial::Factor>& stack, std::vector<Monomial>& out,
                         int total_degree) {
  if (remaining == 0) {
    out.emplace_back(total_degree, stack);
    return;
  }
  if (gen >= t.size()) return;
  const int d = t.degree(gen);
  // Generators are sorted by degree; once d exceeds the remainder nothing fits.
  if (d > remaining) return;
  enumerate_monomials(t, gen + 1, remaining, stack, out, total_degree);
  const int max_exp = t.odd(gen) ? 1 : remaining / d;
  for (int e = 1; e <= max_exp; ++e) {
    stack.push_back(Monomial::Factor{gen, e});
    enumerate_monomials(t, gen + 1, remaining - e * d, stack, out, total_degree);
    stack.pop_back();
  }
}

}  // namespace

LinearSlice monomial_basis(const GeneratorTable& t, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial_basis: negative degree");
  LinearSlice s;
  s.degree = degree;
  std::vector<Monomial::Factor> stack;
  enumerate_monomials(t, 0, degree, stack, s.basis, degree);
  std::sort(s.basis.begin(), s.basis.end());
  for (int i = 0; i < static_cast<int>(s.basis.size()); ++i) s.index[s.basis[static_cast<size_t>(i)]] = i;
  return s;
}

RationalVector coordinates(const LinearSlice& s, const Element& e) {
  RationalVector v = RationalVector::Zero(s.dim());
  for (const auto& [m, c] : e.terms()) {
    auto it = s.index.find(m);
    if (it == s.index.end())
      throw std::invalid_argument("coordinates: element has a term outside the slice");
    v(it->second) = c;
  }
  return v;
}

Element element_from_coordinates(const LinearSlice& s, const RationalVector& v) {
  if (v.rows() != s.dim()) throw std::invalid_argument("element_from_coordinates: bad dimension");
  Element e;
  for (int i = 0; i < s.dim(); ++i)
    if (!v(i).is_zero()) e.add_term(s.basis[static_cast<size_t>(i)], v(i));
  return e;
}

std::string to_string(const GeneratorTable& t, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : m.factors()) {
    for (int e = 0; e < f.exp; ++e) {
      if (!first) os << "^";
      os << t.name(f.gen);
      first = false;
    }
  }
  return os.str();
}

std::string to_string(const GeneratorTable& t, const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    const bool unit_coeff = (a == Rational(1));
    if (!unit_coeff || m.is_unit()) os << a.str();
    if (!m.is_unit()) {
      if (!unit_coeff) os << " ";
      os << to_string(t, m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace dgalab

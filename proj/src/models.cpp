#include "dgalab/models.hpp"

#include <stdexcept>

namespace dgalab {

LieAlgebraCheck check_lie_algebra(const LieAlgebraSpec& g) {
  LieAlgebraCheck r;
  const int n = g.dimension;
  if (static_cast<int>(g.brackets.size()) != n)
    throw std::invalid_argument("LieAlgebraSpec: need one bracket matrix per basis vector");
  for (int k = 0; k < n && r.antisymmetric; ++k) {
    for (int i = 0; i < n && r.antisymmetric; ++i) {
      for (int j = 0; j < n; ++j) {
        if (g.c(k, i, j) != -g.c(k, j, i)) {
          r.antisymmetric = false;
          r.witness = "antisymmetry fails at c(" + std::to_string(k) + "," + std::to_string(i) +
                      "," + std::to_string(j) + ")";
          break;
        }
      }
    }
  }
  if (!r.antisymmetric) return r;
  // Jacobi: sum over m of c([i,j],m->l) etc. vanishes for all i<j<k, l.
  for (int i = 0; i < n && r.jacobi; ++i) {
    for (int j = i + 1; j < n && r.jacobi; ++j) {
      for (int k = j + 1; k < n && r.jacobi; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational s(0);
          for (int m = 0; m < n; ++m) {
            s += g.c(m, i, j) * g.c(l, m, k);
            s += g.c(m, j, k) * g.c(l, m, i);
            s += g.c(m, k, i) * g.c(l, m, j);
          }
          if (!s.is_zero()) {
            r.jacobi = false;
            r.witness = "Jacobi fails on (e" + std::to_string(i + 1) + ",e" +
                        std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ")";
            break;
          }
        }
      }
    }
  }
  if (!r.jacobi) return r;
  // Lower central series: spans of iterated brackets must reach zero.
  RationalMatrix current = RationalMatrix::Identity(n, n);
  for (int step = 0; step <= n + 1; ++step) {
    if (current.cols() == 0) return r;
    SpanBuilder next(n);
    for (int i = 0; i < n; ++i) {
      for (Eigen::Index v = 0; v < current.cols(); ++v) {
        RationalVector w = RationalVector::Zero(n);
        for (int k = 0; k < n; ++k) {
          Rational s(0);
          for (int j = 0; j < n; ++j) s += g.c(k, i, j) * current(j, v);
          w(k) = s;
        }
        next.add(w);
      }
    }
    current = next.basis();
  }
  r.nilpotent = false;
  r.witness = "lower central series stabilizes at dimension " + std::to_string(current.cols());
  return r;
}

DgaPresentation chevalley_eilenberg(const LieAlgebraSpec& g, const std::string& name_prefix) {
  const LieAlgebraCheck chk = check_lie_algebra(g);
  if (!chk.ok()) throw std::invalid_argument("chevalley_eilenberg: " + chk.witness);
  const int n = g.dimension;
  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(GeneratorSpec{name_prefix + std::to_string(i), 1});
  GeneratorTable t(gens);
  std::vector<Element> diffs(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Element d;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Rational c = g.c(k, i, j);
        if (c.is_zero()) continue;
        Element term = multiply(t, generator_element(t, i), generator_element(t, j));
        term *= c;
        d += term;
      }
    }
    diffs[static_cast<size_t>(k)] = d;
  }
  return DgaPresentation(std::move(gens), std::move(diffs));
}

LieAlgebraSpec heisenberg_brackets() {
  LieAlgebraSpec g;
  g.dimension = 3;
  g.brackets.assign(3, RationalMatrix::Zero(3, 3));
  g.brackets[2](0, 1) = Rational(1);
  g.brackets[2](1, 0) = Rational(-1);
  return g;
}

LieAlgebraSpec witt_brackets(int n) {
  if (n < 1) throw std::invalid_argument("witt_brackets: n must be >= 1");
  LieAlgebraSpec g;
  g.dimension = n;
  g.brackets.assign(static_cast<size_t>(n), RationalMatrix::Zero(n, n));
  // [e_i, e_j] = (j - i) e_{i+j} for i + j <= n  (1-based indices).
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || i + j > n) continue;
      g.brackets[static_cast<size_t>(i + j - 1)](i - 1, j - 1) = Rational(j - i);
    }
  }
  return g;
}

DgaPresentation heisenberg_model() {
  std::vector<GeneratorSpec> gens = {{"a1", 1}, {"a2", 1}, {"a3", 1}};
  GeneratorTable t(gens);
  std::vector<Element> diffs(3);
  diffs[2] = multiply(t, generator_element(t, "a1"), generator_element(t, "a2"));
  return DgaPresentation(std::move(gens), std::move(diffs));
}

DgaPresentation generalized_heisenberg_model(int n) {
  if (n < 1) throw std::invalid_argument("generalized_heisenberg_model: n must be >= 1");
  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"ap" + std::to_string(i), 1});
  for (int i = 1; i <= n; ++i) gens.push_back({"am" + std::to_string(i), 1});
  gens.push_back({"b", 1});
  GeneratorTable t(gens);
  Element db;
  for (int i = 1; i <= n; ++i)
    db += multiply(t, generator_element(t, "ap" + std::to_string(i)),
                   generator_element(t, "am" + std::to_string(i)));
  std::vector<Element> diffs(gens.size());
  diffs.back() = db;
  return DgaPresentation(std::move(gens), std::move(diffs));
}

DgaPresentation witt_model(int n) {
  if (n < 3) throw std::invalid_argument("witt_model: n must be >= 3");
  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"w" + std::to_string(i), 1});
  GeneratorTable t(gens);
  std::vector<Element> diffs(static_cast<size_t>(n));
  for (int k = 3; k <= n; ++k) {
    Element d;
    for (int i = 1; 2 * i < k; ++i) {
      Element term = multiply(t, generator_element(t, i - 1), generator_element(t, k - i - 1));
      term *= Rational(k - 2 * i);
      d += term;
    }
    diffs[static_cast<size_t>(k - 1)] = d;
  }
  return DgaPresentation(std::move(gens), std::move(diffs));
}

DgaPresentation sphere_model(int n) {
  if (n < 2) throw std::invalid_argument("sphere_model: n must be >= 2");
  if (n % 2 == 1) {
    std::vector<GeneratorSpec> gens = {{"x", n}};
    return DgaPresentation(std::move(gens), {Element::zero()});
  }
  std::vector<GeneratorSpec> gens = {{"x", n}, {"y", 2 * n - 1}};
  GeneratorTable t(gens);
  Element x = generator_element(t, "x");
  std::vector<Element> diffs(2);
  diffs[1] = multiply(t, x, x);
  return DgaPresentation(std::move(gens), std::move(diffs));
}

DgaPresentation circle_model() {
  std::vector<GeneratorSpec> gens = {{"t", 1}};
  return DgaPresentation(std::move(gens), {Element::zero()});
}

Element witt_symplectic_form(const GeneratorTable& witt, int m) {
  if (m < 2) throw std::invalid_argument("witt_symplectic_form: m must be >= 2");
  if (witt.size() < 2 * m)
    throw std::invalid_argument("witt_symplectic_form: model needs at least 2m generators");
  Element omega;
  for (int i = 1; i <= m; ++i) {
    Element term =
        multiply(witt, generator_element(witt, i - 1), generator_element(witt, 2 * m - i));
    term *= Rational(2 * (m - i) + 1);
    omega += term;
  }
  return omega;
}

int weight_of(const GeneratorTable& t, const Monomial& m) {
  int w = 0;
  for (const auto& f : m.factors()) w += f.exp * (t.declaration_index(f.gen) + 1);
  return w;
}

int filtration_level(const Element& e) {
  int level = 0;
  for (const auto& [m, c] : e.terms())
    for (const auto& f : m.factors()) level = std::max(level, f.gen + 1);
  return level;
}

BigradedView bigrade(const GeneratorTable& t, const Element& e) {
  BigradedView v;
  v.element = e;
  auto d1 = e.homogeneous_degree();
  if (!d1 && !e.is_zero())
    throw std::invalid_argument("bigrade: element must be homogeneous in deg1");
  v.deg1 = d1.value_or(0);
  for (const auto& [m, c] : e.terms()) v.deg2_values.push_back(weight_of(t, m));
  std::sort(v.deg2_values.begin(), v.deg2_values.end());
  v.deg2_values.erase(std::unique(v.deg2_values.begin(), v.deg2_values.end()),
                      v.deg2_values.end());
  if (v.deg2_values.size() == 1) v.deg2 = v.deg2_values.front();
  v.filtration = filtration_level(e);
  return v;
}

}  // namespace dgalab

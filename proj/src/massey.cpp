#include "dgalab/massey.hpp"

#include "dgalab/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgalab {

DegreeMatrix block_degrees(const std::vector<ClassMatrix>& inputs, int i, int j) {
  DegreeMatrix acc = add_all(inputs[static_cast<size_t>(i - 1)].degrees, -1);
  for (int r = i + 1; r <= j; ++r)
    acc = degree_star(acc, add_all(inputs[static_cast<size_t>(r - 1)].degrees, -1));
  return add_all(acc, 1);
}

void require_multipliable_chain(const std::vector<ClassMatrix>& inputs) {
  if (inputs.size() < 2) throw std::invalid_argument("product needs at least two class matrices");
  for (const auto& v : inputs)
    for (Eigen::Index i = 0; i < v.degrees.rows(); ++i)
      for (Eigen::Index j = 0; j < v.degrees.cols(); ++j)
        if (v.degrees(i, j) < 1)
          throw UndefinedProductError("class matrix entries must have positive degree");
  for (size_t k = 0; k + 1 < inputs.size(); ++k) {
    if (!multipliable(inputs[k].degrees, inputs[k + 1].degrees))
      throw UndefinedProductError("consecutive class matrices are not multipliable");
    // Shifting all degrees by -1 preserves multipliability; condition 2 needs it too.
  }
}

DegreeMatrix cocycle_degrees(const std::vector<ClassMatrix>& inputs) {
  return add_all(block_degrees(inputs, 1, static_cast<int>(inputs.size())), 1);
}

ElementMatrix system_cocycle(const Model& m, const DefiningSystem& sys) {
  const GeneratorTable& t = m.table();
  const int n = sys.arity;
  ElementMatrix acc;
  bool first = true;
  for (int r = 1; r <= n - 1; ++r) {
    ElementMatrix term =
        element_mul(t, element_bar(t, sys.block(1, r)), sys.block(r + 1, n));
    if (first) {
      acc = std::move(term);
      first = false;
    } else {
      acc = element_add(acc, term);
    }
  }
  return acc;
}

SystemCheck check_defining_system(const Model& m, const DefiningSystem& sys) {
  SystemCheck r;
  const GeneratorTable& t = m.table();
  const int n = sys.arity;
  if (static_cast<int>(sys.inputs.size()) != n) {
    r.ok = false;
    r.failure = "arity does not match the number of input class matrices";
    return r;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      auto it = sys.blocks.find({i, j});
      if (it == sys.blocks.end()) {
        r.ok = false;
        r.failure = "missing block";
        r.position = {i, j};
        return r;
      }
      const ElementMatrix& x = it->second;
      const DegreeMatrix degs = block_degrees(sys.inputs, i, j);
      if (x.rows != degs.rows() || x.cols != degs.cols()) {
        r.ok = false;
        r.failure = "block shape mismatch";
        r.position = {i, j};
        return r;
      }
      for (int a = 0; a < x.rows; ++a) {
        for (int b = 0; b < x.cols; ++b) {
          const Element& e = x.at(a, b);
          if (e.is_zero()) continue;
          auto deg = e.homogeneous_degree();
          if (!deg || *deg != degs(a, b)) {
            r.ok = false;
            r.failure = "condition 2: entry is not homogeneous of the mandated degree";
            r.position = {i, j};
            return r;
          }
        }
      }
    }
  }
  // Condition 1.
  for (int i = 1; i <= n; ++i) {
    const ClassMatrix got =
        class_of_matrix(m, sys.block(i, i), sys.inputs[static_cast<size_t>(i - 1)].degrees);
    if (!class_equal(got, sys.inputs[static_cast<size_t>(i - 1)])) {
      r.ok = false;
      r.failure = "condition 1: diagonal block does not represent its class matrix";
      r.position = {i, i};
      return r;
    }
  }
  // Condition 3.
  for (int s = 1; s <= n - 1; ++s) {
    for (int i = 1; i + s <= n; ++i) {
      const int j = i + s;
      if (i == 1 && j == n) continue;
      ElementMatrix rhs;
      bool first = true;
      for (int q = i; q <= j - 1; ++q) {
        ElementMatrix term = element_mul(t, element_bar(t, sys.block(i, q)), sys.block(q + 1, j));
        if (first) {
          rhs = std::move(term);
          first = false;
        } else {
          rhs = element_add(rhs, term);
        }
      }
      const ElementMatrix lhs = element_d(m.presentation(), sys.block(i, j));
      if (!(lhs == rhs)) {
        r.ok = false;
        r.failure = "condition 3: d X(i,j) != sum bar(X(i,r)) . X(r+1,j)";
        r.position = {i, j};
        return r;
      }
    }
  }
  return r;
}

bool verify_membership(const Model& m, const ClassMatrix& claimed,
                       const std::vector<ClassMatrix>& inputs, const DefiningSystem& sys,
                       std::string* diagnostics) {
  auto fail = [&](const std::string& why) {
    if (diagnostics) *diagnostics = why;
    return false;
  };
  if (static_cast<int>(inputs.size()) != sys.arity) return fail("arity mismatch");
  for (size_t k = 0; k < inputs.size(); ++k)
    if (!class_equal(inputs[k], sys.inputs[k])) return fail("input class matrices differ");
  const SystemCheck chk = check_defining_system(m, sys);
  if (!chk.ok)
    return fail(chk.failure + " at (" + std::to_string(chk.position.first) + "," +
                std::to_string(chk.position.second) + ")");
  const ElementMatrix c = system_cocycle(m, sys);
  const DegreeMatrix degs = cocycle_degrees(inputs);
  ClassMatrix got;
  try {
    got = class_of_matrix(m, c, degs);
  } catch (const std::exception& e) {
    return fail(std::string("cocycle is not closed: ") + e.what());
  }
  if (!class_equal(got, claimed)) return fail("[c(A)] differs from the claimed class");
  if (diagnostics) *diagnostics = "ok";
  return true;
}

namespace {

std::vector<Element> closed_basis(const Model& m, int degree) {
  std::vector<Element> out;
  if (degree < 0) return out;
  const CohomologySlice& c = m.cohomology(degree);
  const LinearSlice& s = m.slice(degree);
  for (Eigen::Index j = 0; j < c.image_cols.cols(); ++j)
    out.push_back(element_from_coordinates(s, c.image_cols.col(j)));
  for (Eigen::Index j = 0; j < c.rep_cols.cols(); ++j)
    out.push_back(element_from_coordinates(s, c.rep_cols.col(j)));
  return out;
}

// Sparse perturbation assignments enumerated by ordinal: weight 0, then
// weight 1, then weight 2, each in deterministic order.
struct Perturbations {
  long params = 0;
  long grid_size = 0;
  int max_weight = 0;

  long count() const {
    long total = 1;
    if (max_weight >= 1) total += params * grid_size;
    if (max_weight >= 2) total += params * (params - 1) / 2 * grid_size * grid_size;
    return total;
  }

  // assignment: (param index, grid index) pairs
  std::vector<std::pair<long, long>> get(long ordinal) const {
    if (ordinal == 0) return {};
    ordinal -= 1;
    const long w1 = params * grid_size;
    if (ordinal < w1) return {{ordinal / grid_size, ordinal % grid_size}};
    ordinal -= w1;
    const long g2 = grid_size * grid_size;
    const long pair_index = ordinal / g2;
    const long vals = ordinal % g2;
    // pair_index -> (p1 < p2) in lexicographic order
    long p1 = 0, remaining = pair_index;
    long step = params - 1;
    while (remaining >= step) {
      remaining -= step;
      ++p1;
      --step;
    }
    const long p2 = p1 + 1 + remaining;
    return {{p1, vals / grid_size}, {p2, vals % grid_size}};
  }
};

struct Searcher {
  const Model& model;
  const std::vector<ClassMatrix>& inputs;
  const SearchOptions& opts;
  const std::function<bool(const DefiningSystem&)>& visit;

  std::vector<std::pair<int, int>> positions;
  std::map<std::pair<int, int>, ElementMatrix> current;
  long nodes = 0;
  long seen = 0;
  bool stop = false;
  bool budget_hit = false;

  Searcher(const Model& m, const std::vector<ClassMatrix>& in, const SearchOptions& o,
           const std::function<bool(const DefiningSystem&)>& v)
      : model(m), inputs(in), opts(o), visit(v) {
    const int n = static_cast<int>(inputs.size());
    for (int i = 1; i <= n; ++i)
      current.emplace(std::make_pair(i, i), representative_matrix(model, inputs[static_cast<size_t>(i - 1)]));
    for (int s = 1; s <= n - 1; ++s)
      for (int i = 1; i + s <= n; ++i)
        if (!(i == 1 && i + s == n)) positions.emplace_back(i, i + s);
  }

  ElementMatrix rhs_of(int i, int j) const {
    const GeneratorTable& t = model.table();
    ElementMatrix rhs;
    bool first = true;
    for (int q = i; q <= j - 1; ++q) {
      ElementMatrix term =
          element_mul(t, element_bar(t, current.at({i, q})), current.at({q + 1, j}));
      if (first) {
        rhs = std::move(term);
        first = false;
      } else {
        rhs = element_add(rhs, term);
      }
    }
    return rhs;
  }

  void run() { recurse(0); }

  void recurse(size_t k) {
    if (stop) return;
    if (k == positions.size()) {
      ++seen;
      DefiningSystem sys;
      sys.arity = static_cast<int>(inputs.size());
      sys.matrix_flavor = inputs.front().rows != 1 || inputs.front().cols != 1 ||
                          inputs.back().rows != 1 || inputs.back().cols != 1;
      for (const auto& v : inputs)
        sys.matrix_flavor = sys.matrix_flavor || v.rows != 1 || v.cols != 1;
      sys.inputs = inputs;
      sys.blocks = current;
      if (!visit(sys)) stop = true;
      return;
    }
    const auto [i, j] = positions[k];
    const DegreeMatrix degs = block_degrees(inputs, i, j);
    const ElementMatrix rhs = rhs_of(i, j);

    ElementMatrix particular(rhs.rows, rhs.cols);
    for (int a = 0; a < rhs.rows; ++a) {
      for (int b = 0; b < rhs.cols; ++b) {
        const Element& e = rhs.at(a, b);
        if (e.is_zero()) continue;
        if (!is_closed(model, e)) return;  // dead branch
        auto prim = primitive_of(model, e);
        if (!prim) return;  // inconsistent diagonal; backtrack
        particular.at(a, b) = std::move(*prim);
      }
    }

    // Perturbation parameters: closed elements per entry degree.
    std::vector<std::pair<std::pair<int, int>, Element>> basis;  // (entry, kernel vector)
    for (int a = 0; a < rhs.rows; ++a) {
      for (int b = 0; b < rhs.cols; ++b) {
        for (const Element& v : closed_basis(model, degs(a, b)))
          basis.emplace_back(std::make_pair(a, b), v);
      }
    }
    Perturbations pert{static_cast<long>(basis.size()),
                       static_cast<long>(opts.grid.size()), opts.max_perturbation_weight};
    const long total = pert.count();
    for (long ord = 0; ord < total && !stop; ++ord) {
      if (++nodes > opts.node_budget) {
        budget_hit = true;
        stop = true;
        return;
      }
      ElementMatrix block = particular;
      for (const auto& [p, g] : pert.get(ord)) {
        const auto& [entry, vec] = basis[static_cast<size_t>(p)];
        Element scaled = vec;
        scaled *= opts.grid[static_cast<size_t>(g)];
        block.at(entry.first, entry.second) += scaled;
      }
      current[{i, j}] = std::move(block);
      recurse(k + 1);
      current.erase({i, j});
    }
  }
};

}  // namespace

SearchResult enumerate_defining_systems(const Model& m, const std::vector<ClassMatrix>& inputs,
                                        const SearchOptions& opts,
                                        const std::function<bool(const DefiningSystem&)>& visit) {
  require_multipliable_chain(inputs);
  SearchResult res;
  std::optional<DefiningSystem> last;
  auto wrapped = [&](const DefiningSystem& s) {
    last = s;
    return visit(s);
  };
  std::function<bool(const DefiningSystem&)> fn = wrapped;
  Searcher searcher(m, inputs, opts, fn);
  searcher.run();
  res.systems_seen = searcher.seen;
  res.system = std::move(last);
  if (searcher.budget_hit)
    res.status = SearchStatus::budget_exhausted;
  else if (searcher.stop && searcher.seen > 0)
    res.status = SearchStatus::found;
  else
    res.status = SearchStatus::exhausted;
  return res;
}

SearchResult find_defining_system(const Model& m, const std::vector<ClassMatrix>& inputs,
                                  const SearchOptions& opts) {
  SearchResult res =
      enumerate_defining_systems(m, inputs, opts, [](const DefiningSystem&) { return false; });
  if (res.systems_seen > 0) res.status = SearchStatus::found;
  return res;
}

TripleProduct triple_product(const Model& m, const CohClass& alpha, const CohClass& beta,
                             const CohClass& gamma) {
  if (alpha.degree < 1 || beta.degree < 1 || gamma.degree < 1)
    throw UndefinedProductError("triple product needs positive-degree classes");
  if (!cup(m, alpha, beta).is_zero() || !cup(m, beta, gamma).is_zero())
    throw UndefinedProductError("triple product undefined: a consecutive cup product is nonzero");
  std::vector<ClassMatrix> inputs = {scalar_class_matrix(alpha), scalar_class_matrix(beta),
                                     scalar_class_matrix(gamma)};
  SearchResult found = find_defining_system(m, inputs);
  if (!found.system) throw std::logic_error("triple product: deterministic system not found");

  TripleProduct out;
  out.system = *found.system;
  const ElementMatrix c = system_cocycle(m, out.system);
  const int vdeg = alpha.degree + beta.degree + gamma.degree - 1;
  // Curvature sign: the product value is -[c(A)].
  out.value = -class_of(m, c.at(0, 0), vdeg);

  SpanBuilder span(m.cohomology(vdeg).dim());
  const CohomologySlice& right = m.cohomology(beta.degree + gamma.degree - 1);
  for (int i = 0; i < right.dim(); ++i) {
    CohClass h{right.degree, RationalVector::Zero(right.dim())};
    h.coords(i) = Rational(1);
    const CohClass g = cup(m, alpha, h);
    if (!g.is_zero()) span.add(g.coords);
  }
  const CohomologySlice& left = m.cohomology(alpha.degree + beta.degree - 1);
  for (int i = 0; i < left.dim(); ++i) {
    CohClass h{left.degree, RationalVector::Zero(left.dim())};
    h.coords(i) = Rational(1);
    const CohClass g = cup(m, h, gamma);
    if (!g.is_zero()) span.add(g.coords);
  }
  out.indeterminacy = CohSubspace{vdeg, span.basis()};
  out.trivial = out.indeterminacy.contains(out.value);
  return out;
}

bool ClassMatrixSpan::contains(const Model& m, const ClassMatrix& v) const {
  if (v.rows != rows || v.cols != cols) return false;
  const RationalVector flat = flatten(m, v);
  for (Eigen::Index i = 0; i < flat.rows(); ++i)
    if (!flat(i).is_zero()) return in_column_span(basis, flat);
  return true;
}

ClassMatrixSpan matrix_triple_indeterminacy(const Model& m, const ClassMatrix& v1,
                                            const ClassMatrix& v2, const ClassMatrix& v3) {
  std::vector<ClassMatrix> inputs = {v1, v2, v3};
  require_multipliable_chain(inputs);
  const DegreeMatrix vdegs = cocycle_degrees(inputs);
  ClassMatrixSpan span;
  span.rows = v1.rows;
  span.cols = v3.cols;
  span.degrees = vdegs;
  SpanBuilder sb(flat_dim(m, vdegs));

  // X2 ranges over class matrices of shape rows(V2) x cols(V3) with degrees
  // D(V2) * D(V3) - 1; contribution bar(V1) . X2.
  const DegreeMatrix d2 = add_all(degree_star(v2.degrees, v3.degrees), -1);
  const ClassMatrix v1bar = class_bar(v1);
  for (int a = 0; a < v2.rows; ++a) {
    for (int b = 0; b < v3.cols; ++b) {
      const CohomologySlice& h = m.cohomology(d2(a, b));
      for (int k = 0; k < h.dim(); ++k) {
        ClassMatrix x2 = zero_class_matrix(m, v2.rows, v3.cols, d2);
        x2.at(a, b).coords(k) = Rational(1);
        const ClassMatrix g = class_cup(m, v1bar, x2);
        if (!g.is_zero()) sb.add(flatten(m, g));
      }
    }
  }
  // X1 ranges over shape rows(V1) x cols(V2), degrees D(V1) * D(V2) - 1;
  // contribution bar(X1) . V3.
  const DegreeMatrix d1 = add_all(degree_star(v1.degrees, v2.degrees), -1);
  for (int a = 0; a < v1.rows; ++a) {
    for (int b = 0; b < v2.cols; ++b) {
      const CohomologySlice& h = m.cohomology(d1(a, b));
      for (int k = 0; k < h.dim(); ++k) {
        ClassMatrix x1 = zero_class_matrix(m, v1.rows, v2.cols, d1);
        x1.at(a, b).coords(k) = Rational(1);
        const ClassMatrix g = class_cup(m, class_bar(x1), v3);
        if (!g.is_zero()) sb.add(flatten(m, g));
      }
    }
  }
  span.basis = sb.basis();
  return span;
}

MatrixTripleProduct matrix_triple_product(const Model& m, const ClassMatrix& v1,
                                          const ClassMatrix& v2, const ClassMatrix& v3) {
  std::vector<ClassMatrix> inputs = {v1, v2, v3};
  require_multipliable_chain(inputs);
  if (!class_cup(m, class_bar(v1), v2).is_zero() || !class_cup(m, class_bar(v2), v3).is_zero())
    throw UndefinedProductError("matrix triple product undefined: consecutive product is nonzero");
  SearchResult found = find_defining_system(m, inputs);
  if (!found.system) throw std::logic_error("matrix triple product: system not found");

  MatrixTripleProduct out;
  out.system = *found.system;
  const ElementMatrix c = system_cocycle(m, out.system);
  out.value = class_negate(class_of_matrix(m, c, cocycle_degrees(inputs)));
  out.indeterminacy = matrix_triple_indeterminacy(m, v1, v2, v3);
  out.trivial = out.indeterminacy.contains(m, out.value);
  return out;
}

bool is_completely_reducible(const Model& m, const ClassMatrix& value) {
  for (int i = 0; i < value.rows; ++i) {
    for (int j = 0; j < value.cols; ++j) {
      const CohClass& u = value.at(i, j);
      if (u.is_zero()) continue;
      if (u.degree < 2) return false;
      if (!decomposable_subspace(m, u.degree).contains(u)) return false;
    }
  }
  return true;
}

bool is_strictly_irreducible(const Model& m, const ClassMatrix& value,
                             const ClassMatrixSpan& indeterminacy) {
  // (value + In) meets the decomposable matrices iff value lies in the sum
  // In + Dec, where Dec is the per-entry decomposable subspace.
  SpanBuilder sum(flat_dim(m, value.degrees));
  for (Eigen::Index c = 0; c < indeterminacy.basis.cols(); ++c)
    sum.add(indeterminacy.basis.col(c));
  Eigen::Index offset = 0;
  for (int i = 0; i < value.rows; ++i) {
    for (int j = 0; j < value.cols; ++j) {
      const int deg = value.degrees(i, j);
      const Eigen::Index dim = m.cohomology(deg).dim();
      if (deg >= 2) {
        const CohSubspace dec = decomposable_subspace(m, deg);
        for (Eigen::Index c = 0; c < dec.basis.cols(); ++c) {
          RationalVector v = RationalVector::Zero(sum.dim());
          v.segment(offset, dim) = dec.basis.col(c);
          sum.add(v);
        }
      }
      offset += dim;
    }
  }
  return !sum.contains(flatten(m, value));
}

TriState is_strictly_defined(const Model& m, const std::vector<ClassMatrix>& inputs,
                             const SearchOptions& opts) {
  require_multipliable_chain(inputs);
  const int n = static_cast<int>(inputs.size());
  // Sub-pairs: the 2-tuple product is the single class bar(V_i) . V_{i+1};
  // a nonzero one makes the whole product undefined.
  for (int i = 1; i <= n - 1; ++i) {
    const ClassMatrix p = class_cup(m, class_bar(inputs[static_cast<size_t>(i - 1)]),
                                    inputs[static_cast<size_t>(i)]);
    if (!p.is_zero())
      throw UndefinedProductError("product undefined: consecutive pair has nonzero product");
  }
  TriState result = TriState::yes;
  for (int len = 3; len <= n - 1; ++len) {
    for (int i = 1; i + len - 1 <= n; ++i) {
      std::vector<ClassMatrix> sub(inputs.begin() + (i - 1), inputs.begin() + (i - 1) + len);
      if (len == 3) {
        const MatrixTripleProduct t = matrix_triple_product(m, sub[0], sub[1], sub[2]);
        if (t.indeterminacy.dim() == 0 && t.value.is_zero()) continue;
        if (t.indeterminacy.dim() == 0 && !t.value.is_zero()) return TriState::no;
        // Nonzero indeterminacy: the value set is bigger than {0}.
        return TriState::no;
      }
      bool nonzero_found = false;
      SearchResult r = enumerate_defining_systems(m, sub, opts, [&](const DefiningSystem& s) {
        const ElementMatrix c = system_cocycle(m, s);
        ClassMatrix got = class_of_matrix(m, c, cocycle_degrees(sub));
        if (!got.is_zero()) {
          nonzero_found = true;
          return false;
        }
        return true;
      });
      if (nonzero_found) return TriState::no;
      result = TriState::inconclusive;  // cannot exhaust the value set
      (void)r;
    }
  }
  return result;
}

WeightBound strict_weight_bound(const Model& m, const DefiningSystem& sys) {
  for (const auto& v : sys.inputs)
    for (Eigen::Index i = 0; i < v.degrees.rows(); ++i)
      for (Eigen::Index j = 0; j < v.degrees.cols(); ++j)
        if (v.degrees(i, j) != 1)
          throw std::invalid_argument("strict_weight_bound: inputs must be degree-1 class matrices");
  WeightBound out;
  out.arity = sys.arity;
  auto block_filtration = [](const ElementMatrix& x) {
    int f = 0;
    for (const auto& e : x.entries) f = std::max(f, filtration_level(e));
    return f;
  };
  for (const auto& [pos, x] : sys.blocks) {
    const int f = block_filtration(x);
    if (f > pos.second - pos.first + 2) out.blocks_ok = false;
  }
  for (int r = 1; r <= sys.arity - 1; ++r) {
    out.block_bound = std::max(out.block_bound, block_filtration(sys.block(1, r)));
    out.block_bound = std::max(out.block_bound, block_filtration(sys.block(r + 1, sys.arity)));
  }
  out.actual = block_filtration(system_cocycle(m, sys));
  return out;
}

FormMatrix to_form_matrix(const Model& m, const DefiningSystem& sys) {
  const int n = sys.arity;
  std::vector<int> row_off(static_cast<size_t>(n + 2), 0), col_off(static_cast<size_t>(n + 2), 0);
  int acc = 0;
  for (int i = 1; i <= n; ++i) {
    row_off[static_cast<size_t>(i)] = acc;
    acc += sys.inputs[static_cast<size_t>(i - 1)].rows;
  }
  const int total_rows = acc + sys.inputs[static_cast<size_t>(n - 1)].cols;
  acc = sys.inputs[0].rows;
  for (int j = 1; j <= n; ++j) {
    col_off[static_cast<size_t>(j + 1)] = acc;
    acc += sys.inputs[static_cast<size_t>(j - 1)].cols;
  }
  if (acc != total_rows) throw std::logic_error("to_form_matrix: inconsistent block sizes");

  FormMatrix out(total_rows);
  for (const auto& [pos, x] : sys.blocks) {
    const int ro = row_off[static_cast<size_t>(pos.first)];
    const int co = col_off[static_cast<size_t>(pos.second + 1)];
    for (int a = 0; a < x.rows; ++a)
      for (int b = 0; b < x.cols; ++b)
        if (!x.at(a, b).is_zero()) out.set(ro + a + 1, co + b + 1, x.at(a, b));
  }
  (void)m;
  return out;
}

FormMatrix witt_connection_matrix(const Model& witt, int m) {
  if (m < 2) throw std::invalid_argument("witt_connection_matrix: m must be >= 2");
  const GeneratorTable& t = witt.table();
  if (t.size() < 2 * m)
    throw std::invalid_argument("witt_connection_matrix: model needs at least 2m generators");
  const int n = 2 * m + 2;
  FormMatrix a(n);
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      const int coeff = j - 2 - m;
      if (coeff == 0) continue;
      Element e = generator_element(t, j - i - 1);  // w_{j-i}
      e *= Rational(coeff);
      a.set(i, j, std::move(e));
    }
  }
  for (int i = 2; i <= n - 1; ++i) a.set(i, n, generator_element(t, 2 * m + 2 - i - 1));
  return a;
}

DefiningSystem witt_connection_system(const Model& witt, int m) {
  const FormMatrix a = witt_connection_matrix(witt, m);
  const int n = 2 * m;  // arity
  // Block widths along the product: scalars except the (m)-th (1x2) and
  // (m+1)-th (2x1) entries.
  std::vector<int> rows(static_cast<size_t>(n + 1), 1), cols(static_cast<size_t>(n + 1), 1);
  rows[static_cast<size_t>(m + 1)] = 2;
  cols[static_cast<size_t>(m)] = 2;

  std::vector<int> row_off(static_cast<size_t>(n + 2), 0), col_off(static_cast<size_t>(n + 2), 0);
  int acc = 0;
  for (int i = 1; i <= n; ++i) {
    row_off[static_cast<size_t>(i)] = acc;
    acc += rows[static_cast<size_t>(i)];
  }
  acc = rows[1];
  for (int j = 1; j <= n; ++j) {
    col_off[static_cast<size_t>(j + 1)] = acc;
    acc += cols[static_cast<size_t>(j)];
  }

  DefiningSystem sys;
  sys.arity = n;
  sys.matrix_flavor = true;
  sys.blocks.clear();
  auto carve = [&](int i, int j) {
    ElementMatrix x(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
    for (int r = 0; r < x.rows; ++r)
      for (int c = 0; c < x.cols; ++c)
        x.at(r, c) = a.at(row_off[static_cast<size_t>(i)] + r + 1,
                          col_off[static_cast<size_t>(j + 1)] + c + 1);
    return x;
  };
  for (int i = 1; i <= n; ++i) {
    const ElementMatrix diag = carve(i, i);
    DegreeMatrix degs = DegreeMatrix::Constant(diag.rows, diag.cols, 1);
    sys.inputs.push_back(class_of_matrix(witt, diag, degs));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      sys.blocks.emplace(std::make_pair(i, j), carve(i, j));
    }
  return sys;
}

}  // namespace dgalab

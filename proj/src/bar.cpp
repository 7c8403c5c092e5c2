#include "dgalab/bar.hpp"

#include <stdexcept>

namespace dgalab {

int BarWord::internal_degree() const {
  int d = 0;
  for (const auto& m : letters) d += m.degree();
  return d;
}

BarChain BarChain::word(BarWord w, const Rational& c) {
  BarChain out;
  out.add(w, c);
  return out;
}

BarChain& BarChain::add(const BarWord& w, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

BarChain& BarChain::operator+=(const BarChain& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

BarChain& BarChain::operator-=(const BarChain& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

BarChain suspension_chain(const Element& e) {
  BarChain out;
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() < 1)
      throw std::invalid_argument("suspension_chain: letters must lie in the augmentation ideal");
    out.add(BarWord{{m}}, c);
  }
  return out;
}

namespace {

int bar_sign(int degree) { return degree % 2 == 0 ? 1 : -1; }

// Multilinear substitution: replace letter `pos` of the (monomial) word by an
// Element, expanding to basis words.
void substitute_letter(const BarWord& w, size_t pos, const Element& repl, const Rational& coeff,
                       BarChain& out) {
  for (const auto& [mon, c] : repl.terms()) {
    if (mon.degree() < 1) continue;  // letters stay in the augmentation ideal
    BarWord nw = w;
    nw.letters[pos] = mon;
    out.add(nw, coeff * c);
  }
}

}  // namespace

BarChain inner_differential(const Model& m, const BarChain& chain) {
  BarChain out;
  for (const auto& [w, coeff] : chain.terms()) {
    int bars = 1;  // product of bar signs of the letters before position i
    for (size_t i = 0; i < w.letters.size(); ++i) {
      const Element d = differential(m.presentation(), Element::monomial(w.letters[i]));
      if (!d.is_zero()) {
        const int term_sign = (i % 2 == 0) ? -1 : 1;  // (-1)^i with 1-based i
        substitute_letter(w, i, d, coeff * Rational(term_sign * bars), out);
      }
      bars *= bar_sign(w.letters[i].degree());
    }
  }
  return out;
}

BarChain combinatorial_differential(const Model& m, const BarChain& chain) {
  const GeneratorTable& t = m.table();
  BarChain out;
  for (const auto& [w, coeff] : chain.terms()) {
    const int n = w.length();
    int bars = 1;  // product of bar signs of letters 1..i-2 (those left barred)
    for (int i = 2; i <= n; ++i) {
      // Term i merges letters i-1 and i as bar(a_{i-1}) a_i, with sign (-1)^i.
      const int term_sign = (i % 2 == 0) ? 1 : -1;
      const int merged_bar = bar_sign(w.letters[static_cast<size_t>(i - 2)].degree());
      Element merged = multiply(t, Element::monomial(w.letters[static_cast<size_t>(i - 2)]),
                                Element::monomial(w.letters[static_cast<size_t>(i - 1)]));
      if (!merged.is_zero()) {
        const Rational c = coeff * Rational(term_sign * bars * merged_bar);
        for (const auto& [mon, mc] : merged.terms()) {
          if (mon.degree() < 1) throw std::logic_error("combinatorial merge left the ideal");
          BarWord nw;
          nw.letters.reserve(static_cast<size_t>(n - 1));
          for (int j = 0; j < i - 2; ++j) nw.letters.push_back(w.letters[static_cast<size_t>(j)]);
          nw.letters.push_back(mon);
          for (int j = i; j < n; ++j) nw.letters.push_back(w.letters[static_cast<size_t>(j)]);
          out.add(nw, c * mc);
        }
      }
      bars *= bar_sign(w.letters[static_cast<size_t>(i - 2)].degree());
    }
  }
  return out;
}

BarChain total_differential(const Model& m, const BarChain& c) {
  BarChain out = inner_differential(m, c);
  out += combinatorial_differential(m, c);
  return out;
}

BarChain shuffle_product(const Model& m, const BarChain& a, const BarChain& b) {
  (void)m;
  BarChain out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      // All interleavings preserving both letter orders; each crossed pair
      // (x from a after y from b) contributes (-1)^{(deg x - 1)(deg y - 1)}.
      struct Frame {
        size_t i, j;
        int sign;
        std::vector<Monomial> word;
      };
      std::vector<Frame> stack{{0, 0, 1, {}}};
      while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.i == wa.letters.size() && f.j == wb.letters.size()) {
          out.add(BarWord{f.word}, ca * cb * Rational(f.sign));
          continue;
        }
        if (f.i < wa.letters.size()) {
          Frame g = f;
          g.word.push_back(wa.letters[f.i]);
          ++g.i;
          stack.push_back(std::move(g));
        }
        if (f.j < wb.letters.size()) {
          Frame g = f;
          // Letter from b jumps over the remaining letters of a.
          int s = 1;
          const int qb = wb.letters[f.j].degree() - 1;
          for (size_t k = f.i; k < wa.letters.size(); ++k) {
            const int pa = wa.letters[k].degree() - 1;
            if ((pa * qb) % 2 != 0) s = -s;
          }
          g.sign *= s;
          g.word.push_back(wb.letters[f.j]);
          ++g.j;
          stack.push_back(std::move(g));
        }
      }
    }
  }
  return out;
}

BarTensor diagonal(const BarWord& w) {
  BarTensor out;
  const int n = w.length();
  for (int p = 0; p <= n; ++p) {
    BarWord left{std::vector<Monomial>(w.letters.begin(), w.letters.begin() + p)};
    BarWord right{std::vector<Monomial>(w.letters.begin() + p, w.letters.end())};
    out[{left, right}] += Rational(1);
    if (out[{left, right}].is_zero()) out.erase({left, right});
  }
  return out;
}

const std::vector<BarWord>& BarSlice::basis(int length, int q) const {
  static const std::vector<BarWord> empty;
  auto it = words.find({length, q});
  return it == words.end() ? empty : it->second;
}

BarSlice bar_slice(const Model& m, int max_length, int degree_cap) {
  BarSlice s;
  s.max_length = max_length;
  s.degree_cap = degree_cap;
  // Letters: basis monomials of degree 1..degree_cap.
  std::vector<Monomial> letters;
  for (int d = 1; d <= degree_cap; ++d) {
    const LinearSlice& sl = m.slice(d);
    letters.insert(letters.end(), sl.basis.begin(), sl.basis.end());
  }
  s.words[{0, 0}] = {BarWord{}};
  std::vector<BarWord> current = {BarWord{}};
  for (int n = 1; n <= max_length; ++n) {
    std::vector<BarWord> next;
    for (const auto& w : current) {
      const int have = w.internal_degree();
      for (const auto& letter : letters) {
        if (have + letter.degree() > degree_cap) continue;
        BarWord nw = w;
        nw.letters.push_back(letter);
        next.push_back(std::move(nw));
      }
    }
    for (const auto& w : next) s.words[{n, w.internal_degree()}].push_back(w);
    current = std::move(next);
  }
  for (auto& [key, vec] : s.words) std::sort(vec.begin(), vec.end());
  return s;
}

int PageTable::dim(int length, int q) const {
  auto it = dims.find({length, q});
  return it == dims.end() ? 0 : it->second;
}

namespace {

RationalVector chain_coordinates(const std::vector<BarWord>& basis, const BarChain& c) {
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(basis.size()));
  std::map<BarWord, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  for (const auto& [w, coeff] : c.terms()) {
    auto it = index.find(w);
    if (it == index.end()) throw std::logic_error("bar chain leaves the slice");
    v(it->second) = coeff;
  }
  return v;
}

BarChain chain_from(const std::vector<BarWord>& basis, const RationalVector& v) {
  BarChain out;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (!v(i).is_zero()) out.add(basis[static_cast<size_t>(i)], v(i));
  return out;
}

}  // namespace

PageTable page(const Model& m, const BarSlice& slice, int r, int max_len_wanted, int max_q_wanted) {
  if (r != 1 && r != 2) throw std::invalid_argument("page: r must be 1 or 2");
  if (max_q_wanted + 1 > slice.degree_cap)
    throw std::invalid_argument("page: slice too small; need internal degree cap >= " +
                                std::to_string(max_q_wanted + 1));
  if (max_len_wanted + (r - 1) > slice.max_length)
    throw std::invalid_argument("page: slice too small; need word length >= " +
                                std::to_string(max_len_wanted + (r - 1)));

  // E1 at (n, q): homology of the inner differential.  Representatives are
  // kept to induce d1.
  struct E1Cell {
    std::vector<RationalVector> reps;   // cocycle coordinates
    RationalMatrix image;               // image of inner d from (n, q-1)
    RationalMatrix rep_matrix;          // reps as columns
  };
  std::map<std::pair<int, int>, E1Cell> e1;
  auto inner_matrix = [&](int n, int q) {
    const auto& from = slice.basis(n, q);
    const auto& to = slice.basis(n, q + 1);
    RationalMatrix d(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
    for (size_t j = 0; j < from.size(); ++j)
      d.col(static_cast<Eigen::Index>(j)) =
          chain_coordinates(to, inner_differential(m, BarChain::word(from[j])));
    return d;
  };

  const int len_hi = max_len_wanted + (r - 1);
  for (int n = 0; n <= len_hi; ++n) {
    for (int q = 0; q <= max_q_wanted; ++q) {
      if (slice.basis(n, q).empty()) continue;
      const RationalMatrix d_out = inner_matrix(n, q);
      const RationalMatrix ker = kernel_basis(d_out);
      RationalMatrix img;
      if (q >= 1 && !slice.basis(n, q - 1).empty()) {
        img = column_space_basis(inner_matrix(n, q - 1));
      } else {
        img = RationalMatrix::Zero(static_cast<Eigen::Index>(slice.basis(n, q).size()), 0);
      }
      E1Cell cell;
      SpanBuilder span(static_cast<Eigen::Index>(slice.basis(n, q).size()));
      for (Eigen::Index j = 0; j < img.cols(); ++j) span.add(img.col(j));
      for (Eigen::Index j = 0; j < ker.cols(); ++j)
        if (span.add(ker.col(j))) cell.reps.push_back(ker.col(j));
      cell.image = img;
      cell.rep_matrix = RationalMatrix(static_cast<Eigen::Index>(slice.basis(n, q).size()),
                                       static_cast<Eigen::Index>(cell.reps.size()));
      for (size_t j = 0; j < cell.reps.size(); ++j)
        cell.rep_matrix.col(static_cast<Eigen::Index>(j)) = cell.reps[j];
      e1.emplace(std::make_pair(n, q), std::move(cell));
    }
  }

  PageTable out;
  out.r = r;
  if (r == 1) {
    for (const auto& [key, cell] : e1)
      if (key.first <= max_len_wanted) out.dims[key] = static_cast<int>(cell.reps.size());
    return out;
  }

  // d1 : E1(n, q) -> E1(n-1, q) induced by the combinatorial differential.
  auto e1_class = [&](int n, int q, const BarChain& c) {
    const auto& basis = slice.basis(n, q);
    const auto it = e1.find({n, q});
    if (it == e1.end() || basis.empty()) return RationalVector(RationalVector::Zero(0));
    const E1Cell& cell = it->second;
    RationalMatrix a(static_cast<Eigen::Index>(basis.size()),
                     cell.image.cols() + cell.rep_matrix.cols());
    a.leftCols(cell.image.cols()) = cell.image;
    a.rightCols(cell.rep_matrix.cols()) = cell.rep_matrix;
    const LinearSolution sol = solve_linear(a, chain_coordinates(basis, c));
    if (!sol.consistent) throw std::logic_error("page: d1 image is not an inner cocycle");
    return RationalVector(sol.particular.tail(cell.rep_matrix.cols()));
  };

  for (int n = 0; n <= max_len_wanted; ++n) {
    for (int q = 0; q <= max_q_wanted; ++q) {
      auto it = e1.find({n, q});
      const int dim_here = it == e1.end() ? 0 : static_cast<int>(it->second.reps.size());
      if (dim_here == 0) {
        if (!slice.basis(n, q).empty()) out.dims[{n, q}] = 0;
        continue;
      }
      const E1Cell& cell = it->second;
      // Outgoing d1.
      RationalMatrix dout(static_cast<Eigen::Index>(
                              n >= 1 ? (e1.count({n - 1, q}) ? e1.at({n - 1, q}).reps.size() : 0) : 0),
                          dim_here);
      for (int j = 0; j < dim_here; ++j) {
        const BarChain rep = chain_from(slice.basis(n, q), cell.reps[static_cast<size_t>(j)]);
        const BarChain img = combinatorial_differential(m, rep);
        if (n >= 1 && dout.rows() > 0) {
          dout.col(j) = e1_class(n - 1, q, img);
        } else if (!img.is_zero()) {
          throw std::logic_error("page: unexpected d1 image");
        }
      }
      const Eigen::Index ker_dim = dim_here - rank(dout);
      // Incoming d1 from (n+1, q).
      Eigen::Index img_rank = 0;
      auto above = e1.find({n + 1, q});
      if (above != e1.end() && !above->second.reps.empty()) {
        RationalMatrix din(static_cast<Eigen::Index>(dim_here),
                           static_cast<Eigen::Index>(above->second.reps.size()));
        for (size_t j = 0; j < above->second.reps.size(); ++j) {
          const BarChain rep = chain_from(slice.basis(n + 1, q), above->second.reps[j]);
          din.col(static_cast<Eigen::Index>(j)) = e1_class(n, q, combinatorial_differential(m, rep));
        }
        // E2 = ker(dout) / (ker(dout) cap im(din)); im(din) lies in ker(dout).
        img_rank = rank(din);
      }
      out.dims[{n, q}] = static_cast<int>(ker_dim - img_rank);
    }
  }
  return out;
}

int indecomposable_dim(const Model& m, int q) {
  if (q < 1) return 0;
  const int h = m.cohomology(q).dim();
  if (q == 1) return h;
  return h - decomposable_subspace(m, q).dim();
}

RationalVector suspension_to_e2(const Model& m, const CohClass& u) {
  if (u.degree < 1) throw std::invalid_argument("suspension_to_e2: positive degree required");
  const int h = m.cohomology(u.degree).dim();
  RationalMatrix dec(h, 0);
  if (u.degree >= 2) dec = decomposable_subspace(m, u.degree).basis;
  // Quotient basis: unit vectors extending the decomposable span, in order.
  SpanBuilder span(h);
  for (Eigen::Index j = 0; j < dec.cols(); ++j) span.add(dec.col(j));
  std::vector<Eigen::Index> quotient_cols;
  for (Eigen::Index i = 0; i < h; ++i) {
    RationalVector e = RationalVector::Zero(h);
    e(i) = Rational(1);
    if (span.add(e)) quotient_cols.push_back(i);
  }
  // Express u as dec + quotient-basis combination.
  RationalMatrix a(h, dec.cols() + static_cast<Eigen::Index>(quotient_cols.size()));
  a.leftCols(dec.cols()) = dec;
  for (size_t j = 0; j < quotient_cols.size(); ++j) {
    RationalVector e = RationalVector::Zero(h);
    e(quotient_cols[j]) = Rational(1);
    a.col(dec.cols() + static_cast<Eigen::Index>(j)) = e;
  }
  const LinearSolution sol = solve_linear(a, u.coords);
  if (!sol.consistent) throw std::logic_error("suspension_to_e2: quotient decomposition failed");
  return RationalVector(sol.particular.tail(static_cast<Eigen::Index>(quotient_cols.size())));
}

}  // namespace dgalab

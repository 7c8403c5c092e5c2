#include "dgalab/form_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgalab {

namespace {
const Element kZero{};
}

const Element& FormMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return kZero;
  return entries_[static_cast<size_t>((i - 1) * n_ + (j - 1))];
}

void FormMatrix::set(int i, int j, Element e) {
  if (!(1 <= i && i < j && j <= n_))
    throw std::invalid_argument("FormMatrix::set: position must be strictly upper triangular");
  entries_[static_cast<size_t>((i - 1) * n_ + (j - 1))] = std::move(e);
}

bool FormMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

FormMatrix FormMatrix::padded(int size) const {
  if (size <= n_) return *this;
  FormMatrix out(size);
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!at(i, j).is_zero()) out.set(i, j, at(i, j));
  return out;
}

bool operator==(const FormMatrix& a, const FormMatrix& b) {
  const int n = std::max(a.size(), b.size());
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

FormMatrix single_entry_matrix(int size, int i, int j, Element e) {
  FormMatrix m(size);
  m.set(i, j, std::move(e));
  return m;
}

FormMatrix add(const FormMatrix& a, const FormMatrix& b) {
  const int n = std::max(a.size(), b.size());
  FormMatrix out(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Element e = a.at(i, j) + b.at(i, j);
      if (!e.is_zero()) out.set(i, j, std::move(e));
    }
  return out;
}

FormMatrix subtract(const FormMatrix& a, const FormMatrix& b) {
  const int n = std::max(a.size(), b.size());
  FormMatrix out(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Element e = a.at(i, j) - b.at(i, j);
      if (!e.is_zero()) out.set(i, j, std::move(e));
    }
  return out;
}

FormMatrix matrix_multiply(const GeneratorTable& t, const FormMatrix& a, const FormMatrix& b) {
  const int n = std::max(a.size(), b.size());
  FormMatrix out(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Element e;
      for (int k = i + 1; k < j; ++k) {
        const Element& x = a.at(i, k);
        const Element& y = b.at(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        e += multiply(t, x, y);
      }
      if (!e.is_zero()) out.set(i, j, std::move(e));
    }
  }
  return out;
}

FormMatrix matrix_bar(const GeneratorTable& t, const FormMatrix& a) {
  FormMatrix out(a.size());
  for (int i = 1; i < a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j)
      if (!a.at(i, j).is_zero()) out.set(i, j, bar_involution(t, a.at(i, j)));
  return out;
}

FormMatrix matrix_d(const DgaPresentation& p, const FormMatrix& a) {
  FormMatrix out(a.size());
  for (int i = 1; i < a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j) {
      Element e = differential(p, a.at(i, j));
      if (!e.is_zero()) out.set(i, j, std::move(e));
    }
  return out;
}

std::optional<MatrixBidegree> bidegree(const FormMatrix& a) {
  std::optional<MatrixBidegree> bd;
  for (int i = 1; i < a.size(); ++i) {
    for (int j = i + 1; j <= a.size(); ++j) {
      const Element& e = a.at(i, j);
      if (e.is_zero()) continue;
      auto deg = e.homogeneous_degree();
      if (!deg) return std::nullopt;
      if (!bd) {
        bd = MatrixBidegree{j - i, *deg};
      } else if (bd->diag != j - i || bd->form != *deg) {
        return std::nullopt;
      }
    }
  }
  return bd;
}

FormMatrix lie_bracket(const GeneratorTable& t, const FormMatrix& a, const FormMatrix& b) {
  auto da = bidegree(a), db = bidegree(b);
  if ((!da && !a.is_zero()) || (!db && !b.is_zero()))
    throw std::invalid_argument("lie_bracket: arguments must be bihomogeneous");
  const int k = da ? da->form : 0;
  const int l = db ? db->form : 0;
  FormMatrix ab = matrix_multiply(t, a, b);
  FormMatrix ba = matrix_multiply(t, b, a);
  if ((k * l) % 2 == 0) return subtract(ab, ba);
  return add(ab, ba);
}

bool KernelSubmodule::is_generating(int i, int j) const {
  return std::find(generating.begin(), generating.end(), std::make_pair(i, j)) != generating.end();
}

KernelSubmodule kernel_submodule(const FormMatrix& a) {
  const int n = a.size();
  KernelSubmodule k;
  k.size = n;
  // A.(1)_{ij} = 0 iff column i of A vanishes; (1)_{ij}.A = 0 iff row j does.
  std::vector<bool> col_zero(static_cast<size_t>(n + 1), true), row_zero(static_cast<size_t>(n + 1), true);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!a.at(i, j).is_zero()) {
        col_zero[static_cast<size_t>(j)] = false;
        row_zero[static_cast<size_t>(i)] = false;
      }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (col_zero[static_cast<size_t>(i)] && row_zero[static_cast<size_t>(j)])
        k.generating.emplace_back(i, j);
  // Strict part: i before the first nonzero column, j after the last nonzero row.
  int first_col = n + 1, last_row = 0;
  for (int c = 1; c <= n; ++c)
    if (!col_zero[static_cast<size_t>(c)]) {
      first_col = c;
      break;
    }
  for (int r = n; r >= 1; --r)
    if (!row_zero[static_cast<size_t>(r)]) {
      last_row = r;
      break;
    }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (i < first_col && j > last_row) k.strict.emplace_back(i, j);
  return k;
}

FormMatrix maurer_cartan(const DgaPresentation& p, const FormMatrix& a) {
  return subtract(matrix_d(p, a), matrix_multiply(p.table(), matrix_bar(p.table(), a), a));
}

FormalConnectionCheck is_formal_connection(const DgaPresentation& p, const FormMatrix& a) {
  const FormMatrix mu = maurer_cartan(p, a);
  const KernelSubmodule ker = kernel_submodule(a);
  FormalConnectionCheck r;
  for (int i = 1; i < mu.size(); ++i) {
    for (int j = i + 1; j <= mu.size(); ++j) {
      if (mu.at(i, j).is_zero()) continue;
      if (!ker.is_generating(i, j)) {
        r.formal = false;
        r.witness = std::make_pair(i, j);
        return r;
      }
    }
  }
  r.formal = true;
  return r;
}

bool bianchi_check(const DgaPresentation& p, const FormMatrix& a) {
  const GeneratorTable& t = p.table();
  const FormMatrix mu = maurer_cartan(p, a);
  const FormMatrix lhs = matrix_d(p, mu);
  const FormMatrix rhs =
      subtract(matrix_multiply(t, matrix_bar(t, mu), a), matrix_multiply(t, a, mu));
  if (!(lhs == rhs)) return false;
  if (is_formal_connection(p, a).formal) {
    if (!matrix_d(p, mu).is_zero()) return false;
  }
  return true;
}

std::map<std::pair<int, int>, CohClass> curvature_classes(const Model& m, const FormMatrix& a) {
  const auto check = is_formal_connection(m.presentation(), a);
  if (!check.formal)
    throw std::invalid_argument("curvature_classes: matrix is not a formal connection");
  const FormMatrix mu = maurer_cartan(m.presentation(), a);
  std::map<std::pair<int, int>, CohClass> out;
  for (int i = 1; i < mu.size(); ++i)
    for (int j = i + 1; j <= mu.size(); ++j) {
      const Element& e = mu.at(i, j);
      if (e.is_zero()) continue;
      out.emplace(std::make_pair(i, j), class_of(m, e));
    }
  return out;
}

FormMatrix initial_data_move(const DgaPresentation& p, const FormMatrix& a, int i, int j,
                             const Element& b) {
  const GeneratorTable& t = p.table();
  const int n = a.size();
  FormMatrix db_ij = single_entry_matrix(n, i, j, differential(p, b));
  FormMatrix b_ij = single_entry_matrix(n, i, j, b);
  FormMatrix bbar_ij = single_entry_matrix(n, i, j, bar_involution(t, b));
  return subtract(add(add(a, db_ij), matrix_multiply(t, a, b_ij)),
                  matrix_multiply(t, bbar_ij, a));
}

FormMatrix pushforward(const DgaHomomorphism& f, const FormMatrix& a) {
  FormMatrix out(a.size());
  for (int i = 1; i < a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      Element e = apply(f, a.at(i, j));
      if (!e.is_zero()) out.set(i, j, std::move(e));
    }
  return out;
}

}  // namespace dgalab

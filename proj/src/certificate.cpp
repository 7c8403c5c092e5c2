#include "dgalab/certificate.hpp"

#include <sstream>

namespace dgalab {

namespace {

struct RawMatrix {
  int rows = 0, cols = 0;
  std::vector<Element> entries;
  DegreeMatrix degrees;
};

ClassMatrix to_class_matrix(const Model& m, const RawMatrix& raw) {
  ClassMatrix out;
  out.rows = raw.rows;
  out.cols = raw.cols;
  out.degrees = raw.degrees;
  for (int i = 0; i < raw.rows; ++i)
    for (int j = 0; j < raw.cols; ++j)
      out.entries.push_back(
          class_of(m, raw.entries[static_cast<size_t>(i * raw.cols + j)], raw.degrees(i, j)));
  return out;
}

ElementMatrix to_element_matrix(const RawMatrix& raw) {
  ElementMatrix out(raw.rows, raw.cols);
  out.entries = raw.entries;
  return out;
}

}  // namespace

ResolvedCertificate parse_certificate(const Model& m, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;

  int arity = 0;
  bool matrix_flavor = false;
  std::vector<RawMatrix> inputs;
  std::map<std::pair<int, int>, RawMatrix> blocks;
  RawMatrix claimed;
  RawMatrix* current = nullptr;
  bool seen_header = false, seen_end = false;

  auto need = [&](bool cond, const std::string& msg) {
    if (!cond) throw ParseError(line_no, 1, msg);
  };

  while (std::getline(is, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    need(!seen_end, "content after end");
    if (word == "defining-system") {
      seen_header = true;
    } else if (word == "arity") {
      need(seen_header, "arity before header");
      need(static_cast<bool>(ls >> arity) && arity >= 2, "bad arity");
    } else if (word == "flavor") {
      std::string f;
      need(static_cast<bool>(ls >> f) && (f == "ordinary" || f == "matrix"), "bad flavor");
      matrix_flavor = (f == "matrix");
    } else if (word == "input") {
      int k = 0, r = 0, c = 0;
      std::string rows_kw, cols_kw;
      need(static_cast<bool>(ls >> k >> rows_kw >> r >> cols_kw >> c) && rows_kw == "rows" &&
               cols_kw == "cols" && r >= 1 && c >= 1,
           "expected `input <k> rows <r> cols <c>`");
      need(k == static_cast<int>(inputs.size()) + 1, "inputs must appear in order");
      inputs.push_back(RawMatrix{r, c, std::vector<Element>(static_cast<size_t>(r * c)),
                                 DegreeMatrix::Zero(r, c)});
      current = &inputs.back();
    } else if (word == "block") {
      int i = 0, j = 0, r = 0, c = 0;
      std::string rows_kw, cols_kw;
      need(static_cast<bool>(ls >> i >> j >> rows_kw >> r >> cols_kw >> c) && rows_kw == "rows" &&
               cols_kw == "cols" && r >= 1 && c >= 1,
           "expected `block <i> <j> rows <r> cols <c>`");
      auto [it, inserted] = blocks.emplace(
          std::make_pair(i, j), RawMatrix{r, c, std::vector<Element>(static_cast<size_t>(r * c)),
                                          DegreeMatrix::Zero(r, c)});
      need(inserted, "duplicate block");
      current = &it->second;
    } else if (word == "claimed") {
      int r = 0, c = 0;
      std::string rows_kw, cols_kw;
      need(static_cast<bool>(ls >> rows_kw >> r >> cols_kw >> c) && rows_kw == "rows" &&
               cols_kw == "cols" && r >= 1 && c >= 1,
           "expected `claimed rows <r> cols <c>`");
      claimed = RawMatrix{r, c, std::vector<Element>(static_cast<size_t>(r * c)),
                          DegreeMatrix::Zero(r, c)};
      current = &claimed;
    } else if (word == "entry") {
      need(current != nullptr, "entry outside a matrix");
      int i = 0, j = 0, deg = 0;
      std::string deg_kw, colon;
      need(static_cast<bool>(ls >> i >> j >> deg_kw >> deg >> colon) && deg_kw == "deg" &&
               colon == ":",
           "expected `entry <i> <j> deg <D> : <expr>`");
      need(1 <= i && i <= current->rows && 1 <= j && j <= current->cols, "entry out of range");
      std::string expr;
      std::getline(ls, expr);
      current->degrees(i - 1, j - 1) = deg;
      Element e;
      bool blank = true;
      for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (!blank) e = parse_element(m.table(), expr, line_no);
      current->entries[static_cast<size_t>((i - 1) * current->cols + (j - 1))] = std::move(e);
    } else if (word == "end") {
      seen_end = true;
    } else {
      throw ParseError(line_no, 1, "unknown certificate statement '" + word + "'");
    }
  }
  need(seen_header, "missing `defining-system` header");
  need(seen_end, "missing `end`");
  need(static_cast<int>(inputs.size()) == arity, "wrong number of inputs");

  ResolvedCertificate out;
  for (const auto& raw : inputs) out.inputs.push_back(to_class_matrix(m, raw));
  out.system.arity = arity;
  out.system.matrix_flavor = matrix_flavor;
  out.system.inputs = out.inputs;
  for (const auto& [pos, raw] : blocks) out.system.blocks.emplace(pos, to_element_matrix(raw));
  // Diagonal blocks may be omitted in the file; default to the stated input
  // representatives read literally from the input entries.
  for (int i = 1; i <= arity; ++i) {
    if (!out.system.blocks.count({i, i}))
      out.system.blocks.emplace(std::make_pair(i, i),
                                to_element_matrix(inputs[static_cast<size_t>(i - 1)]));
  }
  out.claimed = to_class_matrix(m, claimed);
  return out;
}

std::vector<ClassMatrix> parse_class_matrices(const Model& m, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  std::vector<RawMatrix> inputs;
  RawMatrix* current = nullptr;
  auto need = [&](bool cond, const std::string& msg) {
    if (!cond) throw ParseError(line_no, 1, msg);
  };
  while (std::getline(is, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "input") {
      int k = 0, r = 0, c = 0;
      std::string rows_kw, cols_kw;
      need(static_cast<bool>(ls >> k >> rows_kw >> r >> cols_kw >> c) && rows_kw == "rows" &&
               cols_kw == "cols" && r >= 1 && c >= 1,
           "expected `input <k> rows <r> cols <c>`");
      need(k == static_cast<int>(inputs.size()) + 1, "inputs must appear in order");
      inputs.push_back(RawMatrix{r, c, std::vector<Element>(static_cast<size_t>(r * c)),
                                 DegreeMatrix::Zero(r, c)});
      current = &inputs.back();
    } else if (word == "entry") {
      need(current != nullptr, "entry outside a matrix");
      int i = 0, j = 0, deg = 0;
      std::string deg_kw, colon;
      need(static_cast<bool>(ls >> i >> j >> deg_kw >> deg >> colon) && deg_kw == "deg" &&
               colon == ":",
           "expected `entry <i> <j> deg <D> : <expr>`");
      need(1 <= i && i <= current->rows && 1 <= j && j <= current->cols, "entry out of range");
      std::string expr;
      std::getline(ls, expr);
      current->degrees(i - 1, j - 1) = deg;
      Element e;
      bool blank = true;
      for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (!blank) e = parse_element(m.table(), expr, line_no);
      current->entries[static_cast<size_t>((i - 1) * current->cols + (j - 1))] = std::move(e);
    } else if (word == "end") {
      break;
    } else {
      throw ParseError(line_no, 1, "unknown statement '" + word + "'");
    }
  }
  std::vector<ClassMatrix> out;
  for (const auto& raw : inputs) out.push_back(to_class_matrix(m, raw));
  return out;
}

std::string render_certificate(const Model& m, const std::vector<ClassMatrix>& inputs,
                               const DefiningSystem& system, const ClassMatrix& claimed) {
  const GeneratorTable& t = m.table();
  std::ostringstream os;
  os << "defining-system\n";
  os << "arity " << system.arity << "\n";
  os << "flavor " << (system.matrix_flavor ? "matrix" : "ordinary") << "\n";
  auto emit_entries = [&](const ElementMatrix& e, const DegreeMatrix& degs) {
    for (int i = 0; i < e.rows; ++i)
      for (int j = 0; j < e.cols; ++j)
        os << "entry " << (i + 1) << " " << (j + 1) << " deg " << degs(i, j) << " : "
           << to_string(t, e.at(i, j)) << "\n";
  };
  for (size_t k = 0; k < inputs.size(); ++k) {
    const ClassMatrix& v = inputs[k];
    os << "input " << (k + 1) << " rows " << v.rows << " cols " << v.cols << "\n";
    emit_entries(representative_matrix(m, v), v.degrees);
  }
  for (const auto& [pos, block] : system.blocks) {
    os << "block " << pos.first << " " << pos.second << " rows " << block.rows << " cols "
       << block.cols << "\n";
    emit_entries(block, block_degrees(system.inputs, pos.first, pos.second));
  }
  os << "claimed rows " << claimed.rows << " cols " << claimed.cols << "\n";
  emit_entries(representative_matrix(m, claimed), claimed.degrees);
  os << "end\n";
  return os.str();
}

}  // namespace dgalab

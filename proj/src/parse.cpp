#include "dgalab/parse.hpp"

#include "dgalab/blowup.hpp"
#include "dgalab/models.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace dgalab {

namespace {

struct Token {
  enum Kind { number, ident, plus, minus, star, slash, caret, colon, equals, end } kind;
  std::string text;
  int column = 0;
};

class Lexer {
 public:
  Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, tok_.column + 1, msg); }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    tok_.column = static_cast<int>(pos_);
    if (pos_ >= s_.size()) {
      tok_ = Token{Token::end, "", static_cast<int>(pos_)};
      return;
    }
    const char c = s_[pos_];
    auto single = [&](Token::Kind k) {
      tok_ = Token{k, std::string(1, c), static_cast<int>(pos_)};
      ++pos_;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = Token{Token::number, s_.substr(start, pos_ - start), static_cast<int>(start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_ = Token{Token::ident, s_.substr(start, pos_ - start), static_cast<int>(start)};
      return;
    }
    switch (c) {
      case '+': single(Token::plus); return;
      case '-': single(Token::minus); return;
      case '*': single(Token::star); return;
      case '/': single(Token::slash); return;
      case '^': single(Token::caret); return;
      case ':': single(Token::colon); return;
      case '=': single(Token::equals); return;
      default: throw ParseError(line_, static_cast<int>(pos_) + 1, std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& s_;
  int line_;
  size_t pos_ = 0;
  Token tok_;
};

Rational parse_coeff(Lexer& lx) {
  const Token num = lx.take();
  Rational c = Rational::from_string(num.text);
  if (lx.peek().kind == Token::slash) {
    lx.take();
    if (lx.peek().kind != Token::number) lx.fail("expected denominator");
    const Token den = lx.take();
    c /= Rational::from_string(den.text);
  }
  return c;
}

Element parse_term(const GeneratorTable& t, Lexer& lx, int line) {
  Rational coeff(1);
  bool have_coeff = false;
  if (lx.peek().kind == Token::number) {
    coeff = parse_coeff(lx);
    have_coeff = true;
    if (lx.peek().kind == Token::star) lx.take();
  }
  if (lx.peek().kind != Token::ident) {
    if (have_coeff) return Element::constant(coeff);
    lx.fail("expected generator name or coefficient");
  }
  Element mono = Element::constant(coeff);
  while (true) {
    const Token id = lx.take();
    if (t.find(id.text) < 0)
      throw ParseError(line, id.column + 1, "unknown generator '" + id.text + "'");
    mono = multiply(t, mono, generator_element(t, id.text));
    if (lx.peek().kind == Token::caret) {
      lx.take();
      if (lx.peek().kind != Token::ident) lx.fail("expected generator after '^'");
      continue;
    }
    break;
  }
  return mono;
}

}  // namespace

Element parse_element(const GeneratorTable& t, const std::string& text, int line) {
  Lexer lx(text, line);
  Element out;
  bool negate = false;
  if (lx.peek().kind == Token::minus) {
    lx.take();
    negate = true;
  } else if (lx.peek().kind == Token::plus) {
    lx.take();
  }
  // A single "0" literal is the zero element.
  while (true) {
    Element term = parse_term(t, lx, line);
    if (negate) term *= Rational(-1);
    out += term;
    if (lx.peek().kind == Token::plus) {
      lx.take();
      negate = false;
    } else if (lx.peek().kind == Token::minus) {
      lx.take();
      negate = true;
    } else {
      break;
    }
  }
  if (lx.peek().kind != Token::end) lx.fail("trailing input in expression");
  return out;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);
  return lines;
}

std::string strip_comment(const std::string& line) {
  const size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> words_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

DgaPresentation ParsedDocument::final_presentation() const {
  if (!has_blowup()) return base;
  return BlowupModel(base, *blowup_m, chern).total().presentation();
}

ParsedDocument parse_document(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);

  struct PendingDiff {
    std::string name;
    std::string expr;
    int line;
  };
  struct PendingChern {
    int index;
    std::string expr;
    int line;
  };

  std::vector<GeneratorSpec> gens;
  std::set<std::string> used;
  // Differentials carried over from presets, by merged generator name.
  std::vector<std::pair<std::string, std::pair<const DgaPresentation*, int>>> preset_diffs;
  std::vector<DgaPresentation> preset_store;
  preset_store.reserve(16);
  std::vector<std::vector<std::string>> preset_renames;  // canonical idx -> merged name
  std::vector<PendingDiff> pending_diffs;
  std::vector<PendingChern> pending_chern;
  std::optional<int> blowup_m;
  int blowup_line = -1;

  auto fresh_name = [&](const std::string& want) {
    std::string name = want;
    int k = 2;
    while (used.count(name)) name = want + "_" + std::to_string(k++);
    return name;
  };

  auto add_preset = [&](DgaPresentation p) {
    preset_store.push_back(std::move(p));
    const DgaPresentation& stored = preset_store.back();
    const GeneratorTable& t = stored.table();
    std::vector<std::string> names(static_cast<size_t>(t.size()));
    for (int d = 0; d < t.size(); ++d) {
      const int c = t.canonical_index_of_declared(d);
      const std::string name = fresh_name(t.name(c));
      used.insert(name);
      names[static_cast<size_t>(c)] = name;
      gens.push_back(GeneratorSpec{name, t.degree(c)});
    }
    preset_renames.push_back(std::move(names));
  };

  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const int line_no = static_cast<int>(ln) + 1;
    const std::string body = strip_comment(lines[ln]);
    const std::vector<std::string> w = words_of(body);
    if (w.empty()) continue;
    if (blowup_m && w[0] != "chern")
      throw ParseError(line_no, 1, "only chern statements may follow `preset blowup`");

    if (w[0] == "generator") {
      if (w.size() != 4 || w[2] != ":")
        throw ParseError(line_no, 1, "expected `generator <name> : <degree>`");
      if (used.count(w[1])) throw ParseError(line_no, 1, "duplicate generator '" + w[1] + "'");
      int deg = 0;
      try {
        deg = std::stoi(w[3]);
      } catch (...) {
        throw ParseError(line_no, 1, "bad degree '" + w[3] + "'");
      }
      if (deg < 1) throw ParseError(line_no, 1, "generator degree must be >= 1");
      used.insert(w[1]);
      gens.push_back(GeneratorSpec{w[1], deg});
    } else if (w[0] == "d") {
      // d <name> = <expr>
      const size_t eq = body.find('=');
      if (w.size() < 3 || eq == std::string::npos)
        throw ParseError(line_no, 1, "expected `d <name> = <expr>`");
      pending_diffs.push_back(PendingDiff{w[1], body.substr(eq + 1), line_no});
    } else if (w[0] == "preset") {
      if (w.size() < 2) throw ParseError(line_no, 1, "expected a preset name");
      const std::string& name = w[1];
      auto int_arg = [&](size_t idx) {
        if (w.size() <= idx) throw ParseError(line_no, 1, "preset '" + name + "' needs an argument");
        try {
          return std::stoi(w[idx]);
        } catch (...) {
          throw ParseError(line_no, 1, "bad preset argument '" + w[idx] + "'");
        }
      };
      try {
        if (name == "heisenberg") {
          add_preset(heisenberg_model());
        } else if (name == "generalized_heisenberg") {
          add_preset(generalized_heisenberg_model(int_arg(2)));
        } else if (name == "witt") {
          add_preset(witt_model(int_arg(2)));
        } else if (name == "sphere") {
          add_preset(sphere_model(int_arg(2)));
        } else if (name == "circle") {
          add_preset(circle_model());
        } else if (name == "tensor") {
          // Concatenation of stanzas is already the tensor product.
        } else if (name == "blowup") {
          blowup_m = int_arg(2);
          if (*blowup_m < 2) throw ParseError(line_no, 1, "blowup needs m >= 2");
          blowup_line = line_no;
        } else {
          throw ParseError(line_no, 1, "unknown preset '" + name + "'");
        }
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, 1, e.what());
      }
    } else if (w[0] == "chern") {
      if (!blowup_m) throw ParseError(line_no, 1, "chern before `preset blowup`");
      const size_t eq = body.find('=');
      if (w.size() < 3 || eq == std::string::npos)
        throw ParseError(line_no, 1, "expected `chern <i> = <expr>`");
      int idx = 0;
      try {
        idx = std::stoi(w[1]);
      } catch (...) {
        throw ParseError(line_no, 1, "bad chern index '" + w[1] + "'");
      }
      if (idx < 1 || idx > *blowup_m)
        throw ParseError(line_no, 1, "chern index out of range 1..m");
      pending_chern.push_back(PendingChern{idx, body.substr(eq + 1), line_no});
    } else {
      throw ParseError(line_no, 1, "unknown statement '" + w[0] + "'");
    }
  }
  (void)blowup_line;

  GeneratorTable table(gens);
  std::vector<Element> diffs(gens.size());
  std::vector<bool> assigned(gens.size(), false);

  // Preset differentials, remapped into the merged table.
  for (size_t pi = 0; pi < preset_store.size(); ++pi) {
    const DgaPresentation& p = preset_store[pi];
    const GeneratorTable& t = p.table();
    for (int c = 0; c < t.size(); ++c) {
      const Element& d = p.differential_of(c);
      const std::string& merged_name = preset_renames[pi][static_cast<size_t>(c)];
      // Find the declaration slot.
      int decl = -1;
      for (size_t g = 0; g < gens.size(); ++g)
        if (gens[g].name == merged_name) decl = static_cast<int>(g);
      Element remapped;
      for (const auto& [mon, coeff] : d.terms()) {
        std::vector<Monomial::Factor> fs;
        for (const auto& f : mon.factors())
          fs.push_back(Monomial::Factor{
              table.find(preset_renames[pi][static_cast<size_t>(f.gen)]), f.exp});
        std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.gen < b.gen; });
        remapped.add_term(Monomial(mon.degree(), std::move(fs)), coeff);
      }
      diffs[static_cast<size_t>(decl)] = remapped;
      assigned[static_cast<size_t>(decl)] = !remapped.is_zero();
    }
  }

  for (const auto& pd : pending_diffs) {
    const int c = table.find(pd.name);
    if (c < 0) throw ParseError(pd.line, 1, "unknown generator '" + pd.name + "'");
    int decl = -1;
    for (size_t g = 0; g < gens.size(); ++g)
      if (gens[g].name == pd.name) decl = static_cast<int>(g);
    if (assigned[static_cast<size_t>(decl)])
      throw ParseError(pd.line, 1, "differential of '" + pd.name + "' is already defined");
    Element e;
    const std::string trimmed = pd.expr;
    bool all_space = true;
    for (char ch : trimmed)
      if (!std::isspace(static_cast<unsigned char>(ch))) all_space = false;
    if (!all_space) {
      e = parse_element(table, trimmed, pd.line);
      // `d x = 0` parses as the constant 0.
    }
    diffs[static_cast<size_t>(decl)] = e;
    assigned[static_cast<size_t>(decl)] = true;
  }

  ParsedDocument doc;
  doc.base = DgaPresentation(gens, diffs);
  doc.blowup_m = blowup_m;
  if (blowup_m) {
    doc.chern.assign(static_cast<size_t>(*blowup_m), Element::zero());
    for (const auto& pc : pending_chern) {
      Element e = parse_element(doc.base.table(), pc.expr, pc.line);
      doc.chern[static_cast<size_t>(pc.index - 1)] = e;
    }
    // Trailing zero chern entries are fine; trim nothing, the builder
    // accepts zeros.
  }
  return doc;
}

std::string render_document(const DgaPresentation& p) {
  const GeneratorTable& t = p.table();
  std::ostringstream os;
  for (int d = 0; d < t.size(); ++d) {
    const int c = t.canonical_index_of_declared(d);
    os << "generator " << t.name(c) << " : " << t.degree(c) << "\n";
  }
  for (int d = 0; d < t.size(); ++d) {
    const int c = t.canonical_index_of_declared(d);
    if (!p.differential_of(c).is_zero())
      os << "d " << t.name(c) << " = " << to_string(t, p.differential_of(c)) << "\n";
  }
  return os.str();
}

}  // namespace dgalab

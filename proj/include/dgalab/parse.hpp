#pragma once

#include "dgalab/presentation.hpp"

#include <optional>
#include <stdexcept>

namespace dgalab {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                           msg),
        line(l),
        column(c) {}
};

/// Element expressions over a fixed generator table:
///   expr  := ['-'] term (('+'|'-') term)*
///   term  := coeff ['*'] mono | coeff | mono
///   coeff := INT ['/' INT]
///   mono  := IDENT ('^' IDENT)* | '1'
/// '^' is the wedge product; x^x denotes the square of an even generator.
Element parse_element(const GeneratorTable& t, const std::string& text, int line_for_errors = 1);

/// Presentation documents:
///   generator <name> : <degree>
///   d <name> = <expr>
///   preset heisenberg | generalized_heisenberg n | witt n | sphere n |
///          circle | tensor | blowup m
///   chern <i> = <expr>         (after `preset blowup`)
/// Multiple stanzas combine as tensor products (names must stay distinct;
/// preset collisions are renamed with numeric suffixes).  `preset blowup`
/// must come last; it extends the base by x, y with d y = x^m + sum c_i
/// x^{m-i}.
struct ParsedDocument {
  DgaPresentation base;
  std::optional<int> blowup_m;
  std::vector<Element> chern;  // over the base table, index i-1 holds c_i

  bool has_blowup() const { return blowup_m.has_value(); }
  /// The base, or the blow-up extension when requested.
  DgaPresentation final_presentation() const;
};

ParsedDocument parse_document(const std::string& text);

/// Canonical preset-free document; parse(render(p)) reproduces p.
std::string render_document(const DgaPresentation& p);

}  // namespace dgalab

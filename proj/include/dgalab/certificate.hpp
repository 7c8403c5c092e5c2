#pragma once

#include "dgalab/massey.hpp"
#include "dgalab/parse.hpp"

namespace dgalab {

/// Defining-system certificates are line-based text so the explicit matrices
/// from the literature ship as plain fixture files:
///
///   defining-system
///   arity 4
///   flavor ordinary|matrix
///   input <k> rows <r> cols <c>
///   entry <i> <j> deg <D> : <expr>
///   ...
///   block <i> <j> rows <r> cols <c>
///   entry ...
///   claimed rows <r> cols <c>
///   entry ...
///   end
///
/// Entries are cocycle expressions over the model the certificate is checked
/// against; classes are computed by the checker.
struct ResolvedCertificate {
  std::vector<ClassMatrix> inputs;
  DefiningSystem system;
  ClassMatrix claimed;
};

ResolvedCertificate parse_certificate(const Model& m, const std::string& text);

std::string render_certificate(const Model& m, const std::vector<ClassMatrix>& inputs,
                               const DefiningSystem& system, const ClassMatrix& claimed);

/// A bare list of class matrices in the same `input .. entry .. end` syntax,
/// for passing matrix products on the command line.
std::vector<ClassMatrix> parse_class_matrices(const Model& m, const std::string& text);

}  // namespace dgalab

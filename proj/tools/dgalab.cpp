// Command-line front end: parses presentation documents, dispatches the
// library operations, and prints deterministic structured results.

#include "dgalab/bar.hpp"
#include "dgalab/blowup.hpp"
#include "dgalab/certificate.hpp"
#include "dgalab/massey.hpp"
#include "dgalab/models.hpp"
#include "dgalab/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dgalab;

// Exit-code contract.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUndefinedProduct = 2;
constexpr int kBudgetExhausted = 3;
constexpr int kInvariantViolation = 4;

struct ExitWith {
  int code;
};

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split_semicolons(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string class_str(const Model& m, const CohClass& u) {
  return to_string(m.table(), representative(m, u));
}

void print_class_matrix(const Model& m, const std::string& label, const ClassMatrix& v) {
  std::cout << label << ": rows " << v.rows << " cols " << v.cols << "\n";
  for (int i = 0; i < v.rows; ++i)
    for (int j = 0; j < v.cols; ++j)
      std::cout << "  entry " << (i + 1) << " " << (j + 1) << " deg " << v.degrees(i, j) << " : "
                << class_str(m, v.at(i, j)) << "\n";
}

std::vector<ClassMatrix> classes_from_options(const Model& m, const std::string& exprs,
                                              const std::string& file) {
  if (!exprs.empty() && !file.empty())
    throw std::runtime_error("give either --classes or --classes-file, not both");
  std::vector<ClassMatrix> out;
  if (!exprs.empty()) {
    for (const auto& e : split_semicolons(exprs)) {
      const Element el = parse_element(m.table(), e);
      if (el.is_zero()) throw std::runtime_error("class expression '" + e + "' is zero");
      out.push_back(scalar_class_matrix(class_of(m, el)));
    }
  } else if (!file.empty()) {
    out = parse_class_matrices(m, read_file_or_stdin(file));
  } else {
    throw std::runtime_error("missing --classes or --classes-file");
  }
  return out;
}

int run_validate(const Model& model) {
  const ValidationReport r = validate(model.presentation());
  std::cout << "command: validate\n";
  std::cout << "d-squared-zero: " << (r.d_squared_zero ? "yes" : "no") << "\n";
  if (!r.d_squared_zero) std::cout << "d-squared-witness: " << r.d_squared_witness << "\n";
  std::cout << "homogeneous: " << (r.homogeneous ? "yes" : "no") << "\n";
  if (!r.homogeneous) std::cout << "homogeneity-witness: " << r.homogeneity_witness << "\n";
  std::cout << "minimal: " << (r.minimal ? "yes" : "no") << "\n";
  if (!r.minimal) std::cout << "minimality-witness: " << r.minimality_witness << "\n";
  std::cout << "connected: yes\n";
  std::cout << "simply-connected: " << (r.simply_connected ? "yes" : "no") << "\n";
  std::cout << "h1-dim: " << r.h1_dim << "\n";
  if (!r.ok()) throw ExitWith{kInvariantViolation};
  return kOk;
}

int run_cohomology(const Model& model, int lo, int hi, bool reps) {
  std::cout << "command: cohomology\n";
  for (int l = lo; l <= hi; ++l) {
    const CohomologySlice& c = model.cohomology(l);
    std::cout << "deg " << l << ": dim " << c.dim() << "\n";
    if (reps)
      for (int i = 0; i < c.dim(); ++i)
        std::cout << "  rep " << (i + 1) << " : "
                  << to_string(model.table(), c.representatives[static_cast<size_t>(i)]) << "\n";
  }
  return kOk;
}

int run_cup(const Model& model, const std::string& exprs) {
  const auto parts = split_semicolons(exprs);
  if (parts.size() != 2) throw std::runtime_error("cup needs exactly two classes");
  const CohClass u = class_of(model, parse_element(model.table(), parts[0]));
  const CohClass v = class_of(model, parse_element(model.table(), parts[1]));
  const CohClass w = cup(model, u, v);
  std::cout << "command: cup\n";
  std::cout << "degree: " << w.degree << "\n";
  std::cout << "class: " << class_str(model, w) << "\n";
  std::cout << "zero: " << (w.is_zero() ? "yes" : "no") << "\n";
  return kOk;
}

int run_triple(const Model& model, const std::string& exprs, const std::string& file) {
  const auto classes = classes_from_options(model, exprs, file);
  if (classes.size() != 3) throw std::runtime_error("triple needs exactly three classes");
  std::cout << "command: triple\n";
  const bool scalar = classes[0].rows == 1 && classes[0].cols == 1 && classes[1].rows == 1 &&
                      classes[1].cols == 1 && classes[2].rows == 1 && classes[2].cols == 1;
  if (scalar) {
    const TripleProduct t = triple_product(model, classes[0].at(0, 0), classes[1].at(0, 0),
                                           classes[2].at(0, 0));
    std::cout << "value-degree: " << t.value.degree << "\n";
    std::cout << "value: " << class_str(model, t.value) << "\n";
    std::cout << "indeterminacy-dim: " << t.indeterminacy.dim() << "\n";
    std::cout << "verdict: " << (t.trivial ? "trivial" : "nontrivial") << "\n";
  } else {
    const MatrixTripleProduct t = matrix_triple_product(model, classes[0], classes[1], classes[2]);
    print_class_matrix(model, "value", t.value);
    std::cout << "indeterminacy-dim: " << t.indeterminacy.dim() << "\n";
    std::cout << "verdict: " << (t.trivial ? "trivial" : "nontrivial") << "\n";
  }
  return kOk;
}

int run_massey(const Model& model, const std::string& exprs, const std::string& file, long budget,
               int weight, const std::string& emit, const std::string& claim) {
  const auto classes = classes_from_options(model, exprs, file);
  SearchOptions opts;
  opts.node_budget = budget;
  opts.max_perturbation_weight = weight;
  const SearchResult res = find_defining_system(model, classes, opts);
  std::cout << "command: massey\n";
  std::cout << "arity: " << classes.size() << "\n";
  if (!res.system) {
    std::cout << "system: none\n";
    std::cout << "status: "
              << (res.status == SearchStatus::budget_exhausted ? "budget-exhausted" : "exhausted")
              << "\n";
    throw ExitWith{res.status == SearchStatus::budget_exhausted ? kBudgetExhausted
                                                                : kInvariantViolation};
  }
  std::cout << "system: found\n";
  const ElementMatrix c = system_cocycle(model, *res.system);
  const ClassMatrix c_class = class_of_matrix(model, c, cocycle_degrees(classes));
  print_class_matrix(model, "cocycle-class", c_class);
  print_class_matrix(model, "value", class_negate(c_class));
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw std::runtime_error("cannot write '" + emit + "'");
    out << render_certificate(model, classes, *res.system, c_class);
    std::cout << "certificate: " << emit << "\n";
  }
  if (!claim.empty()) {
    const Element claimed_rep = parse_element(model.table(), claim);
    const ClassMatrix claimed =
        scalar_class_matrix(class_of(model, claimed_rep, c_class.degrees(0, 0)));
    std::string diag;
    const bool okc = verify_membership(model, claimed, classes, *res.system, &diag);
    std::cout << "claim-holds: " << (okc ? "yes" : "no") << "\n";
    if (!okc) {
      std::cout << "claim-diagnostics: " << diag << "\n";
      throw ExitWith{kInvariantViolation};
    }
  }
  return kOk;
}

int run_verify(const Model& model, const std::string& cert_path) {
  const ResolvedCertificate cert = parse_certificate(model, read_file_or_stdin(cert_path));
  std::string diag;
  const bool ok = verify_membership(model, cert.claimed, cert.inputs, cert.system, &diag);
  std::cout << "command: verify\n";
  std::cout << "verdict: " << (ok ? "accepted" : "rejected") << "\n";
  std::cout << "diagnostics: " << diag << "\n";
  if (!ok) throw ExitWith{kInvariantViolation};
  return kOk;
}

int run_strictness(const Model& model, const std::string& exprs, const std::string& file,
                   long budget) {
  const auto classes = classes_from_options(model, exprs, file);
  SearchOptions opts;
  opts.node_budget = budget;
  const TriState s = is_strictly_defined(model, classes, opts);
  std::cout << "command: strictness\n";
  std::cout << "verdict: "
            << (s == TriState::yes ? "strictly-defined"
                                   : s == TriState::no ? "not-strictly-defined" : "inconclusive")
            << "\n";
  if (s == TriState::inconclusive) throw ExitWith{kBudgetExhausted};
  return kOk;
}

int run_blowup(const ParsedDocument& doc, int m_arg) {
  const int m = doc.has_blowup() ? *doc.blowup_m : m_arg;
  if (m < 2) throw std::runtime_error("blowup needs --m >= 2 (or a `preset blowup` line)");
  BlowupModel bm(doc.base, m, doc.chern);
  std::cout << "command: blowup\n";
  std::cout << "m: " << m << "\n";
  std::cout << "x: " << bm.x_name() << "\n";
  std::cout << "y: " << bm.y_name() << "\n";
  std::cout << render_document(bm.total().presentation());
  return kOk;
}

int run_lift(const ParsedDocument& doc, int m_arg, const std::string& exprs,
             const std::string& file, const std::string& cert_path, const std::string& emit) {
  const int m = doc.has_blowup() ? *doc.blowup_m : m_arg;
  if (m < 2) throw std::runtime_error("lift needs --m >= 2 (or a `preset blowup` line)");
  BlowupModel bm(doc.base, m, doc.chern);
  std::cout << "command: lift\n";
  std::cout << "m: " << m << "\n";
  if (!cert_path.empty()) {
    const ResolvedCertificate cert = parse_certificate(bm.base(), read_file_or_stdin(cert_path));
    const DefiningSystem lifted = lift_defining_system(bm, cert.system);
    const SystemCheck chk = check_defining_system(bm.total(), lifted);
    std::cout << "lifted-system-valid: " << (chk.ok ? "yes" : "no") << "\n";
    if (!chk.ok) throw ExitWith{kInvariantViolation};
    const ElementMatrix c = system_cocycle(bm.total(), lifted);
    const ClassMatrix c_class =
        class_of_matrix(bm.total(), c, cocycle_degrees(lifted.inputs));
    print_class_matrix(bm.total(), "cocycle-class", c_class);
    if (!emit.empty()) {
      std::ofstream out(emit);
      if (!out) throw std::runtime_error("cannot write '" + emit + "'");
      out << render_certificate(bm.total(), lifted.inputs, lifted, c_class);
      std::cout << "certificate: " << emit << "\n";
    }
    return kOk;
  }
  const auto classes = classes_from_options(bm.base(), exprs, file);
  const auto lifted = lift_classes(bm, classes);
  for (size_t k = 0; k < lifted.size(); ++k)
    print_class_matrix(bm.total(), "lifted " + std::to_string(k + 1), lifted[k]);
  return kOk;
}

int run_bar(const Model& model, int len, int deg, int r) {
  const BarSlice slice = bar_slice(model, len, deg);
  std::cout << "command: bar\n";
  std::cout << "max-length: " << len << "\n";
  std::cout << "degree-cap: " << deg << "\n";
  // Identity checks on the whole slice.
  bool nabla2 = true, anticommute = true;
  for (const auto& [key, words] : slice.words) {
    for (const auto& w : words) {
      const BarChain c = BarChain::word(w);
      if (!(total_differential(model, total_differential(model, c)).is_zero())) nabla2 = false;
      BarChain mixed = inner_differential(model, combinatorial_differential(model, c));
      mixed += combinatorial_differential(model, inner_differential(model, c));
      if (!mixed.is_zero()) anticommute = false;
    }
  }
  std::cout << "nabla-squared-zero: " << (nabla2 ? "yes" : "no") << "\n";
  std::cout << "differentials-anticommute: " << (anticommute ? "yes" : "no") << "\n";
  const PageTable table = page(model, slice, r, len - (r - 1), deg - 1);
  std::cout << "page: E" << r << "\n";
  for (const auto& [key, dim] : table.dims)
    std::cout << "E" << r << "[-" << key.first << "," << key.second << "] dim " << dim << "\n";
  if (r == 2) {
    for (int q = 1; q <= deg - 1; ++q)
      std::cout << "indecomposables deg " << q << ": " << indecomposable_dim(model, q) << "\n";
  }
  if (!nabla2 || !anticommute) throw ExitWith{kInvariantViolation};
  return kOk;
}

int run_weight_bound(const Model& model, const std::string& cert_path) {
  const ResolvedCertificate cert = parse_certificate(model, read_file_or_stdin(cert_path));
  const WeightBound wb = strict_weight_bound(model, cert.system);
  std::cout << "command: weight-bound\n";
  std::cout << "arity: " << wb.arity << "\n";
  std::cout << "block-bound: " << wb.block_bound << "\n";
  std::cout << "actual: " << wb.actual << "\n";
  std::cout << "blocks-within-inductive-bound: " << (wb.blocks_ok ? "yes" : "no") << "\n";
  std::cout << "chain: " << (wb.ok() ? "actual <= bound <= arity holds" : "violated") << "\n";
  if (!wb.ok()) throw ExitWith{kInvariantViolation};
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in graded-commutative differential algebras: cohomology, "
               "Maurer-Cartan connections, Massey products, blow-up models, bar pages"};
  app.require_subcommand(1);

  std::string model_path = "-";
  std::string classes, classes_file, cert_path, emit_path, claim, deg_range = "0..4";
  long budget = 200000;
  int weight = 1, blow_m = 0, bar_len = 2, bar_deg = 5, bar_page = 2;
  bool show_reps = false;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_path, "presentation document (file or - for stdin)");
  };

  auto* c_validate = app.add_subcommand("validate", "check the DGA axioms and minimality");
  add_model(c_validate);
  auto* c_render = app.add_subcommand("render", "print the canonical document");
  add_model(c_render);
  auto* c_coh = app.add_subcommand("cohomology", "degree-wise cohomology dimensions");
  add_model(c_coh);
  c_coh->add_option("--deg", deg_range, "degree range a..b");
  c_coh->add_flag("--reps", show_reps, "print representative cocycles");
  auto* c_cup = app.add_subcommand("cup", "cup product of two classes");
  add_model(c_cup);
  c_cup->add_option("--classes", classes, "two cocycle expressions, ';'-separated")->required();
  auto* c_triple = app.add_subcommand("triple", "triple Massey product with indeterminacy");
  add_model(c_triple);
  c_triple->add_option("--classes", classes, "three cocycle expressions, ';'-separated");
  c_triple->add_option("--classes-file", classes_file, "class matrices file");
  auto* c_massey = app.add_subcommand("massey", "budgeted defining-system search");
  add_model(c_massey);
  c_massey->add_option("--classes", classes, "cocycle expressions, ';'-separated");
  c_massey->add_option("--classes-file", classes_file, "class matrices file");
  c_massey->add_option("--budget", budget, "search node budget");
  c_massey->add_option("--weight", weight, "max kernel-perturbation weight");
  c_massey->add_option("--emit-certificate", emit_path, "write the found system");
  c_massey->add_option("--claim", claim, "verify [c(A)] equals this cocycle's class");
  auto* c_verify = app.add_subcommand("verify", "check a defining-system certificate");
  add_model(c_verify);
  c_verify->add_option("--certificate", cert_path, "certificate file")->required();
  auto* c_strict = app.add_subcommand("strictness", "strict definedness of a product");
  add_model(c_strict);
  c_strict->add_option("--classes", classes, "cocycle expressions, ';'-separated");
  c_strict->add_option("--classes-file", classes_file, "class matrices file");
  c_strict->add_option("--budget", budget, "search node budget");
  auto* c_blow = app.add_subcommand("blowup", "print the neighborhood model");
  add_model(c_blow);
  c_blow->add_option("--m", blow_m, "half codimension");
  auto* c_lift = app.add_subcommand("lift", "lift classes or a system into the blow-up model");
  add_model(c_lift);
  c_lift->add_option("--m", blow_m, "half codimension");
  c_lift->add_option("--classes", classes, "cocycle expressions over the base");
  c_lift->add_option("--classes-file", classes_file, "class matrices file over the base");
  c_lift->add_option("--certificate", cert_path, "defining system over the base");
  c_lift->add_option("--emit-certificate", emit_path, "write the lifted system");
  auto* c_bar = app.add_subcommand("bar", "bar-construction pages on a finite slice");
  add_model(c_bar);
  c_bar->add_option("--len", bar_len, "max word length");
  c_bar->add_option("--deg", bar_deg, "internal degree cap");
  c_bar->add_option("--page", bar_page, "page number (1 or 2)");
  auto* c_weight = app.add_subcommand("weight-bound", "filtration bound for a Witt-model system");
  add_model(c_weight);
  c_weight->add_option("--certificate", cert_path, "certificate file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const ParsedDocument doc = parse_document(read_file_or_stdin(model_path));
    if (c_blow->parsed()) return run_blowup(doc, blow_m);
    if (c_lift->parsed()) return run_lift(doc, blow_m, classes, classes_file, cert_path, emit_path);

    Model model(doc.final_presentation());
    if (c_validate->parsed()) return run_validate(model);
    if (c_render->parsed()) {
      std::cout << render_document(model.presentation());
      return kOk;
    }
    if (c_coh->parsed()) {
      const size_t dots = deg_range.find("..");
      if (dots == std::string::npos) throw std::runtime_error("--deg expects a..b");
      const int lo = std::stoi(deg_range.substr(0, dots));
      const int hi = std::stoi(deg_range.substr(dots + 2));
      if (lo < 0 || hi < lo) throw std::runtime_error("--deg expects 0 <= a <= b");
      return run_cohomology(model, lo, hi, show_reps);
    }
    if (c_cup->parsed()) return run_cup(model, classes);
    if (c_triple->parsed()) return run_triple(model, classes, classes_file);
    if (c_massey->parsed())
      return run_massey(model, classes, classes_file, budget, weight, emit_path, claim);
    if (c_verify->parsed()) return run_verify(model, cert_path);
    if (c_strict->parsed()) return run_strictness(model, classes, classes_file, budget);
    if (c_bar->parsed()) return run_bar(model, bar_len, bar_deg, bar_page);
    if (c_weight->parsed()) return run_weight_bound(model, cert_path);
    return kUsage;
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const UndefinedProductError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUndefinedProduct;
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgalab/certificate.hpp"
#include "dgalab/massey.hpp"
#include "dgalab/models.hpp"
#include "dgalab/parse.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

using namespace dgalab;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

const char* cli_path() { return std::getenv("DGALAB_CLI"); }

CliResult run_cli(const std::string& args) {
  CliResult r;
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/dgalab_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("document parsing") {
  SUBCASE("the three-line Heisenberg document") {
    const ParsedDocument doc = parse_document(
        "generator a1 : 1\ngenerator a2 : 1\ngenerator a3 : 1\nd a3 = a1^a2\n");
    CHECK(render_document(doc.base) == render_document(heisenberg_model()));
  }
  SUBCASE("empty documents give the trivial presentation") {
    const ParsedDocument doc = parse_document("# nothing here\n\n");
    CHECK(doc.base.table().size() == 0);
  }
  SUBCASE("presets expand to the builders") {
    CHECK(render_document(parse_document("preset witt 6\n").base) ==
          render_document(witt_model(6)));
    CHECK(render_document(parse_document("preset sphere 4\n").base) ==
          render_document(sphere_model(4)));
    CHECK(render_document(parse_document("preset generalized_heisenberg 2\n").base) ==
          render_document(generalized_heisenberg_model(2)));
  }
  SUBCASE("stanzas combine as tensor products") {
    const ParsedDocument doc = parse_document("preset heisenberg\npreset circle\n");
    CHECK(render_document(doc.base) ==
          render_document(tensor_product(heisenberg_model(), circle_model())));
  }
  SUBCASE("name collisions in presets get numeric suffixes") {
    const ParsedDocument doc = parse_document("preset heisenberg\npreset heisenberg\n");
    CHECK(doc.base.table().find("a1_2") >= 0);
  }
  SUBCASE("blowup preset with chern lines") {
    const ParsedDocument doc = parse_document(
        "preset witt 4\npreset blowup 2\nchern 1 = 3 w1^w4 + w2^w3\n");
    REQUIRE(doc.has_blowup());
    CHECK(*doc.blowup_m == 2);
    const DgaPresentation total = doc.final_presentation();
    const int y = total.table().find("y");
    REQUIRE(y >= 0);
    CHECK(to_string(total.table(), total.differential_of(y)) == "3 w1^w4^x + w2^w3^x + x^x");
  }
  SUBCASE("parse errors carry line numbers") {
    try {
      parse_document("generator a1 : 1\nd a1 = a1^\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_document("generator a1 : 0\n"), ParseError);
    CHECK_THROWS_AS(parse_document("bogus statement\n"), ParseError);
    CHECK_THROWS_AS(parse_document("preset blowup 2\ngenerator z : 1\n"), ParseError);
  }
  SUBCASE("parse of render is the identity on canonical documents") {
    for (const DgaPresentation& p :
         {heisenberg_model(), witt_model(5), sphere_model(4), generalized_heisenberg_model(2),
          tensor_product(heisenberg_model(), circle_model())}) {
      const std::string doc = render_document(p);
      CHECK(render_document(parse_document(doc).base) == doc);
    }
  }
}

TEST_CASE("element expressions") {
  const Model w4(witt_model(4));
  const GeneratorTable& t = w4.table();
  CHECK(parse_element(t, "3/2 w1^w2 - w3") ==
        Rational(3, 2) * multiply(t, generator_element(t, "w1"), generator_element(t, "w2")) -
            generator_element(t, "w3"));
  CHECK(parse_element(t, "0").is_zero());
  CHECK(parse_element(t, "w2^w1") == -multiply(t, generator_element(t, "w1"), generator_element(t, "w2")));
  CHECK(parse_element(t, "2 * w1") == Rational(2) * generator_element(t, "w1"));
  CHECK_THROWS_AS(parse_element(t, "nope"), ParseError);
  CHECK_THROWS_AS(parse_element(t, "w1 + "), ParseError);
  // Round trip through the printer.
  const Element e = parse_element(t, "3/2 w1^w2 - w3 + 2 w4");
  CHECK(parse_element(t, to_string(t, e)) == e);
}

TEST_CASE("command-line tool") {
  if (cli_path() == nullptr) {
    MESSAGE("DGALAB_CLI not set; skipping subprocess tests");
    return;
  }
  const std::string heis = write_temp("heis.dga", render_document(heisenberg_model()));
  const std::string s4 = write_temp("s4.dga", render_document(sphere_model(4)));

  SUBCASE("cohomology dims of the Heisenberg model") {
    const CliResult r = run_cli("cohomology --model " + heis + " --deg 0..3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("deg 0: dim 1") != std::string::npos);
    CHECK(r.output.find("deg 1: dim 2") != std::string::npos);
    CHECK(r.output.find("deg 2: dim 2") != std::string::npos);
    CHECK(r.output.find("deg 3: dim 1") != std::string::npos);
  }
  SUBCASE("byte-identical output across runs") {
    const std::string args = "cohomology --model " + heis + " --deg 0..3 --reps";
    CHECK(run_cli(args).output == run_cli(args).output);
    const std::string args2 = "triple --model " + heis + " --classes \"a1;a1;a2\"";
    CHECK(run_cli(args2).output == run_cli(args2).output);
  }
  SUBCASE("triple on S4 is trivial") {
    const CliResult r = run_cli("triple --model " + s4 + " --classes \"x;x;x\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: trivial") != std::string::npos);
  }
  SUBCASE("triple on the Heisenberg model is nontrivial with value -a1^a3") {
    const CliResult r = run_cli("triple --model " + heis + " --classes \"a1;a1;a2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value: -a1^a3") != std::string::npos);
    CHECK(r.output.find("indeterminacy-dim: 0") != std::string::npos);
    CHECK(r.output.find("verdict: nontrivial") != std::string::npos);
  }
  SUBCASE("undefined products exit with code 2") {
    const std::string kt = write_temp(
        "kt.dga", render_document(tensor_product(heisenberg_model(), circle_model())));
    const CliResult r = run_cli("triple --model " + kt + " --classes \"a1;t;a1\"");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("massey with a claim emits a certificate that verify accepts") {
    const std::string w4 = write_temp("w4.dga", render_document(witt_model(4)));
    const std::string cert = "/tmp/dgalab_test_w4.cert";
    const CliResult r = run_cli("massey --model " + w4 +
                                " --classes \"6 w2;w1;w1;w1\" --claim \"3 w1^w4\" "
                                "--emit-certificate " +
                                cert);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("claim-holds: yes") != std::string::npos);
    const CliResult v = run_cli("verify --model " + w4 + " --certificate " + cert);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("verdict: accepted") != std::string::npos);
  }
  SUBCASE("strictness verdicts") {
    const std::string w4 = write_temp("w4.dga", render_document(witt_model(4)));
    const CliResult r = run_cli("strictness --model " + w4 + " --classes \"6 w2;w1;w1;w1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: strictly-defined") != std::string::npos);
  }
  SUBCASE("validate flags broken presentations with exit code 4") {
    const std::string bad = write_temp("bad.dga", "generator u : 2\nd u = u\n");
    const CliResult r = run_cli("validate --model " + bad);
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("homogeneous: no") != std::string::npos);
  }
  SUBCASE("bar pages agree with the quotient dimensions") {
    const CliResult r = run_cli("bar --model " + heis + " --len 2 --deg 5 --page 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("nabla-squared-zero: yes") != std::string::npos);
    CHECK(r.output.find("E2[-1,1] dim 2") != std::string::npos);
    CHECK(r.output.find("E2[-1,2] dim 2") != std::string::npos);
    CHECK(r.output.find("indecomposables deg 1: 2") != std::string::npos);
  }
  SUBCASE("render is a fixed point") {
    const CliResult once = run_cli("render --model " + heis);
    const std::string again = write_temp("heis_again.dga", once.output);
    CHECK(run_cli("render --model " + again).output == once.output);
  }
  SUBCASE("verify accepts the explicit Witt connection certificate, m = 2") {
    const Model w4_model(witt_model(4));
    const DefiningSystem sys = witt_connection_system(w4_model, 2);
    const ClassMatrix claimed =
        scalar_class_matrix(class_of(w4_model, witt_symplectic_form(w4_model.table(), 2)));
    const std::string cert = write_temp(
        "prop422_m2.cert", render_certificate(w4_model, sys.inputs, sys, claimed));
    const std::string w4 = write_temp("w4b.dga", "preset witt 4\n");
    const CliResult r = run_cli("verify --model " + w4 + " --certificate " + cert);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: accepted") != std::string::npos);

    const CliResult wb = run_cli("weight-bound --model " + w4 + " --certificate " + cert);
    CHECK(wb.exit_code == 0);
    CHECK(wb.output.find("actual: 4") != std::string::npos);
    CHECK(wb.output.find("chain: actual <= bound <= arity holds") != std::string::npos);
  }
  SUBCASE("matrix products through a classes file") {
    const std::string gh = write_temp("gh2.dga", render_document(generalized_heisenberg_model(2)));
    const std::string classes = write_temp("gh2.classes",
                                           "input 1 rows 1 cols 2\n"
                                           "entry 1 1 deg 1 : am1\n"
                                           "entry 1 2 deg 1 : am2\n"
                                           "input 2 rows 2 cols 1\n"
                                           "entry 1 1 deg 1 : ap1\n"
                                           "entry 2 1 deg 1 : ap2\n"
                                           "input 3 rows 1 cols 1\n"
                                           "entry 1 1 deg 1 : 0\n"
                                           "end\n");
    // Fix the scalar degree of V3 (degree 2 entry ap1^ap2).
    const std::string classes_fixed = write_temp("gh2b.classes",
                                                 "input 1 rows 1 cols 2\n"
                                                 "entry 1 1 deg 1 : am1\n"
                                                 "entry 1 2 deg 1 : am2\n"
                                                 "input 2 rows 2 cols 1\n"
                                                 "entry 1 1 deg 1 : ap1\n"
                                                 "entry 2 1 deg 1 : ap2\n"
                                                 "input 3 rows 1 cols 1\n"
                                                 "entry 1 1 deg 2 : ap1^ap2\n"
                                                 "end\n");
    (void)classes;
    const CliResult r = run_cli("triple --model " + gh + " --classes-file " + classes_fixed);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: nontrivial") != std::string::npos);
    // b ^ ap1 ^ ap2 in the canonical monomial order.
    CHECK(r.output.find("ap1^ap2^b") != std::string::npos);
  }
  SUBCASE("blowup and lift commands") {
    const std::string kt = write_temp(
        "kt2.dga", render_document(tensor_product(heisenberg_model(), circle_model())));
    const CliResult b = run_cli("blowup --model " + kt + " --m 4");
    CHECK(b.exit_code == 0);
    CHECK(b.output.find("generator y : 7") != std::string::npos);

    const CliResult l = run_cli("lift --model " + kt + " --m 4 --classes \"a1;a2\"");
    CHECK(l.exit_code == 0);
    CHECK(l.output.find("deg 3") != std::string::npos);

    // Lifting a whole defining system produces a certificate over the
    // extension that verify accepts.
    const std::string base_cert = "/tmp/dgalab_test_kt_base.cert";
    const CliResult m =
        run_cli("massey --model " + kt + " --classes \"a2;a1;a1\" --emit-certificate " + base_cert);
    CHECK(m.exit_code == 0);
    const std::string lifted_cert = "/tmp/dgalab_test_kt_lifted.cert";
    const CliResult lf = run_cli("lift --model " + kt + " --m 4 --certificate " + base_cert +
                                 " --emit-certificate " + lifted_cert);
    CHECK(lf.exit_code == 0);
    CHECK(lf.output.find("lifted-system-valid: yes") != std::string::npos);
    const std::string ext = write_temp("kt_ext.dga", "preset heisenberg\npreset circle\npreset blowup 4\n");
    const CliResult v = run_cli("verify --model " + ext + " --certificate " + lifted_cert);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("verdict: accepted") != std::string::npos);
  }
}

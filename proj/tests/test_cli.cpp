#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewrec/render.hpp"
#include "skewrec/spec_file.hpp"

using namespace skewrec;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalError;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> bundled() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(SKEWREC_SPEC_DIR)) {
    if (e.path().extension() == ".rec") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* diagonal_text =
    "algebra quaternion -1 -1\n"
    "order 2\n"
    "rhs [-1,0,0,-1] [0,1,0,0]\n"
    "init [1,0,0,0] [1,0,0,0]\n";

}  // namespace

TEST_CASE("parse the diagonal example") {
  const auto spec = parse_spec_file(diagonal_text);
  const QuaternionAlgebra H(-1, -1);
  CHECK(spec.order() == 2);
  CHECK(std::get<Quat>(spec.rhs[0]) == Quat(-1, 0, 0, -1));
  CHECK(std::get<Quat>(spec.rhs[1]) == QuaternionAlgebra::basis(1));
  CHECK(std::get<Quat>(spec.init[1]) == Quat(1));
  CHECK(spec.height == 20);
  CHECK(std::holds_alternative<QuaternionAlgebra>(spec.algebra));
}

TEST_CASE("parse errors and validation errors") {
  CHECK(code_of([] { parse_spec_file("algebra field\norder 2\nrhs 0 1\ninit 0 1\n"); }) == ErrorCode::ValidationError);
  CHECK(code_of([] {
          parse_spec_file(
              "algebra octonion -1 -1 -1\norder 3\nrhs [1,0,0,0,0,0,0,0] [0,0,0,0,0,0,0,0] [0,0,0,0,0,0,0,0]\n"
              "init [1,0,0,0,0,0,0,0] [1,0,0,0,0,0,0,0] [1,0,0,0,0,0,0,0]\n");
        }) == ErrorCode::ValidationError);
  CHECK(code_of([] { parse_spec_file("algebra field\norder 2\nrhs 1 1\n"); }) == ErrorCode::ValidationError);
  CHECK(code_of([] { parse_spec_file("algebra field\norder 2\norder 2\nrhs 1 1\ninit 0 1\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([] { parse_spec_file("algebra field\norder 2\nrhs 1\ninit 0 1\n"); }) == ErrorCode::ValidationError);
  CHECK(code_of([] { parse_spec_file("algebra field\norder 2\nrhs 1 1\ninit 0 1\nheight 0\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_spec_file("algebra field\norder 2\nrhs 1 1+1*rt\ninit 0 1\n"); }) ==
        ErrorCode::ContextMismatch);

  try {
    parse_spec_file("algebra field\norder 2\nrhs 1 1\ninit 0 1x\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 9);
  }
  try {
    parse_spec_file("# comment\nalgebra field\nfoo 2\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("comments, spacing and multiplicities") {
  const auto spec = parse_spec_file(
      "# repeated root\n"
      "algebra field   # Q\n"
      "order 2\n"
      "rhs -1 2\n"
      "init 1 3\n"
      "roots 1 (2)\n"
      "height 7\n");
  REQUIRE(spec.roots.size() == 1);
  CHECK(spec.roots[0].multiplicity == 2);
  CHECK(spec.height == 7);
  CHECK(render_spec_file(spec) == "algebra field\norder 2\nrhs -1 2\ninit 1 3\nroots 1 (2)\nheight 7\n");
  const auto spaced = parse_spec_file("algebra quaternion -1 -1\norder 1\nrhs [ 0, 1, 0 ,0 ]\ninit [1,0,0,0]\n");
  CHECK(std::get<Quat>(spaced.rhs[0]) == QuaternionAlgebra::basis(1));
}

TEST_CASE("bundled files round trip and verify") {
  const auto files = bundled();
  CHECK(files.size() >= 6);
  for (const auto& p : files) {
    CAPTURE(p.string());
    const auto spec = parse_spec_file(slurp(p));
    const auto canonical = render_spec_file(spec);
    const auto again = parse_spec_file(canonical);
    CHECK(again == spec);
    CHECK(render_spec_file(again) == canonical);
    const auto cf = solve(spec);
    CHECK(render_report(verify_closed_form(spec, cf, 50)) == "PASS");
  }
}

TEST_CASE("element rendering") {
  CHECK(render_element(Quat(1, 1, 0, 0)) == "[1,1,0,0]");
  CHECK(render_element(Scalar(Rational(5, 10))) == "1/2");
  CHECK(render_element(Scalar(Rational(1, 2), Rational(-1, 5))) == "1/2-1/5*rt");
  CHECK(render_element(OctonionAlgebra::ell()) == "[0,0,0,0,1,0,0,0]");
  CHECK(render_report({false, 3}) == "FAIL at k = 3");
}

TEST_CASE("closed form rendering") {
  const auto jordan = parse_spec_file(
      "algebra quaternion -1 -1\norder 2\nrhs [0,0,0,1] [0,1,1,0]\ninit [1,0,0,0] [0,0,0,0]\n");
  const auto text = render_closed_form(solve(jordan));
  CHECK(text.find("(-k*[0,1,0,0] + [0,0,-1/2,0]) * [0,1,0,0]^k") != std::string::npos);
  CHECK(text.rfind("quaternion -1 -1", 0) == 0);
  CHECK(render_closed_form(solve(jordan)) == text);

  const auto fib = parse_spec_file("algebra field\norder 2\nrhs 1 1\ninit 0 1\n");
  const auto f = render_closed_form(solve(fib));
  CHECK(f.find("field_sqrt 5") != std::string::npos);
  CHECK(f.find("(1/2-1/2*rt)^k") != std::string::npos);
  CHECK(f.find("(1/2+1/2*rt)^k") != std::string::npos);

  const auto oct = parse_spec_file(
      "algebra octonion -1 -1 -1\norder 2\nrhs [-1,0,0,-1,0,0,0,0] [0,1,0,0,0,0,0,0]\n"
      "init [1,0,0,0,0,0,0,0] [0,0,0,0,1,0,0,0]\n");
  const auto o = render_closed_form(solve(oct));
  CHECK(o.find("frame u = ") != std::string::npos);
  CHECK(o.find("+ conj(") != std::string::npos);
  CHECK(o.find(") * l") != std::string::npos);
}

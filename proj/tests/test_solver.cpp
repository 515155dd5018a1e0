#include <doctest.h>

#include "skewrec/solver.hpp"
#include "support/gen.hpp"

using namespace skewrec;

namespace {

const QuaternionAlgebra H(-1, -1);
const OctonionAlgebra O(H, -1);
const Quat one(1), e1 = QuaternionAlgebra::basis(1), e2 = QuaternionAlgebra::basis(2), e3 = QuaternionAlgebra::basis(3);
const Oct ell = OctonionAlgebra::ell();

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalError;
}

RecurrenceSpec quat_spec(std::vector<Quat> rhs, std::vector<Quat> init) {
  RecurrenceSpec s;
  s.algebra = H;
  for (auto& x : rhs) s.rhs.emplace_back(x);
  for (auto& x : init) s.init.emplace_back(x);
  return s;
}

RecurrenceSpec oct_spec(std::vector<Oct> rhs, std::vector<Oct> init) {
  RecurrenceSpec s;
  s.algebra = O;
  for (auto& x : rhs) s.rhs.emplace_back(x);
  for (auto& x : init) s.init.emplace_back(x);
  return s;
}

RecurrenceSpec field_spec(std::vector<Rational> rhs, std::vector<Rational> init) {
  RecurrenceSpec s;
  for (auto& x : rhs) s.rhs.emplace_back(Scalar(x));
  for (auto& x : init) s.init.emplace_back(Scalar(x));
  return s;
}

Quat qm(const Quat& x, const Quat& y) { return H.mul(x, y); }
Quat qpow(const Quat& x, unsigned k) { return power(H, x, k); }
// x l0 for x in the standard quaternions
Oct times_ell(const Quat& x) { return Oct(Quat(), x); }

const RecurrenceSpec diagonal = quat_spec({-one - e3, e1}, {one, one});
const RecurrenceSpec jordan1 = quat_spec({e3, e1 + e2}, {one, Quat()});
const RecurrenceSpec fib_spec = field_spec({1, 1}, {0, 1});
const RecurrenceSpec octonion1 = oct_spec({Oct(-one - e3), Oct(e1)}, {Oct(1), ell});
const RecurrenceSpec octonion2 = oct_spec({Oct(e3), Oct(e1 + e2)}, {Oct(1), ell});

}  // namespace

TEST_CASE("primitive characteristic polynomial") {
  auto p = std::get<LeftPoly<Quat>>(primitive_char_poly(diagonal));
  CHECK(p == LeftPoly<Quat>({one + e3, -e1, one}));
  auto f = std::get<LeftPoly<Scalar>>(primitive_char_poly(fib_spec));
  CHECK(f == LeftPoly<Scalar>({Scalar(-1), Scalar(-1), Scalar(1)}));
  auto single = std::get<LeftPoly<Quat>>(primitive_char_poly(quat_spec({e2}, {one})));
  CHECK(single == LeftPoly<Quat>({-e2, one}));
}

TEST_CASE("spec validation") {
  CHECK(code_of([] { quat_spec({Quat(), e1}, {one, one}).validate(); }) == ErrorCode::ValidationError);
  CHECK(code_of([] { quat_spec({e1, e1}, {one}).validate(); }) == ErrorCode::ValidationError);
  auto mixed = quat_spec({e1}, {one});
  mixed.rhs[0] = Scalar(1);
  CHECK(code_of([&] { mixed.validate(); }) == ErrorCode::ValidationError);
  auto with_roots = octonion1;
  with_roots.roots.push_back({Oct(e2), 1});
  with_roots.roots.push_back({Oct(e1 + e2), 1});
  CHECK(code_of([&] { with_roots.validate(); }) == ErrorCode::ValidationError);
  auto bad_mult = diagonal;
  bad_mult.roots.push_back({e2, 1});
  CHECK(code_of([&] { bad_mult.validate(); }) == ErrorCode::ValidationError);
}

TEST_CASE("diagonalizable quaternion example") {
  const auto cf = std::get<QuatClosedForm>(solve(diagonal));
  REQUIRE(cf.form.terms.size() == 2);
  CHECK(cf.form.terms[0].base == e2);
  CHECK(cf.form.terms[1].base == e1 + e2);
  CHECK(cf.form.terms[0].poly == std::vector<Quat>{one});
  CHECK(cf.form.terms[1].poly == std::vector<Quat>{one});
  // V^{-1}(1,1)^T; the second entry is e3 - e1.
  CHECK(cf.form.terms[0].right == one + e1 - e3);
  CHECK(cf.form.terms[1].right == e3 - e1);
  CHECK(verify_closed_form(diagonal, cf, 50).ok);
  for (unsigned k = 0; k <= 12; ++k) {
    CHECK(std::get<Quat>(eval_closed_form(cf, k)) == qm(qpow(e2, k), one + e1 - e3) + qm(qpow(e1 + e2, k), e3 - e1));
  }
}

TEST_CASE("jordan quaternion example") {
  const auto cf = std::get<QuatClosedForm>(solve(jordan1));
  REQUIRE(cf.form.terms.size() == 2);
  const Rational h(1, 2), q(1, 4);
  CHECK(cf.form.terms[0].right == Quat(3 * q, 0, 0, q));
  CHECK(cf.form.terms[1].right == Quat(0, -h, h, 0));
  CHECK(cf.form.terms[1].base == e1);
  // (-k e1 - e2/2) e1^k b_1
  CHECK(cf.form.terms[1].poly == std::vector<Quat>{-h * e2, -e1});
  CHECK(verify_closed_form(jordan1, cf, 50).ok);

  // with the general b_0, b_1 = U^{-1}(a_0, a_1)
  gen::Source src(41);
  for (int i = 0; i < 10; ++i) {
    auto spec = quat_spec({e3, e1 + e2}, {src.quat(), src.quat()});
    const auto g = std::get<QuatClosedForm>(solve(spec));
    CHECK(verify_closed_form(spec, g, 24).ok);
  }
}

TEST_CASE("path equivalence for simple roots") {
  const auto diag = solve_diagonalizable(diagonal, {e2, e1 + e2});
  const auto jord = solve_jordan(diagonal, {{e2, 1}, {e1 + e2, 1}});
  for (unsigned k = 0; k <= 16; ++k) CHECK(eval_closed_form(diag, k) == eval_closed_form(jord, k));
}

TEST_CASE("spherical quadratic") {
  const auto spec = quat_spec({-one, Quat()}, {one, e2 + e3});
  const auto cf = std::get<QuatClosedForm>(solve(spec));
  REQUIRE(cf.form.terms.size() == 2);
  CHECK(cf.form.terms[0].base == -e1);
  CHECK(cf.form.terms[1].base == e1);
  CHECK(verify_closed_form(spec, cf, 40).ok);
}

TEST_CASE("fib_spec through Q(sqrt 5)") {
  const auto promoted = promote_field_quadratic(fib_spec);
  const auto& field = std::get<ScalarField>(promoted.algebra);
  CHECK(field.kind() == FieldKind::quadratic);
  CHECK(field.d() == 5);
  REQUIRE(promoted.roots.size() == 2);
  const Rational h(1, 2);
  CHECK(std::get<Scalar>(promoted.roots[0].value) == Scalar(h, h));
  CHECK(std::get<Scalar>(promoted.roots[1].value) == Scalar(h, -h));

  const auto cf = std::get<FieldClosedForm>(solve(fib_spec));
  CHECK(cf.field.d() == 5);
  REQUIRE(cf.form.terms.size() == 2);
  CHECK(cf.form.terms[0].base == Scalar(h, -h));
  CHECK(cf.form.terms[0].right == Scalar(0, Rational(-1, 5)));
  CHECK(cf.form.terms[1].base == Scalar(h, h));
  CHECK(cf.form.terms[1].right == Scalar(0, Rational(1, 5)));
  CHECK(eval_closed_form(cf, 10) == Element(Scalar(55)));
  CHECK(eval_closed_form(cf, 30) == Element(Scalar(832040)));
  CHECK(iterate_oracle(fib_spec, 10) == Element(Scalar(55)));
}

TEST_CASE("field promotion cases") {
  // x^2 - 3x + 2
  auto rational = promote_field_quadratic(field_spec({-2, 3}, {1, 0}));
  CHECK(std::get<ScalarField>(rational.algebra).kind() == FieldKind::rational);
  REQUIRE(rational.roots.size() == 2);
  CHECK(std::get<Scalar>(rational.roots[0].value) == Scalar(2));
  CHECK(std::get<Scalar>(rational.roots[1].value) == Scalar(1));
  // x^2 - 2x + 1
  auto repeated = promote_field_quadratic(field_spec({-1, 2}, {1, 3}));
  REQUIRE(repeated.roots.size() == 1);
  CHECK(std::get<Scalar>(repeated.roots[0].value) == Scalar(1));
  CHECK(repeated.roots[0].multiplicity == 2);
  const auto cf = solve(field_spec({-1, 2}, {1, 3}));
  CHECK(eval_closed_form(cf, 7) == Element(Scalar(15)));
  // x^2 - 8: Delta = 32 = 4^2 * 2
  auto sqrt2 = promote_field_quadratic(field_spec({8, 0}, {1, 0}));
  CHECK(std::get<ScalarField>(sqrt2.algebra).d() == 2);
  CHECK(std::get<Scalar>(sqrt2.roots[0].value) == Scalar(0, 2));
  // negative discriminant leaves the real quadratic fields
  CHECK(code_of([] { promote_field_quadratic(field_spec({-1, 0}, {1, 0})); }) == ErrorCode::ValidationError);
}

TEST_CASE("field spec over Q(sqrt 5)") {
  RecurrenceSpec s;
  const auto f5 = ScalarField::quadratic(5);
  s.algebra = f5;
  // x^2 - x - 1 again, now already in Q(sqrt 5): the roots are found there.
  s.rhs = {Scalar(1), Scalar(1)};
  s.init = {Scalar(0), Scalar(0, 1)};
  const auto cf = solve(s);
  CHECK(verify_closed_form(s, cf, 30).ok);
  // x^2 - 2 has no square root of 8 in Q(sqrt 5)
  s.rhs = {Scalar(2), Scalar(0)};
  CHECK(code_of([&] { solve(s); }) == ErrorCode::NoRootsFound);
}

TEST_CASE("higher orders") {
  auto cubic = field_spec({6, -11, 6}, {0, 1, 0});
  CHECK(code_of([&] { solve(cubic); }) == ErrorCode::UnsupportedOrder);
  cubic.roots = {{Scalar(1), 1}, {Scalar(2), 1}, {Scalar(3), 1}};
  CHECK(verify_closed_form(cubic, solve(cubic), 30).ok);
  // (x - 1)^2 (x - 2)
  auto mixed = field_spec({2, -5, 4}, {1, 0, 0});
  mixed.roots = {{Scalar(1), 2}, {Scalar(2), 1}};
  CHECK(verify_closed_form(mixed, solve(mixed), 30).ok);
  mixed.roots = {{Scalar(1), 1}, {Scalar(3), 2}};
  CHECK(code_of([&] { solve(mixed); }) == ErrorCode::ValidationError);

  // (x - 2)(x^2 + 1) over H: e1, e2, e3 are all roots but share a class.
  auto lam = quat_spec({Quat(2), -one, Quat(2)}, {one, Quat(), Quat()});
  CHECK(code_of([&] { solve(lam); }) == ErrorCode::UnsupportedOrder);
  lam.roots = {{e1, 1}, {e2, 1}, {e3, 1}};
  CHECK(code_of([&] { solve(lam); }) == ErrorCode::LamViolation);
  lam.roots = {{e1, 1}, {e2, 1}, {Quat(2), 1}};
  CHECK(verify_closed_form(lam, solve(lam), 30).ok);

  auto oct3 = oct_spec({Oct(1), Oct(1), Oct(1)}, {Oct(1), Oct(1), Oct(1)});
  CHECK(code_of([&] { solve(oct3); }) == ErrorCode::UnsupportedOrder);
}

TEST_CASE("order one") {
  const auto s = quat_spec({e1 + Quat(1)}, {e2});
  const auto cf = std::get<QuatClosedForm>(solve(s));
  REQUIRE(cf.form.terms.size() == 1);
  CHECK(cf.form.terms[0].base == one + e1);
  CHECK(verify_closed_form(s, cf, 20).ok);
}

TEST_CASE("first octonion example") {
  const auto cf = solve(octonion1);
  const auto& o = std::get<OctClosedForm>(cf);
  CHECK(o.main.terms.size() == 2);
  CHECK(o.tail.terms.size() == 2);
  for (const auto* part : {&o.main, &o.tail}) {
    for (const auto& t : part->terms) CHECK(t.poly.size() == 1);
  }
  CHECK(eval_closed_form(cf, 0) == Element(Oct(1)));
  CHECK(eval_closed_form(cf, 1) == Element(ell));
  for (unsigned k = 0; k <= 32; ++k) {
    const Quat head = qm(qpow(e2, k), one - e3) + qm(qpow(e1 + e2, k), e3);
    const Quat tail = qm(e1, qpow(-e2, k)) - qm(e1, qpow(e1 - e2, k));
    CHECK(std::get<Oct>(eval_closed_form(cf, k)) == Oct(head) + times_ell(tail));
  }
  CHECK(verify_closed_form(octonion1, cf, 50).ok);
}

TEST_CASE("second octonion example") {
  const auto cf = solve(octonion2);
  const auto& o = std::get<OctClosedForm>(cf);
  for (const auto* part : {&o.main, &o.tail}) {
    CHECK_FALSE(part->terms.empty());
    for (const auto& t : part->terms) CHECK(t.poly.size() <= 2);
  }
  const Rational h(1, 2), q(1, 4);
  for (unsigned k = 0; k <= 32; ++k) {
    const Rational kk(k);
    const Quat main = qm(qpow(e1, k), Quat(3 * q, 0, 0, q)) +
                      qm(qm(-kk * e1 - h * e2, qpow(e1, k)), Quat(0, -h, h, 0));
    const Quat inner = qm(qpow(-e2, k), Quat(0, -q, q, 0)) + qm(qm(kk * e2 + h * e1, qpow(-e2, k)), Quat(h, 0, 0, h));
    CHECK(std::get<Oct>(eval_closed_form(cf, k)) == Oct(main) + times_ell(H.conj(inner)));
  }
}

TEST_CASE("central octonion coefficients") {
  const auto spec = oct_spec({Oct(-1), Oct()}, {Oct(1), Oct(e1, one)});
  const auto cf = solve(spec);
  const auto& o = std::get<OctClosedForm>(cf);
  CHECK(o.tail.terms.empty());
  CHECK(verify_closed_form(spec, cf, 40).ok);
}

TEST_CASE("oracle and verification") {
  CHECK(iterate_oracle(diagonal, 2) == Element(-one + e1 - e3));
  CHECK(iterate_oracle(diagonal, 1) == Element(one));
  auto cf = std::get<QuatClosedForm>(solve(diagonal));
  CHECK(verify_closed_form(diagonal, cf, 0).ok);
  cf.form.terms[1].right = cf.form.terms[1].right + e2;
  const auto report = verify_closed_form(diagonal, cf, 50);
  CHECK_FALSE(report.ok);
  REQUIRE(report.first_failure.has_value());
  CHECK(*report.first_failure <= 2);
}

TEST_CASE("shift property") {
  gen::Source src(42);
  for (int i = 0; i < 20; ++i) {
    const Quat lambda = src.quat(), mu = src.quat();
    const Quat beta = lambda + mu, alpha = -qm(mu, lambda);
    const auto spec = quat_spec({alpha, beta}, {src.quat(), src.quat()});
    const auto cf = solve(spec);
    const auto shifted = quat_spec({alpha, beta}, {std::get<Quat>(iterate_oracle(spec, 1)),
                                                   std::get<Quat>(iterate_oracle(spec, 2))});
    const auto cf2 = solve(shifted);
    for (unsigned k = 0; k <= 16; ++k) CHECK(eval_closed_form(cf2, k) == eval_closed_form(cf, k + 1));
  }
}

TEST_CASE("right superposition") {
  gen::Source src(43);
  const std::vector<std::pair<Quat, std::size_t>> roots{{e2, 1}, {e1 + e2, 1}};
  const std::vector<Quat> rhs{-one - e3, e1};
  for (int i = 0; i < 20; ++i) {
    const std::vector<Quat> x{src.quat(), src.quat()}, y{src.quat(), src.quat()};
    auto fx = assoc_solve(H, rhs, x, roots);
    auto fy = assoc_solve(H, rhs, y, roots);
    // keep zero coefficients so the terms line up
    AssocForm<Quat> sum;
    const auto vinv = mat_inverse(H, vandermonde(H, {e2, e1 + e2}));
    const auto bx = mat_apply(H, vinv, x), by = mat_apply(H, vinv, y);
    sum.terms = {{{one}, e2, bx[0] + by[0]}, {{one}, e1 + e2, bx[1] + by[1]}};
    const auto spec = quat_spec(rhs, {x[0] + y[0], x[1] + y[1]});
    for (unsigned k = 0; k <= 16; ++k) {
      CHECK(eval_assoc(H, sum, k) == eval_assoc(H, fx, k) + eval_assoc(H, fy, k));
      CHECK(Element(eval_assoc(H, sum, k)) == iterate_oracle(spec, k));
    }
  }
}

TEST_CASE("octonion split shapes") {
  gen::Source src(44);
  int distinct = 0, jordan = 0;
  for (int i = 0; i < 40; ++i) {
    const auto frame = build_frame(O, src.oct(), src.oct());
    const QuaternionAlgebra Q = frame.quaternions();
    const Quat lambda = src.noncentral_quat(2, 1);
    const Quat mu = i % 4 == 0 ? lambda : src.noncentral_quat(2, 1);
    const bool same = Q.same_class(lambda, mu);
    if (same && !(lambda == mu)) continue;
    const Quat beta = lambda + mu, alpha = -Q.mul(mu, lambda);
    const auto spec =
        oct_spec({frame_embed(O, frame, alpha), frame_embed(O, frame, beta)}, {src.nonzero_oct(), src.nonzero_oct()});
    ClosedForm cf;
    try {
      cf = solve(spec);
    } catch (const Error& e) {
      // a planted pair may still hit a split subalgebra
      CHECK(e.code() == ErrorCode::ZeroDivisor);
      continue;
    }
    CHECK(verify_closed_form(spec, cf, 32).ok);
    const auto& o = std::get<OctClosedForm>(cf);
    if (!same) {
      ++distinct;
      CHECK(o.main.terms.size() <= 2);
      CHECK(o.tail.terms.size() <= 2);
      for (const auto* part : {&o.main, &o.tail}) {
        for (const auto& t : part->terms) CHECK(t.poly.size() == 1);
      }
    } else {
      ++jordan;
      for (const auto* part : {&o.main, &o.tail}) {
        for (const auto& t : part->terms) CHECK(t.poly.size() <= 2);
      }
    }
  }
  CHECK(distinct > 10);
  CHECK(jordan > 3);
}

#include "skewrec/solver.hpp"

#include <type_traits>

namespace skewrec {

namespace {

template <class E>
const E& as(const Element& x, const char* what) {
  if (const E* p = std::get_if<E>(&x)) return *p;
  fail(ErrorCode::ValidationError, std::string(what) + " has the wrong element kind for the algebra");
}

template <class E>
std::vector<E> typed(const std::vector<Element>& xs, const char* what) {
  std::vector<E> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(as<E>(x, what));
  return out;
}

template <class E>
std::vector<std::pair<E, std::size_t>> typed_roots(const std::vector<RootSpec>& roots) {
  std::vector<std::pair<E, std::size_t>> out;
  for (const auto& r : roots) out.emplace_back(as<E>(r.value, "root"), r.multiplicity);
  return out;
}

AssocForm<Scalar> field_form(const ScalarField& field, const RecurrenceSpec& spec) {
  return assoc_solve(field, typed<Scalar>(spec.rhs, "rhs"), typed<Scalar>(spec.init, "init"),
                     typed_roots<Scalar>(spec.roots));
}

// Roots of an order-1 or order-2 quaternion recurrence, or the supplied ones.
std::vector<std::pair<Quat, std::size_t>> quaternion_roots(const QuaternionAlgebra& alg, const std::vector<Quat>& rhs,
                                                           unsigned height) {
  if (rhs.size() == 1) return {{rhs[0], 1}};
  if (rhs.size() != 2) {
    fail(ErrorCode::UnsupportedOrder, "quaternion recurrences of order " + std::to_string(rhs.size()) +
                                          " need user-supplied roots");
  }
  const RootReport report = quadratic_roots(alg, char_poly_of(alg, rhs), height);
  if (report.jordan) return {{*report.jordan, 2}};
  if (report.spherical) {
    const auto& [lambda, mu] = report.spherical->representatives;
    return {{lambda, 1}, {mu, 1}};
  }
  if (report.isolated.size() != 2) {
    fail(ErrorCode::NoRootsFound, "found " + std::to_string(report.isolated.size()) +
                                      " isolated root(s) without a Jordan or spherical structure");
  }
  return {{report.isolated[0].root, 1}, {report.isolated[1].root, 1}};
}

AssocForm<Quat> quaternion_form(const QuaternionAlgebra& alg, const std::vector<Quat>& rhs,
                                const std::vector<Quat>& init, const std::vector<RootSpec>& roots, unsigned height) {
  auto rootdata = roots.empty() ? quaternion_roots(alg, rhs, height) : typed_roots<Quat>(roots);
  return assoc_solve(alg, rhs, init, rootdata);
}

template <class A>
std::vector<typename A::Element> iterate(const A& alg, const RecurrenceSpec& spec, unsigned long long count) {
  using E = typename A::Element;
  auto rhs = typed<E>(spec.rhs, "rhs");
  auto seq = typed<E>(spec.init, "init");
  const std::size_t n = rhs.size();
  while (seq.size() < count) {
    const std::size_t k = seq.size() - n;
    E next = alg.zero();
    for (std::size_t j = 0; j < n; ++j) next = next + alg.mul(rhs[j], seq[k + j]);
    seq.push_back(std::move(next));
  }
  seq.resize(count);
  return seq;
}

bool all_simple(const std::vector<RootSpec>& roots) {
  for (const auto& r : roots) {
    if (r.multiplicity != 1) return false;
  }
  return true;
}

}  // namespace

void RecurrenceSpec::validate() const {
  const std::size_t n = order();
  if (n == 0) fail(ErrorCode::ValidationError, "order must be at least 1");
  if (init.size() != n) {
    fail(ErrorCode::ValidationError,
         "expected " + std::to_string(n) + " initial values, got " + std::to_string(init.size()));
  }
  if (height == 0) fail(ErrorCode::ValidationError, "height must be positive");
  std::visit(
      [&](const auto& alg) {
        using A = std::decay_t<decltype(alg)>;
        using E = typename A::Element;
        for (const auto& x : rhs) as<E>(x, "rhs");
        for (const auto& x : init) as<E>(x, "init");
        for (const auto& r : roots) as<E>(r.value, "root");
        if constexpr (std::is_same_v<A, ScalarField>) {
          auto check = [&](const Element& x) {
            if (alg.kind() == FieldKind::rational && sgn(std::get<Scalar>(x).v) != 0) {
              fail(ErrorCode::ValidationError, "sqrt component in a rational field spec");
            }
          };
          for (const auto& x : rhs) check(x);
          for (const auto& x : init) check(x);
          for (const auto& r : roots) check(r.value);
        }
        if constexpr (std::is_same_v<A, OctonionAlgebra>) {
          if (n != 2) fail(ErrorCode::ValidationError, "octonion recurrences must have order 2");
          if (!roots.empty()) fail(ErrorCode::ValidationError, "roots cannot be supplied for octonion recurrences");
        }
      },
      algebra);
  bool zero = std::visit([](const auto& x) { return x.is_zero(); }, rhs[0]);
  if (zero) fail(ErrorCode::ValidationError, "rhs[0] must be nonzero (c_0 != 0)");
  if (!roots.empty()) {
    std::size_t total = 0;
    for (const auto& r : roots) {
      if (r.multiplicity == 0) fail(ErrorCode::ValidationError, "root multiplicity must be positive");
      total += r.multiplicity;
    }
    if (total != n) {
      fail(ErrorCode::ValidationError,
           "root multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(n));
    }
  }
}

std::vector<Rational> binomial_poly(std::size_t s) {
  // k (k-1) ... (k-s+1) / s!
  std::vector<Rational> poly{Rational(1)};
  Integer fact = 1;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    const Rational shift(static_cast<unsigned long>(i));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= shift * poly[d];
    }
    poly = std::move(next);
    fact *= static_cast<unsigned long>(i + 1);
  }
  for (auto& c : poly) c /= fact;
  return poly;
}

std::variant<LeftPoly<Scalar>, LeftPoly<Quat>, LeftPoly<Oct>> primitive_char_poly(const RecurrenceSpec& spec) {
  spec.validate();
  return std::visit(
      [&](const auto& alg) -> std::variant<LeftPoly<Scalar>, LeftPoly<Quat>, LeftPoly<Oct>> {
        using E = typename std::decay_t<decltype(alg)>::Element;
        std::vector<E> c;
        for (const auto& r : spec.rhs) c.push_back(-as<E>(r, "rhs"));
        c.push_back(alg.one());
        return LeftPoly<E>(std::move(c));
      },
      spec.algebra);
}

RecurrenceSpec promote_field_quadratic(const RecurrenceSpec& spec) {
  const auto* field = std::get_if<ScalarField>(&spec.algebra);
  if (!field || spec.order() != 2) fail(ErrorCode::PreconditionViolation, "needs a field spec of order 2");
  spec.validate();
  const Scalar& r0 = std::get<Scalar>(spec.rhs[0]);
  const Scalar& r1 = std::get<Scalar>(spec.rhs[1]);
  // x^2 - r1 x - r0 has roots (r1 +- sqrt(r1^2 + 4 r0)) / 2.
  const Scalar disc = field->mul(r1, r1) + Rational(4) * r0;
  const Rational half(1, 2);
  RecurrenceSpec out = spec;
  if (disc.is_zero()) {
    out.roots = {{half * r1, 2}};
    return out;
  }
  if (auto root = field->sqrt(disc)) {
    out.roots = {{half * (r1 + *root), 1}, {half * (r1 - *root), 1}};
    return out;
  }
  if (field->kind() == FieldKind::quadratic) {
    fail(ErrorCode::NoRootsFound, "discriminant has no square root in " + field->describe());
  }
  const SquarefreeSplit split = squarefree_split(disc.u);
  out.algebra = ScalarField::quadratic(split.d);
  const Scalar sqrt_disc(Rational(0), split.e);
  out.roots = {{half * (r1 + sqrt_disc), 1}, {half * (r1 - sqrt_disc), 1}};
  return out;
}

ClosedForm solve_diagonalizable(const RecurrenceSpec& spec, const std::vector<Element>& roots) {
  RecurrenceSpec s = spec;
  s.roots.clear();
  for (const auto& r : roots) s.roots.push_back({r, 1});
  s.validate();
  if (const auto* field = std::get_if<ScalarField>(&s.algebra)) return FieldClosedForm{*field, field_form(*field, s)};
  if (const auto* quat = std::get_if<QuaternionAlgebra>(&s.algebra)) {
    return QuatClosedForm{*quat, quaternion_form(*quat, typed<Quat>(s.rhs, "rhs"), typed<Quat>(s.init, "init"),
                                                 s.roots, s.height)};
  }
  fail(ErrorCode::PreconditionViolation, "octonion recurrences are solved through a frame");
}

ClosedForm solve_jordan(const RecurrenceSpec& spec, const std::vector<RootSpec>& rootdata) {
  RecurrenceSpec s = spec;
  s.roots = rootdata;
  s.validate();
  if (const auto* field = std::get_if<ScalarField>(&s.algebra)) return FieldClosedForm{*field, field_form(*field, s)};
  if (const auto* quat = std::get_if<QuaternionAlgebra>(&s.algebra)) {
    return QuatClosedForm{*quat, quaternion_form(*quat, typed<Quat>(s.rhs, "rhs"), typed<Quat>(s.init, "init"),
                                                 s.roots, s.height)};
  }
  fail(ErrorCode::PreconditionViolation, "octonion recurrences are solved through a frame");
}

ClosedForm solve_octonion2(const RecurrenceSpec& spec) {
  const auto* alg = std::get_if<OctonionAlgebra>(&spec.algebra);
  if (!alg) fail(ErrorCode::PreconditionViolation, "solve_octonion2 needs an octonion spec");
  if (spec.order() != 2) fail(ErrorCode::UnsupportedOrder, "octonion recurrences must have order 2");
  spec.validate();
  const Oct& alpha = std::get<Oct>(spec.rhs[0]);
  const Oct& beta = std::get<Oct>(spec.rhs[1]);
  const Oct& a0 = std::get<Oct>(spec.init[0]);
  const Oct& a1 = std::get<Oct>(spec.init[1]);
  const bool central = alg->is_central(alpha) && alg->is_central(beta);

  OctClosedForm cf{*alg, central ? build_frame(*alg, a0, a1) : build_frame(*alg, alpha, beta), {}, {}};
  const QuaternionAlgebra q = cf.frame.quaternions();
  auto inside = [&](const Oct& x, const char* what) {
    auto [main, tail] = frame_decompose(*alg, cf.frame, x);
    if (!tail.is_zero()) fail(ErrorCode::InternalError, std::string(what) + " is not in the frame subalgebra");
    return main;
  };
  const std::vector<Quat> coeffs{inside(alpha, "rhs[0]"), inside(beta, "rhs[1]")};
  const auto [q0, s0] = frame_decompose(*alg, cf.frame, a0);
  const auto [q1, s1] = frame_decompose(*alg, cf.frame, a1);
  cf.main = quaternion_form(q, coeffs, {q0, q1}, {}, spec.height);
  if (!s0.is_zero() || !s1.is_zero()) {
    if (central) fail(ErrorCode::InternalError, "initial values escaped the frame built from them");
    // The l'-part obeys the recurrence with conjugated coefficients acting on
    // conjugated values.
    const std::vector<Quat> conj_coeffs{q.conj(coeffs[0]), q.conj(coeffs[1])};
    cf.tail = quaternion_form(q, conj_coeffs, {q.conj(s0), q.conj(s1)}, {}, spec.height);
  }
  return cf;
}

ClosedForm solve(const RecurrenceSpec& spec) {
  if (std::holds_alternative<OctonionAlgebra>(spec.algebra) && spec.order() != 2) {
    fail(ErrorCode::UnsupportedOrder, "octonion recurrences must have order 2");
  }
  spec.validate();
  ClosedForm cf = std::visit(
      [&](const auto& alg) -> ClosedForm {
        using A = std::decay_t<decltype(alg)>;
        if constexpr (std::is_same_v<A, OctonionAlgebra>) {
          return solve_octonion2(spec);
        } else {
          RecurrenceSpec s = spec;
          if (s.roots.empty()) {
            if (s.order() == 1) {
              s.roots = {{s.rhs[0], 1}};
            } else if constexpr (std::is_same_v<A, ScalarField>) {
              if (s.order() != 2) {
                fail(ErrorCode::UnsupportedOrder,
                     "field recurrences of order " + std::to_string(s.order()) + " need user-supplied roots");
              }
              s = promote_field_quadratic(s);
            } else {
              for (auto& [root, mult] : quaternion_roots(alg, typed<Quat>(s.rhs, "rhs"), s.height)) {
                s.roots.push_back({root, static_cast<unsigned>(mult)});
              }
            }
          }
          if (all_simple(s.roots)) {
            std::vector<Element> roots;
            for (const auto& r : s.roots) roots.push_back(r.value);
            return solve_diagonalizable(s, roots);
          }
          return solve_jordan(s, s.roots);
        }
      },
      spec.algebra);
  const VerifyReport check = verify_closed_form(spec, cf, 16);
  if (!check.ok) {
    fail(ErrorCode::InternalError, "closed form disagrees with iteration at k = " + std::to_string(*check.first_failure));
  }
  return cf;
}

Element eval_closed_form(const ClosedForm& cf, unsigned long long k) {
  if (const auto* f = std::get_if<FieldClosedForm>(&cf)) return eval_assoc(f->field, f->form, k);
  if (const auto* q = std::get_if<QuatClosedForm>(&cf)) return eval_assoc(q->algebra, q->form, k);
  const auto& o = std::get<OctClosedForm>(cf);
  const QuaternionAlgebra q = o.frame.quaternions();
  const Quat main = eval_assoc(q, o.main, k);
  const Quat tail = eval_assoc(q, o.tail, k);
  return frame_embed(o.algebra, o.frame, main) +
         o.algebra.mul(frame_embed(o.algebra, o.frame, q.conj(tail)), o.frame.ell);
}

Element iterate_oracle(const RecurrenceSpec& spec, unsigned long long k) {
  spec.validate();
  return std::visit([&](const auto& alg) -> Element { return iterate(alg, spec, k + 1).back(); }, spec.algebra);
}

VerifyReport verify_closed_form(const RecurrenceSpec& spec, const ClosedForm& cf, unsigned long long kmax) {
  spec.validate();
  const auto values = std::visit(
      [&](const auto& alg) {
        std::vector<Element> out;
        for (auto& x : iterate(alg, spec, kmax + 1)) out.emplace_back(std::move(x));
        return out;
      },
      spec.algebra);
  VerifyReport report;
  for (unsigned long long k = 0; k <= kmax; ++k) {
    if (!(eval_closed_form(cf, k) == values[k])) {
      report.ok = false;
      report.first_failure = k;
      break;
    }
  }
  return report;
}

}  // namespace skewrec

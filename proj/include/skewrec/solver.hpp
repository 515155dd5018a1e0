#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewrec/algebra.hpp"
#include "skewrec/matlin.hpp"
#include "skewrec/poly.hpp"
#include "skewrec/scalar.hpp"

namespace skewrec {

using AlgebraDesc = std::variant<ScalarField, QuaternionAlgebra, OctonionAlgebra>;
using Element = std::variant<Scalar, Quat, Oct>;

struct RootSpec {
  Element value;
  unsigned multiplicity = 1;
};

/// a_{k+n} = sum_j rhs[j] a_{k+j}, with a_0..a_{n-1} = init.
struct RecurrenceSpec {
  AlgebraDesc algebra = ScalarField::rational();
  std::vector<Element> rhs;
  std::vector<Element> init;
  std::vector<RootSpec> roots;
  unsigned height = 20;

  std::size_t order() const { return rhs.size(); }
  /// Throws ValidationError naming the violated rule.
  void validate() const;
};

/// (sum_s poly[s] k^s) * base^k * right.
template <class E>
struct Term {
  std::vector<E> poly;
  E base;
  E right;
};

template <class E>
struct AssocForm {
  std::vector<Term<E>> terms;
};

struct FieldClosedForm {
  ScalarField field;
  AssocForm<Scalar> form;
};

struct QuatClosedForm {
  QuaternionAlgebra algebra;
  AssocForm<Quat> form;
};

/// a_k = embed(main(k)) + embed(conj(tail(k))) * l'. Both parts live in the
/// frame quaternion algebra.
struct OctClosedForm {
  OctonionAlgebra algebra;
  SubalgebraFrame frame;
  AssocForm<Quat> main;
  AssocForm<Quat> tail;
};

using ClosedForm = std::variant<FieldClosedForm, QuatClosedForm, OctClosedForm>;

struct VerifyReport {
  bool ok = true;
  std::optional<unsigned long long> first_failure;
};

/// x^n + c_{n-1} x^{n-1} + ... + c_0 with c_j = -rhs[j]. Field specs yield
/// scalar polynomials, and so on.
std::variant<LeftPoly<Scalar>, LeftPoly<Quat>, LeftPoly<Oct>> primitive_char_poly(const RecurrenceSpec& spec);

ClosedForm solve(const RecurrenceSpec& spec);

/// Distinct roots, no three in one class.
ClosedForm solve_diagonalizable(const RecurrenceSpec& spec, const std::vector<Element>& roots);
ClosedForm solve_jordan(const RecurrenceSpec& spec, const std::vector<RootSpec>& rootdata);
ClosedForm solve_octonion2(const RecurrenceSpec& spec);

/// Field spec of order 2 with roots filled in. The algebra becomes Q(sqrt d)
/// when the discriminant is not a rational square.
RecurrenceSpec promote_field_quadratic(const RecurrenceSpec& spec);

Element eval_closed_form(const ClosedForm& cf, unsigned long long k);
Element iterate_oracle(const RecurrenceSpec& spec, unsigned long long k);
VerifyReport verify_closed_form(const RecurrenceSpec& spec, const ClosedForm& cf, unsigned long long kmax);

// Typed helpers shared with tests.

template <DivisionAlgebra A>
LeftPoly<typename A::Element> char_poly_of(const A& alg, const std::vector<typename A::Element>& rhs) {
  std::vector<typename A::Element> c;
  for (const auto& r : rhs) c.push_back(-r);
  c.push_back(alg.one());
  return LeftPoly<typename A::Element>(std::move(c));
}

/// Coefficients of the binomial C(k, s) as a polynomial in k.
std::vector<Rational> binomial_poly(std::size_t s);

/// Closed form from roots with multiplicities over an associative algebra.
/// Multiplicity-one data goes through the Vandermonde matrix, anything else
/// through Jordan chains.
template <DivisionAlgebra A>
AssocForm<typename A::Element> assoc_solve(const A& alg, const std::vector<typename A::Element>& rhs,
                                           const std::vector<typename A::Element>& init,
                                           const std::vector<std::pair<typename A::Element, std::size_t>>& rootdata) {
  using E = typename A::Element;
  const std::size_t n = rhs.size();
  if (init.size() != n) fail(ErrorCode::DimensionMismatch, "initial values and order differ");
  const auto p = char_poly_of(alg, rhs);
  for (const auto& [lambda, mult] : rootdata) {
    if (!poly_eval_left(alg, p, lambda).is_zero()) {
      fail(ErrorCode::ValidationError, "a supplied root does not annihilate the characteristic polynomial");
    }
  }
  bool simple = true;
  for (const auto& rd : rootdata) simple = simple && rd.second == 1;

  AssocForm<E> form;
  if (simple) {
    if (rootdata.size() != n) {
      fail(ErrorCode::PreconditionViolation,
           std::to_string(rootdata.size()) + " roots given for order " + std::to_string(n));
    }
    std::vector<E> nodes;
    for (const auto& rd : rootdata) nodes.push_back(rd.first);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t same = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (nodes[i] == nodes[j]) fail(ErrorCode::PreconditionViolation, "roots must be distinct");
        if (alg.same_class(nodes[i], nodes[j])) ++same;
      }
      if (same >= 3) fail(ErrorCode::LamViolation, "three or more roots lie in one conjugacy class");
    }
    auto vinv = mat_inverse(alg, vandermonde(alg, nodes));
    auto b = mat_apply(alg, vinv, init);
    for (std::size_t i = 0; i < n; ++i) {
      if (b[i].is_zero()) continue;
      form.terms.push_back({{alg.one()}, nodes[i], b[i]});
    }
  } else {
    const auto data = jordan_from_roots(alg, companion_matrix(alg, p), rootdata);
    auto b = mat_apply(alg, data.Uinv, init);
    // a_k is the first row of U J^k b. Inside a block at offset o,
    // (J^k b)_{o+i} = sum_s C(k, s) lambda^{k-s} b_{o+i+s}, so collecting by b
    // gives the polynomial sum_s U_{0,o+j-s} lambda^{-s} C(k, s).
    std::size_t offset = 0;
    for (const auto& [lambda, mult] : rootdata) {
      const E lambda_inv = alg.inv(lambda);
      for (std::size_t j = 0; j < mult; ++j) {
        std::vector<E> poly(j + 1, alg.zero());
        E lam_pow = alg.one();
        for (std::size_t s = 0; s <= j; ++s) {
          if (s > 0) lam_pow = alg.mul(lam_pow, lambda_inv);
          const E coeff = alg.mul(data.U(0, offset + j - s), lam_pow);
          const auto binom = binomial_poly(s);
          for (std::size_t d = 0; d < binom.size(); ++d) poly[d] = poly[d] + binom[d] * coeff;
        }
        while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
        if (poly.empty() || b[offset + j].is_zero()) continue;
        form.terms.push_back({std::move(poly), lambda, b[offset + j]});
      }
      offset += mult;
    }
  }
  std::stable_sort(form.terms.begin(), form.terms.end(), [&](const Term<E>& x, const Term<E>& y) {
    return coords_less(alg.coords(x.base), alg.coords(y.base));
  });
  return form;
}

template <DivisionAlgebra A>
typename A::Element eval_assoc(const A& alg, const AssocForm<typename A::Element>& form, unsigned long long k) {
  typename A::Element acc = alg.zero();
  for (const auto& term : form.terms) {
    typename A::Element p = alg.zero();
    const Rational kval(static_cast<unsigned long>(k));
    Rational kk = 1;
    for (std::size_t s = 0; s < term.poly.size(); ++s) {
      if (s > 0) kk *= kval;
      p = p + kk * term.poly[s];
    }
    acc = acc + alg.mul(alg.mul(p, power(alg, term.base, k)), term.right);
  }
  return acc;
}

}  // namespace skewrec

#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "skewrec/algebra.hpp"
#include "skewrec/scalar.hpp"

namespace skewrec {

/// What the generic polynomial and matrix code needs from an algebra object.
template <class A>
concept Algebra = requires(const A& alg, const typename A::Element& x, const Rational& q) {
  { alg.zero() } -> std::same_as<typename A::Element>;
  { alg.one() } -> std::same_as<typename A::Element>;
  { alg.from_rational(q) } -> std::same_as<typename A::Element>;
  { alg.mul(x, x) } -> std::same_as<typename A::Element>;
  { x + x } -> std::same_as<typename A::Element>;
  { x - x } -> std::same_as<typename A::Element>;
  { -x } -> std::same_as<typename A::Element>;
  { q * x } -> std::same_as<typename A::Element>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x == x } -> std::convertible_to<bool>;
};

/// Algebras where every nonzero element is invertible and classes are known.
template <class A>
concept DivisionAlgebra = Algebra<A> && requires(const A& alg, const typename A::Element& x) {
  { alg.inv(x) } -> std::same_as<typename A::Element>;
  { alg.same_class(x, x) } -> std::convertible_to<bool>;
  { alg.is_central(x) } -> std::convertible_to<bool>;
  { alg.dim() } -> std::convertible_to<std::size_t>;
  { alg.coords(x) } -> std::same_as<std::vector<Rational>>;
};

/// c_0 + c_1 x + ... + c_n x^n with x central and coefficients on the left.
template <class E>
struct LeftPoly {
  std::vector<E> coeffs;

  LeftPoly() = default;
  explicit LeftPoly(std::vector<E> c) : coeffs(std::move(c)) { trim(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  const E& operator[](std::size_t i) const { return coeffs[i]; }
  bool operator==(const LeftPoly& o) const { return coeffs == o.coeffs; }
};

/// Polynomial with rational coefficients, low degree first.
using CentralPoly = std::vector<Rational>;

template <Algebra A>
typename A::Element power(const A& alg, typename A::Element base, unsigned long long k) {
  typename A::Element result = alg.one();
  while (k > 0) {
    if (k & 1ULL) result = alg.mul(result, base);
    k >>= 1;
    if (k > 0) base = alg.mul(base, base);
  }
  return result;
}

template <Algebra A>
LeftPoly<typename A::Element> poly_add(const A& alg, const LeftPoly<typename A::Element>& p,
                                       const LeftPoly<typename A::Element>& q) {
  std::vector<typename A::Element> out(std::max(p.coeffs.size(), q.coeffs.size()), alg.zero());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) out[i] = out[i] + p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) out[i] = out[i] + q.coeffs[i];
  return LeftPoly<typename A::Element>(std::move(out));
}

template <Algebra A>
LeftPoly<typename A::Element> poly_sub(const A& alg, const LeftPoly<typename A::Element>& p,
                                       const LeftPoly<typename A::Element>& q) {
  std::vector<typename A::Element> out(std::max(p.coeffs.size(), q.coeffs.size()), alg.zero());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) out[i] = out[i] + p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) out[i] = out[i] - q.coeffs[i];
  return LeftPoly<typename A::Element>(std::move(out));
}

/// Coefficient of x^m is sum_{i+j=m} p_i q_j, factor order preserved.
template <Algebra A>
LeftPoly<typename A::Element> poly_product(const A& alg, const LeftPoly<typename A::Element>& p,
                                           const LeftPoly<typename A::Element>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<typename A::Element> out(p.coeffs.size() + q.coeffs.size() - 1, alg.zero());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) out[i + j] = out[i + j] + alg.mul(p.coeffs[i], q.coeffs[j]);
  }
  return LeftPoly<typename A::Element>(std::move(out));
}

/// x - lambda.
template <Algebra A>
LeftPoly<typename A::Element> linear_factor(const A& alg, const typename A::Element& lambda) {
  return LeftPoly<typename A::Element>({-lambda, alg.one()});
}

/// sum c_i lambda^i, powers built by repeated right multiplication.
template <Algebra A>
typename A::Element poly_eval_left(const A& alg, const LeftPoly<typename A::Element>& p,
                                   const typename A::Element& lambda) {
  typename A::Element acc = alg.zero();
  typename A::Element pw = alg.one();
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i > 0) pw = alg.mul(pw, lambda);
    acc = acc + alg.mul(p.coeffs[i], pw);
  }
  return acc;
}

/// p = g (x - lambda) + r with constant r.
template <Algebra A>
std::pair<LeftPoly<typename A::Element>, typename A::Element> divide_by_linear(
    const A& alg, const LeftPoly<typename A::Element>& p, const typename A::Element& lambda) {
  using E = typename A::Element;
  if (p.degree() <= 0) return {LeftPoly<E>(), p.is_zero() ? alg.zero() : p.coeffs[0]};
  const std::size_t n = p.coeffs.size() - 1;
  std::vector<E> g(n, alg.zero());
  g[n - 1] = p.coeffs[n];
  for (std::size_t i = n - 1; i >= 1; --i) g[i - 1] = p.coeffs[i] + alg.mul(g[i], lambda);
  E r = p.coeffs[0] + alg.mul(g[0], lambda);
  return {LeftPoly<E>(std::move(g)), r};
}

template <class A>
  requires requires(const A& alg, const typename A::Element& x) { alg.conj(x); }
LeftPoly<typename A::Element> conj_poly(const A& alg, const LeftPoly<typename A::Element>& p) {
  std::vector<typename A::Element> out;
  out.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) out.push_back(alg.conj(c));
  return LeftPoly<typename A::Element>(std::move(out));
}

/// C_p = p * conj(p); every coefficient is central. Throws InternalError
/// otherwise.
template <class A>
  requires requires(const A& alg, const typename A::Element& x) {
    alg.conj(x);
    { alg.is_central(x) } -> std::convertible_to<bool>;
  }
CentralPoly companion_poly(const A& alg, const LeftPoly<typename A::Element>& p) {
  auto product = poly_product(alg, p, conj_poly(alg, p));
  CentralPoly out;
  out.reserve(product.coeffs.size());
  for (const auto& c : product.coeffs) {
    if (!alg.is_central(c)) fail(ErrorCode::InternalError, "companion polynomial has a non-central coefficient");
    out.push_back(alg.coords(c)[0]);
  }
  return out;
}

struct CentralFactor {
  CentralPoly poly;  // monic, irreducible over Q
  unsigned multiplicity = 1;

  bool operator==(const CentralFactor& o) const { return poly == o.poly && multiplicity == o.multiplicity; }
};

CentralPoly central_product(const CentralPoly& p, const CentralPoly& q);

/// Rational roots of a nonzero rational polynomial, ascending, without repeats.
std::vector<Rational> rational_roots(const CentralPoly& p);

/// Monic factorization over Q of a monic polynomial of degree <= 4. Factors
/// are sorted by degree, then coefficients. Throws UnsupportedDegree above 4.
std::vector<CentralFactor> factor_central_quartic(const CentralPoly& p);

struct IsolatedRoot {
  Quat root;
  ConjClass cls;
};

struct SphericalRoots {
  Rational trace;
  Rational norm;
  std::pair<Quat, Quat> representatives;
};

/// Roots of a monic quadratic over a quaternion algebra.
struct RootReport {
  std::vector<IsolatedRoot> isolated;  // sorted by coordinates
  std::optional<Quat> jordan;          // the unique root, multiplicity 2
  std::optional<SphericalRoots> spherical;
  std::vector<CentralFactor> central_factors;
};

/// Lexicographic order on coordinates.
bool coords_less(const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Roots of p = x^2 - beta x - alpha, located through the factors of the
/// companion polynomial. Throws NoRootsFound when no class contributes a root.
RootReport quadratic_roots(const QuaternionAlgebra& alg, const LeftPoly<Quat>& p, unsigned max_height = 20);

}  // namespace skewrec

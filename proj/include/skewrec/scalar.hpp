#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewrec/error.hpp"

namespace skewrec {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& x);

/// Exact square root in Q, if one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Writes x = e^2 * d with d a squarefree integer (sign kept in d) and e >= 0
/// rational. Zero maps to (0, 0).
struct SquarefreeSplit {
  Rational e;
  Integer d;
};
SquarefreeSplit squarefree_split(const Rational& x);

bool is_squarefree(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

/// Larger of |numerator| and denominator.
Integer height(const Rational& x);

std::string render_rational(const Rational& x);

/// Parses INT or INT "/" POSINT. Throws ParseError (line 0, column relative
/// to the literal) on anything else.
Rational parse_rational(std::string_view text);

/// Solves M x = rhs over Q by row reduction. Free variables are set to zero;
/// returns nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational_system(std::vector<std::vector<Rational>> matrix,
                                                           std::vector<Rational> rhs);

std::size_t rational_rank(std::vector<std::vector<Rational>> matrix);

/// Basis of {x : M x = 0}, one vector per free column of the reduced form.
std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> matrix, std::size_t cols);

/// u + v*sqrt(d) in the field described by a ScalarField. v is 0 in the
/// rational context.
struct Scalar {
  Rational u;
  Rational v;

  Scalar() = default;
  Scalar(Rational u_, Rational v_ = 0) : u(std::move(u_)), v(std::move(v_)) {}
  Scalar(long n) : u(n), v(0) {}

  bool is_zero() const { return sgn(u) == 0 && sgn(v) == 0; }
  bool operator==(const Scalar& o) const { return u == o.u && v == o.v; }
};

inline Scalar operator+(const Scalar& x, const Scalar& y) { return {Rational(x.u + y.u), Rational(x.v + y.v)}; }
inline Scalar operator-(const Scalar& x, const Scalar& y) { return {Rational(x.u - y.u), Rational(x.v - y.v)}; }
inline Scalar operator-(const Scalar& x) { return {Rational(-x.u), Rational(-x.v)}; }
inline Scalar operator*(const Rational& s, const Scalar& x) { return {Rational(s * x.u), Rational(s * x.v)}; }

enum class FieldKind { rational, quadratic };

/// The base field: Q, or Q(sqrt d) for a squarefree d > 1. Elements are
/// plain values; every operation that needs d goes through this object.
class ScalarField {
 public:
  using Element = Scalar;

  ScalarField() = default;
  static ScalarField rational() { return {}; }
  /// Throws ValidationError unless d > 1 is squarefree.
  static ScalarField quadratic(const Integer& d);

  FieldKind kind() const { return kind_; }
  const Integer& d() const { return d_; }
  bool operator==(const ScalarField& o) const { return kind_ == o.kind_ && d_ == o.d_; }

  Scalar zero() const { return {}; }
  Scalar one() const { return Scalar(1); }
  Scalar from_rational(const Rational& q) const { return Scalar(q); }

  Scalar add(const Scalar& x, const Scalar& y) const;
  Scalar sub(const Scalar& x, const Scalar& y) const;
  Scalar neg(const Scalar& x) const;
  Scalar mul(const Scalar& x, const Scalar& y) const;
  /// Throws DivisionByZero for y == 0.
  Scalar div(const Scalar& x, const Scalar& y) const;
  Scalar inv(const Scalar& x) const;
  bool equal(const Scalar& x, const Scalar& y) const;

  /// u - v*sqrt(d).
  Scalar conj(const Scalar& x) const;
  /// u^2 - d v^2.
  Rational norm(const Scalar& x) const;
  /// Exact square root inside this field, if any.
  std::optional<Scalar> sqrt(const Scalar& x) const;

  bool is_zero(const Scalar& x) const { return x.is_zero(); }
  bool is_central(const Scalar&) const { return true; }
  bool same_class(const Scalar& x, const Scalar& y) const { return x == y; }

  std::size_t dim() const { return kind_ == FieldKind::rational ? 1 : 2; }
  std::vector<Rational> coords(const Scalar& x) const;
  Scalar from_coords(std::span<const Rational> c) const;

  /// Scalar literal grammar: INT | INT/POSINT | RAT(+|-)RAT*rt.
  Scalar parse(std::string_view text) const;
  std::string render(const Scalar& x) const;
  /// "field" or "field_sqrt D".
  std::string describe() const;

 private:
  void check(const Scalar& x) const;

  FieldKind kind_ = FieldKind::rational;
  Integer d_ = 0;
};

}  // namespace skewrec

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewrec/scalar.hpp"

namespace skewrec {

/// w + x e1 + y e2 + z e3 with rational coordinates.
struct Quat {
  std::array<Rational, 4> c{};

  Quat() = default;
  Quat(Rational w, Rational x = 0, Rational y = 0, Rational z = 0)
      : c{std::move(w), std::move(x), std::move(y), std::move(z)} {}
  Quat(long w) : Quat(Rational(w)) {}

  const Rational& operator[](std::size_t i) const { return c[i]; }
  Rational& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const;
  bool operator==(const Quat& o) const;
  /// Scalar part only.
  bool is_scalar() const;
};

Quat operator+(const Quat& x, const Quat& y);
Quat operator-(const Quat& x, const Quat& y);
Quat operator-(const Quat& x);
Quat operator*(const Rational& s, const Quat& x);

/// first + second * l0.
struct Oct {
  Quat first;
  Quat second;

  Oct() = default;
  Oct(Quat q, Quat r = Quat()) : first(std::move(q)), second(std::move(r)) {}
  Oct(long w) : first(w) {}

  bool is_zero() const { return first.is_zero() && second.is_zero(); }
  bool operator==(const Oct& o) const { return first == o.first && second == o.second; }
  /// Coordinate i in 0..7 on (1, e1, e2, e3, l0, e1 l0, e2 l0, e3 l0).
  const Rational& operator[](std::size_t i) const { return i < 4 ? first[i] : second[i - 4]; }
  Rational& operator[](std::size_t i) { return i < 4 ? first[i] : second[i - 4]; }
};

Oct operator+(const Oct& x, const Oct& y);
Oct operator-(const Oct& x, const Oct& y);
Oct operator-(const Oct& x);
Oct operator*(const Rational& s, const Oct& x);

/// A conjugacy class: a central singleton, or a non-central class indexed by
/// reduced trace and norm.
struct ConjClass {
  std::optional<Rational> central;
  Rational trace;
  Rational norm;

  bool operator==(const ConjClass& o) const {
    return central == o.central && trace == o.trace && norm == o.norm;
  }
};

/// Quaternion algebra (a,b | Q): e1^2 = a, e2^2 = b, e3 = e1 e2 = -e2 e1.
///
/// Division is not certified up front. Inverting a nonzero element of norm
/// zero raises ZeroDivisor, and same_class only agrees with true conjugacy
/// when the algebra is a division algebra.
class QuaternionAlgebra {
 public:
  using Element = Quat;

  QuaternionAlgebra(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool operator==(const QuaternionAlgebra& o) const { return a_ == o.a_ && b_ == o.b_; }

  Quat zero() const { return {}; }
  Quat one() const { return Quat(1); }
  Quat from_rational(const Rational& q) const { return Quat(q); }
  /// Basis element e_i, i in 0..3 (e_0 = 1).
  static Quat basis(std::size_t i);

  Quat mul(const Quat& x, const Quat& y) const;
  Quat conj(const Quat& x) const;
  Rational trace(const Quat& x) const;
  Rational norm(const Quat& x) const;
  /// trace(x conj(y)); the polar form of the norm.
  Rational polar(const Quat& x, const Quat& y) const;
  /// Throws DivisionByZero for 0, ZeroDivisor for a nonzero norm-0 element.
  Quat inv(const Quat& x) const;

  bool is_zero(const Quat& x) const { return x.is_zero(); }
  bool is_central(const Quat& x) const { return x.is_scalar(); }
  static Quat pure(const Quat& x);

  ConjClass conj_class(const Quat& x) const;
  bool same_class(const Quat& x, const Quat& y) const;

  std::size_t dim() const { return 4; }
  std::vector<Rational> coords(const Quat& x) const;
  Quat from_coords(std::span<const Rational> c) const;

  /// "[w,x,y,z]" with rational entries.
  Quat parse(std::string_view text) const;
  std::string render(const Quat& x) const;
  std::string describe() const;

 private:
  Rational a_;
  Rational b_;
};

/// Cayley-Dickson double of a quaternion algebra with parameter gamma:
/// (q + r l)(s + t l) = qs + gamma conj(t) r + (tq + r conj(s)) l.
class OctonionAlgebra {
 public:
  using Element = Oct;

  OctonionAlgebra(QuaternionAlgebra base, Rational gamma);

  const QuaternionAlgebra& base() const { return base_; }
  const Rational& gamma() const { return gamma_; }
  bool operator==(const OctonionAlgebra& o) const { return base_ == o.base_ && gamma_ == o.gamma_; }

  Oct zero() const { return {}; }
  Oct one() const { return Oct(1); }
  Oct from_rational(const Rational& q) const { return Oct(Quat(q)); }
  /// Standard basis vector i in 0..7.
  static Oct basis(std::size_t i);
  /// The doubling unit l0.
  static Oct ell() { return Oct(Quat(), Quat(1)); }

  Oct mul(const Oct& x, const Oct& y) const;
  Oct conj(const Oct& x) const;
  Rational trace(const Oct& x) const;
  Rational norm(const Oct& x) const;
  Rational polar(const Oct& x, const Oct& y) const;
  Oct inv(const Oct& x) const;

  bool is_zero(const Oct& x) const { return x.is_zero(); }
  bool is_central(const Oct& x) const { return x.second.is_zero() && x.first.is_scalar(); }
  static Oct pure(const Oct& x);
  /// Octonion classes are also determined by trace and norm.
  ConjClass conj_class(const Oct& x) const;
  bool same_class(const Oct& x, const Oct& y) const;

  std::size_t dim() const { return 8; }
  std::vector<Rational> coords(const Oct& x) const;
  Oct from_coords(std::span<const Rational> c) const;

  /// "[s0,...,s7]".
  Oct parse(std::string_view text) const;
  std::string render(const Oct& x) const;
  std::string describe() const;

 private:
  QuaternionAlgebra base_;
  Rational gamma_;
};

/// A quaternion subalgebra Q' = span(1, u, w, uw) of an octonion algebra
/// together with a trace-zero l' orthogonal to it, so O = Q' + Q' l'.
/// Frame quaternions are coordinates over (a', b') = (u^2, w^2).
struct SubalgebraFrame {
  Oct u;
  Oct w;
  Oct ell;
  Rational a_prime;
  Rational b_prime;
  Rational gamma_prime;  // ell^2
  /// Standard coordinates of 1, u, w, uw, l', u l', w l', (uw) l'.
  std::array<Oct, 8> basis;

  QuaternionAlgebra quaternions() const { return {a_prime, b_prime}; }
};

/// Frame whose quaternion part contains alpha and beta. Throws DegenerateFrame
/// if an isotropic vector turns up.
SubalgebraFrame build_frame(const OctonionAlgebra& alg, const Oct& alpha, const Oct& beta);

/// Maps frame quaternion coordinates to the octonion q0 + q1 u + q2 w + q3 uw.
Oct frame_embed(const OctonionAlgebra& alg, const SubalgebraFrame& frame, const Quat& q);

/// x = embed(q) + embed(s) l'.
std::pair<Quat, Quat> frame_decompose(const OctonionAlgebra& alg, const SubalgebraFrame& frame, const Oct& x);

/// Two members lambda and t - lambda of the class x^2 - t x + n, found by
/// bounded-height search over pure vectors of norm n - t^2/4.
std::pair<Quat, Quat> spherical_representative(const QuaternionAlgebra& alg, const Rational& t, const Rational& n,
                                               unsigned max_height = 20);

}  // namespace skewrec

#include "skewrec/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace skewrec {

namespace {

template <std::size_t N>
std::array<Rational, N> parse_tuple(std::string_view text) {
  std::array<Rational, N> out;
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("expected a bracketed tuple of " + std::to_string(N) + " scalars", 0, 1);
  }
  const ScalarField rationals;
  std::size_t pos = 1;
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t end = text.find_first_of(",]", pos);
    if (end == std::string_view::npos) throw ParseError("unterminated tuple", 0, text.size());
    bool last = i + 1 == N;
    if (last != (text[end] == ']')) {
      throw ParseError("expected exactly " + std::to_string(N) + " entries", 0, end + 1);
    }
    std::size_t b = pos, e = end;
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    try {
      Scalar s = rationals.parse(text.substr(b, e - b));
      out[i] = s.u;
    } catch (const ParseError& err) {
      throw ParseError("bad tuple entry", 0, b + err.column());
    }
    pos = end + 1;
  }
  if (pos != text.size()) throw ParseError("trailing characters after tuple", 0, pos + 1);
  return out;
}

std::string render_coords(std::span<const Rational> c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ",";
    out += render_rational(c[i]);
  }
  return out + "]";
}

// Rationals of height <= max_height ordered by height, then by magnitude, positive first.
std::vector<Rational> rationals_by_height(unsigned max_height) {
  std::vector<Rational> out{Rational(0)};
  for (unsigned h = 1; h <= max_height; ++h) {
    std::vector<Rational> level;
    for (unsigned q = 1; q <= h; ++q) {
      for (unsigned p = 0; p <= h; ++p) {
        if (std::max(p, q) != h || std::gcd(p, q) != 1 || p == 0) continue;
        level.push_back(make_rational(Integer(p), Integer(q)));
      }
    }
    std::sort(level.begin(), level.end());
    for (const Rational& r : level) {
      out.push_back(r);
      out.push_back(-r);
    }
  }
  return out;
}

}  // namespace

// --- Quat ------------------------------------------------------------------

bool Quat::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool Quat::operator==(const Quat& o) const {
  return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2] && c[3] == o.c[3];
}

bool Quat::is_scalar() const { return sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0; }

Quat operator+(const Quat& x, const Quat& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}
Quat operator-(const Quat& x, const Quat& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}
Quat operator-(const Quat& x) { return {-x[0], -x[1], -x[2], -x[3]}; }
Quat operator*(const Rational& s, const Quat& x) { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }

Oct operator+(const Oct& x, const Oct& y) { return {x.first + y.first, x.second + y.second}; }
Oct operator-(const Oct& x, const Oct& y) { return {x.first - y.first, x.second - y.second}; }
Oct operator-(const Oct& x) { return {-x.first, -x.second}; }
Oct operator*(const Rational& s, const Oct& x) { return {s * x.first, s * x.second}; }

// --- QuaternionAlgebra -----------------------------------------------------

QuaternionAlgebra::QuaternionAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (sgn(a_) == 0 || sgn(b_) == 0) fail(ErrorCode::ValidationError, "quaternion parameters must be nonzero");
}

Quat QuaternionAlgebra::basis(std::size_t i) {
  Quat q;
  q[i] = 1;
  return q;
}

Quat QuaternionAlgebra::mul(const Quat& x, const Quat& y) const {
  const Rational ab = a_ * b_;
  return {x[0] * y[0] + a_ * x[1] * y[1] + b_ * x[2] * y[2] - ab * x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] - b_ * x[2] * y[3] + b_ * x[3] * y[2],
          x[0] * y[2] + x[2] * y[0] + a_ * x[1] * y[3] - a_ * x[3] * y[1],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

Quat QuaternionAlgebra::conj(const Quat& x) const { return {x[0], -x[1], -x[2], -x[3]}; }

Rational QuaternionAlgebra::trace(const Quat& x) const { return 2 * x[0]; }

Rational QuaternionAlgebra::norm(const Quat& x) const {
  return x[0] * x[0] - a_ * x[1] * x[1] - b_ * x[2] * x[2] + a_ * b_ * x[3] * x[3];
}

Rational QuaternionAlgebra::polar(const Quat& x, const Quat& y) const {
  return 2 * (x[0] * y[0] - a_ * x[1] * y[1] - b_ * x[2] * y[2] + a_ * b_ * x[3] * y[3]);
}

Quat QuaternionAlgebra::inv(const Quat& x) const {
  if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero quaternion");
  Rational n = norm(x);
  if (sgn(n) == 0) fail(ErrorCode::ZeroDivisor, render(x) + " has norm 0 in " + describe());
  return Rational(1 / n) * conj(x);
}

Quat QuaternionAlgebra::pure(const Quat& x) { return {Rational(0), x[1], x[2], x[3]}; }

ConjClass QuaternionAlgebra::conj_class(const Quat& x) const {
  ConjClass cls{std::nullopt, trace(x), norm(x)};
  if (x.is_scalar()) cls.central = x[0];
  return cls;
}

bool QuaternionAlgebra::same_class(const Quat& x, const Quat& y) const { return conj_class(x) == conj_class(y); }

std::vector<Rational> QuaternionAlgebra::coords(const Quat& x) const { return {x.c.begin(), x.c.end()}; }

Quat QuaternionAlgebra::from_coords(std::span<const Rational> c) const {
  if (c.size() != 4) fail(ErrorCode::DimensionMismatch, "quaternion needs 4 coordinates");
  return {c[0], c[1], c[2], c[3]};
}

Quat QuaternionAlgebra::parse(std::string_view text) const {
  auto t = parse_tuple<4>(text);
  return {t[0], t[1], t[2], t[3]};
}

std::string QuaternionAlgebra::render(const Quat& x) const { return render_coords(x.c); }

std::string QuaternionAlgebra::describe() const {
  return "quaternion " + render_rational(a_) + " " + render_rational(b_);
}

// --- OctonionAlgebra -------------------------------------------------------

OctonionAlgebra::OctonionAlgebra(QuaternionAlgebra base, Rational gamma)
    : base_(std::move(base)), gamma_(std::move(gamma)) {
  if (sgn(gamma_) == 0) fail(ErrorCode::ValidationError, "octonion parameter gamma must be nonzero");
}

Oct OctonionAlgebra::basis(std::size_t i) {
  Oct o;
  o[i] = 1;
  return o;
}

Oct OctonionAlgebra::mul(const Oct& x, const Oct& y) const {
  const Quat& q = x.first;
  const Quat& r = x.second;
  const Quat& s = y.first;
  const Quat& t = y.second;
  return {base_.mul(q, s) + gamma_ * base_.mul(base_.conj(t), r), base_.mul(t, q) + base_.mul(r, base_.conj(s))};
}

Oct OctonionAlgebra::conj(const Oct& x) const { return {base_.conj(x.first), -x.second}; }

Rational OctonionAlgebra::trace(const Oct& x) const { return 2 * x.first[0]; }

Rational OctonionAlgebra::norm(const Oct& x) const {
  return base_.norm(x.first) - gamma_ * base_.norm(x.second);
}

Rational OctonionAlgebra::polar(const Oct& x, const Oct& y) const {
  return base_.polar(x.first, y.first) - gamma_ * base_.polar(x.second, y.second);
}

Oct OctonionAlgebra::inv(const Oct& x) const {
  if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero octonion");
  Rational n = norm(x);
  if (sgn(n) == 0) fail(ErrorCode::ZeroDivisor, render(x) + " has norm 0 in " + describe());
  return Rational(1 / n) * conj(x);
}

Oct OctonionAlgebra::pure(const Oct& x) { return {QuaternionAlgebra::pure(x.first), x.second}; }

ConjClass OctonionAlgebra::conj_class(const Oct& x) const {
  ConjClass cls{std::nullopt, trace(x), norm(x)};
  if (is_central(x)) cls.central = x.first[0];
  return cls;
}

bool OctonionAlgebra::same_class(const Oct& x, const Oct& y) const { return conj_class(x) == conj_class(y); }

std::vector<Rational> OctonionAlgebra::coords(const Oct& x) const {
  std::vector<Rational> out(x.first.c.begin(), x.first.c.end());
  out.insert(out.end(), x.second.c.begin(), x.second.c.end());
  return out;
}

Oct OctonionAlgebra::from_coords(std::span<const Rational> c) const {
  if (c.size() != 8) fail(ErrorCode::DimensionMismatch, "octonion needs 8 coordinates");
  return {Quat(c[0], c[1], c[2], c[3]), Quat(c[4], c[5], c[6], c[7])};
}

Oct OctonionAlgebra::parse(std::string_view text) const {
  auto t = parse_tuple<8>(text);
  return from_coords(t);
}

std::string OctonionAlgebra::render(const Oct& x) const { return render_coords(coords(x)); }

std::string OctonionAlgebra::describe() const {
  return "octonion " + render_rational(base_.a()) + " " + render_rational(base_.b()) + " " +
         render_rational(gamma_);
}

// --- frames ----------------------------------------------------------------

namespace {

// Removes the components of v along the mutually orthogonal vectors in `against`.
Oct orthogonalize(const OctonionAlgebra& alg, Oct v, std::span<const Oct> against) {
  for (const Oct& f : against) {
    Rational ff = alg.polar(f, f);
    if (sgn(ff) == 0) fail(ErrorCode::DegenerateFrame, "isotropic frame vector " + alg.render(f));
    Rational coeff = alg.polar(v, f) / ff;
    if (sgn(coeff) != 0) v = v - coeff * f;
  }
  return v;
}

bool anisotropic(const OctonionAlgebra& alg, const Oct& v) { return !v.is_zero() && sgn(alg.norm(v)) != 0; }

Rational scalar_square(const OctonionAlgebra& alg, const Oct& v) {
  Oct sq = alg.mul(v, v);
  if (!alg.is_central(sq)) fail(ErrorCode::InternalError, "square of a pure octonion is not central");
  return sq.first[0];
}

std::vector<std::vector<Rational>> basis_matrix(const OctonionAlgebra& alg, const std::array<Oct, 8>& basis) {
  std::vector<std::vector<Rational>> m(8, std::vector<Rational>(8));
  for (std::size_t j = 0; j < 8; ++j) {
    auto c = alg.coords(basis[j]);
    for (std::size_t i = 0; i < 8; ++i) m[i][j] = c[i];
  }
  return m;
}

}  // namespace

SubalgebraFrame build_frame(const OctonionAlgebra& alg, const Oct& alpha, const Oct& beta) {
  Oct u = OctonionAlgebra::pure(beta);
  if (u.is_zero()) u = OctonionAlgebra::pure(alpha);
  if (u.is_zero()) u = OctonionAlgebra::basis(1);
  if (!anisotropic(alg, u)) fail(ErrorCode::DegenerateFrame, "generator " + alg.render(u) + " has norm 0");

  const std::array<Oct, 1> first{u};
  Oct w = orthogonalize(alg, OctonionAlgebra::pure(alpha), first);
  if (w.is_zero()) {
    for (std::size_t i = 1; i < 8 && w.is_zero(); ++i) {
      Oct cand = orthogonalize(alg, OctonionAlgebra::basis(i), first);
      if (!cand.is_zero()) w = cand;
    }
  }
  if (!anisotropic(alg, w)) fail(ErrorCode::DegenerateFrame, "second generator has norm 0");

  Oct uw = alg.mul(u, w);
  const std::array<Oct, 4> quaternion_part{alg.one(), u, w, uw};
  Oct ell;
  for (std::size_t i = 1; i < 8 && ell.is_zero(); ++i) {
    Oct cand = orthogonalize(alg, OctonionAlgebra::basis(i), quaternion_part);
    if (!cand.is_zero()) ell = cand;
  }
  if (!anisotropic(alg, ell)) fail(ErrorCode::DegenerateFrame, "no anisotropic complement to the subalgebra");

  SubalgebraFrame frame;
  frame.u = u;
  frame.w = w;
  frame.ell = ell;
  frame.a_prime = scalar_square(alg, u);
  frame.b_prime = scalar_square(alg, w);
  frame.gamma_prime = scalar_square(alg, ell);
  frame.basis = {alg.one(), u, w, uw, ell, alg.mul(u, ell), alg.mul(w, ell), alg.mul(uw, ell)};

  if (rational_rank(basis_matrix(alg, frame.basis)) != 8) {
    fail(ErrorCode::DegenerateFrame, "frame vectors are linearly dependent");
  }
  return frame;
}

Oct frame_embed(const OctonionAlgebra&, const SubalgebraFrame& frame, const Quat& q) {
  return q[0] * frame.basis[0] + q[1] * frame.basis[1] + q[2] * frame.basis[2] + q[3] * frame.basis[3];
}

std::pair<Quat, Quat> frame_decompose(const OctonionAlgebra& alg, const SubalgebraFrame& frame, const Oct& x) {
  auto sol = solve_rational_system(basis_matrix(alg, frame.basis), alg.coords(x));
  if (!sol) fail(ErrorCode::InternalError, "frame basis does not span the algebra");
  const auto& c = *sol;
  return {Quat(c[0], c[1], c[2], c[3]), Quat(c[4], c[5], c[6], c[7])};
}

std::pair<Quat, Quat> spherical_representative(const QuaternionAlgebra& alg, const Rational& t, const Rational& n,
                                               unsigned max_height) {
  Rational disc = t * t - 4 * n;
  if (rational_sqrt(disc)) {
    fail(ErrorCode::PreconditionViolation, "x^2 - " + render_rational(t) + "x + " + render_rational(n) +
                                               " is reducible over Q");
  }
  // lambda = t/2 + y with y pure and N(y) = n - t^2/4:  -a x^2 - b y^2 + ab z^2 = m.
  const Rational m = n - t * t / 4;
  const Rational& a = alg.a();
  const Rational& b = alg.b();
  const auto values = rationals_by_height(max_height);
  const Integer bound(max_height);
  auto attempt = [&](const Rational& y, const Rational& z) -> std::optional<Quat> {
    Rational x2 = -(m + b * y * y - a * b * z * z) / a;
    auto x = rational_sqrt(x2);
    if (!x || height(*x) > bound) return std::nullopt;
    Quat pure(Rational(0), *x, y, z);
    if (pure.is_zero()) return std::nullopt;
    return pure;
  };
  for (std::size_t s = 0; s < values.size(); ++s) {
    for (std::size_t i = 0; i <= s; ++i) {
      std::optional<Quat> found = attempt(values[i], values[s]);
      if (!found && i != s) found = attempt(values[s], values[i]);
      if (found) {
        Quat half_t(t / 2);
        return {half_t + *found, half_t - *found};
      }
    }
  }
  fail(ErrorCode::NoRepresentative, "search exhausted at height " + std::to_string(max_height) + " for class (t=" +
                                        render_rational(t) + ", n=" + render_rational(n) + ") in " + alg.describe());
}

}  // namespace skewrec

#include "skewrec/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace skewrec {

namespace {

using PrimePower = std::pair<Integer, unsigned>;

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split_large(const Integer& n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.emplace_back(n, 1);
    return;
  }
  Integer f = pollard_rho(n);
  split_large(f, out);
  split_large(Integer(n / f), out);
}

std::vector<PrimePower> factorize(Integer n) {
  n = abs(n);
  std::vector<PrimePower> out;
  if (n <= 1) return out;
  auto divide_out = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(Integer(p), e);
  };
  divide_out(2);
  constexpr unsigned long kTrialLimit = 100000;
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    if (Integer(p) * p > n) break;
    divide_out(p);
  }
  if (n > 1) {
    std::vector<PrimePower> large;
    split_large(n, large);
    std::sort(large.begin(), large.end());
    for (auto& [p, e] : large) {
      if (!out.empty() && out.back().first == p) {
        out.back().second += e;
      } else {
        out.emplace_back(p, e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Reads [-]DIGITS[/POSDIGITS] starting at pos.
Rational read_rational(std::string_view text, std::size_t& pos, bool allow_sign) {
  bool negative = false;
  if (allow_sign && pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::size_t digits = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == digits) throw ParseError("expected digits", 0, pos + 1);
  Integer num(std::string(text.substr(digits, pos - digits)));
  if (negative) num = -num;
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == dstart) throw ParseError("expected denominator digits", 0, pos + 1);
    den = Integer(std::string(text.substr(dstart, pos - dstart)));
    if (den == 0) throw ParseError("denominator must be positive", 0, dstart + 1);
  }
  return make_rational(num, den);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (sgn(x) == 0) return Rational(0);
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return make_rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

SquarefreeSplit squarefree_split(const Rational& x) {
  if (sgn(x) == 0) return {Rational(0), Integer(0)};
  Integer n = x.get_num() * x.get_den();
  Integer d = sgn(n) < 0 ? -1 : 1;
  Integer s = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2 == 1) d *= p;
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
  }
  return {make_rational(s, x.get_den()), d};
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& pe : factorize(n)) {
    if (pe.second > 1) return false;
  }
  return true;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  if (n == 0) fail(ErrorCode::PreconditionViolation, "divisors of zero");
  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t count = divisors.size();
    Integer power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

Integer height(const Rational& x) {
  Integer num = abs(x.get_num());
  return num > x.get_den() ? num : Integer(x.get_den());
}

std::string render_rational(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  Rational r = read_rational(text, pos, true);
  if (pos != text.size()) throw ParseError("unexpected trailing characters", 0, pos + 1);
  return r;
}

std::optional<std::vector<Rational>> solve_rational_system(std::vector<std::vector<Rational>> m,
                                                           std::vector<Rational> rhs) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) fail(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(rhs[i]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------

ScalarField ScalarField::quadratic(const Integer& d) {
  if (d <= 1) fail(ErrorCode::ValidationError, "quadratic field needs d > 1, got " + d.get_str());
  if (!is_squarefree(d)) fail(ErrorCode::ValidationError, "d = " + d.get_str() + " is not squarefree");
  ScalarField f;
  f.kind_ = FieldKind::quadratic;
  f.d_ = d;
  return f;
}

void ScalarField::check(const Scalar& x) const {
  if (kind_ == FieldKind::rational && sgn(x.v) != 0) {
    fail(ErrorCode::ContextMismatch, "sqrt component in a rational context");
  }
}

Scalar ScalarField::add(const Scalar& x, const Scalar& y) const { return x + y; }
Scalar ScalarField::sub(const Scalar& x, const Scalar& y) const { return x - y; }
Scalar ScalarField::neg(const Scalar& x) const { return -x; }

Scalar ScalarField::mul(const Scalar& x, const Scalar& y) const {
  if (kind_ == FieldKind::rational) return Scalar(Rational(x.u * y.u));
  return {Rational(x.u * y.u + d_ * x.v * y.v), Rational(x.u * y.v + x.v * y.u)};
}

Scalar ScalarField::conj(const Scalar& x) const { return {x.u, Rational(-x.v)}; }

Rational ScalarField::norm(const Scalar& x) const { return x.u * x.u - d_ * x.v * x.v; }

Scalar ScalarField::inv(const Scalar& x) const {
  check(x);
  if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  Rational n = norm(x);
  // d is not a square, so a nonzero element has nonzero norm.
  return Rational(1 / n) * conj(x);
}

Scalar ScalarField::div(const Scalar& x, const Scalar& y) const { return mul(x, inv(y)); }

bool ScalarField::equal(const Scalar& x, const Scalar& y) const { return x == y; }

std::optional<Scalar> ScalarField::sqrt(const Scalar& x) const {
  if (x.is_zero()) return Scalar();
  if (sgn(x.v) == 0) {
    if (auto r = rational_sqrt(x.u)) return Scalar(*r);
    if (kind_ == FieldKind::quadratic) {
      // (t sqrt d)^2 = d t^2
      if (auto t = rational_sqrt(Rational(x.u / d_))) return Scalar(Rational(0), *t);
    }
    return std::nullopt;
  }
  // (s + t sqrt d)^2 = (s^2 + d t^2) + 2 s t sqrt d
  auto m = rational_sqrt(norm(x));
  if (!m) return std::nullopt;
  for (const Rational& cand : {Rational((x.u + *m) / 2), Rational((x.u - *m) / 2)}) {
    if (sgn(cand) == 0) continue;
    if (auto s = rational_sqrt(cand)) {
      Scalar root(*s, Rational(x.v / (2 * *s)));
      if (mul(root, root) == x) return root;
    }
  }
  return std::nullopt;
}

std::vector<Rational> ScalarField::coords(const Scalar& x) const {
  if (kind_ == FieldKind::rational) return {x.u};
  return {x.u, x.v};
}

Scalar ScalarField::from_coords(std::span<const Rational> c) const {
  if (c.size() != dim()) fail(ErrorCode::DimensionMismatch, "wrong coordinate count for scalar");
  return kind_ == FieldKind::rational ? Scalar(c[0]) : Scalar(c[0], c[1]);
}

Scalar ScalarField::parse(std::string_view text) const {
  std::size_t pos = 0;
  Rational u = read_rational(text, pos, true);
  if (pos == text.size()) return Scalar(u);
  char op = text[pos];
  if (op != '+' && op != '-') throw ParseError("expected '+' or '-' before sqrt part", 0, pos + 1);
  ++pos;
  Rational v = read_rational(text, pos, false);
  if (text.substr(pos) != "*rt") throw ParseError("expected '*rt' after sqrt coefficient", 0, pos + 1);
  if (kind_ == FieldKind::rational) fail(ErrorCode::ContextMismatch, "'*rt' used in a rational context");
  if (op == '-') v = -v;
  return {u, v};
}

std::string ScalarField::render(const Scalar& x) const {
  if (sgn(x.v) == 0) return render_rational(x.u);
  std::string out = render_rational(x.u);
  out += sgn(x.v) > 0 ? "+" : "-";
  out += render_rational(abs(x.v));
  out += "*rt";
  return out;
}

std::string ScalarField::describe() const {
  return kind_ == FieldKind::rational ? "field" : "field_sqrt " + d_.get_str();
}

}  // namespace skewrec

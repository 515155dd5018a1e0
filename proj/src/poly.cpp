#include "skewrec/poly.hpp"

#include <algorithm>

namespace skewrec {

namespace {

long central_degree(const CentralPoly& p) {
  long d = static_cast<long>(p.size()) - 1;
  while (d >= 0 && sgn(p[static_cast<std::size_t>(d)]) == 0) --d;
  return d;
}

CentralPoly trimmed(CentralPoly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Rational central_eval(const CentralPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Quotient of p by (x - r), assuming r is a root.
CentralPoly deflate(const CentralPoly& p, const Rational& r) {
  const std::size_t n = p.size() - 1;
  CentralPoly q(n);
  Rational carry = 0;
  for (std::size_t i = n; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

bool factor_less(const CentralFactor& x, const CentralFactor& y) {
  if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
  return coords_less(x.poly, y.poly);
}

// Splits a monic quartic without rational roots into two rational quadratics.
std::optional<std::pair<CentralPoly, CentralPoly>> split_quartic(const CentralPoly& p) {
  const Rational& d = p[0];
  const Rational& c = p[1];
  const Rational& b = p[2];
  const Rational& a = p[3];
  // (x^2 + r x + q)(x^2 + s' x + s): y = q + s is a root of the resolvent cubic.
  CentralPoly resolvent{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)};
  auto check = [&](const Rational& p1, const Rational& q, const Rational& r1,
                   const Rational& s) -> std::optional<std::pair<CentralPoly, CentralPoly>> {
    CentralPoly f1{q, p1, Rational(1)};
    CentralPoly f2{s, r1, Rational(1)};
    if (central_product(f1, f2) != p) return std::nullopt;
    if (coords_less(f2, f1)) std::swap(f1, f2);
    return std::make_pair(f1, f2);
  };
  for (const Rational& y : rational_roots(trimmed(resolvent))) {
    auto root = rational_sqrt(Rational(y * y - 4 * d));
    if (!root) continue;
    Rational q = (y + *root) / 2;
    Rational s = (y - *root) / 2;
    if (q != s) {
      for (int swap = 0; swap < 2; ++swap) {
        Rational p1 = (c - a * q) / (s - q);
        if (auto f = check(p1, q, a - p1, s)) return f;
        std::swap(q, s);
      }
    } else {
      auto root2 = rational_sqrt(Rational(a * a - 4 * (b - 2 * q)));
      if (!root2) continue;
      Rational p1 = (a + *root2) / 2;
      if (auto f = check(p1, q, a - p1, s)) return f;
    }
  }
  return std::nullopt;
}

}  // namespace

bool coords_less(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](const Rational& l, const Rational& r) { return l < r; });
}

CentralPoly central_product(const CentralPoly& p, const CentralPoly& q) {
  if (p.empty() || q.empty()) return {};
  CentralPoly out(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return trimmed(std::move(out));
}

std::vector<Rational> rational_roots(const CentralPoly& input) {
  CentralPoly p = trimmed(input);
  if (p.empty()) fail(ErrorCode::PreconditionViolation, "rational roots of the zero polynomial");
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < p.size() && sgn(p[shift]) == 0) ++shift;
  if (shift > 0) {
    roots.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  const std::size_t n = p.size() - 1;
  if (n == 0) return roots;

  // Monic integer rescaling: g(y) = L^n f(y / L) with f = p / lead.
  const Rational lead = p.back();
  Integer scale = 1;
  for (const Rational& c : p) {
    Rational m = c / lead;
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.get_den().get_mpz_t());
  }
  std::vector<Integer> g(n + 1);
  Integer power = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    Rational m = p[i] / lead * power;
    g[i] = m.get_num();
    power *= scale;
  }
  auto g_at = [&](const Integer& y) {
    Integer acc = 0;
    for (std::size_t i = n + 1; i-- > 0;) acc = acc * y + g[i];
    return acc;
  };
  for (const Integer& div : positive_divisors(g[0])) {
    for (const Integer& y : {Integer(div), Integer(-div)}) {
      if (g_at(y) == 0) roots.push_back(make_rational(y, scale));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<CentralFactor> factor_central_quartic(const CentralPoly& input) {
  CentralPoly p = trimmed(input);
  long deg = central_degree(p);
  if (deg > 4) fail(ErrorCode::UnsupportedDegree, "degree " + std::to_string(deg) + " exceeds 4");
  if (deg < 0) fail(ErrorCode::PreconditionViolation, "factoring the zero polynomial");
  if (p.back() != 1) fail(ErrorCode::PreconditionViolation, "polynomial is not monic");
  std::vector<CentralFactor> factors;
  if (deg == 0) return factors;

  for (const Rational& r : rational_roots(p)) {
    unsigned mult = 0;
    while (p.size() > 1 && sgn(central_eval(p, r)) == 0) {
      p = deflate(p, r);
      ++mult;
    }
    factors.push_back({CentralPoly{-r, Rational(1)}, mult});
  }
  deg = central_degree(p);
  if (deg == 2 || deg == 3) {
    factors.push_back({p, 1});
  } else if (deg == 4) {
    if (auto split = split_quartic(p)) {
      if (split->first == split->second) {
        factors.push_back({split->first, 2});
      } else {
        factors.push_back({split->first, 1});
        factors.push_back({split->second, 1});
      }
    } else {
      factors.push_back({p, 1});
    }
  }
  std::sort(factors.begin(), factors.end(), factor_less);
  return factors;
}

RootReport quadratic_roots(const QuaternionAlgebra& alg, const LeftPoly<Quat>& p, unsigned max_height) {
  if (p.degree() != 2 || !(p.coeffs[2] == alg.one())) {
    fail(ErrorCode::PreconditionViolation, "quadratic_roots needs a monic quadratic");
  }
  const Quat beta = -p.coeffs[1];
  const Quat alpha = -p.coeffs[0];

  RootReport report;
  report.central_factors = factor_central_quartic(companion_poly(alg, p));

  auto accept = [&](const Quat& lambda) {
    if (!poly_eval_left(alg, p, lambda).is_zero()) return;
    for (const auto& r : report.isolated) {
      if (r.root == lambda) return;
    }
    report.isolated.push_back({lambda, alg.conj_class(lambda)});
  };

  for (const CentralFactor& f : report.central_factors) {
    if (f.poly.size() == 2) {
      accept(alg.from_rational(-f.poly[0]));
    } else if (f.poly.size() == 3) {
      // x^2 - t x + n; members satisfy lambda^2 = t lambda - n, so
      // p(lambda) = (t - beta) lambda - (n + alpha).
      const Rational t = -f.poly[1];
      const Rational& n = f.poly[0];
      const Quat t_minus_beta = alg.from_rational(t) - beta;
      if (!t_minus_beta.is_zero()) {
        accept(alg.mul(alg.inv(t_minus_beta), alg.from_rational(n) + alpha));
      } else if (alpha == alg.from_rational(-n)) {
        report.spherical = SphericalRoots{t, n, spherical_representative(alg, t, n, max_height)};
      }
    }
  }

  std::sort(report.isolated.begin(), report.isolated.end(), [&](const IsolatedRoot& x, const IsolatedRoot& y) {
    return coords_less(alg.coords(x.root), alg.coords(y.root));
  });

  if (report.isolated.size() == 1 && !report.spherical) {
    const Quat& lambda = report.isolated.front().root;
    const Quat mu = beta - lambda;
    if (alg.same_class(mu, lambda)) {
      auto [g, r] = divide_by_linear(alg, p, lambda);
      if (!r.is_zero() || !(g == linear_factor(alg, mu))) {
        fail(ErrorCode::InternalError, "forced factorization p = (x - (beta - lambda))(x - lambda) failed");
      }
      report.jordan = lambda;
    }
  }
  if (report.isolated.empty() && !report.spherical) {
    fail(ErrorCode::NoRootsFound, "no conjugacy class of the companion polynomial yields a root");
  }
  return report;
}

}  // namespace skewrec

#include "skewrec/render.hpp"

#include <type_traits>

namespace skewrec {

namespace {

std::string render_scalar(const Scalar& x) {
  std::string out = render_rational(x.u);
  if (sgn(x.v) == 0) return out;
  out += sgn(x.v) > 0 ? "+" : "-";
  return out + render_rational(abs(x.v)) + "*rt";
}

std::string plain(const Scalar& x) { return render_scalar(x); }
std::string plain(const Quat& x) { return render_element(Element(x)); }

// Scalars are parenthesized so that products read unambiguously.
template <class E>
std::string operand(const E& x) {
  if constexpr (std::is_same_v<E, Scalar>) {
    return "(" + plain(x) + ")";
  } else {
    return plain(x);
  }
}

template <class E>
bool all_negative(const E& x) {
  bool any = false;
  if constexpr (std::is_same_v<E, Scalar>) {
    for (const Rational* c : {&x.u, &x.v}) {
      if (sgn(*c) > 0) return false;
      any = any || sgn(*c) < 0;
    }
  } else {
    for (const Rational& c : x.c) {
      if (sgn(c) > 0) return false;
      any = any || sgn(c) < 0;
    }
  }
  return any;
}

template <class E>
std::string render_poly(const std::vector<E>& poly) {
  std::string out;
  for (std::size_t d = poly.size(); d-- > 0;) {
    const E& c = poly[d];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (d == 0) {
      out += (first ? "" : " + ") + plain(c);
      continue;
    }
    const std::string kpow = d == 1 ? "k" : "k^" + std::to_string(d);
    if (all_negative(c)) {
      out += (first ? "-" : " - ") + kpow + "*" + operand(-c);
    } else {
      out += (first ? "" : " + ") + kpow + "*" + operand(c);
    }
  }
  return "(" + out + ")";
}

template <class E>
std::string render_form(const AssocForm<E>& form) {
  if (form.terms.empty()) return "0";
  std::string out;
  for (const auto& t : form.terms) {
    if (!out.empty()) out += " + ";
    out += render_poly(t.poly) + " * " + operand(t.base) + "^k * " + operand(t.right);
  }
  return out;
}

}  // namespace

std::string render_element(const Element& x) {
  if (const auto* s = std::get_if<Scalar>(&x)) return render_scalar(*s);
  std::vector<Rational> coords;
  if (const auto* q = std::get_if<Quat>(&x)) {
    coords.assign(q->c.begin(), q->c.end());
  } else {
    const Oct& o = std::get<Oct>(x);
    for (std::size_t i = 0; i < 8; ++i) coords.push_back(o[i]);
  }
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ",";
    out += render_rational(coords[i]);
  }
  return out + "]";
}

std::string render_closed_form(const ClosedForm& cf) {
  if (const auto* f = std::get_if<FieldClosedForm>(&cf)) {
    return f->field.describe() + "\na_k = " + render_form(f->form) + "\n";
  }
  if (const auto* q = std::get_if<QuatClosedForm>(&cf)) {
    return q->algebra.describe() + "\na_k = " + render_form(q->form) + "\n";
  }
  const auto& o = std::get<OctClosedForm>(cf);
  std::string out = o.algebra.describe() + "\n";
  out += "frame u = " + render_element(o.frame.u) + ", w = " + render_element(o.frame.w) +
         ", l = " + render_element(o.frame.ell) + "; quaternion " + render_rational(o.frame.a_prime) + " " +
         render_rational(o.frame.b_prime) + " on (1,u,w,uw), l^2 = " + render_rational(o.frame.gamma_prime) + "\n";
  out += "a_k = " + render_form(o.main);
  if (!o.tail.terms.empty()) out += " + conj(" + render_form(o.tail) + ") * l";
  return out + "\n";
}

std::string render_report(const VerifyReport& report) {
  if (report.ok) return "PASS";
  return "FAIL at k = " + std::to_string(*report.first_failure);
}

}  // namespace skewrec

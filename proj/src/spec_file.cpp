#include "skewrec/spec_file.hpp"

#include <map>
#include <optional>

#include "skewrec/render.hpp"

namespace skewrec {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view line, std::size_t number) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    int depth = 0;
    while (i < line.size()) {
      char c = line[i];
      if (depth == 0 && (c == ' ' || c == '\t' || c == '\r')) break;
      if (c == '[') ++depth;
      if (c == ']') {
        if (depth == 0) throw ParseError("unbalanced ']'", number, i + 1);
        --depth;
      }
      ++i;
    }
    if (depth != 0) throw ParseError("unterminated '['", number, start + 1);
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

Rational rational_token(const Token& t, std::size_t line) {
  try {
    return parse_rational(t.text);
  } catch (const ParseError& e) {
    throw ParseError("bad rational '" + t.text + "'", line, t.column + e.column() - 1);
  }
}

unsigned long positive_token(const Token& t, std::size_t line, const char* what) {
  Rational r = rational_token(t, line);
  if (!is_integer(r) || sgn(r) <= 0 || !r.get_num().fits_ulong_p()) {
    throw ParseError(std::string(what) + " must be a positive integer", line, t.column);
  }
  return r.get_num().get_ui();
}

Element element_token(const AlgebraDesc& algebra, const Token& t, std::size_t line) {
  try {
    return std::visit([&](const auto& alg) -> Element { return alg.parse(t.text); }, algebra);
  } catch (const ParseError& e) {
    throw ParseError("bad element '" + t.text + "': " + std::string(e.what()), line, t.column + e.column() - 1);
  }
}

AlgebraDesc algebra_line(const Line& l) {
  const auto& tk = l.tokens;
  const std::string& kind = tk.size() > 1 ? tk[1].text : std::string();
  auto want = [&](std::size_t count) {
    if (tk.size() != count + 2) {
      fail(ErrorCode::ValidationError, "line " + std::to_string(l.number) + ": 'algebra " + kind + "' takes " +
                                           std::to_string(count) + " parameter(s)");
    }
  };
  if (kind == "field") {
    want(0);
    return ScalarField::rational();
  }
  if (kind == "field_sqrt") {
    want(1);
    Rational d = rational_token(tk[2], l.number);
    if (!is_integer(d)) throw ParseError("D must be an integer", l.number, tk[2].column);
    return ScalarField::quadratic(d.get_num());
  }
  if (kind == "quaternion") {
    want(2);
    return QuaternionAlgebra(rational_token(tk[2], l.number), rational_token(tk[3], l.number));
  }
  if (kind == "octonion") {
    want(3);
    return OctonionAlgebra(QuaternionAlgebra(rational_token(tk[2], l.number), rational_token(tk[3], l.number)),
                           rational_token(tk[4], l.number));
  }
  throw ParseError("unknown algebra '" + kind + "'", l.number, tk.size() > 1 ? tk[1].column : tk[0].column + 7);
}

}  // namespace

RecurrenceSpec parse_spec_file(std::string_view text) {
  std::map<std::string, Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = tokenize(raw, number);
    if (tokens.empty()) continue;
    const std::string key = tokens[0].text;
    static const char* known[] = {"algebra", "order", "rhs", "init", "roots", "height"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError("unknown key '" + key + "'", number, tokens[0].column);
    if (lines.count(key)) {
      fail(ErrorCode::ValidationError,
           "line " + std::to_string(number) + ": duplicate key '" + key + "' (first on line " +
               std::to_string(lines[key].number) + ")");
    }
    lines[key] = Line{number, std::move(tokens)};
  }
  for (const char* required : {"algebra", "order", "rhs", "init"}) {
    if (!lines.count(required)) fail(ErrorCode::ValidationError, std::string("missing key '") + required + "'");
  }

  RecurrenceSpec spec;
  spec.algebra = algebra_line(lines["algebra"]);

  const Line& order_line = lines["order"];
  if (order_line.tokens.size() != 2) {
    fail(ErrorCode::ValidationError, "line " + std::to_string(order_line.number) + ": 'order' takes one value");
  }
  const std::size_t order = positive_token(order_line.tokens[1], order_line.number, "order");

  auto elements = [&](const char* key) {
    const Line& l = lines[key];
    std::vector<Element> out;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) out.push_back(element_token(spec.algebra, l.tokens[i], l.number));
    if (out.size() != order) {
      fail(ErrorCode::ValidationError, "line " + std::to_string(l.number) + ": '" + key + "' has " +
                                           std::to_string(out.size()) + " element(s), order is " +
                                           std::to_string(order));
    }
    return out;
  };
  spec.rhs = elements("rhs");
  spec.init = elements("init");

  if (lines.count("roots")) {
    const Line& l = lines["roots"];
    if (l.tokens.size() < 2) {
      fail(ErrorCode::ValidationError, "line " + std::to_string(l.number) + ": 'roots' needs at least one root");
    }
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      const Token& t = l.tokens[i];
      if (t.text.front() == '(') {
        if (spec.roots.empty() || t.text.size() < 3 || t.text.back() != ')') {
          throw ParseError("multiplicity must follow a root as '(M)'", l.number, t.column);
        }
        if (spec.roots.back().multiplicity != 1 || (i >= 2 && l.tokens[i - 1].text.front() == '(')) {
          throw ParseError("root already has a multiplicity", l.number, t.column);
        }
        Token inner{t.text.substr(1, t.text.size() - 2), t.column + 1};
        spec.roots.back().multiplicity = static_cast<unsigned>(positive_token(inner, l.number, "multiplicity"));
        continue;
      }
      spec.roots.push_back({element_token(spec.algebra, t, l.number), 1});
    }
  }

  if (lines.count("height")) {
    const Line& l = lines["height"];
    if (l.tokens.size() != 2) {
      fail(ErrorCode::ValidationError, "line " + std::to_string(l.number) + ": 'height' takes one value");
    }
    spec.height = static_cast<unsigned>(positive_token(l.tokens[1], l.number, "height"));
  }
  spec.validate();
  return spec;
}

std::string render_spec_file(const RecurrenceSpec& spec) {
  std::string out = "algebra " + std::visit([](const auto& alg) { return alg.describe(); }, spec.algebra) + "\n";
  out += "order " + std::to_string(spec.order()) + "\n";
  auto list = [](const std::vector<Element>& xs) {
    std::string s;
    for (const auto& x : xs) s += " " + render_element(x);
    return s;
  };
  out += "rhs" + list(spec.rhs) + "\n";
  out += "init" + list(spec.init) + "\n";
  if (!spec.roots.empty()) {
    out += "roots";
    for (const auto& r : spec.roots) {
      out += " " + render_element(r.value);
      if (r.multiplicity != 1) out += " (" + std::to_string(r.multiplicity) + ")";
    }
    out += "\n";
  }
  if (spec.height != 20) out += "height " + std::to_string(spec.height) + "\n";
  return out;
}

bool operator==(const RecurrenceSpec& x, const RecurrenceSpec& y) {
  if (!(x.algebra == y.algebra) || x.rhs != y.rhs || x.init != y.init || x.height != y.height) return false;
  if (x.roots.size() != y.roots.size()) return false;
  for (std::size_t i = 0; i < x.roots.size(); ++i) {
    if (!(x.roots[i].value == y.roots[i].value) || x.roots[i].multiplicity != y.roots[i].multiplicity) return false;
  }
  return true;
}

}  // namespace skewrec

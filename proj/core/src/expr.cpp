#include "galoispoint/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace gp {

ParseError::ParseError(int line, int column, const std::string& msg)
    : Error(Errc::parse_error,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { number, ident, op, end };
  Kind kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::number, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::ident, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::op, std::string(1, c), l, cl});
      advance(1);
    } else {
      throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Token::Kind::end) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::op && peek().text == op; }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }

  static Expr binary(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr e = term();
    while (is_op("+") || is_op("-")) {
      const auto k = peek().text == "+" ? Expr::Kind::add : Expr::Kind::sub;
      ++pos_;
      e = binary(k, std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (is_op("*") || is_op("/")) {
      const auto k = peek().text == "*" ? Expr::Kind::mul : Expr::Kind::div;
      ++pos_;
      e = binary(k, std::move(e), unary());
    }
    return e;
  }

  Expr unary() {
    if (is_op("-")) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::neg;
      e.args.push_back(unary());
      return e;
    }
    if (is_op("+")) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!is_op("^")) return base;
    ++pos_;
    const Token& t = peek();
    if (t.kind == Token::Kind::op && t.text == "-") fail(t, "negative exponent");
    if (t.kind != Token::Kind::number) fail(t, "exponent must be a nonnegative integer literal");
    if (t.text.size() > 6) fail(t, "exponent too large");
    Expr e;
    e.kind = Expr::Kind::pow;
    e.exponent = static_cast<unsigned>(std::stoul(t.text));
    e.args.push_back(std::move(base));
    ++pos_;
    if (is_op("^")) fail(peek(), "chained exponents need parentheses");
    return e;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::number: {
        Expr e;
        e.number = Integer(t.text);
        ++pos_;
        return e;
      }
      case Token::Kind::ident: {
        if (t.text.size() != 1 ||
            std::find(kVariables.begin(), kVariables.end(), t.text[0]) == kVariables.end())
          fail(t, "unknown variable '" + t.text + "'");
        Expr e;
        e.kind = Expr::Kind::variable;
        e.variable = t.text[0];
        ++pos_;
        return e;
      }
      case Token::Kind::op:
        if (t.text == "(") {
          ++pos_;
          Expr e = expr();
          if (!is_op(")")) fail(peek(), "expected ')'");
          ++pos_;
          return e;
        }
        fail(t, "unexpected '" + t.text + "'");
      case Token::Kind::end:
        fail(t, "unexpected end of input");
    }
    fail(t, "unexpected token");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::size_t var_index(char v) {
  return static_cast<std::size_t>(std::find(kVariables.begin(), kVariables.end(), v) - kVariables.begin());
}

SparsePoly pow(const SparsePoly& p, unsigned e) {
  SparsePoly r(Rational(1)), b = p;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Fraction normalized(SparsePoly num, SparsePoly den) {
  if (den.is_zero()) throw Error(Errc::division_by_zero, "division by zero in expression");
  if (den.is_constant()) {
    num *= Rational(1) / den.constant();
    den = SparsePoly(Rational(1));
  }
  return Fraction{std::move(num), std::move(den)};
}

// Evaluates the monomials of p in a ring R given images of the variables.
template <class R>
R evaluate(const SparsePoly& p, const std::array<std::optional<R>, 7>& images, const char* context) {
  R acc{};
  for (const auto& [e, c] : p.terms()) {
    R term(c);
    for (std::size_t v = 0; v < 7; ++v) {
      if (e[v] == 0) continue;
      if (!images[v])
        throw Error(Errc::invalid_argument,
                    std::string("variable ") + kVariables[v] + " is not allowed in " + context);
      term = term * pow(*images[v], static_cast<unsigned>(e[v]));
    }
    acc = acc + term;
  }
  return acc;
}

NfElem field_generator(const FieldPtr& field) {
  if (!field) throw Error(Errc::field_too_small, "z needs a number field (use --field n)");
  return NfElem::generator(field);
}

void require_polynomial(const Fraction& f, const char* context) {
  if (!f.is_polynomial()) throw Error(Errc::invalid_argument, std::string(context) + " must be a polynomial");
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(tokenize(text)).parse(); }

SparsePoly::SparsePoly(const Rational& c) {
  if (!gp::is_zero(c)) terms_[Exps{}] = c;
}

SparsePoly SparsePoly::variable(std::size_t index) {
  SparsePoly p;
  Exps e{};
  e[index] = 1;
  p.terms_[e] = Rational(1);
  return p;
}

bool SparsePoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{}); }

Rational SparsePoly::constant() const {
  if (!is_constant()) throw Error(Errc::invalid_argument, "expression is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool SparsePoly::uses(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.first[var] != 0; });
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) {
    Rational& slot = terms_[e];
    slot += c;
    if (gp::is_zero(slot)) terms_.erase(e);
  }
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& s) {
  if (gp::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
  SparsePoly nb = b;
  nb *= Rational(-1);
  return a += nb;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      SparsePoly::Exps e;
      for (std::size_t i = 0; i < 7; ++i) e[i] = ea[i] + eb[i];
      Rational& slot = r.terms_[e];
      slot += ca * cb;
      if (gp::is_zero(slot)) r.terms_.erase(e);
    }
  return r;
}

bool Fraction::uses(char var) const {
  const std::size_t v = var_index(var);
  return num.uses(v) || den.uses(v);
}

Fraction lower(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return Fraction{SparsePoly(Rational(e.number)), SparsePoly(Rational(1))};
    case Expr::Kind::variable:
      return Fraction{SparsePoly::variable(var_index(e.variable)), SparsePoly(Rational(1))};
    case Expr::Kind::neg: {
      Fraction f = lower(e.args[0]);
      f.num *= Rational(-1);
      return f;
    }
    case Expr::Kind::pow: {
      Fraction f = lower(e.args[0]);
      return normalized(pow(f.num, e.exponent), pow(f.den, e.exponent));
    }
    default:
      break;
  }
  const Fraction a = lower(e.args[0]);
  const Fraction b = lower(e.args[1]);
  switch (e.kind) {
    case Expr::Kind::add:
      if (a.den == b.den) return normalized(a.num + b.num, a.den);
      return normalized(a.num * b.den + b.num * a.den, a.den * b.den);
    case Expr::Kind::sub:
      if (a.den == b.den) return normalized(a.num - b.num, a.den);
      return normalized(a.num * b.den - b.num * a.den, a.den * b.den);
    case Expr::Kind::mul:
      return normalized(a.num * b.num, a.den * b.den);
    case Expr::Kind::div:
      return normalized(a.num * b.den, a.den * b.num);
    default:
      throw Error(Errc::internal, "unhandled expression node");
  }
}

Fraction parse_fraction(std::string_view text) { return lower(parse_expr(text)); }

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<SparsePoly::Exps, Rational>> terms(p.terms().begin(), p.terms().end());
  auto total = [](const SparsePoly::Exps& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
  };
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return total(a.first) > total(b.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < 7; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVariables[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::string to_string(const Fraction& f) {
  if (f.is_polynomial()) return to_string(f.num);
  return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

NfElem to_constant(const Fraction& f, const FieldPtr& field) {
  std::array<std::optional<NfElem>, 7> img;
  if (f.uses('z')) img[6] = field_generator(field);
  const NfElem n = evaluate<NfElem>(f.num, img, "a constant");
  const NfElem d = evaluate<NfElem>(f.den, img, "a constant");
  if (d.is_zero()) throw Error(Errc::division_by_zero, "constant with zero denominator");
  return n / d;
}

RatFunc to_ratfunc(const Fraction& f, const FieldPtr& field) {
  std::array<std::optional<NfPoly>, 7> img;
  img[2] = NfPoly::variable();
  if (f.uses('z')) img[6] = NfPoly(field_generator(field));
  return RatFunc::make(evaluate<NfPoly>(f.num, img, "a function of t"),
                       evaluate<NfPoly>(f.den, img, "a function of t"));
}

TriPoly to_affine(const Fraction& f, const FieldPtr& field) {
  require_polynomial(f, "a curve equation");
  std::array<std::optional<TriPoly>, 7> img;
  img[0] = TriPoly::variable(0);
  img[1] = TriPoly::variable(1);
  if (f.uses('z')) img[6] = TriPoly(field_generator(field));
  return evaluate<TriPoly>(f.num, img, "an affine curve equation (use x, y)");
}

TriPoly to_form(const Fraction& f, const FieldPtr& field) {
  require_polynomial(f, "a curve equation");
  std::array<std::optional<TriPoly>, 7> img;
  img[3] = TriPoly::variable(0);
  img[4] = TriPoly::variable(1);
  img[5] = TriPoly::variable(2);
  if (f.uses('z')) img[6] = TriPoly(field_generator(field));
  return evaluate<TriPoly>(f.num, img, "a projective curve equation (use X, Y, Z)");
}

KPoly to_kpoly(const Fraction& f, const FieldPtr& field) {
  std::array<std::optional<KPoly>, 7> img;
  const bool upper = f.uses('X');
  if (upper && f.uses('x')) throw Error(Errc::invalid_argument, "use either x or X as the fiber variable");
  img[upper ? 3 : 0] = KPoly::variable();
  img[2] = KPoly(RatFunc::t());
  if (f.uses('z')) img[6] = KPoly(RatFunc(field_generator(field)));
  const char* context = "a polynomial in x over k(t)";
  const KPoly den = evaluate<KPoly>(f.den, img, context);
  if (den.degree() != 0) throw Error(Errc::invalid_argument, "denominator of a fiber polynomial must not involve x");
  return evaluate<KPoly>(f.num, img, context) * inverse(den.leading());
}

}  // namespace gp

#pragma once

// Polynomial expression language:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | variable | '(' expr ')'
//
// Variables are the single letters x y t X Y Z z.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "galoispoint/algebra.hpp"
#include "galoispoint/tripoly.hpp"

namespace gp {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Expr {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow };
  Kind kind = Kind::number;
  Integer number;
  char variable = 0;
  unsigned exponent = 0;
  std::vector<Expr> args;
};

Expr parse_expr(std::string_view text);

inline constexpr std::array<char, 7> kVariables{'x', 'y', 't', 'X', 'Y', 'Z', 'z'};

/// Sparse polynomial over Q in the seven variables, indexed as in kVariables.
class SparsePoly {
 public:
  using Exps = std::array<int, 7>;
  using Terms = std::map<Exps, Rational, std::greater<Exps>>;

  SparsePoly() = default;
  explicit SparsePoly(const Rational& c);
  static SparsePoly variable(std::size_t index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant() const;
  bool uses(std::size_t var) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& s);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// num / den; den is 1 whenever it is constant.
struct Fraction {
  SparsePoly num;
  SparsePoly den{Rational(1)};

  bool is_polynomial() const { return den.is_constant(); }
  bool uses(char var) const;
  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num == b.num && a.den == b.den; }
};

Fraction lower(const Expr& e);
Fraction parse_fraction(std::string_view text);

/// Canonical text: terms by descending total degree, then exponent vector.
std::string to_string(const SparsePoly& p);
std::string to_string(const Fraction& f);

// Lowering into the algebraic types. Each rejects variables outside its
// context; z requires a field.
NfElem to_constant(const Fraction& f, const FieldPtr& field);
RatFunc to_ratfunc(const Fraction& f, const FieldPtr& field);
/// Curve equation in x, y (affine) or X, Y, Z (projective form).
TriPoly to_affine(const Fraction& f, const FieldPtr& field);
TriPoly to_form(const Fraction& f, const FieldPtr& field);
/// Polynomial in x (or X) over K = k'(t).
KPoly to_kpoly(const Fraction& f, const FieldPtr& field);

}  // namespace gp

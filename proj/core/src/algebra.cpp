#include "galoispoint/algebra.hpp"

namespace gp {

ModulusPtr make_modulus(const KPoly& h) {
  if (h.degree() < 1) throw Error(Errc::invalid_argument, "quotient modulus must have degree >= 1");
  if (!(h.leading() == RatFunc(1))) throw Error(Errc::invalid_argument, "quotient modulus must be monic");
  return std::make_shared<const KPoly>(h);
}

AlgebraElement::AlgebraElement(ModulusPtr modulus, const KPoly& rep) : mod_(std::move(modulus)) {
  rep_ = rep.degree() >= mod_->degree() ? divmod(rep, *mod_).remainder : rep;
}

AlgebraElement AlgebraElement::generator(const ModulusPtr& modulus) {
  return AlgebraElement(modulus, KPoly::variable());
}

AlgebraElement AlgebraElement::constant(const ModulusPtr& modulus, const RatFunc& c) {
  return AlgebraElement(modulus, KPoly(c));
}

AlgebraElement AlgebraElement::from_coordinates(const ModulusPtr& modulus, const std::vector<RatFunc>& coords) {
  return AlgebraElement(modulus, KPoly(coords));
}

std::vector<RatFunc> AlgebraElement::coordinates() const {
  std::vector<RatFunc> v(static_cast<std::size_t>(dimension()));
  for (std::size_t i = 0; i < rep_.coeffs().size(); ++i) v[i] = rep_.coeffs()[i];
  return v;
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (mod_ != o.mod_ && !(*mod_ == *o.mod_))
    throw Error(Errc::invalid_argument, "algebra elements over different moduli");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  rep_ += o.rep_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  rep_ -= o.rep_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& o) {
  check_same(o);
  KPoly prod = rep_ * o.rep_;
  rep_ = prod.degree() >= mod_->degree() ? divmod(prod, *mod_).remainder : prod;
  return *this;
}

AlgebraElement algebra_inverse(const AlgebraElement& a) {
  if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero in quotient algebra");
  auto eg = xgcd(a.rep(), a.modulus());
  if (eg.gcd.degree() > 0)
    throw Error(Errc::reducible_modulus,
                "element shares the factor " + to_string(eg.gcd) + " with the modulus; the curve model is reducible");
  return AlgebraElement(a.modulus_ptr(), eg.u);
}

AlgebraElement algebra_substitute(const KPoly& p, const AlgebraElement& a) {
  AlgebraElement acc = AlgebraElement::constant(a.modulus_ptr(), RatFunc(0));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * a + AlgebraElement::constant(a.modulus_ptr(), *it);
  return acc;
}

AlgebraElement pow(const AlgebraElement& a, unsigned e) {
  AlgebraElement r = AlgebraElement::constant(a.modulus_ptr(), RatFunc(1)), b = a;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

std::string to_string(const KPoly& p, const std::string& var) {
  return poly_to_string(p, var, [](const RatFunc& c) { return coeff_string(c); });
}

}  // namespace gp

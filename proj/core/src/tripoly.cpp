#include "galoispoint/tripoly.hpp"

#include <algorithm>
#include <sstream>

namespace gp {

const std::array<std::string, 3> kAffineNames = {"x", "y", "w"};
const std::array<std::string, 3> kProjectiveNames = {"X", "Y", "Z"};

TriPoly::TriPoly(NfElem c) {
  if (!c.is_zero()) terms_.emplace(Mono{0, 0, 0}, std::move(c));
}

TriPoly TriPoly::variable(int index) {
  Mono m{0, 0, 0};
  m[static_cast<std::size_t>(index)] = 1;
  return monomial(NfElem(1), m);
}

TriPoly TriPoly::monomial(NfElem c, Mono m) {
  TriPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

NfElem TriPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? NfElem(0) : it->second;
}

int TriPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

int TriPoly::min_total_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2];
  for (const auto& [m, c] : terms_) d = std::min(d, m[0] + m[1] + m[2]);
  return d;
}

int TriPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
  return d;
}

int TriPoly::valuation_in(int var) const {
  if (terms_.empty()) return 0;
  int v = terms_.begin()->first[static_cast<std::size_t>(var)];
  for (const auto& [m, c] : terms_) v = std::min(v, m[static_cast<std::size_t>(var)]);
  return v;
}

bool TriPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

void TriPoly::add_term(const Mono& m, const NfElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const NfElem& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return r;
}

TriPoly pow(const TriPoly& p, unsigned e) {
  TriPoly r(NfElem(1)), b = p;
  while (e) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

NfElem TriPoly::evaluate(const std::array<NfElem, 3>& at) const {
  NfElem acc(0);
  for (const auto& [m, c] : terms_) {
    NfElem t = c;
    for (std::size_t i = 0; i < 3; ++i) t *= pow(at[i], m[i]);
    acc += t;
  }
  return acc;
}

TriPoly TriPoly::substitute(const std::array<TriPoly, 3>& images) const {
  std::array<std::vector<TriPoly>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    const int top = std::max(0, degree_in(static_cast<int>(i)));
    powers[i].reserve(static_cast<std::size_t>(top) + 1);
    powers[i].emplace_back(NfElem(1));
    for (int k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  TriPoly acc;
  for (const auto& [m, c] : terms_) {
    TriPoly t = powers[0][static_cast<std::size_t>(m[0])] * powers[1][static_cast<std::size_t>(m[1])];
    t = t * powers[2][static_cast<std::size_t>(m[2])];
    acc += t * c;
  }
  return acc;
}

TriPoly TriPoly::derivative(int var) const {
  TriPoly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Mono n = m;
    --n[v];
    r.add_term(n, c * NfElem(static_cast<long>(m[v])));
  }
  return r;
}

TriPoly TriPoly::homogenize(int var, int degree) const {
  TriPoly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (m[v] != 0) throw Error(Errc::invalid_argument, "homogenize: variable already present");
    Mono n = m;
    n[v] = degree - (m[0] + m[1] + m[2]);
    if (n[v] < 0) throw Error(Errc::invalid_argument, "homogenize: degree too small");
    r.add_term(n, c);
  }
  return r;
}

TriPoly TriPoly::dehomogenize(int var) const {
  TriPoly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    n[v] = 0;
    r.add_term(n, c);
  }
  return r;
}

TriPoly TriPoly::shift_down(int var, int k) const {
  TriPoly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    n[v] -= k;
    if (n[v] < 0) throw Error(Errc::invalid_argument, "shift_down: not divisible");
    r.add_term(n, c);
  }
  return r;
}

std::string TriPoly::to_string(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mono, NfElem>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first[0] + a.first[1] + a.first[2] > b.first[0] + b.first[1] + b.first[2];
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    std::string cs = c.to_string();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    if (cs != "1" || m == Mono{0, 0, 0}) factors.push_back(cs);
    for (std::size_t i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      factors.push_back(m[i] == 1 ? names[i] : names[i] + "^" + std::to_string(m[i]));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::optional<TriPoly> divide_exact(const TriPoly& a, const TriPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by the zero polynomial");
  const auto& [lb_m, lb_c] = *b.terms().begin();
  const NfElem inv = nf_inverse(lb_c);
  TriPoly r = a, q;
  while (!r.is_zero()) {
    const auto& [lm, lc] = *r.terms().begin();
    TriPoly::Mono d{lm[0] - lb_m[0], lm[1] - lb_m[1], lm[2] - lb_m[2]};
    if (d[0] < 0 || d[1] < 0 || d[2] < 0) return std::nullopt;
    TriPoly t = TriPoly::monomial(lc * inv, d);
    q += t;
    r -= t * b;
  }
  return q;
}

TriPoly normalize_leading(const TriPoly& p) {
  if (p.is_zero()) return p;
  return p * nf_inverse(p.terms().begin()->second);
}

bool proportional(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_leading(a) == normalize_leading(b);
}

KPoly to_univariate(const TriPoly& p, int main_var, int coeff_var) {
  const int other = 3 - main_var - coeff_var;
  std::vector<std::vector<NfElem>> rows(static_cast<std::size_t>(std::max(0, p.degree_in(main_var)) + 1));
  for (const auto& [m, c] : p.terms()) {
    if (m[static_cast<std::size_t>(other)] != 0) throw Error(Errc::invalid_argument, "to_univariate: third variable present");
    auto& row = rows[static_cast<std::size_t>(m[static_cast<std::size_t>(main_var)])];
    const auto j = static_cast<std::size_t>(m[static_cast<std::size_t>(coeff_var)]);
    if (row.size() <= j) row.resize(j + 1, NfElem(0));
    row[j] += c;
  }
  std::vector<RatFunc> coeffs;
  coeffs.reserve(rows.size());
  for (auto& row : rows) coeffs.emplace_back(NfPoly(std::move(row)));
  return KPoly(std::move(coeffs));
}

TriPoly from_univariate(const std::vector<NfPoly>& coeffs, int main_var, int coeff_var) {
  TriPoly r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& cp = coeffs[k].coeffs();
    for (std::size_t j = 0; j < cp.size(); ++j) {
      TriPoly::Mono m{0, 0, 0};
      m[static_cast<std::size_t>(main_var)] = static_cast<int>(k);
      m[static_cast<std::size_t>(coeff_var)] = static_cast<int>(j);
      r += TriPoly::monomial(cp[j], m);
    }
  }
  return r;
}

namespace {

NfPoly content_of(const KPoly& p) {
  NfPoly g;
  for (const auto& c : p.coeffs()) g = gcd(g, c.num());
  return g;
}

/// Clears denominators of a K[X] polynomial and removes the k'[coeff] content.
std::vector<NfPoly> primitive_polynomial_coeffs(const KPoly& p) {
  NfPoly l(NfElem(1));
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    l = divexact(l * c.den(), gcd(l, c.den()));
  }
  std::vector<NfPoly> out;
  NfPoly cont;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.is_zero() ? NfPoly() : c.num() * divexact(l, c.den()));
    cont = gcd(cont, out.back());
  }
  for (auto& c : out)
    if (!c.is_zero()) c = divexact(c, cont);
  return out;
}

}  // namespace

TriPoly bivariate_gcd(const TriPoly& a, const TriPoly& b, int main_var, int coeff_var) {
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  KPoly ua = to_univariate(a, main_var, coeff_var);
  KPoly ub = to_univariate(b, main_var, coeff_var);
  NfPoly cont = gcd(content_of(ua), content_of(ub));
  KPoly g = gcd(ua, ub);
  TriPoly prim = from_univariate(primitive_polynomial_coeffs(g), main_var, coeff_var);
  TriPoly c = from_univariate({cont}, main_var, coeff_var);
  return normalize_leading(prim * c);
}

NfPoly binary_dehomogenize(const TriPoly& form) {
  std::vector<NfElem> v;
  for (const auto& [m, c] : form.terms()) {
    if (m[2] != 0) throw Error(Errc::invalid_argument, "binary form contains x2");
    const auto j = static_cast<std::size_t>(m[1]);
    if (v.size() <= j) v.resize(j + 1, NfElem(0));
    v[j] += c;
  }
  return NfPoly(std::move(v));
}

TriPoly binary_homogenize(const NfPoly& p, int degree) {
  TriPoly r;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    r += TriPoly::monomial(p.coeffs()[j], {degree - static_cast<int>(j), static_cast<int>(j), 0});
  return r;
}

TriPoly binary_form_gcd(const std::vector<TriPoly>& forms) {
  NfPoly g;
  int val = -1;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    any = true;
    const int v = f.valuation_in(0);
    val = val < 0 ? v : std::min(val, v);
    g = gcd(g, binary_dehomogenize(f.shift_down(0, v)));
  }
  if (!any) return {};
  TriPoly h = binary_homogenize(g, g.degree());
  return normalize_leading(h * TriPoly::monomial(NfElem(1), {val, 0, 0}));
}

Mat3 mat3_identity() {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = NfElem(i == j ? 1 : 0);
  return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      NfElem s(0);
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

NfElem mat3_det(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 mat3_inverse(const Mat3& a) {
  const NfElem det = mat3_det(a);
  if (det.is_zero()) throw Error(Errc::invalid_argument, "singular 3x3 matrix");
  const NfElem inv = nf_inverse(det);
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of a[j][i]
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) * inv;
    }
  return r;
}

ProjPoint mat3_apply(const Mat3& a, const ProjPoint& p) {
  ProjPoint r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = a[i][0] * p[0] + a[i][1] * p[1] + a[i][2] * p[2];
  return r;
}

std::array<TriPoly, 3> mat3_forms(const Mat3& a) {
  std::array<TriPoly, 3> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i] += TriPoly::variable(static_cast<int>(j)) * a[i][j];
  return r;
}

bool same_projective_point(const ProjPoint& a, const ProjPoint& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  const bool az = a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
  const bool bz = b[0].is_zero() && b[1].is_zero() && b[2].is_zero();
  return !az && !bz;
}

}  // namespace gp

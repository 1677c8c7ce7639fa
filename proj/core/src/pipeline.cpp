#include "galoispoint/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "galoispoint/expr.hpp"

namespace gp {

namespace {

constexpr int kOrderBound = 12;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool known_key(const std::string& k) {
  static const char* keys[] = {"id", "curve", "point", "kummer", "q", "c", "zeta", "fiber", "field", "command", "origin"};
  if (k.rfind("expect.", 0) == 0) return k.size() > 7;
  return std::any_of(std::begin(keys), std::end(keys), [&](const char* s) { return k == s; });
}

// Splits on `sep` outside parentheses and brackets.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::invalid_argument, std::string(what) + " must be an integer, got '" + s + "'");
}

const std::string& require(const InputBlock& b, const char* key) {
  const std::string* v = b.get(key);
  if (!v) throw Error(Errc::invalid_argument, std::string("missing key '") + key + "'");
  return *v;
}

ProjPoint parse_point(const std::string& text, const FieldPtr& field) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto parts = split_top(s, ':');
  if (parts.size() != 3) throw Error(Errc::invalid_argument, "point must look like (a : b : c)");
  ProjPoint p;
  for (std::size_t i = 0; i < 3; ++i) p[i] = to_constant(parse_fraction(parts[i]), field);
  return p;
}

PlaneCurve parse_curve(const std::string& text, const FieldPtr& field) {
  const Fraction f = parse_fraction(text);
  const bool projective = f.uses('X') || f.uses('Y') || f.uses('Z');
  if (projective) return PlaneCurve::from_form(to_form(f, field));
  return PlaneCurve::from_affine(to_affine(f, field));
}

std::string point_string(const ProjPoint& p) {
  return "(" + p[0].to_string() + " : " + p[1].to_string() + " : " + p[2].to_string() + ")";
}

std::string status_for(Errc e) {
  switch (e) {
    case Errc::degree_out_of_scope:
      return "unsupported_degree";
    case Errc::no_moebius:
      return "inconclusive";
    default:
      return "error";
  }
}

std::optional<int> explicit_field(const InputBlock& b, const RunOptions& opts) {
  if (opts.field_order) return opts.field_order;
  if (const std::string* f = b.get("field")) return parse_int(*f, "field");
  return std::nullopt;
}

FieldPtr field_for_sqrt(const FiberPolynomial& h) {
  const RatFunc disc = discriminant(h.h);
  const NfElem lc = disc.num().leading();
  if (!lc.is_rational()) throw Error(Errc::field_too_small, "discriminant constant is irrational; pass --field");
  return make_cyclotomic(std::lcm(3, sqrt_conductor(lc.rational_value())));
}

void analyze_kummer(Analysis& a, Command cmd, const InputBlock& b, const std::optional<int>& fo) {
  const int n = parse_int(require(b, "kummer"), "kummer");
  if (n < 3) throw Error(Errc::invalid_argument, "kummer order must be at least 3");
  a.field = make_cyclotomic(fo.value_or(n));
  if (a.field->cyclotomic_order % n != 0)
    throw Error(Errc::field_too_small, "field " + a.field->label + " has no primitive " + std::to_string(n) +
                                           "-th root of unity");
  KummerPresentation kp;
  kp.n = n;
  kp.radicand = to_ratfunc(parse_fraction(require(b, "q")), a.field);
  for (const auto& s : split_top(require(b, "c"), ',')) kp.coeffs.push_back(to_ratfunc(parse_fraction(s), a.field));
  const std::string* zeta = b.get("zeta");
  kp.zeta = zeta ? to_constant(parse_fraction(*zeta), a.field) : root_of_unity(a.field, n);
  a.kummer = kp;

  std::string diag;
  a.fiber = kummer_minimal_polynomial(kp, &diag);
  if (!diag.empty()) a.diagnostics.push_back(diag);
  a.curve = curve_from_fiber(*a.fiber);
  a.pointed = normalize_chart(*a.curve, {NfElem(0), NfElem(0), NfElem(1)});
  a.diagnostics.push_back("irreducibility certificate: " + a.fiber->certificate);
  if (cmd == Command::build) return;

  if (a.fiber->degree() != n) {
    a.status = "inconclusive";
    return;
  }
  a.is_galois = true;
  a.group_order = n;
  a.sigma = kummer_automorphism(kp, *a.fiber);

  std::vector<RatFunc> tail(kp.coeffs.begin() + 1, kp.coeffs.end());
  if (geometric_check(tail) || n == 3) {
    try {
      a.closed_form = geometric_moebius(kp);
    } catch (const Error& e) {
      a.diagnostics.push_back(std::string("closed form unavailable: ") + e.what());
    }
  }
  try {
    const MoebiusRepresentation rep = moebius_representation(*a.sigma);
    a.moebius = rep.m;
    a.moebius_solution_dim = rep.solution_dimension;
  } catch (const Error& e) {
    if (e.code() != Errc::no_moebius) throw;
    a.status = "inconclusive";
    a.diagnostics.push_back(std::string("no Moebius representation found (not a disproof): ") + e.what());
    return;
  }
  if (a.closed_form)
    a.diagnostics.push_back(a.closed_form->composite == *a.moebius ? "closed form agrees with the linear solve"
                                                                   : "closed form DISAGREES with the linear solve");
}

void analyze_curve(Analysis& a, Command cmd, const InputBlock& b, const std::optional<int>& fo) {
  if (fo) a.field = make_cyclotomic(*fo);
  ProjPoint p{NfElem(0), NfElem(0), NfElem(1)};
  if (const std::string* fib = b.get("fiber")) {
    FiberPolynomial fp;
    const KPoly raw = to_kpoly(parse_fraction(*fib), a.field);
    if (raw.degree() < 1) throw Error(Errc::invalid_argument, "fiber polynomial must have positive degree in x");
    fp.h = make_monic(raw);
    fp.original_leading = raw.leading();
    a.curve = curve_from_fiber(fp);
  } else {
    a.curve = parse_curve(require(b, "curve"), a.field);
    p = parse_point(require(b, "point"), a.field);
  }
  a.pointed = normalize_chart(*a.curve, p);
  a.diagnostics.push_back("point " + point_string(p) + (a.pointed->multiplicity ? " is inner" : " is outer"));
  if (a.pointed->projection_degree() != 3) {
    if (cmd == Command::build) return;
    throw Error(Errc::degree_out_of_scope,
                "unsupported degree: projection degree " + std::to_string(a.pointed->projection_degree()) +
                    " needs Kummer data (automatic analysis covers degree 3)");
  }
  a.fiber = fiber_polynomial(*a.pointed);
  if (cmd == Command::build) return;

  a.is_galois = galois_test_cubic(*a.fiber);
  if (!*a.is_galois) {
    a.diagnostics.push_back("discriminant " + discriminant(a.fiber->h).to_string() + " is not a square in C(t)");
    return;
  }
  a.group_order = 3;
  if (!a.field) a.field = field_for_sqrt(*a.fiber);
  const NfElem omega = root_of_unity(a.field, 3);
  a.sigma = sigma_from_roots(*a.fiber, 1, a.field);
  try {
    a.kummer = resolvent_kummer_generator(*a.sigma, omega);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_resolvent) throw;
    a.sigma = sigma_from_roots(*a.fiber, -1, a.field);
    a.kummer = resolvent_kummer_generator(*a.sigma, omega);
  }
  const bool round_trip = kummer_minimal_polynomial(*a.kummer).h == a.fiber->h;
  a.diagnostics.push_back("kummer generator: q = " + a.kummer->radicand.to_string() +
                          (round_trip ? " (minimal polynomial reproduces the fiber)" : " (ROUND TRIP FAILED)"));
  const MoebiusRepresentation rep = moebius_representation(*a.sigma);
  a.moebius = rep.m;
  a.moebius_solution_dim = rep.solution_dimension;
  try {
    a.closed_form = geometric_moebius(*a.kummer);
    a.diagnostics.push_back(equal_up_to_generator_swap(a.closed_form->composite, *a.moebius)
                                ? "closed form agrees with the linear solve"
                                : "closed form DISAGREES with the linear solve");
  } catch (const Error& e) {
    a.diagnostics.push_back(std::string("closed form unavailable: ") + e.what());
  }
}

void extend(Analysis& a) {
  if (!a.moebius) throw Error(Errc::no_moebius, "extend needs a Moebius representation");
  a.lift = dejonquieres_lift(chart_transfer(*a.moebius));
  const Components comps = a.lift->components();
  a.birational = dj_verify_birational(*a.lift);
  a.lift_order = dj_order(*a.lift, kOrderBound);
  a.preserves_curve = pullback_divides(comps, a.pointed->chart_curve.form()).has_value();
  a.rho_trivial = rho_restriction_trivial(comps);
}

}  // namespace

const std::string* InputBlock::get(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::vector<InputBlock> parse_blocks(std::string_view text) {
  std::vector<InputBlock> out;
  InputBlock cur;
  auto flush = [&] {
    if (cur.entries.empty()) return;
    if (cur.id.empty()) cur.id = "block" + std::to_string(out.size() + 1);
    out.push_back(std::move(cur));
    cur = InputBlock{};
  };
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (trim(line).empty()) {
      flush();
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    std::size_t col = 0;
    for (const auto& piece : split_top(line, ';')) {
      const std::size_t at = line.find(piece, col);
      col = at == std::string_view::npos ? col : at + piece.size();
      if (piece.empty()) continue;
      const auto eq = piece.find('=');
      if (eq == std::string::npos) {
        if (cur.entries.empty()) throw ParseError(line_no, static_cast<int>(at) + 1, "expected key = value");
        cur.entries.back().second += " " + piece;
        continue;
      }
      std::string key = trim(std::string_view(piece).substr(0, eq));
      std::string value = trim(std::string_view(piece).substr(eq + 1));
      if (!known_key(key)) throw ParseError(line_no, static_cast<int>(at) + 1, "unknown key '" + key + "'");
      if (cur.entries.empty()) cur.line = line_no;
      if (key == "id") cur.id = value;
      cur.entries.emplace_back(std::move(key), std::move(value));
    }
  }
  flush();
  return out;
}

const char* command_name(Command c) noexcept {
  switch (c) {
    case Command::build:
      return "build";
    case Command::analyze:
      return "analyze";
    case Command::extend:
      return "extend";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  if (name == "build") return Command::build;
  if (name == "analyze") return Command::analyze;
  if (name == "extend") return Command::extend;
  return std::nullopt;
}

Analysis run(Command cmd, const InputBlock& block, const RunOptions& opts) {
  Analysis a;
  a.id = block.id;
  try {
    const auto fo = explicit_field(block, opts);
    if (block.get("kummer"))
      analyze_kummer(a, cmd, block, fo);
    else
      analyze_curve(a, cmd, block, fo);
    if (cmd == Command::extend && a.status == "ok" && a.is_galois.value_or(false)) extend(a);
    if (cmd == Command::extend && a.status == "ok" && !a.is_galois.value_or(false))
      a.diagnostics.push_back("not Galois: nothing to extend");
  } catch (const Error& e) {
    a.status = status_for(e.code());
    a.diagnostics.push_back(std::string(errc_name(e.code())) + ": " + e.what());
  }
  return a;
}

namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json moebius_entries(const Moebius& m) {
  Json e = Json::array();
  for (const auto& x : m.entries()) e.push_back(x.to_string());
  return e;
}

Json to_json(const Analysis& a) {
  Json j;
  j["id"] = a.id;
  j["status"] = a.status;
  j["degree"] = a.curve ? Json(a.curve->degree()) : Json(nullptr);
  j["multiplicity"] = a.pointed ? Json(a.pointed->multiplicity) : Json(nullptr);
  j["projection_degree"] = a.pointed ? Json(a.pointed->projection_degree()) : Json(nullptr);
  j["is_galois"] = opt(a.is_galois);
  j["group_order"] = opt(a.group_order);
  j["sigma_rep"] = a.sigma ? Json(to_string(a.sigma->image.rep(), "x")) : Json(nullptr);
  if (a.moebius) {
    Json m;
    m["entries"] = moebius_entries(*a.moebius);
    m["solution_dimension"] = a.moebius_solution_dim;
    if (a.closed_form) {
      m["closed_form_factor"] = moebius_entries(a.closed_form->factor);
      m["closed_form_composite"] = moebius_entries(a.closed_form->composite);
    }
    j["moebius"] = m;
  } else {
    j["moebius"] = nullptr;
  }
  if (a.lift) {
    Json d;
    Json comps = Json::array();
    for (const auto& c : a.lift->components()) comps.push_back(c.to_string(kProjectiveNames));
    d["components"] = comps;
    d["degree"] = a.lift->degree();
    d["birational"] = opt(a.birational);
    d["order"] = opt(a.lift_order);
    d["preserves_curve"] = opt(a.preserves_curve);
    d["rho_trivial"] = opt(a.rho_trivial);
    j["dejonquieres"] = d;
  } else {
    j["dejonquieres"] = nullptr;
  }
  j["diagnostics"] = a.diagnostics;
  j["curve"] = a.curve ? Json(a.curve->form().to_string(kProjectiveNames)) : Json(nullptr);
  j["fiber"] = a.fiber ? Json(to_string(a.fiber->h, "x")) : Json(nullptr);
  j["irreducibility"] = a.curve ? Json(irreducibility_name(a.curve->irreducibility())) : Json(nullptr);
  return j;
}

}  // namespace

std::string report_json(const Analysis& a, int indent) { return to_json(a).dump(indent); }

std::string report_text(const Analysis& a) {
  std::ostringstream os;
  os << "id: " << a.id << "\nstatus: " << a.status << "\n";
  if (a.curve) {
    os << "curve: " << a.curve->form().to_string(kProjectiveNames) << " = 0\n";
    os << "affine: " << a.curve->affine().to_string(kAffineNames) << " = 0\n";
    os << "degree: " << a.curve->degree() << "  irreducibility: " << irreducibility_name(a.curve->irreducibility())
       << "\n";
  }
  if (a.pointed)
    os << "multiplicity: " << a.pointed->multiplicity << "  projection degree: " << a.pointed->projection_degree()
       << "\n";
  if (a.field) os << "field: " << a.field->label << "\n";
  if (a.fiber) os << "fiber: " << to_string(a.fiber->h, "x") << "\n";
  if (a.is_galois) os << "galois: " << (*a.is_galois ? "yes" : "no") << "\n";
  if (a.group_order) os << "group order: " << *a.group_order << "\n";
  if (a.sigma) os << "sigma(x) = " << to_string(a.sigma->image.rep(), "x") << "\n";
  if (a.moebius) os << "moebius: " << a.moebius->to_string() << "\n";
  if (a.closed_form) os << "closed-form factor: " << a.closed_form->factor.to_string() << "\n";
  if (a.lift) {
    os << "de Jonquieres: " << to_string(a.lift->components()) << "\n";
    os << "  degree " << a.lift->degree() << ", birational " << (a.birational.value_or(false) ? "yes" : "no")
       << ", order " << (a.lift_order ? std::to_string(*a.lift_order) : std::string("none")) << ", preserves curve "
       << (a.preserves_curve.value_or(false) ? "yes" : "no") << ", fibration preserved "
       << (a.rho_trivial.value_or(false) ? "yes" : "no") << "\n";
  }
  for (const auto& d : a.diagnostics) os << "note: " << d << "\n";
  return os.str();
}

Moebius parse_moebius(std::string_view text, const FieldPtr& field) {
  std::string flat;
  for (char ch : text)
    if (ch != '[' && ch != ']') flat += ch;
  auto parts = split_top(flat, ',');
  if (parts.size() != 4) throw Error(Errc::invalid_argument, "matrix must look like [[a, b], [c, d]]");
  std::array<RatFunc, 4> e;
  for (std::size_t i = 0; i < 4; ++i) e[i] = to_ratfunc(parse_fraction(parts[i]), field);
  return Moebius::make(e[0], e[1], e[2], e[3]);
}

namespace {

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }
std::string show(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "none"; }

std::optional<int> expect_int(const std::string& s) {
  if (s == "none") return std::nullopt;
  return parse_int(s, "expected value");
}

std::optional<bool> expect_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (s == "none") return std::nullopt;
  throw Error(Errc::invalid_argument, "expected true, false or none, got '" + s + "'");
}

// Empty string on success, otherwise a diff line.
std::string check(const Analysis& a, const std::string& key, const std::string& want) {
  auto diff = [&](const std::string& got) { return key + ": expected " + want + ", got " + got; };
  auto cmp_int = [&](const std::optional<int>& got) {
    return expect_int(want) == got ? std::string() : diff(show(got));
  };
  auto cmp_bool = [&](const std::optional<bool>& got) {
    return expect_bool(want) == got ? std::string() : diff(show(got));
  };
  std::optional<int> none;
  if (key == "status") return want == a.status ? "" : diff(a.status);
  if (key == "degree") return cmp_int(a.curve ? std::optional<int>(a.curve->degree()) : none);
  if (key == "multiplicity") return cmp_int(a.pointed ? std::optional<int>(a.pointed->multiplicity) : none);
  if (key == "projection_degree")
    return cmp_int(a.pointed ? std::optional<int>(a.pointed->projection_degree()) : none);
  if (key == "is_galois") return cmp_bool(a.is_galois);
  if (key == "group_order") return cmp_int(a.group_order);
  if (key == "order") return cmp_int(a.lift_order);
  if (key == "birational") return cmp_bool(a.birational);
  if (key == "preserves_curve") return cmp_bool(a.preserves_curve);
  if (key == "rho_trivial") return cmp_bool(a.rho_trivial);
  if (key == "solution_dimension")
    return cmp_int(a.moebius ? std::optional<int>(a.moebius_solution_dim) : none);
  if (key == "irreducibility")
    return a.curve && want == irreducibility_name(a.curve->irreducibility()) ? "" : diff("other");
  if (key == "diagnostic") {
    for (const auto& d : a.diagnostics)
      if (d.find(want) != std::string::npos) return "";
    return diff("no matching diagnostic");
  }
  if (key == "curve") {
    if (!a.curve) return diff("none");
    const Fraction f = parse_fraction(want);
    const bool projective = f.uses('X') || f.uses('Y') || f.uses('Z');
    const bool same = projective ? proportional(to_form(f, a.field), a.curve->form())
                                 : proportional(to_affine(f, a.field), a.curve->affine());
    return same ? "" : diff(projective ? a.curve->form().to_string(kProjectiveNames)
                                       : a.curve->affine().to_string(kAffineNames));
  }
  if (key == "fiber") {
    if (!a.fiber) return diff("none");
    return to_kpoly(parse_fraction(want), a.field) == a.fiber->h ? "" : diff(to_string(a.fiber->h, "x"));
  }
  if (key == "moebius") {
    if (!a.moebius) return diff("none");
    return equal_up_to_generator_swap(*a.moebius, parse_moebius(want, a.field)) ? "" : diff(a.moebius->to_string());
  }
  if (key == "factor") {
    if (!a.closed_form) return diff("none");
    return a.closed_form->factor == parse_moebius(want, a.field) ? "" : diff(a.closed_form->factor.to_string());
  }
  if (key == "kummer_q") {
    if (!a.kummer) return diff("none");
    return to_ratfunc(parse_fraction(want), a.field) == a.kummer->radicand ? ""
                                                                           : diff(a.kummer->radicand.to_string());
  }
  return key + ": unknown expectation";
}

}  // namespace

std::vector<CorpusResult> run_corpus(std::string_view text, const std::optional<std::string>& entry,
                                     const RunOptions& opts) {
  std::vector<CorpusResult> out;
  for (const auto& block : parse_blocks(text)) {
    if (entry && block.id != *entry) continue;
    CorpusResult r;
    r.id = block.id;
    Command cmd = Command::extend;
    if (const std::string* c = block.get("command")) {
      auto parsed = parse_command(*c);
      if (!parsed) {
        r.pass = false;
        r.failures.push_back("unknown command '" + *c + "'");
        out.push_back(std::move(r));
        continue;
      }
      cmd = *parsed;
    }
    const Analysis a = run(cmd, block, opts);
    for (const auto& [k, v] : block.entries) {
      if (k.rfind("expect.", 0) != 0) continue;
      std::string msg;
      try {
        msg = check(a, k.substr(7), v);
      } catch (const Error& e) {
        msg = k.substr(7) + ": " + e.what();
      }
      if (!msg.empty()) {
        r.pass = false;
        r.failures.push_back(msg);
      }
    }
    if (a.status == "error" && !block.get("expect.status")) {
      r.pass = false;
      for (const auto& d : a.diagnostics) r.failures.push_back(d);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gp

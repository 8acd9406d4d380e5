#include "mck/specfield.hpp"

#include <stdexcept>

namespace mck {

RationalExpr SpecField::apply(const RationalExpr& e) const {
  RationalExpr r = e;
  for (int v = 0; v < kNumVars; ++v)
    if (square[v] && r.vars_used() & (1u << v))
      r = r.fold_even(v, *square[v]);
  for (int v = 0; v < kNumVars; ++v)
    if (atom[v] && r.vars_used() & (1u << v)) r = r.subst_mono(v, *atom[v]);
  return r;
}

Rational SpecField::apply_to_rational(const RationalExpr& e) const {
  RationalExpr r = apply(e);
  if (!r.is_rational())
    throw std::domain_error("SpecField: expression did not specialize to a rational");
  return r.to_rational();
}

bool SpecField::is_generic() const {
  for (int v = 0; v < kNumVars; ++v)
    if (atom[v] || square[v]) return false;
  return true;
}

SpecField SpecField::generic() { return SpecField{}; }

SpecField SpecField::schur_c() {
  SpecField s;
  s.name = "schur-c";
  s.atom[VA] = Mono::var(VU);
  s.atom[VC] = Mono::var(VU, 2);
  s.atom[VQ] = Mono::var(VU, 2);
  s.atom[VT] = Mono::var(VU, 2);
  s.atom[VB] = -Mono::var(VU);
  s.atom[VD] = -Mono::var(VU, 2);
  return s;
}

SpecField SpecField::schur_d() {
  SpecField s;
  s.name = "schur-d";
  s.atom[VA] = Mono::constant(Rational(1));
  s.atom[VB] = Mono::constant(Rational(-1));
  s.atom[VC] = Mono::var(VU);
  s.atom[VD] = -Mono::var(VU);
  s.atom[VQ] = Mono::var(VU, 2);
  s.atom[VT] = Mono::var(VU, 2);
  return s;
}

SpecField SpecField::hl_c() {
  SpecField s;
  s.name = "hl-c";
  s.atom[VA] = Mono::var(VU);
  s.atom[VB] = -Mono::var(VU);
  s.atom[VC] = Mono::constant(Rational(0));
  s.atom[VD] = Mono::constant(Rational(0));
  s.atom[VQ] = Mono::constant(Rational(0));
  s.atom[VT] = Mono::var(VU, 2);
  return s;
}

SpecField SpecField::hl_d() {
  SpecField s;
  s.name = "hl-d";
  s.atom[VA] = Mono::constant(Rational(1));
  s.atom[VB] = Mono::constant(Rational(-1));
  s.atom[VC] = Mono::constant(Rational(0));
  s.atom[VD] = Mono::constant(Rational(0));
  s.atom[VQ] = Mono::constant(Rational(0));
  return s;
}

SpecField SpecField::dn() {
  SpecField s;
  s.name = "dn";
  s.atom[VA] = Mono::constant(Rational(1));
  s.atom[VB] = Mono::constant(Rational(-1));
  s.atom[VC] = Mono::var(VU);
  s.atom[VD] = -Mono::var(VU);
  s.atom[VQ] = Mono::var(VU, 2);
  return s;
}

SpecField SpecField::cnb(const MultiPoly& b_expr) {
  SpecField s;
  s.name = "cnb";
  s.square[VA] = b_expr;
  s.square[VC] = MultiPoly::var(VQ) * b_expr;
  return s;
}

namespace {

MultiPoly parse_mono_expr(const std::string& text) {
  // coefficient [* var [^ k]] with vars in the parameter alphabet.
  std::string coef_part = text, var_part;
  auto star = text.find('*');
  if (star != std::string::npos) {
    coef_part = text.substr(0, star);
    var_part = text.substr(star + 1);
  } else if (!text.empty() && !isdigit(text[0]) && text[0] != '-') {
    coef_part = "1";
    var_part = text;
  }
  Rational coef = Rational::parse(coef_part);
  if (var_part.empty()) return MultiPoly(coef);
  int power = 1;
  auto caret = var_part.find('^');
  std::string vname = var_part;
  if (caret != std::string::npos) {
    vname = var_part.substr(0, caret);
    power = std::stoi(var_part.substr(caret + 1));
  }
  return MultiPoly(Mono(coef, ExpVec::unit(var_from_name(vname), power)));
}

}  // namespace

SpecField SpecField::parse(const std::string& s) {
  if (s.empty() || s == "generic") return generic();
  if (s == "schur-c") return schur_c();
  if (s == "schur-d") return schur_d();
  if (s == "hl-c") return hl_c();
  if (s == "hl-d") return hl_d();
  if (s == "dn") return dn();
  if (s.rfind("cnb:", 0) == 0) {
    SpecField r = cnb(parse_mono_expr(s.substr(4)));
    r.name = s;
    return r;
  }
  throw std::invalid_argument("unknown spec '" + s + "'");
}

RationalExpr fold_u_squared(const RationalExpr& e, int target_var) {
  if (!(e.vars_used() & (1u << VU))) return e;
  try {
    return e.fold_even(VU, MultiPoly::var(target_var));
  } catch (const std::invalid_argument&) {
    return e;
  }
}

int fold_target(const SpecField& spec) {
  if (spec.name == "schur-c" || spec.name == "schur-d" ||
      spec.name == "hl-c" || spec.name == "hl-d")
    return VT;
  if (spec.name == "dn") return VQ;
  return -1;
}

RationalExpr fold_for_spec(const RationalExpr& e, const SpecField& spec) {
  const int target = fold_target(spec);
  return target < 0 ? e : fold_u_squared(e, target);
}

}  // namespace mck

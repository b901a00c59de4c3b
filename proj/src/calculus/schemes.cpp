#include <map>
#include <mutex>
#include <string>

#include "betlogic/builders.hpp"
#include "betlogic/calculus.hpp"
#include "betlogic/error.hpp"
#include "betlogic/syntax.hpp"

namespace betlogic {

namespace {

const char* kClassical[] = {
    "phi -> (psi -> phi)",
    "(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))",
    "(~phi -> ~psi) -> (psi -> phi)",
    "phi & psi -> phi",
    "phi & psi -> psi",
    "phi -> (psi -> phi & psi)",
    "true",
};

const char* text_of(SchemeKind k) {
  switch (k) {
    case SchemeKind::KS5_K: return "K (phi -> psi) -> (K phi -> K psi)";
    case SchemeKind::KS5_T: return "K phi -> phi";
    case SchemeKind::KS5_4: return "K phi -> K K phi";
    case SchemeKind::KS5_5: return "~K phi -> K ~K phi";
    case SchemeKind::BF: return "~B false";
    case SchemeKind::N: return "B true";
    case SchemeKind::Ap: return "B phi -> K B phi";
    case SchemeKind::An: return "~B phi -> K ~B phi";
    default: return nullptr;
  }
}

bool match_into(const FormulaKB& t, const FormulaKB& f, Substitution& s) {
  if (t.kind() == KBKind::Atom) {
    auto [it, fresh] = s.emplace(t.name(), f);
    return fresh || it->second == f;
  }
  if (t.kind() != f.kind()) return false;
  switch (t.kind()) {
    case KBKind::Top: return true;
    case KBKind::And: return match_into(t.child(), f.child(), s) && match_into(t.right(), f.right(), s);
    default: return match_into(t.child(), f.child(), s);
  }
}

}  // namespace

std::string scheme_name(const SchemeId& s) {
  switch (s.kind) {
    case SchemeKind::CL:
      if (s.param == 0) return "CL";
      return s.param == 7 ? "TOP" : "A" + std::to_string(s.param);
    case SchemeKind::KS5_K: return "K";
    case SchemeKind::KS5_T: return "T";
    case SchemeKind::KS5_4: return "4";
    case SchemeKind::KS5_5: return "5";
    case SchemeKind::BF: return "BF";
    case SchemeKind::N: return "N";
    case SchemeKind::Ap: return "Ap";
    case SchemeKind::An: return "An";
    case SchemeKind::KBM: return "KBM";
    case SchemeKind::D: return "D";
    case SchemeKind::SC: return "SC";
    case SchemeKind::Scott: return "Scott" + std::to_string(s.param);
  }
  return "?";
}

SchemeId parse_scheme_name(std::string_view name) {
  static const std::pair<const char*, SchemeId> table[] = {
      {"CL", {SchemeKind::CL, 0}},    {"A1", {SchemeKind::CL, 1}},   {"A2", {SchemeKind::CL, 2}},
      {"A3", {SchemeKind::CL, 3}},    {"A4", {SchemeKind::CL, 4}},   {"A5", {SchemeKind::CL, 5}},
      {"A6", {SchemeKind::CL, 6}},    {"TOP", {SchemeKind::CL, 7}},  {"K", {SchemeKind::KS5_K, 0}},
      {"T", {SchemeKind::KS5_T, 0}},  {"4", {SchemeKind::KS5_4, 0}}, {"5", {SchemeKind::KS5_5, 0}},
      {"BF", {SchemeKind::BF, 0}},    {"N", {SchemeKind::N, 0}},     {"Ap", {SchemeKind::Ap, 0}},
      {"An", {SchemeKind::An, 0}},    {"KBM", {SchemeKind::KBM, 0}}, {"D", {SchemeKind::D, 0}},
      {"SC", {SchemeKind::SC, 0}},
  };
  for (const auto& [n, id] : table) {
    if (name == n) return id;
  }
  if (name.size() > 5 && name.substr(0, 5) == "Scott") {
    int m = 0;
    for (char ch : name.substr(5)) {
      if (ch < '0' || ch > '9' || m > 1000) throw SyntaxError(5, {"scott arity"}, std::string(name));
      m = m * 10 + (ch - '0');
    }
    if (m >= 1) return {SchemeKind::Scott, m};
  }
  throw SyntaxError(0, {"scheme name"}, std::string(name));
}

FormulaKB scheme_template(const SchemeId& s) {
  const FormulaKB phi = atom("phi"), psi = atom("psi");
  switch (s.kind) {
    case SchemeKind::CL:
      if (s.param < 1 || s.param > 7) throw Error(ErrorCode::InvalidModel, "no template for CL member " + std::to_string(s.param));
      return parse_kb(kClassical[s.param - 1]);
    case SchemeKind::KBM: return kbm_instance(phi, psi);
    case SchemeKind::D: return d_instance(phi);
    case SchemeKind::SC: return sc_instance(phi, psi);
    case SchemeKind::Scott: {
      std::vector<FormulaKB> phis, psis;
      for (int i = 1; i <= s.param; ++i) {
        phis.push_back(atom("phi" + std::to_string(i)));
        psis.push_back(atom("psi" + std::to_string(i)));
      }
      return scott_instance(phis, psis);
    }
    default: return parse_kb(text_of(s.kind));
  }
}

FormulaKB substitute(const FormulaKB& f, const Substitution& s) {
  switch (f.kind()) {
    case KBKind::Top: return f;
    case KBKind::Atom: {
      auto it = s.find(f.name());
      return it == s.end() ? f : it->second;
    }
    case KBKind::Not: return neg(substitute(f.child(), s));
    case KBKind::And: return conj(substitute(f.child(), s), substitute(f.right(), s));
    case KBKind::Know: return know(substitute(f.child(), s));
    case KBKind::Believe: return believe(substitute(f.child(), s));
  }
  return f;
}

namespace {

const FormulaKB& cached_template(const SchemeId& s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FormulaKB> cache;
  const std::lock_guard lock(mu);
  const std::pair key{static_cast<int>(s.kind), s.param};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, scheme_template(s)).first;
  return it->second;
}

}  // namespace

std::optional<Substitution> match_axiom(const FormulaKB& f, const SchemeId& s) {
  if (s.kind == SchemeKind::CL && s.param == 0) {
    for (int i = 1; i <= 7; ++i) {
      if (auto m = match_axiom(f, {SchemeKind::CL, i})) return m;
    }
    return std::nullopt;
  }
  if (s.kind == SchemeKind::Scott && s.param > kDefaultExpansionGuard) {
    throw Error(ErrorCode::ExpansionTooLarge,
                "Scott arity " + std::to_string(s.param) + " exceeds " + std::to_string(kDefaultExpansionGuard));
  }
  const FormulaKB t = cached_template(s);
  Substitution sub;
  if (!match_into(t, f, sub)) return std::nullopt;
  if (substitute(t, sub) != f) throw std::logic_error("axiom match does not reproduce the formula");
  return sub;
}

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::KB: return "kb";
    case Theory::KBHalf: return "kb-half";
    case Theory::KBHalfMinus: return "kb-half-minus";
  }
  return "?";
}

Theory parse_theory(std::string_view name) {
  if (name == "kb") return Theory::KB;
  if (name == "kb-half") return Theory::KBHalf;
  if (name == "kb-half-minus") return Theory::KBHalfMinus;
  throw SyntaxError(0, {"'kb'", "'kb-half'", "'kb-half-minus'"}, std::string(name));
}

bool scheme_in_theory(const SchemeId& s, Theory t) {
  switch (s.kind) {
    case SchemeKind::CL:
    case SchemeKind::KS5_K:
    case SchemeKind::KS5_T:
    case SchemeKind::KS5_4:
    case SchemeKind::KS5_5:
    case SchemeKind::N:
    case SchemeKind::Ap:
    case SchemeKind::An: return true;
    case SchemeKind::BF:
    case SchemeKind::KBM: return t != Theory::KBHalfMinus;
    case SchemeKind::D:
    case SchemeKind::SC:
    case SchemeKind::Scott: return t != Theory::KB;
  }
  return false;
}

}  // namespace betlogic

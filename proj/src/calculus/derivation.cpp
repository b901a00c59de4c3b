#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "betlogic/calculus.hpp"
#include "betlogic/error.hpp"
#include "betlogic/syntax.hpp"

namespace betlogic {

namespace {

struct FormulaHash {
  std::size_t operator()(const FormulaKB& f) const { return f.hash(); }
};

void collect_leaves(const FormulaKB& f, std::vector<FormulaKB>& out,
                    std::unordered_map<FormulaKB, int, FormulaHash>& index) {
  switch (f.kind()) {
    case KBKind::Top: return;
    case KBKind::Not: collect_leaves(f.child(), out, index); return;
    case KBKind::And:
      collect_leaves(f.child(), out, index);
      collect_leaves(f.right(), out, index);
      return;
    default:
      if (index.emplace(f, static_cast<int>(out.size())).second) out.push_back(f);
  }
}

bool truth(const FormulaKB& f, const std::unordered_map<FormulaKB, int, FormulaHash>& index,
           unsigned long long v) {
  switch (f.kind()) {
    case KBKind::Top: return true;
    case KBKind::Not: return !truth(f.child(), index, v);
    case KBKind::And: return truth(f.child(), index, v) && truth(f.right(), index, v);
    default: return (v >> index.at(f)) & 1ULL;
  }
}

CheckResult reject(int line, std::string reason) { return {false, line, std::move(reason)}; }

}  // namespace

bool is_tautology(const FormulaKB& f, int leaf_budget) {
  std::vector<FormulaKB> leaves;
  std::unordered_map<FormulaKB, int, FormulaHash> index;
  collect_leaves(f, leaves, index);
  if (static_cast<int>(leaves.size()) > leaf_budget) {
    throw Error(ErrorCode::BoundTooLarge, "tautology check over " + std::to_string(leaves.size()) +
                                              " leaves exceeds budget " + std::to_string(leaf_budget));
  }
  for (unsigned long long v = 0; v < (1ULL << leaves.size()); ++v) {
    if (!truth(f, index, v)) return false;
  }
  return true;
}

CheckResult check_derivation(const Derivation& d, Theory theory, const CheckOptions& options) {
  if (d.lines.empty()) return reject(0, "empty derivation");
  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const int n = static_cast<int>(k) + 1;
    const auto& line = d.lines[k];
    const auto& j = line.just;
    auto earlier = [&](int i) { return i >= 1 && i < n; };
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        if (!scheme_in_theory(j.scheme, theory)) {
          return reject(n, "scheme " + scheme_name(j.scheme) + " is not part of " + theory_name(theory));
        }
        std::optional<Substitution> m;
        try {
          m = match_axiom(line.formula, j.scheme);
        } catch (const Error& e) {
          return reject(n, e.what());
        }
        if (!m) return reject(n, "not an instance of " + scheme_name(j.scheme));
        for (const auto& [var, value] : j.subst) {
          auto it = m->find(var);
          if (it == m->end()) return reject(n, "substitution names unknown metavariable " + var);
          if (it->second != value) return reject(n, "substitution for " + var + " disagrees with the formula");
        }
        break;
      }
      case Justification::Kind::MP: {
        if (!earlier(j.i) || !earlier(j.j)) return reject(n, "MP cites a line that is not earlier");
        const FormulaKB expected = implies(d.lines[j.i - 1].formula, line.formula);
        if (d.lines[j.j - 1].formula != expected) {
          return reject(n, "line " + std::to_string(j.j) + " is not line " + std::to_string(j.i) +
                               " -> this formula");
        }
        break;
      }
      case Justification::Kind::MN:
        if (!earlier(j.i)) return reject(n, "MN cites a line that is not earlier");
        if (line.formula != know(d.lines[j.i - 1].formula)) {
          return reject(n, "formula is not K of line " + std::to_string(j.i));
        }
        break;
      case Justification::Kind::Taut:
        if (!options.allow_tautology) return reject(n, "tautology oracle is disabled");
        try {
          if (!is_tautology(line.formula, options.tautology_leaf_budget)) return reject(n, "not a tautology");
        } catch (const Error& e) {
          return reject(n, e.what());
        }
        break;
    }
  }
  return {true, 0, ""};
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void line_error(int lineno, const std::string& what) {
  throw SyntaxError(0, {what}, "line " + std::to_string(lineno));
}

int parse_index(const std::string& tok, int lineno) {
  if (tok.empty()) line_error(lineno, "line number");
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) line_error(lineno, "line number");
  }
  if (tok.size() > 9) line_error(lineno, "line number");
  return std::stoi(tok);
}

// Shares equal subformulas between lines so that the checker's equality
// tests mostly stop at pointer comparison.
class Interner {
 public:
  FormulaKB operator()(const FormulaKB& f) {
    FormulaKB g;
    switch (f.kind()) {
      case KBKind::Top:
      case KBKind::Atom: g = f; break;
      case KBKind::Not: g = FormulaKB::negation((*this)(f.child())); break;
      case KBKind::And: g = FormulaKB::conjunction((*this)(f.child()), (*this)(f.right())); break;
      case KBKind::Know: g = FormulaKB::know((*this)(f.child())); break;
      case KBKind::Believe: g = FormulaKB::believe((*this)(f.child())); break;
    }
    return *seen_.insert(g).first;
  }

 private:
  std::unordered_set<FormulaKB, FormulaHash> seen_;
};

FormulaKB parse_at(const std::string& text, int lineno, Interner& intern) {
  try {
    return intern(parse_kb(text));
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.offset(), e.expected(), "line " + std::to_string(lineno) + ": " + text);
  }
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Derivation d;
  Interner intern;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto dot = line.find('.');
    if (dot == std::string::npos) line_error(lineno, "'n.'");
    const int n = parse_index(trim(std::string_view(line).substr(0, dot)), lineno);
    if (n != static_cast<int>(d.lines.size()) + 1) line_error(lineno, "line number " + std::to_string(d.lines.size() + 1));
    const auto semi = line.find(';', dot);
    if (semi == std::string::npos) line_error(lineno, "';'");
    DerivationLine dl;
    dl.formula = parse_at(trim(std::string_view(line).substr(dot + 1, semi - dot - 1)), lineno, intern);
    std::istringstream rest(line.substr(semi + 1));
    std::string rule;
    rest >> rule;
    if (rule == "AX") {
      std::string name;
      rest >> name;
      if (name.empty()) line_error(lineno, "scheme name");
      dl.just.kind = Justification::Kind::Axiom;
      try {
        dl.just.scheme = parse_scheme_name(name);
      } catch (const SyntaxError&) {
        line_error(lineno, "scheme name");
      }
      std::string tail;
      std::getline(rest, tail);
      tail = trim(tail);
      if (!tail.empty()) {
        if (tail.front() != '{' || tail.back() != '}') line_error(lineno, "'{'");
        std::string body = tail.substr(1, tail.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
          auto comma = body.find(',', pos);
          if (comma == std::string::npos) comma = body.size();
          const std::string item = trim(std::string_view(body).substr(pos, comma - pos));
          pos = comma + 1;
          if (item.empty()) {
            if (comma == body.size()) break;
            line_error(lineno, "substitution");
          }
          const auto assign = item.find(":=");
          if (assign == std::string::npos) line_error(lineno, "':='");
          dl.just.subst[trim(std::string_view(item).substr(0, assign))] =
              parse_at(trim(std::string_view(item).substr(assign + 2)), lineno, intern);
        }
      }
    } else if (rule == "MP") {
      std::string a, b, extra;
      rest >> a >> b >> extra;
      if (!extra.empty()) line_error(lineno, "end of line");
      dl.just.kind = Justification::Kind::MP;
      dl.just.i = parse_index(a, lineno);
      dl.just.j = parse_index(b, lineno);
    } else if (rule == "MN") {
      std::string a, extra;
      rest >> a >> extra;
      if (!extra.empty()) line_error(lineno, "end of line");
      dl.just.kind = Justification::Kind::MN;
      dl.just.i = parse_index(a, lineno);
    } else if (rule == "TAUT") {
      std::string extra;
      rest >> extra;
      if (!extra.empty()) line_error(lineno, "end of line");
      dl.just.kind = Justification::Kind::Taut;
    } else {
      line_error(lineno, "'AX', 'MP', 'MN' or 'TAUT'");
    }
    d.lines.push_back(std::move(dl));
  }
  return d;
}

std::string format_derivation(const Derivation& d) {
  std::ostringstream out;
  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const auto& l = d.lines[k];
    out << (k + 1) << ". " << to_string(l.formula) << " ; ";
    switch (l.just.kind) {
      case Justification::Kind::Axiom: {
        out << "AX " << scheme_name(l.just.scheme);
        if (!l.just.subst.empty()) {
          out << " {";
          bool first = true;
          for (const auto& [var, value] : l.just.subst) {
            out << (first ? "" : ", ") << var << ":=" << to_string(value);
            first = false;
          }
          out << "}";
        }
        break;
      }
      case Justification::Kind::MP: out << "MP " << l.just.i << " " << l.just.j; break;
      case Justification::Kind::MN: out << "MN " << l.just.i; break;
      case Justification::Kind::Taut: out << "TAUT"; break;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace betlogic

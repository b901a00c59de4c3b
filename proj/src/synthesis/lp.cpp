#include "betlogic/lp.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "betlogic/error.hpp"

namespace betlogic {

namespace {

std::map<std::string, Rational> negate(std::map<std::string, Rational> c) {
  for (auto& [k, v] : c) v = -v;
  return c;
}

}  // namespace

LinearConstraint LinearConstraint::geq(std::map<std::string, Rational> c, Rational b) {
  return {std::move(c), Relation::Geq, std::move(b)};
}
LinearConstraint LinearConstraint::gt(std::map<std::string, Rational> c, Rational b) {
  return {std::move(c), Relation::Gt, std::move(b)};
}
LinearConstraint LinearConstraint::eq(std::map<std::string, Rational> c, Rational b) {
  return {std::move(c), Relation::Eq, std::move(b)};
}
LinearConstraint LinearConstraint::leq(std::map<std::string, Rational> c, Rational b) {
  return {negate(std::move(c)), Relation::Geq, -b};
}
LinearConstraint LinearConstraint::lt(std::map<std::string, Rational> c, Rational b) {
  return {negate(std::move(c)), Relation::Gt, -b};
}

bool LinearConstraint::satisfied_by(const std::map<std::string, Rational>& values) const {
  Rational lhs;
  for (const auto& [k, v] : coefficients) {
    auto it = values.find(k);
    if (it != values.end()) lhs += v * it->second;
  }
  switch (relation) {
    case Relation::Geq: return lhs >= bound;
    case Relation::Gt: return lhs > bound;
    case Relation::Eq: return lhs == bound;
  }
  return false;
}

namespace {

// Dense tableau over exact rationals. Columns are nonnegative variables;
// rows are equalities with nonnegative right-hand sides (stored in the last
// column).
class Tableau {
 public:
  Tableau(std::vector<std::vector<mpq_class>> rows, std::vector<int> basis, int columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), n_(columns) {}

  // Maximizes sum_j cost[j] * y_j over the current feasible basis; columns
  // flagged in `frozen` never enter. Returns the optimum.
  mpq_class maximize(const std::vector<mpq_class>& cost, const std::vector<bool>& frozen) {
    obj_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) obj_[j] = -cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const mpq_class f = obj_[basis_[i]];
      if (f != 0) axpy(obj_, rows_[i], f);
    }
    while (true) {
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (!frozen[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return obj_[n_];
      int leave = -1;
      mpq_class best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        mpq_class ratio = rows_[i][n_] / rows_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("unbounded linear program");
      pivot(leave, enter);
    }
  }

  // Pivots basic columns flagged in `artificial` out of the basis where
  // possible; rows that cannot be fixed are redundant and dropped.
  void expel(const std::vector<bool>& artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!artificial[basis_[i]]) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < n_; ++j) {
        if (!artificial[j] && rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < 0) {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
        continue;
      }
      pivot(static_cast<int>(i), col);
      ++i;
    }
  }

  std::vector<mpq_class> solution() const {
    std::vector<mpq_class> y(n_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rows_[i][n_];
    return y;
  }

 private:
  static void axpy(std::vector<mpq_class>& target, const std::vector<mpq_class>& row, const mpq_class& f) {
    for (std::size_t k = 0; k < target.size(); ++k) {
      if (row[k] != 0) target[k] -= f * row[k];
    }
  }

  void pivot(int r, int c) {
    std::vector<mpq_class>& pr = rows_[r];
    const mpq_class p = pr[c];
    for (auto& v : pr) {
      if (v != 0) v /= p;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      const mpq_class f = rows_[i][c];
      if (f != 0) axpy(rows_[i], pr, f);
    }
    if (!obj_.empty()) {
      const mpq_class f = obj_[c];
      if (f != 0) axpy(obj_, pr, f);
    }
    basis_[r] = c;
  }

  std::vector<std::vector<mpq_class>> rows_;
  std::vector<int> basis_;
  std::vector<mpq_class> obj_;
  int n_;
};

}  // namespace

LPResult lp_feasible(const std::vector<LinearConstraint>& constraints,
                     const std::vector<std::string>& nonnegative) {
  LPResult result;
  std::set<std::string> names(nonnegative.begin(), nonnegative.end());
  std::vector<const LinearConstraint*> live;
  for (const auto& c : constraints) {
    bool any = false;
    for (const auto& [k, v] : c.coefficients) {
      names.insert(k);
      any = any || !v.is_zero();
    }
    if (c.relation == Relation::Gt) result.has_strict = true;
    if (any) {
      live.push_back(&c);
      continue;
    }
    const bool ok = c.relation == Relation::Geq ? Rational(0) >= c.bound
                    : c.relation == Relation::Gt ? Rational(0) > c.bound
                                                 : c.bound.is_zero();
    if (!ok) return LPResult{false, {}, Rational(0), result.has_strict};
  }
  const std::set<std::string> nonneg(nonnegative.begin(), nonnegative.end());

  // Structural columns: one per nonnegative variable, two per free one.
  std::map<std::string, std::pair<int, int>> column;  // var -> (plus, minus or -1)
  int ncols = 0;
  for (const auto& name : names) {
    if (nonneg.count(name)) {
      column[name] = {ncols++, -1};
    } else {
      column[name] = {ncols, ncols + 1};
      ncols += 2;
    }
  }
  const int eps = result.has_strict ? ncols++ : -1;

  struct Row {
    std::vector<std::pair<int, mpq_class>> coef;
    int sense;  // +1: >=, -1: <=, 0: =
    mpq_class rhs;
  };
  std::vector<Row> rows;
  for (const auto* c : live) {
    Row r;
    for (const auto& [k, v] : c->coefficients) {
      if (v.is_zero()) continue;
      const auto [plus, minus] = column[k];
      r.coef.emplace_back(plus, v.raw());
      if (minus >= 0) r.coef.emplace_back(minus, -v.raw());
    }
    if (c->relation == Relation::Gt) r.coef.emplace_back(eps, -1);
    r.sense = c->relation == Relation::Eq ? 0 : 1;
    r.rhs = c->bound.raw();
    rows.push_back(std::move(r));
  }
  if (eps >= 0) rows.push_back(Row{{{eps, 1}}, -1, 1});

  for (auto& r : rows) {
    if (r.rhs < 0) {
      for (auto& [j, v] : r.coef) v = -v;
      r.rhs = -r.rhs;
      r.sense = -r.sense;
    }
  }
  int total = ncols;
  std::vector<int> slack_col(rows.size(), -1), art_col(rows.size(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].sense != 0) slack_col[i] = total++;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].sense != -1) art_col[i] = total++;
  }
  std::vector<bool> artificial(total, false);
  std::vector<std::vector<mpq_class>> tab(rows.size(), std::vector<mpq_class>(total + 1, 0));
  std::vector<int> basis(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, v] : rows[i].coef) tab[i][j] += v;
    if (slack_col[i] >= 0) tab[i][slack_col[i]] = rows[i].sense == 1 ? -1 : 1;
    if (art_col[i] >= 0) {
      tab[i][art_col[i]] = 1;
      artificial[art_col[i]] = true;
      basis[i] = art_col[i];
    } else {
      basis[i] = slack_col[i];
    }
    tab[i][total] = rows[i].rhs;
  }

  Tableau t(std::move(tab), std::move(basis), total);
  std::vector<mpq_class> cost(total, 0);
  for (int j = 0; j < total; ++j) {
    if (artificial[j]) cost[j] = -1;
  }
  const mpq_class phase1 = t.maximize(cost, std::vector<bool>(total, false));
  if (phase1 < 0) return LPResult{false, {}, Rational(0), result.has_strict};
  t.expel(artificial);

  if (eps >= 0) {
    std::vector<mpq_class> cost2(total, 0);
    cost2[eps] = 1;
    const mpq_class best = t.maximize(cost2, artificial);
    if (best <= 0) return LPResult{false, {}, Rational(0), true};
    result.slack = Rational(best);
  }
  const std::vector<mpq_class> y = t.solution();
  for (const auto& [name, cols] : column) {
    mpq_class v = y[cols.first];
    if (cols.second >= 0) v -= y[cols.second];
    result.assignment[name] = Rational(v);
  }
  for (const auto& c : constraints) {
    if (!c.satisfied_by(result.assignment))
      throw std::logic_error("simplex returned an assignment violating " + format_constraint(c));
  }
  for (const auto& name : nonnegative) {
    if (result.assignment[name].sign() < 0)
      throw std::logic_error("simplex returned a negative value for " + name);
  }
  result.feasible = true;
  return result;
}

std::string format_constraint(const LinearConstraint& c) {
  std::string out;
  for (const auto& [k, v] : c.coefficients) {
    if (!out.empty()) out += " + ";
    out += v.fraction_str() + "*" + k;
  }
  if (out.empty()) out = "0/1";
  const char* rel = c.relation == Relation::Geq ? ">=" : (c.relation == Relation::Gt ? ">" : "=");
  return out + " " + rel + " " + c.bound.fraction_str();
}

std::string format_system(const std::vector<LinearConstraint>& system) {
  std::string out;
  for (const auto& c : system) out += format_constraint(c) + "\n";
  return out;
}

LinearConstraint parse_constraint(std::string_view line) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  auto read_rational = [&]() {
    skip();
    const std::size_t start = i;
    if (i < line.size() && line[i] == '-') ++i;
    while (i < line.size() && (std::isdigit(static_cast<unsigned char>(line[i])) || line[i] == '/')) ++i;
    if (i == start) throw SyntaxError(start, {"rational"}, std::string(line));
    try {
      return Rational::parse(line.substr(start, i - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError(start + e.offset(), {"rational"}, std::string(line));
    }
  };
  std::map<std::string, Rational> coef;
  std::string rel;
  auto is_var_start = [&] {
    return i < line.size() && (std::isalpha(static_cast<unsigned char>(line[i])) || line[i] == '_');
  };
  while (true) {
    skip();
    Rational q(1);
    bool has_var = false;
    if (i < line.size() && line[i] == '-') {
      const std::size_t save = i;
      ++i;
      skip();
      if (is_var_start()) {
        q = Rational(-1);
      } else {
        i = save;
      }
    }
    if (is_var_start()) {
      has_var = true;
    } else {
      q = read_rational();
      skip();
      if (i < line.size() && line[i] == '*') {
        ++i;
        skip();
        if (!is_var_start()) throw SyntaxError(i, {"variable"}, std::string(line));
        has_var = true;
      }
    }
    if (has_var) {
      const std::size_t vs = i;
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
      coef[std::string(line.substr(vs, i - vs))] += q;
      skip();
      if (i < line.size() && line[i] == '+') {
        ++i;
        continue;
      }
    } else if (!q.is_zero() || !coef.empty()) {
      throw SyntaxError(i, {"'*'"}, std::string(line));
    }
    break;
  }
  skip();
  const std::size_t rel_at = i;
  for (const char* r : {">=", "<=", ">", "<", "="}) {
    if (line.substr(i, std::char_traits<char>::length(r)) == r) {
      rel = r;
      i += rel.size();
      break;
    }
  }
  if (rel.empty()) throw SyntaxError(rel_at, {"'>='", "'<='", "'>'", "'<'", "'='"}, std::string(line));
  Rational b = read_rational();
  skip();
  if (i != line.size()) throw SyntaxError(i, {"end of line"}, std::string(line));
  if (rel == ">=") return LinearConstraint::geq(coef, b);
  if (rel == ">") return LinearConstraint::gt(coef, b);
  if (rel == "=") return LinearConstraint::eq(coef, b);
  if (rel == "<=") return LinearConstraint::leq(coef, b);
  return LinearConstraint::lt(coef, b);
}

std::vector<LinearConstraint> parse_system(std::string_view text) {
  std::vector<LinearConstraint> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k < line.size() && line[k] != '#') out.push_back(parse_constraint(line));
    pos = end + 1;
  }
  return out;
}

}  // namespace betlogic

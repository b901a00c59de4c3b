#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "betlogic/rational.hpp"

namespace betlogic {

enum class Relation { Geq, Gt, Eq };

/// sum_k coefficients[k] * k  (rel)  bound
struct LinearConstraint {
  std::map<std::string, Rational> coefficients;
  Relation relation = Relation::Geq;
  Rational bound;

  static LinearConstraint geq(std::map<std::string, Rational> c, Rational b);
  static LinearConstraint gt(std::map<std::string, Rational> c, Rational b);
  static LinearConstraint eq(std::map<std::string, Rational> c, Rational b);
  /// Stored as the negated >= / > constraint.
  static LinearConstraint leq(std::map<std::string, Rational> c, Rational b);
  static LinearConstraint lt(std::map<std::string, Rational> c, Rational b);

  bool satisfied_by(const std::map<std::string, Rational>& values) const;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct LPResult {
  bool feasible = false;
  std::map<std::string, Rational> assignment;
  /// Largest common margin achieved by the strict constraints; zero when
  /// there are none.
  Rational slack;
  bool has_strict = false;
};

/// Exact feasibility of a system of linear constraints over the rationals.
/// Variables listed in `nonnegative` are constrained to be >= 0; all others
/// are free. Strict constraints share one margin ε (capped at 1) that the
/// simplex maximizes; the system is feasible iff the optimum is positive.
/// Pivoting follows Bland's rule. A feasible assignment is re-checked
/// against every constraint before it is returned.
LPResult lp_feasible(const std::vector<LinearConstraint>& constraints,
                     const std::vector<std::string>& nonnegative = {});

/// One constraint per line: `coeff*var + coeff*var ... rel bound` with
/// rationals written p/q and rel one of >=, >, =.
std::string format_constraint(const LinearConstraint& c);
std::string format_system(const std::vector<LinearConstraint>& system);
/// Throws SyntaxError. `<=` and `<` are accepted and normalized; a bare
/// variable has coefficient 1.
LinearConstraint parse_constraint(std::string_view line);
/// Blank lines and lines starting with '#' are skipped.
std::vector<LinearConstraint> parse_system(std::string_view text);

}  // namespace betlogic

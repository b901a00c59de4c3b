#pragma once

#include <string>
#include <string_view>

#include "betlogic/formula.hpp"

namespace betlogic {

// Concrete syntax (ASCII):
//   formula := disj [('->' | '<->') formula]
//   disj    := conj ('|' conj)*
//   conj    := unary ('&' unary)*
//   unary   := ('~' | 'K' | 'B' | '<K>' | '<B>') unary | primary
//   primary := 'true' | 'false' | atom | '(' formula ')' | term relop term
//   term    := summand ('+' summand)*
//   summand := rational ['*' 'P' '(' formula ')'] | 'P' '(' formula ')'
//   relop   := '>=' | '<=' | '>' | '<' | '='
// Atoms match [a-z][a-zA-Z0-9_]*, rationals -?\d+(/\d+)?. Modal operators
// belong to the knowledge/belief language only; terms to the probability
// language only.

/// Throws SyntaxError.
FormulaKB parse_kb(std::string_view text);
FormulaL parse_l(std::string_view text);

std::string to_string(const FormulaKB& f);
std::string to_string(const FormulaL& f);
std::string to_string(const Term& t);

}  // namespace betlogic

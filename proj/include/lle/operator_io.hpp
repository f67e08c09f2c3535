#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lle/clifford.hpp"
#include "lle/diff_operator.hpp"

namespace lle {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t offset_)
      : std::runtime_error(msg + " at byte " + std::to_string(offset_)), offset(offset_) {}
};

// Expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ['^' posint]
//   atom   := integer | symbol | '(' expr ')'
// with symbols i, m, s, t, x1..x3, dt, d1..d3, g0..g4, alpha, beta, I4.
// Multiplication is operator composition, left to right; '/' requires a
// scalar divisor. Whitespace is insignificant.
DiffOperator parse_operator(std::string_view text, const GammaRep& rep);

// Same grammar restricted to scalar-valued expressions (no coordinates,
// derivatives or matrix symbols).
Scalar parse_scalar(std::string_view text);

// Canonical rendering: terms in monomial order, each matrix coefficient
// expanded over the 16 gamma products. parse_operator(render(op)) == op.
std::string render_operator(const DiffOperator& op, const GammaRep& rep);

}  // namespace lle

#pragma once

#include <string>

#include "nsatz/order.hpp"
#include "nsatz/point.hpp"
#include "nsatz/polynomial.hpp"

namespace nsatz {

/// Parses an expression over the given variables. Grammar:
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | ident | '(' expr ')'
///
/// '^' binds tighter than '*' binds tighter than '+'/'-'. Explicit '*' is
/// required between factors; rationals are written "p/q". Errors:
/// SyntaxError (with position), UnknownVariable, NegativeExponent.
Polynomial parse_poly(const std::string& text, const VarSet& vars);

/// Deterministic rendering with terms in strictly decreasing order. The
/// order's sequence must cover the polynomial's support.
std::string print_poly(const Polynomial& f, const MonomialOrder& order);
/// Convenience: grevlex over the polynomial's own variable set.
std::string print_poly(const Polynomial& f);

/// Point syntax "x=1,y=2/3". Every named variable must belong to `vars`;
/// totality is the caller's concern.
Point parse_point(const std::string& text, const VarSet& vars);
std::string print_point(const Point& p);

/// Strict "p" or "p/q" (positive q), optional leading '-'.
Rational parse_rational(const std::string& text);

/// [A-Za-z][A-Za-z0-9_]* — the "_w" fresh-variable prefix is unreachable.
bool valid_variable_name(const std::string& name);

}  // namespace nsatz

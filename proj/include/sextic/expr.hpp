#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sextic/field.hpp"
#include "sextic/forms.hpp"
#include "sextic/pgl.hpp"

namespace sextic {

// Shared text grammar for scalars, forms and maps:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] INT)?
//   atom   := INT | X | Y | Z | sqrt3 | zeta '(' INT ')' | '(' expr ')'
//           | diag '(' expr ',' expr ',' expr ')' | '[' expr ':' expr ':' expr ']'
//
// Division and negative powers are only defined on scalars. Maps compose
// with '*'. All failures throw Error(Errc::Parse).

Fp parse_scalar(std::string_view text, const PrimeField& f);
/// The expression must be a nonzero-degree homogeneous polynomial, or 0 with
/// an explicit degree via parse_form(text, f, degree).
TernaryForm parse_form(std::string_view text, const PrimeField& f);
TernaryForm parse_form(std::string_view text, const PrimeField& f, int degree);
ProjectiveMap parse_map(std::string_view text, const PrimeField& f);

/// `name = expr` per line; blank lines and `#` comments ignored. Duplicate
/// names are a parse error. Order of appearance is preserved. Values are
/// returned unevaluated.
std::vector<std::pair<std::string, std::string>> parse_assignments(std::string_view text);

/// parse_assignments with every value evaluated as a scalar.
std::vector<std::pair<std::string, Fp>> parse_bindings(std::string_view text, const PrimeField& f);

}  // namespace sextic

#pragma once

#include <qorder/quaternion.hpp>

#include <string>

namespace qorder {

// Text form of a quaternion over K = Q(sqrt(-d)).  's' stands for sqrt(-d);
// the value of d comes from context, never from the literal itself.
//
//   unit  := term (('+'|'-') term)*
//   term  := coeff basis?
//   basis := 'i' | 'j' | 'k'
//   coeff := int | int 's' | '(' int ('+'|'-') int 's' ')' ['/2']
//
// Whitespace is ignored everywhere.  Examples: "6s+15i+5j+1k",
// "(1+1s)/2+(1-1s)/2i+2j".  Repeated basis terms accumulate.
// Throws std::invalid_argument on malformed input.
Quaternion parse_unit(const std::string& text, const SquareFreeD& d);

// Canonical rendering: terms in the order 1, i, j, k, zero terms omitted,
// half-integer coefficients always parenthesized with "/2".  The zero
// quaternion renders as "0".  parse_unit(format_unit(u), d) == u whenever
// every coefficient has display denominator 1 or 2; otherwise the value is
// not expressible in the grammar and std::domain_error is thrown.
std::string format_unit(const Quaternion& u);

}  // namespace qorder

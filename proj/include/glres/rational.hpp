#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace glres {

// Exact scalar. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q", "-p/q" with q > 0. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace glres

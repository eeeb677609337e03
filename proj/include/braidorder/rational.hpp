#pragma once

#include <gmpxx.h>

#include <string>

namespace braidorder {

// Exact rational coefficients. Integers suffice for Magnus images of
// free-group words; surface-quotient reduction divides by leading
// coefficients, so the whole series layer works over Q.
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

// Canonical "p" or "p/q" form; used by printers and JSON emitters.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace braidorder

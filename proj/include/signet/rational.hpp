#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace signet {

// Exact scalar used by the rational computation mode. Arithmetic results of
// mpq_class operators are always canonical.
using Rational = mpq_class;

// Exact rational value of a finite double (every finite double is p/2^k).
Rational rational_of(double x);

double to_double(const Rational& q);

// Canonical "p" or "p/q" form.
std::string rational_repr(const Rational& q);

// Parses a weight literal: plain/scientific decimal ("-1.5", "2e-3") or a
// fraction ("p/q"). Returns the exact decimal value, or nullopt if malformed.
std::optional<Rational> parse_exact_weight(const std::string& token);

// Shortest string that parses back (via parse_exact_weight) to exactly q:
// prefers the shortest round-trip decimal of d when its decimal value is q,
// then an exact finite decimal expansion, then "p/q". `d` must be the double
// view of the same weight.
std::string weight_repr(double d, const Rational& q);

}  // namespace signet

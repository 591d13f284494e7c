// rational.hpp
// Exact rational scalars on top of GMP. Everything downstream that claims
// "exact" runs on these; doubles only ever appear on explicitly approximate
// paths (irrational eigenvalues, numeric root residuals, local spectra).

#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

using Rational = mpq_class;
using BigInt = mpz_class;

enum class Errc {
  parse,
  unsupported_degree,
  diameter_too_small,
  degenerate_duals,
  infeasible,
  parameter_inconsistency,
  size_cap,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parses "p", "-p", "p/q" (optional whitespace around tokens). Result is
// canonical: lowest terms, positive denominator.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline BigInt numerator(const Rational& q) { return q.get_num(); }
inline BigInt denominator(const Rational& q) { return q.get_den(); }

Rational rational_pow(const Rational& base, unsigned exponent);

// Exact square root when q is a perfect square of a rational, otherwise empty.
std::optional<Rational> rational_sqrt(const Rational& q);

// The unique minimal-denominator rational in the closed interval [lo, hi]
// (Stern-Brocot descent). Used to recognize exact rational roots inside
// bisection intervals without factoring anything.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

// Nearest integer, ties away from zero.
BigInt round_to_integer(const Rational& q);

template <typename K>
K from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) {
  return q;
}

template <>
inline double from_rational<double>(const Rational& q) {
  return q.get_d();
}

}  // namespace drg

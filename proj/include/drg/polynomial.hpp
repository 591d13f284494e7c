// polynomial.hpp
// Dense univariate polynomials over the rationals: exact ring arithmetic,
// Horner evaluation, gcd/squarefree machinery, Sturm isolation, and real
// root extraction. Rational roots are always recovered exactly; irrational
// ones are reported as residual roots with a stated error bound.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drg/rational.hpp"

namespace drg {

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
  }

  static RatPoly constant(const Rational& v) { return RatPoly({v}); }
  static RatPoly monomial(const Rational& coeff, int degree);
  // (x - r0)(x - r1)...
  static RatPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rational& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  RatPoly derivative() const;
  // Returns {quotient, remainder}; divisor must be nonzero.
  static std::pair<RatPoly, RatPoly> divrem(const RatPoly& num, const RatPoly& den);
  // Monic gcd.
  static RatPoly gcd(RatPoly a, RatPoly b);

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;  // c_[i] multiplies x^i; empty means the zero polynomial
};

inline RatPoly operator*(const Rational& s, const RatPoly& p) { return p * s; }

struct ResidualRoot {
  double value = 0.0;
  int multiplicity = 1;
  double error_bound = 0.0;
};

struct RealRootSet {
  std::vector<std::pair<Rational, int>> exact_roots;  // ascending, with multiplicities
  std::vector<ResidualRoot> residual_roots;           // ascending

  int total_with_multiplicity() const;
  // All roots merged ascending (exact compared exactly, mixed comparisons via
  // the double image); pairs of (double value, multiplicity).
  std::vector<std::pair<double, int>> merged_values() const;
  bool all_exact() const { return residual_roots.empty(); }
};

// Squarefree decomposition (Yun): returns factors g_m with multiplicity m,
// p = lc * prod g_m^m, each g_m monic and squarefree.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

// Exact rational roots (any degree >= 1), with multiplicities, ascending.
// Uses divisor candidates of the primitive integer model when cheap to
// factor, and Sturm isolation plus Stern-Brocot probing otherwise; both
// paths are exact and complete.
std::vector<std::pair<Rational, int>> rational_roots(const RatPoly& p);

// Real roots of a polynomial of degree 1..4 (throws Errc::unsupported_degree
// otherwise). Residual roots carry |interval| <= tolerance.
RealRootSet real_roots(const RatPoly& p, double tolerance = 1e-12);

// General real-root machinery, exposed for the spectrum path (any degree).
struct IsolatedRoot {
  Rational lo, hi;  // lo == hi iff exact
  int multiplicity = 1;
  bool exact = false;
  Rational exact_value;  // valid iff exact
};
std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p, double width = 1e-13);

}  // namespace drg

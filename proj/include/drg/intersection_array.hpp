// intersection_array.hpp
// Intersection arrays {b_0..b_{D-1}; c_1..c_D} of distance-regular graphs,
// their validation, derived valencies and the full tensor of intersection
// numbers p^h_ij. Everything is exact.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drg/rational.hpp"

namespace drg {

struct IntersectionArray {
  int D = 0;
  std::vector<Rational> b;  // b_0 .. b_{D-1}
  std::vector<Rational> c;  // c_1 .. c_D

  // Boundary conventions: c_0 = 0, b_D = 0.
  Rational bi(int i) const;
  Rational ci(int i) const;
  Rational ai(int i) const { return k() - bi(i) - ci(i); }
  const Rational& k() const { return b[0]; }

  bool all_integral() const;
  std::string str() const;  // "b0,b1,...;c1,...,cD"
  bool operator==(const IntersectionArray& o) const { return D == o.D && b == o.b && c == o.c; }
};

struct ValidationResult {
  std::optional<IntersectionArray> array;   // set iff no hard error
  std::vector<std::string> errors;          // violated hard invariants
  std::vector<std::string> warnings;        // feasibility findings (monotonicity, ...)
  bool ok() const { return errors.empty(); }
};

// raw holds b_0..b_{D-1} followed by c_1..c_D.
ValidationResult validate(const std::vector<Rational>& raw, int D);
IntersectionArray validate_or_throw(const std::vector<Rational>& raw, int D);

// Text format "b0,b1,...;c1,...,cD" with integer or p/q tokens.
IntersectionArray parse_intersection_array(std::string_view text);

struct Valencies {
  std::vector<Rational> k;  // k_0 .. k_D
  Rational v;               // sum
  std::vector<std::string> warnings;  // non-integral k_i
};
Valencies valencies(const IntersectionArray& ia);

// Diameter-2 array of a strongly regular graph (v,k,lambda,mu).
IntersectionArray srg_array(const Rational& k, const Rational& lambda, const Rational& mu);

class PTensor {
 public:
  PTensor(int D) : D_(D), p_((D + 1) * (D + 1) * (D + 1), Rational(0)) {}
  const Rational& at(int h, int i, int j) const { return p_[index(h, i, j)]; }
  Rational& at(int h, int i, int j) { return p_[index(h, i, j)]; }
  int D() const { return D_; }

 private:
  size_t index(int h, int i, int j) const {
    return (static_cast<size_t>(h) * (D_ + 1) + i) * (D_ + 1) + j;
  }
  int D_;
  std::vector<Rational> p_;
};

// Full tensor via the three-term recurrence; throws Errc::infeasible naming
// (h,i,j) if any entry comes out negative. Symmetry and row sums are checked.
PTensor intersection_numbers(const IntersectionArray& ia);

}  // namespace drg

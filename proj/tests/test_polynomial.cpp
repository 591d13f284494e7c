#include <random>

#include "doctest.h"
#include "drg/polynomial.hpp"

using drg::RatPoly;
using drg::Rational;

namespace {

Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Independent construction of -(x-4)(x-3)(x+1)(x+2) from its factors.
RatPoly halved7_terwilliger_reference() {
  return -RatPoly::from_roots({Q(4), Q(3), Q(-1), Q(-2)});
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(drg::parse_rational("7/2") == Q(7, 2));
  CHECK(drg::parse_rational("-10/4") == Q(-5, 2));
  CHECK(drg::parse_rational(" 21 ") == Q(21));
  CHECK(drg::to_string(Q(-5, 2)) == "-5/2");
  CHECK(drg::to_string(Q(6, 2)) == "3");
  CHECK_THROWS_AS((void)drg::parse_rational("1/0"), drg::Error);
  CHECK_THROWS_AS((void)drg::parse_rational("x"), drg::Error);
  // canonical form invariants
  Rational q = drg::parse_rational("-6/8");
  CHECK(q.get_den() > 0);
  CHECK(gcd(drg::BigInt(q.get_num()), drg::BigInt(q.get_den())) == 1);
}

TEST_CASE("simplest rational in interval") {
  CHECK(drg::simplest_rational_between(Q(1, 3), Q(1, 2)) == Q(1, 2));
  CHECK(drg::simplest_rational_between(Q(-1, 2), Q(1, 7)) == Q(0));
  CHECK(drg::simplest_rational_between(Q(5, 2), Q(11, 4)) == Q(5, 2));
  CHECK(drg::simplest_rational_between(Q(7, 5), Q(10, 7)) == Q(7, 5));
  // interval straddling a high-denominator value still returns it when forced
  CHECK(drg::simplest_rational_between(Q(355, 113), Q(355, 113)) == Q(355, 113));
}

TEST_CASE("polynomial evaluation") {
  RatPoly diff_squares({Q(-1), Q(0), Q(1)});  // x^2 - 1
  CHECK(diff_squares(Q(1)) == 0);

  CHECK(halved7_terwilliger_reference()(Q(3)) == 0);

  RatPoly p_plus_plus({Q(15), Q(4), Q(-1)});  // -x^2 + 4x + 15
  CHECK(p_plus_plus(Q(0)) == Q(15));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_int_distribution<int> deg(0, 5);
  auto random_poly = [&] {
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(Q(num(rng), den(rng)));
    return RatPoly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    RatPoly p = random_poly(), q = random_poly();
    Rational x = Q(num(rng), den(rng));
    CHECK((p + q)(x) == p(x) + q(x));
    CHECK((p * q)(x) == p(x) * q(x));
  }
}

TEST_CASE("real_roots: rational cases") {
  RatPoly diff_squares({Q(-1), Q(0), Q(1)});
  auto roots = drg::real_roots(diff_squares);
  REQUIRE(roots.all_exact());
  REQUIRE(roots.exact_roots.size() == 2);
  CHECK(roots.exact_roots[0] == std::pair{Q(-1), 1});
  CHECK(roots.exact_roots[1] == std::pair{Q(1), 1});

  // (-x^2+4x+15)(x^2-1) - 9(x+1)^2, assembled the long way round
  RatPoly assembled = RatPoly({Q(15), Q(4), Q(-1)}) * diff_squares -
                      RatPoly({Q(1), Q(1)}) * RatPoly({Q(1), Q(1)}) * Q(9);
  CHECK(assembled == halved7_terwilliger_reference());
  auto troots = drg::real_roots(assembled);
  REQUIRE(troots.all_exact());
  REQUIRE(troots.exact_roots.size() == 4);
  CHECK(troots.exact_roots[0].first == Q(-2));
  CHECK(troots.exact_roots[1].first == Q(-1));
  CHECK(troots.exact_roots[2].first == Q(3));
  CHECK(troots.exact_roots[3].first == Q(4));
}

TEST_CASE("real_roots: irrational quadratic within tolerance") {
  RatPoly p({Q(-15), Q(-4), Q(1)});  // x^2 - 4x - 15, roots 2 +- sqrt(19)
  auto roots = drg::real_roots(p);
  CHECK(roots.exact_roots.empty());
  REQUIRE(roots.residual_roots.size() == 2);
  double s = std::sqrt(19.0);
  CHECK(roots.residual_roots[0].value == doctest::Approx(2 - s).epsilon(1e-12));
  CHECK(roots.residual_roots[1].value == doctest::Approx(2 + s).epsilon(1e-12));
  for (const auto& r : roots.residual_roots) {
    CHECK(r.error_bound <= 1e-12);
    CHECK(std::abs(p.eval_double(r.value)) <= 1e-9);
  }
}

TEST_CASE("real_roots: multiplicities and degree guards") {
  // (x-2)^2 (x+1)(x+2): double rational root
  RatPoly p = RatPoly::from_roots({Q(2), Q(2), Q(-1), Q(-2)});
  auto roots = drg::real_roots(p);
  REQUIRE(roots.all_exact());
  REQUIRE(roots.exact_roots.size() == 3);
  CHECK(roots.exact_roots[0] == std::pair{Q(-2), 1});
  CHECK(roots.exact_roots[1] == std::pair{Q(-1), 1});
  CHECK(roots.exact_roots[2] == std::pair{Q(2), 2});
  CHECK(roots.total_with_multiplicity() == 4);

  CHECK_THROWS_AS((void)drg::real_roots(RatPoly::constant(Q(5))), drg::Error);
  std::vector<Rational> quintic(6, Q(1));
  CHECK_THROWS_AS((void)drg::real_roots(RatPoly(std::move(quintic))), drg::Error);
}

TEST_CASE("real_roots recovers random rational root multisets") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> rs;
    for (int i = 0; i < 4; ++i) rs.push_back(Q(num(rng), den(rng)));
    std::sort(rs.begin(), rs.end());
    auto roots = drg::real_roots(RatPoly::from_roots(rs));
    REQUIRE(roots.all_exact());
    std::vector<Rational> got;
    for (const auto& [r, m] : roots.exact_roots)
      for (int i = 0; i < m; ++i) got.push_back(r);
    CHECK(got == rs);
  }
}

TEST_CASE("rational_roots falls back when coefficients resist factoring") {
  // (x - 1/3)(x - p) with p a 64-bit prime times a cofactor: divisor
  // enumeration of the constant term is not attempted, Sturm probing still
  // finds both roots exactly.
  Rational big("614889782588491517");  // primorial-sized, hard to trial-divide
  RatPoly p = RatPoly::from_roots({Q(1, 3), Rational(big)});
  auto roots = drg::rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair{Q(1, 3), 1});
  CHECK(roots[1] == std::pair{Rational(big), 1});
}

TEST_CASE("isolate_real_roots handles general degree for the spectrum path") {
  // Characteristic-polynomial shape: degree 5 with mixed rational and
  // irrational roots: (x-2)(x+3)(x^2-2)(x-1/2)
  RatPoly p = RatPoly::from_roots({Q(2), Q(-3), Q(1, 2)}) * RatPoly({Q(-2), Q(0), Q(1)});
  auto iso = drg::isolate_real_roots(p);
  REQUIRE(iso.size() == 5);
  int exact = 0, approx = 0;
  for (const auto& r : iso) (r.exact ? exact : approx)++;
  CHECK(exact == 3);
  CHECK(approx == 2);
  // ascending
  for (size_t i = 1; i < iso.size(); ++i) CHECK(iso[i - 1].lo <= iso[i].lo);
}

TEST_CASE("polynomial printing") {
  RatPoly t = halved7_terwilliger_reference();
  CHECK(t.str() == "-x^4 + 4x^3 + 7x^2 - 22x - 24");
  CHECK(RatPoly().str() == "0");
  CHECK(RatPoly({Q(1, 2), Q(-1)}).str("L") == "-L + 1/2");
}

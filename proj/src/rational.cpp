#include "drg/rational.hpp"

#include <cctype>

namespace drg {

namespace {

std::string strip(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw Error(Errc::parse, "empty rational token");
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = strip(std::string_view(s).substr(0, slash));
    den = strip(std::string_view(s).substr(slash + 1));
  }
  if (!looks_like_integer(num) || !looks_like_integer(den))
    throw Error(Errc::parse, "bad rational token '" + std::string(text) + "'");
  BigInt n(num), d(den);
  if (d == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  BigInt num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational r(sn, sd);
  r.canonicalize();
  return r;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw Error(Errc::internal, "simplest_rational_between: empty interval");
  if (lo == hi) return lo;
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  // 0 < lo < hi: take the smallest integer in range if one exists,
  // otherwise recurse on the fractional parts.
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational candidate = Rational(fl) + 1;
  if (lo == Rational(fl)) candidate = lo;
  if (candidate <= hi) return candidate;
  Rational frac_lo = lo - Rational(fl), frac_hi = hi - Rational(fl);
  Rational inner = simplest_rational_between(1 / frac_hi, 1 / frac_lo);
  return Rational(fl) + 1 / inner;
}

BigInt round_to_integer(const Rational& q) {
  BigInt twice_num = q.get_num() * 2;
  BigInt den = q.get_den();
  BigInt shifted = (q >= 0) ? BigInt(twice_num + den) : BigInt(twice_num - den);
  BigInt result;
  mpz_tdiv_q(result.get_mpz_t(), shifted.get_mpz_t(), BigInt(den * 2).get_mpz_t());
  return result;
}

}  // namespace drg

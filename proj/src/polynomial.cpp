#include "drg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace drg {

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monomial(const Rational& coeff, int degree) {
  if (degree < 0) throw Error(Errc::internal, "monomial with negative degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = coeff;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_roots(const std::vector<Rational>& roots) {
  RatPoly p = constant(1);
  for (const auto& r : roots) p = p * RatPoly({-r, Rational(1)});
  return p;
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (c_.empty()) throw Error(Errc::internal, "leading coefficient of zero polynomial");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x = -x;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return RatPoly(std::move(v));
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RatPoly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw Error(Errc::internal, "polynomial division by zero");
  RatPoly rem = num;
  if (num.degree() < den.degree()) return {RatPoly(), rem};
  std::vector<Rational> q(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rational factor = rem.leading() / den.leading();
    q[static_cast<size_t>(shift)] = factor;
    rem = rem - RatPoly::monomial(factor, shift) * den;
  }
  return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  auto make_monic = [](RatPoly& p) {
    if (!p.is_zero() && p.leading() != 1) p = p * (Rational(1) / p.leading());
  };
  make_monic(a);
  make_monic(b);
  while (!b.is_zero()) {
    RatPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  return a;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational ci = coeff(i);
    if (ci == 0) continue;
    if (first) {
      if (ci < 0) out << "-";
    } else {
      out << (ci < 0 ? " - " : " + ");
    }
    Rational a = abs(ci);
    if (a != 1 || i == 0) out << a.get_str();
    if (i > 0) {
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

int RealRootSet::total_with_multiplicity() const {
  int n = 0;
  for (const auto& [r, m] : exact_roots) n += m;
  for (const auto& r : residual_roots) n += r.multiplicity;
  return n;
}

std::vector<std::pair<double, int>> RealRootSet::merged_values() const {
  std::vector<std::pair<double, int>> all;
  for (const auto& [r, m] : exact_roots) all.emplace_back(to_double(r), m);
  for (const auto& r : residual_roots) all.emplace_back(r.value, r.multiplicity);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero() || p.degree() < 1) return {};
  // Yun's algorithm over Q.
  RatPoly d = p.derivative();
  RatPoly g = RatPoly::gcd(p, d);
  RatPoly w = RatPoly::divrem(p, g).first;
  RatPoly y = RatPoly::divrem(d, g).first;
  RatPoly z = y - w.derivative();
  std::vector<std::pair<RatPoly, int>> out;
  int i = 1;
  while (w.degree() >= 1) {
    RatPoly gi = RatPoly::gcd(w, z);
    if (gi.degree() >= 1) out.emplace_back(gi, i);
    w = RatPoly::divrem(w, gi).first;
    y = RatPoly::divrem(z, gi).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

namespace {

// --- Sturm machinery -------------------------------------------------------

struct SturmChain {
  std::vector<RatPoly> seq;

  explicit SturmChain(const RatPoly& squarefree) {
    seq.push_back(squarefree);
    seq.push_back(squarefree.derivative());
    while (!seq.back().is_zero() && seq.back().degree() >= 0) {
      RatPoly r = RatPoly::divrem(seq[seq.size() - 2], seq.back()).second;
      if (r.is_zero()) break;
      seq.push_back(-r);
    }
  }

  int variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& f : seq) {
      Rational v = f(x);
      int s = (v > 0) - (v < 0);
      if (s != 0) {
        if (prev != 0 && s != prev) ++count;
        prev = s;
      }
    }
    return count;
  }

  // Number of roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
};

Rational cauchy_bound(const RatPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = abs(p.coeff(i) / p.leading());
    if (a > m) m = a;
  }
  return m + 1;
}

// Probes an isolating interval (lo, hi] of a squarefree polynomial for an
// exact rational root: alternate bisection with Stern-Brocot candidates.
// Once the interval is narrower than 1/den(root)^2 the simplest rational in
// it is the root itself, so rational roots up to astronomically large
// denominators are recognized; irrational roots simply never match.
struct ProbeResult {
  bool exact = false;
  Rational value;  // exact root, or unset
  Rational lo, hi; // narrowed interval when not exact
};

ProbeResult probe_interval(const RatPoly& g, const SturmChain& chain, Rational lo, Rational hi,
                           int rounds, int bisections_per_round) {
  // The interval is half-open (lo, hi]: lo itself may be a root belonging to
  // the neighbouring interval, so candidates equal to lo are rejected.
  auto try_candidate = [&](const Rational& cand) { return cand > lo && g(cand) == 0; };
  for (int round = 0; round < rounds; ++round) {
    Rational cand = simplest_rational_between(lo, hi);
    if (try_candidate(cand)) return {true, cand, lo, hi};
    for (int step = 0; step < bisections_per_round; ++step) {
      Rational mid = (lo + hi) / 2;
      if (g(mid) == 0) return {true, mid, lo, hi};
      if (chain.count(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
  }
  Rational cand = simplest_rational_between(lo, hi);
  if (try_candidate(cand)) return {true, cand, lo, hi};
  return {false, Rational(0), lo, hi};
}

void isolate_squarefree(const RatPoly& g, int multiplicity, double width,
                        std::vector<IsolatedRoot>& out) {
  if (g.degree() < 1) return;
  if (g.degree() == 1) {
    Rational r = -g.coeff(0) / g.coeff(1);
    out.push_back({r, r, multiplicity, true, r});
    return;
  }
  SturmChain chain(g);
  Rational bound = cauchy_bound(g);
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}}, isolated;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int n = chain.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rational mid = (a + b) / 2;
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }
  for (auto& [a, b] : isolated) {
    ProbeResult pr = probe_interval(g, chain, a, b, 6, 30);
    if (pr.exact) {
      out.push_back({pr.value, pr.value, multiplicity, true, pr.value});
      continue;
    }
    Rational lo = pr.lo, hi = pr.hi;
    while (to_double(hi - lo) > width) {
      Rational mid = (lo + hi) / 2;
      if (g(mid) == 0) {  // cannot happen after a failed probe, but stay safe
        out.push_back({mid, mid, multiplicity, true, mid});
        return;
      }
      if (chain.count(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back({lo, hi, multiplicity, false, Rational(0)});
  }
}

// --- rational-root candidate path ------------------------------------------

// Divisors of |n| when the factorization completes below the trial-division
// cutoff; empty optional when n is too hard to factor (caller falls back to
// Sturm probing).
std::optional<std::vector<BigInt>> divisors_if_cheap(BigInt n, size_t max_divisors = 20000) {
  const unsigned long cutoff = 1000000;
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<BigInt, int>> factors;
  auto add_factor = [&](const BigInt& p) {
    if (!factors.empty() && factors.back().first == p)
      factors.back().second++;
    else
      factors.emplace_back(p, 1);
  };
  for (unsigned long d = 2; d <= cutoff && BigInt(d) * d <= n; d = (d == 2 ? 3 : d + 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      add_factor(BigInt(d));
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n > 1) {
    // Any remaining cofactor has no prime factor <= cutoff; it is prime iff
    // it is below cutoff^2.
    if (n > BigInt(cutoff) * cutoff) return std::nullopt;
    add_factor(n);
  }
  std::vector<BigInt> divisors{BigInt(1)};
  for (auto& [p, e] : factors) {
    size_t base = divisors.size();
    BigInt pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) {
        divisors.push_back(divisors[i] * pk);
        if (divisors.size() > max_divisors) return std::nullopt;
      }
    }
  }
  return divisors;
}

std::optional<std::vector<std::pair<Rational, int>>> rational_roots_by_candidates(
    const RatPoly& p) {
  // Clear denominators to a primitive integer polynomial.
  BigInt common_den(1);
  for (const auto& c : p.coefficients())
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInt> a;
  a.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * Rational(common_den);
    a.push_back(scaled.get_num());
  }

  std::vector<std::pair<Rational, int>> found;
  RatPoly work = p;

  // Root at zero.
  int zero_mult = 0;
  size_t low = 0;
  while (low < a.size() && a[low] == 0) {
    ++low;
    ++zero_mult;
  }
  if (zero_mult > 0) {
    found.emplace_back(Rational(0), zero_mult);
    for (int i = 0; i < zero_mult; ++i) work = RatPoly::divrem(work, RatPoly({Rational(0), Rational(1)})).first;
  }
  if (work.degree() < 1) {
    std::sort(found.begin(), found.end());
    return found;
  }

  auto nums = divisors_if_cheap(a[low]);
  auto dens = divisors_if_cheap(a.back());
  if (!nums || !dens) return std::nullopt;
  if (nums->size() * dens->size() > 40000) return std::nullopt;

  for (const auto& pn : *nums) {
    for (const auto& qd : *dens) {
      for (int sign : {1, -1}) {
        Rational cand(sign * pn, qd);
        cand.canonicalize();
        int mult = 0;
        while (work.degree() >= 1 && work(cand) == 0) {
          ++mult;
          work = RatPoly::divrem(work, RatPoly({-cand, Rational(1)})).first;
        }
        if (mult > 0) found.emplace_back(cand, mult);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p, double width) {
  if (p.is_zero()) throw Error(Errc::internal, "isolate_real_roots on zero polynomial");
  std::vector<IsolatedRoot> out;
  for (const auto& [g, m] : squarefree_decomposition(p)) isolate_squarefree(g, m, width, out);
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const RatPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw Error(Errc::unsupported_degree, "rational_roots requires degree >= 1");
  if (auto fast = rational_roots_by_candidates(p)) return *fast;
  std::vector<std::pair<Rational, int>> found;
  for (const auto& root : isolate_real_roots(p))
    if (root.exact) found.emplace_back(root.exact_value, root.multiplicity);
  std::sort(found.begin(), found.end());
  return found;
}

RealRootSet real_roots(const RatPoly& p, double tolerance) {
  if (p.is_zero() || p.degree() < 1 || p.degree() > 4)
    throw Error(Errc::unsupported_degree,
                "real_roots supports degree 1 through 4, got degree " +
                    std::to_string(p.degree()));
  RealRootSet out;
  for (const auto& root : isolate_real_roots(p, tolerance)) {
    if (root.exact) {
      out.exact_roots.emplace_back(root.exact_value, root.multiplicity);
    } else {
      double lo = to_double(root.lo), hi = to_double(root.hi);
      out.residual_roots.push_back({(lo + hi) / 2, root.multiplicity, tolerance});
    }
  }
  std::sort(out.exact_roots.begin(), out.exact_roots.end());
  std::sort(out.residual_roots.begin(), out.residual_roots.end(),
            [](const ResidualRoot& a, const ResidualRoot& b) { return a.value < b.value; });
  return out;
}

}  // namespace drg

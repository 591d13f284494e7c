#include "drg/intersection_array.hpp"

#include <sstream>

namespace drg {

Rational IntersectionArray::bi(int i) const {
  if (i < 0 || i >= D) return Rational(0);
  return b[static_cast<size_t>(i)];
}

Rational IntersectionArray::ci(int i) const {
  if (i < 1 || i > D) return Rational(0);
  return c[static_cast<size_t>(i - 1)];
}

bool IntersectionArray::all_integral() const {
  for (const auto& x : b)
    if (!is_integer(x)) return false;
  for (const auto& x : c)
    if (!is_integer(x)) return false;
  return true;
}

std::string IntersectionArray::str() const {
  std::ostringstream out;
  for (int i = 0; i < D; ++i) out << (i ? "," : "") << b[i].get_str();
  out << ";";
  for (int i = 0; i < D; ++i) out << (i ? "," : "") << c[i].get_str();
  return out.str();
}

ValidationResult validate(const std::vector<Rational>& raw, int D) {
  ValidationResult res;
  if (D < 1) {
    res.errors.push_back("diameter must be at least 1");
    return res;
  }
  if (raw.size() != static_cast<size_t>(2 * D)) {
    res.errors.push_back("expected " + std::to_string(2 * D) + " entries, got " +
                         std::to_string(raw.size()));
    return res;
  }
  IntersectionArray ia;
  ia.D = D;
  ia.b.assign(raw.begin(), raw.begin() + D);
  ia.c.assign(raw.begin() + D, raw.end());

  for (int i = 0; i < D; ++i) {
    if (ia.b[i] <= 0) res.errors.push_back("b_" + std::to_string(i) + " is not positive");
    if (ia.c[i] <= 0) res.errors.push_back("c_" + std::to_string(i + 1) + " is not positive");
  }
  if (!res.errors.empty()) return res;
  if (ia.ci(1) != 1) res.errors.push_back("c_1 must equal 1");
  for (int i = 1; i <= D; ++i) {
    if (ia.ai(i) < 0)
      res.errors.push_back("a_" + std::to_string(i) + " = " + ia.ai(i).get_str() +
                           " is negative");
  }
  // Standard feasibility conditions are warnings only.
  for (int i = 1; i < D; ++i) {
    if (ia.ci(i) > ia.ci(i + 1))
      res.warnings.push_back("c_" + std::to_string(i) + " > c_" + std::to_string(i + 1) +
                             " violates monotonicity");
    if (ia.bi(i - 1) < ia.bi(i))
      res.warnings.push_back("b_" + std::to_string(i - 1) + " < b_" + std::to_string(i) +
                             " violates monotonicity");
  }
  if (!res.errors.empty()) return res;
  auto val = valencies(ia);
  res.warnings.insert(res.warnings.end(), val.warnings.begin(), val.warnings.end());
  res.array = std::move(ia);
  return res;
}

IntersectionArray validate_or_throw(const std::vector<Rational>& raw, int D) {
  auto res = validate(raw, D);
  if (!res.ok()) {
    std::string msg = "invalid intersection array:";
    for (const auto& e : res.errors) msg += " " + e + ";";
    throw Error(Errc::infeasible, msg);
  }
  return *res.array;
}

IntersectionArray parse_intersection_array(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw Error(Errc::parse, "intersection array needs a ';' separating b and c entries");
  auto split = [](std::string_view part) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos <= part.size()) {
      size_t comma = part.find(',', pos);
      if (comma == std::string_view::npos) comma = part.size();
      out.push_back(parse_rational(part.substr(pos, comma - pos)));
      pos = comma + 1;
      if (comma == part.size()) break;
    }
    return out;
  };
  auto bs = split(text.substr(0, semi));
  auto cs = split(text.substr(semi + 1));
  if (bs.size() != cs.size())
    throw Error(Errc::parse, "need as many b entries as c entries, got " +
                                 std::to_string(bs.size()) + " and " + std::to_string(cs.size()));
  std::vector<Rational> raw = bs;
  raw.insert(raw.end(), cs.begin(), cs.end());
  return validate_or_throw(raw, static_cast<int>(bs.size()));
}

Valencies valencies(const IntersectionArray& ia) {
  Valencies out;
  out.k.assign(static_cast<size_t>(ia.D) + 1, Rational(1));
  for (int i = 1; i <= ia.D; ++i) out.k[i] = out.k[i - 1] * ia.bi(i - 1) / ia.ci(i);
  out.v = 0;
  for (const auto& ki : out.k) out.v += ki;
  for (int i = 0; i <= ia.D; ++i) {
    if (out.k[i] <= 0) throw Error(Errc::infeasible, "k_" + std::to_string(i) + " not positive");
    if (!is_integer(out.k[i]))
      out.warnings.push_back("k_" + std::to_string(i) + " = " + out.k[i].get_str() +
                             " is not an integer");
  }
  return out;
}

IntersectionArray srg_array(const Rational& k, const Rational& lambda, const Rational& mu) {
  return validate_or_throw({k, k - lambda - 1, Rational(1), mu}, 2);
}

PTensor intersection_numbers(const IntersectionArray& ia) {
  const int D = ia.D;
  PTensor p(D);
  // p^h_{i,0} and p^h_{i,1} directly from the array, then the recurrence
  //   c_{j+1} p^h_{i,j+1} = b_{i-1} p^h_{i-1,j} + (a_i - a_j) p^h_{i,j}
  //                        + c_{i+1} p^h_{i+1,j} - b_{j-1} p^h_{i,j-1}.
  for (int h = 0; h <= D; ++h) {
    for (int i = 0; i <= D; ++i) {
      p.at(h, i, 0) = (i == h) ? Rational(1) : Rational(0);
      if (D >= 1) {
        Rational v(0);
        if (h == i - 1) v = ia.bi(h);      // = b_{i-1}
        else if (h == i) v = ia.ai(i);
        else if (h == i + 1) v = ia.ci(h); // = c_{i+1}
        p.at(h, i, 1) = v;
      }
    }
  }
  for (int j = 1; j < D; ++j) {
    for (int h = 0; h <= D; ++h) {
      for (int i = 0; i <= D; ++i) {
        Rational acc = ia.ai(i) * p.at(h, i, j);
        if (i >= 1) acc += ia.bi(i - 1) * p.at(h, i - 1, j);
        if (i + 1 <= D) acc += ia.ci(i + 1) * p.at(h, i + 1, j);
        acc -= ia.ai(j) * p.at(h, i, j);
        if (j >= 1) acc -= ia.bi(j - 1) * p.at(h, i, j - 1);
        p.at(h, i, j + 1) = acc / ia.ci(j + 1);
      }
    }
  }

  auto val = valencies(ia);
  for (int h = 0; h <= D; ++h) {
    for (int i = 0; i <= D; ++i) {
      Rational row(0);
      for (int j = 0; j <= D; ++j) {
        const Rational& e = p.at(h, i, j);
        if (e < 0)
          throw Error(Errc::infeasible, "p^" + std::to_string(h) + "_{" + std::to_string(i) +
                                            "," + std::to_string(j) + "} = " + e.get_str() +
                                            " is negative");
        if (e != p.at(h, j, i))
          throw Error(Errc::internal, "p tensor symmetry broken at (" + std::to_string(h) + "," +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
        row += e;
      }
      if (row != val.k[i])
        throw Error(Errc::internal, "p tensor row sum mismatch");
    }
  }
  return p;
}

}  // namespace drg

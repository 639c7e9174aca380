#include "lattice.hpp"

#include <algorithm>

namespace gridloc {

namespace {

void check_pair(const GridPoint& a, const GridPoint& b) {
  if (a.dim() != b.dim())
    throw input_error("points have different dimensions");
  if (a.dim() < 2) throw input_error("grid points need dimension >= 2");
  if (a == b) throw input_error("degenerate segment: endpoints coincide");
}

}  // namespace

BigInt coordinate_gcd(const GridPoint& a, const GridPoint& b) {
  check_pair(a, b);
  BigInt g = 0;
  for (int i = 0; i < a.dim(); ++i) g = big_gcd(g, a.coords[i] - b.coords[i]);
  return g;
}

std::vector<GridPoint> segment_lattice_points(const GridPoint& a,
                                              const GridPoint& b) {
  BigInt g = coordinate_gcd(a, b);
  std::vector<BigInt> step(a.dim());
  for (int i = 0; i < a.dim(); ++i) step[i] = (b.coords[i] - a.coords[i]) / g;
  std::vector<GridPoint> points;
  for (BigInt j = 0; j <= g; ++j) {
    GridPoint p;
    p.coords.resize(a.dim());
    for (int i = 0; i < a.dim(); ++i) p.coords[i] = a.coords[i] + j * step[i];
    points.push_back(std::move(p));
  }
  return points;
}

bool is_primitive(const GridPoint& a, const GridPoint& b) {
  return coordinate_gcd(a, b) == 1;
}

bool on_closed_segment(const GridPoint& p, const GridPoint& a,
                       const GridPoint& b) {
  if (p.dim() != a.dim() || a.dim() != b.dim())
    throw input_error("points have different dimensions");
  if (a == b) return p == a;
  // collinear: (p-a) x (b-a) = 0 componentwise
  for (int i = 0; i < p.dim(); ++i)
    for (int j = i + 1; j < p.dim(); ++j) {
      BigInt lhs = (p.coords[i] - a.coords[i]) * (b.coords[j] - a.coords[j]);
      BigInt rhs = (p.coords[j] - a.coords[j]) * (b.coords[i] - a.coords[i]);
      if (lhs != rhs) return false;
    }
  // between: 0 <= (p-a).(b-a) <= (b-a).(b-a)
  BigInt dot = 0, len = 0;
  for (int i = 0; i < p.dim(); ++i) {
    dot += (p.coords[i] - a.coords[i]) * (b.coords[i] - a.coords[i]);
    len += (b.coords[i] - a.coords[i]) * (b.coords[i] - a.coords[i]);
  }
  return dot >= 0 && dot <= len;
}

bool strictly_inside_segment(const GridPoint& p, const GridPoint& a,
                             const GridPoint& b) {
  return p != a && p != b && on_closed_segment(p, a, b);
}

CrtSolution crt_solve(const ResidueSystem& rs) {
  for (std::size_t i = 0; i < rs.constraints.size(); ++i) {
    const auto& c = rs.constraints[i];
    if (c.modulus < 2)
      throw input_error("constraint " + std::to_string(i) +
                        ": modulus must be >= 2");
    if (c.residue < 0 || c.residue >= c.modulus)
      throw input_error("constraint " + std::to_string(i) +
                        ": residue out of range");
  }
  // a CRT system is consistent iff it is pairwise consistent, so an
  // infeasible system always has a two-constraint witness to report
  auto conflict_pair = [&](std::size_t i) -> std::string {
    const auto& ci = rs.constraints[i];
    for (std::size_t j = 0; j < i; ++j) {
      const auto& cj = rs.constraints[j];
      BigInt g = big_gcd(ci.modulus, cj.modulus);
      if (big_mod(ci.residue - cj.residue, g) != 0)
        return "constraints " + std::to_string(j) + " (x == " +
               to_decimal(cj.residue) + " mod " + to_decimal(cj.modulus) +
               ") and " + std::to_string(i) + " (x == " +
               to_decimal(ci.residue) + " mod " + to_decimal(ci.modulus) +
               ") conflict";
    }
    return "constraint " + std::to_string(i) + " conflicts with the rest";
  };

  BigInt value = 0, modulus = 1;
  for (std::size_t i = 0; i < rs.constraints.size(); ++i) {
    const auto& c = rs.constraints[i];
    // merge x == value (mod modulus) with x == c.residue (mod c.modulus)
    BigInt g = big_gcd(modulus, c.modulus);
    BigInt diff = c.residue - value;
    if (big_mod(diff, g) != 0)
      throw input_error("inconsistent residue system: " + conflict_pair(i));
    BigInt lcm = modulus / g * c.modulus;
    // value + modulus * t == c.residue (mod c.modulus)
    BigInt m = c.modulus / g;
    BigInt inv;
    BigInt red = big_mod(modulus / g, m);
    if (m == 1) {
      inv = 0;
    } else if (mpz_invert(inv.get_mpz_t(), red.get_mpz_t(), m.get_mpz_t()) ==
               0) {
      throw internal_error("CRT inverse failed");
    }
    BigInt t = big_mod((diff / g) * inv, m);
    value = big_mod(value + modulus * t, lcm);
    modulus = lcm;
  }
  return {value, modulus};
}

std::vector<long> primes_below(long bound) {
  if (bound < 0) throw input_error("prime bound must be nonnegative");
  std::vector<long> primes;
  if (bound <= 2) return primes;
  std::vector<char> composite(bound, 0);
  for (long p = 2; p < bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (long q = p * p; q < bound; q += p) composite[q] = 1;
  }
  return primes;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<BigInt> prime_factors(const BigInt& x) {
  BigInt r = big_abs(x);
  std::vector<BigInt> factors;
  if (r <= 1) return factors;
  const long kTrialBound = 10'000'000;
  for (long d = 2; d <= kTrialBound && BigInt(d) * d <= r; ++d) {
    if (big_mod(r, d) == 0) {
      factors.push_back(d);
      while (big_mod(r, d) == 0) r /= d;
    }
  }
  if (r > 1) {
    // remaining cofactor must itself be prime within desk scale
    if (mpz_probab_prime_p(r.get_mpz_t(), 40) == 0)
      throw budget_error("factorization beyond trial-division bound");
    factors.push_back(r);
  }
  return factors;
}

}  // namespace gridloc

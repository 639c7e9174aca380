#ifndef GRIDLOC_LATTICE_HPP
#define GRIDLOC_LATTICE_HPP

#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace gridloc {

struct GridPoint {
  std::vector<BigInt> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  friend bool operator==(const GridPoint& a, const GridPoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const GridPoint& a, const GridPoint& b) {
    return a.coords < b.coords;
  }
};

// gcd of coordinate differences |a_i - b_i|.
BigInt coordinate_gcd(const GridPoint& a, const GridPoint& b);

// All grid points of the closed segment from a to b, in order.
// Exactly gcd(|a_1-b_1|,...,|a_d-b_d|) + 1 points.
std::vector<GridPoint> segment_lattice_points(const GridPoint& a,
                                              const GridPoint& b);

// True iff the closed segment ab contains no grid point besides a and b.
bool is_primitive(const GridPoint& a, const GridPoint& b);

// True iff p lies strictly inside the open segment ab (p collinear,
// strictly between, p != a, p != b). Works in any dimension.
bool strictly_inside_segment(const GridPoint& p, const GridPoint& a,
                             const GridPoint& b);

// True iff p lies on the closed segment ab.
bool on_closed_segment(const GridPoint& p, const GridPoint& a,
                       const GridPoint& b);

struct Congruence {
  BigInt modulus;  // >= 2
  BigInt residue;  // in [0, modulus)
};

struct ResidueSystem {
  std::vector<Congruence> constraints;
};

struct CrtSolution {
  BigInt value;    // smallest nonnegative solution
  BigInt modulus;  // combined modulus (lcm)
};

// Solves the system. Moduli need not be coprime: congruences sharing a
// prime are merged when compatible; an inconsistent pair raises an Input
// error naming the two conflicting constraints.
CrtSolution crt_solve(const ResidueSystem& rs);

// All primes strictly below bound, ascending.
std::vector<long> primes_below(long bound);

bool is_prime(long p);

// Prime factors of |x| (each prime once, ascending). Trial division;
// raises a Budget error when a cofactor resists the trial bound.
std::vector<BigInt> prime_factors(const BigInt& x);

}  // namespace gridloc

#endif

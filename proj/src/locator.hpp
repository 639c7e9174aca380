#ifndef GRIDLOC_LOCATOR_HPP
#define GRIDLOC_LOCATOR_HPP

#include <vector>

#include "verify.hpp"

namespace gridloc {

// Term i of the periodic residue pattern sequence for prime p at level e in
// dimension d: a d-tuple over Z_{p^e}. Within one period of length p^{d*e}
// all terms are distinct, and the tuple reduces mod p^{e-1} to the level
// e-1 term at index i mod p^{d(e-1)}.
std::vector<BigInt> pattern_term(long p, int e, int d, long long i);

struct ColumnSpec {
  std::vector<BigInt> rank;          // d-1 coordinates
  ResidueSystem last_coord;          // prime-power constraints, primes < s
  std::vector<Congruence> fixups;    // per fixup prime >= s
};

// The family of s columns whose pairwise coordinate-difference gcds stay
// below s^(1/d): ranks follow the pattern sequences via CRT, last
// coordinates are constrained per column.
struct ColumnFamily {
  long s = 0;
  int d = 2;
  BigInt modulus;                 // product of the prime powers, primes < s
  std::vector<ColumnSpec> columns;
  std::vector<long> fixup_primes; // sorted
};

ColumnFamily build_column_family(long s, int d,
                                 const std::vector<long>& fixup_primes = {});

// Primes >= s dividing the gcd of some pairwise rank difference; these are
// the primes whose fixup constraints the family needs.
std::vector<long> required_fixup_primes(const ColumnFamily& fam);

// Convenience: family with exactly the fixups it needs.
ColumnFamily build_column_family_auto(long s, int d);

// Greedy selection of points, counts[i] from column i, such that no
// selected point lies strictly inside a segment between selected points of
// two different columns. Per column the points come in increasing last
// coordinate.
std::vector<std::vector<GridPoint>> select_visible_points(
    const ColumnFamily& fam, const std::vector<int>& counts);

std::vector<std::vector<GridPoint>> select_visible_points(
    const ColumnFamily& fam, int n);

// A drawing of g with gp <= q from a proper coloring with at most q^d
// colors; color class j occupies column j of the family.
GridDrawing locate_from_coloring(const Graph& g, const Coloring& c, int q,
                                 int d);

// Coordinates mod q as a coloring with q^d colors (coordinate 0 least
// significant digit). Proper whenever gp(dr) <= q.
Coloring modular_coloring(const GridDrawing& dr, int q);

}  // namespace gridloc

#endif

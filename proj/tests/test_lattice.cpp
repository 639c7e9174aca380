#include <doctest.h>

#include "lattice.hpp"
#include "oracles.hpp"

using namespace gridloc;
using gridloc::testing::Rng;
using gridloc::testing::segment_points_scan;

namespace {

GridPoint pt(std::vector<long> v) {
  GridPoint p;
  for (long x : v) p.coords.push_back(x);
  return p;
}

}  // namespace

TEST_CASE("segment points on small examples") {
  auto pts = segment_lattice_points(pt({0, 0}), pt({1, 1}));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == pt({0, 0}));
  CHECK(pts[1] == pt({1, 1}));

  pts = segment_lattice_points(pt({0, 0}), pt({4, 6}));
  REQUIRE(pts.size() == 3);
  CHECK(pts[1] == pt({2, 3}));

  pts = segment_lattice_points(pt({1, 2}), pt({1, 5}));
  REQUIRE(pts.size() == 4);
  CHECK(pts[2] == pt({1, 4}));
}

TEST_CASE("segment errors") {
  CHECK_THROWS_AS(segment_lattice_points(pt({1, 2}), pt({1, 2})), Error);
  CHECK_THROWS_AS(segment_lattice_points(pt({1, 2}), pt({1, 2, 3})), Error);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(pt({0, 0}), pt({2, 3})));
  CHECK_FALSE(is_primitive(pt({0, 0}), pt({2, 2})));
  CHECK(is_primitive(pt({0, 0, 0}), pt({6, 10, 15})));
}

TEST_CASE("segment points match the scan oracle") {
  Rng rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    int d = iter % 2 == 0 ? 2 : 3;
    std::vector<long> a(d), b(d);
    for (int i = 0; i < d; ++i) {
      a[i] = rng.below(13) - 6;
      b[i] = rng.below(13) - 6;
    }
    if (a == b) continue;
    auto expect = segment_points_scan(a, b);
    auto got = segment_lattice_points(pt(a), pt(b));
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      for (int c = 0; c < d; ++c)
        CHECK(got[i].coords[c] == expect[i][c]);
    // point count is gcd + 1, primitive iff exactly two points
    BigInt g = coordinate_gcd(pt(a), pt(b));
    CHECK(BigInt(static_cast<long>(got.size())) == g + 1);
    CHECK(is_primitive(pt(a), pt(b)) == (got.size() == 2));
  }
}

TEST_CASE("crt matches the worked family columns") {
  ResidueSystem rs;
  rs.constraints = {{4, 0}, {3, 1}, {5, 0}, {7, 0}};
  auto sol = crt_solve(rs);
  CHECK(sol.value == 280);
  CHECK(sol.modulus == 420);

  rs.constraints = {{4, 1}, {3, 2}, {5, 1}, {7, 1}};
  sol = crt_solve(rs);
  CHECK(sol.value == 281);
  CHECK(sol.modulus == 420);

  rs.constraints = {{2, 0}};
  sol = crt_solve(rs);
  CHECK(sol.value == 0);
  CHECK(sol.modulus == 2);
}

TEST_CASE("crt rejects inconsistent systems naming the pair") {
  ResidueSystem rs;
  rs.constraints = {{3, 2}, {4, 1}, {2, 0}};
  try {
    crt_solve(rs);
    FAIL("expected an infeasibility error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
    std::string msg = e.what();
    CHECK(msg.find("conflict") != std::string::npos);
    CHECK(msg.find("constraints 1") != std::string::npos);
    CHECK(msg.find("and 2") != std::string::npos);
  }
}

TEST_CASE("crt merges compatible prime powers") {
  ResidueSystem rs;
  rs.constraints = {{4, 3}, {8, 7}};
  auto sol = crt_solve(rs);
  CHECK(sol.value == 7);
  CHECK(sol.modulus == 8);
}

TEST_CASE("crt solution properties") {
  Rng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    ResidueSystem rs;
    long mods[4] = {4, 9, 5, 7};
    for (long m : mods)
      rs.constraints.push_back({m, rng.below(static_cast<int>(m))});
    auto sol = crt_solve(rs);
    CHECK(sol.value >= 0);
    CHECK(sol.value < sol.modulus);
    for (const auto& c : rs.constraints) {
      CHECK(big_mod(sol.value, c.modulus) == c.residue);
      CHECK(big_mod(sol.value + sol.modulus, c.modulus) == c.residue);
    }
  }
}

TEST_CASE("primes below") {
  CHECK(primes_below(9) == std::vector<long>{2, 3, 5, 7});
  CHECK(primes_below(2).empty());
  CHECK(primes_below(30) ==
        std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("prime factors") {
  auto f = prime_factors(BigInt(420));
  REQUIRE(f.size() == 4);
  CHECK(f[0] == 2);
  CHECK(f[3] == 7);
  CHECK(prime_factors(BigInt(1)).empty());
  CHECK(prime_factors(BigInt(-161)) == std::vector<BigInt>{7, 23});
}

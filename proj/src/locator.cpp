#include "locator.hpp"

#include <algorithm>
#include <set>

namespace gridloc {

std::vector<BigInt> pattern_term(long p, int e, int d, long long i) {
  if (!is_prime(p)) throw input_error("pattern base must be prime");
  if (e < 1) throw input_error("pattern level must be >= 1");
  if (d < 2) throw input_error("dimension must be >= 2");
  if (i < 0) throw input_error("pattern index must be nonnegative");
  // period p^(d*e); index splits into base-p^d digits k_0..k_{e-1}; the
  // tuple is sum_m p^m * lex_tuple(k_m), lex_tuple(k) being the k-th
  // d-tuple over Z_p in lexicographic order
  BigInt period = 1;
  for (int t = 0; t < d * e; ++t) period *= p;
  BigInt idx = big_mod(from_int64(i), period);
  BigInt block = 1;
  for (int t = 0; t < d; ++t) block *= p;  // p^d
  std::vector<BigInt> term(d, 0);
  BigInt pm = 1;  // p^m
  for (int m = 0; m < e; ++m) {
    BigInt km = big_mod(idx, block);
    idx /= block;
    // c-th lex component: (km / p^(d-1-c)) mod p
    BigInt q = km;
    for (int c = d - 1; c >= 0; --c) {
      BigInt digit = big_mod(q, p);
      q /= p;
      term[c] += pm * digit;
    }
    pm *= p;
  }
  return term;
}

ColumnFamily build_column_family(long s, int d,
                                 const std::vector<long>& fixup_primes) {
  if (s < 2) throw input_error("family size must be >= 2");
  if (d < 2) throw input_error("dimension must be >= 2");
  for (long q : fixup_primes) {
    if (!is_prime(q)) throw input_error("fixup value is not prime");
    if (q < s) throw input_error("fixup prime below family size rejected");
  }

  ColumnFamily fam;
  fam.s = s;
  fam.d = d;
  fam.fixup_primes = fixup_primes;
  std::sort(fam.fixup_primes.begin(), fam.fixup_primes.end());
  fam.fixup_primes.erase(
      std::unique(fam.fixup_primes.begin(), fam.fixup_primes.end()),
      fam.fixup_primes.end());

  std::vector<long> primes = primes_below(s);
  std::vector<int> level(primes.size());
  std::vector<BigInt> power(primes.size());
  fam.modulus = 1;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    long p = primes[pi];
    int e = 1;
    BigInt pde = 1;
    for (int t = 0; t < d; ++t) pde *= p;
    BigInt cur = pde;  // p^(d*e)
    while (cur < s) {
      cur *= pde;
      ++e;
    }
    level[pi] = e;
    BigInt pw = 1;
    for (int t = 0; t < e; ++t) pw *= p;
    power[pi] = pw;
    fam.modulus *= pw;
  }

  std::set<std::vector<BigInt>> used_ranks;
  for (long i = 0; i < s; ++i) {
    ColumnSpec col;
    std::vector<std::vector<BigInt>> terms(primes.size());
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
      terms[pi] = pattern_term(primes[pi], level[pi], d, i);

    col.rank.resize(d - 1);
    for (int c = 0; c < d - 1; ++c) {
      ResidueSystem rs;
      for (std::size_t pi = 0; pi < primes.size(); ++pi)
        rs.constraints.push_back({power[pi], terms[pi][c]});
      col.rank[c] = rs.constraints.empty() ? BigInt(0) : crt_solve(rs).value;
    }
    // canonical collision rule: bump the first coordinate by the combined
    // modulus until the rank vector is fresh
    while (!used_ranks.insert(col.rank).second) col.rank[0] += fam.modulus;

    for (std::size_t pi = 0; pi < primes.size(); ++pi)
      col.last_coord.constraints.push_back({power[pi], terms[pi][d - 1]});
    for (long q : fam.fixup_primes)
      col.fixups.push_back({BigInt(q), BigInt(i % q)});
    fam.columns.push_back(std::move(col));
  }
  return fam;
}

std::vector<long> required_fixup_primes(const ColumnFamily& fam) {
  std::set<long> out;
  for (std::size_t i = 0; i < fam.columns.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.columns.size(); ++j) {
      BigInt g = 0;
      for (int c = 0; c < fam.d - 1; ++c)
        g = big_gcd(g, fam.columns[i].rank[c] - fam.columns[j].rank[c]);
      for (const BigInt& p : prime_factors(g)) {
        if (p >= fam.s) {
          if (!p.fits_slong_p())
            throw internal_error("fixup prime exceeds machine range");
          out.insert(p.get_si());
        }
      }
    }
  }
  return std::vector<long>(out.begin(), out.end());
}

ColumnFamily build_column_family_auto(long s, int d) {
  ColumnFamily prelim = build_column_family(s, d, {});
  return build_column_family(s, d, required_fixup_primes(prelim));
}

namespace {

struct ColumnEnumerator {
  BigInt base;  // smallest nonnegative value in the residue class
  BigInt step;  // combined modulus including fixups
};

ColumnEnumerator column_enumerator(const ColumnSpec& col) {
  ResidueSystem rs = col.last_coord;
  for (const auto& f : col.fixups) rs.constraints.push_back(f);
  if (rs.constraints.empty()) return {0, 1};
  auto sol = crt_solve(rs);
  return {sol.value, sol.modulus};
}

}  // namespace

std::vector<std::vector<GridPoint>> select_visible_points(
    const ColumnFamily& fam, const std::vector<int>& counts) {
  if (counts.size() != fam.columns.size())
    throw input_error("one count per column required");
  long long total = 0;
  for (int c : counts) {
    if (c < 0) throw input_error("counts must be nonnegative");
    total += c;
  }

  std::vector<GridPoint> selected;
  std::vector<int> owner;  // column index per selected point
  std::vector<std::vector<GridPoint>> result(fam.columns.size());

  auto acceptable = [&](const GridPoint& cand, int col) {
    // the candidate may not land strictly inside an existing cross-column
    // segment
    for (std::size_t a = 0; a < selected.size(); ++a)
      for (std::size_t b = a + 1; b < selected.size(); ++b) {
        if (owner[a] == owner[b]) continue;
        if (strictly_inside_segment(cand, selected[a], selected[b]))
          return false;
      }
    // no existing point may land strictly inside a segment from the
    // candidate to a point of another column
    for (std::size_t a = 0; a < selected.size(); ++a) {
      if (owner[a] == col) continue;
      for (std::size_t w = 0; w < selected.size(); ++w) {
        if (w == a) continue;
        if (strictly_inside_segment(selected[w], cand, selected[a]))
          return false;
      }
    }
    return true;
  };

  for (std::size_t i = 0; i < fam.columns.size(); ++i) {
    auto en = column_enumerator(fam.columns[i]);
    BigInt y = en.base;
    long long attempts = 0;
    const long long attempt_cap = 1000 * (total + 1) + 1000;
    for (int taken = 0; taken < counts[i];) {
      if (++attempts > attempt_cap)
        throw internal_error("visible point selection stalled");
      GridPoint cand;
      cand.coords = fam.columns[i].rank;
      cand.coords.push_back(y);
      y += en.step;
      if (!acceptable(cand, static_cast<int>(i))) continue;
      selected.push_back(cand);
      owner.push_back(static_cast<int>(i));
      result[i].push_back(std::move(cand));
      ++taken;
    }
  }
  return result;
}

std::vector<std::vector<GridPoint>> select_visible_points(
    const ColumnFamily& fam, int n) {
  if (n < 1) throw input_error("point count must be >= 1");
  return select_visible_points(fam,
                               std::vector<int>(fam.columns.size(), n));
}

GridDrawing locate_from_coloring(const Graph& g, const Coloring& c, int q,
                                 int d) {
  if (q < 2 || d < 2) throw input_error("q and d must be >= 2");
  long long s = 1;
  for (int t = 0; t < d; ++t) {
    s *= q;
    if (s > 1'000'000) throw input_error("q^d too large for construction");
  }
  if (!is_proper_coloring(g, c))
    throw input_error("coloring is not a proper coloring of the graph");
  if (c.k > s)
    throw input_error("coloring uses more than q^d colors");

  ColumnFamily fam = build_column_family_auto(static_cast<long>(s), d);
  std::vector<int> counts(fam.columns.size(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) counts[c.color[v]]++;

  auto pts = select_visible_points(fam, counts);
  GridDrawing dr;
  dr.dim = d;
  dr.graph = g;
  dr.points.resize(g.vertex_count());
  std::vector<int> next(fam.columns.size(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    dr.points[v] = pts[c.color[v]][next[c.color[v]]++];

  if (!is_valid_drawing(dr) || (!g.edges().empty() && gp(dr) > q))
    throw internal_error("located drawing failed certification");
  return dr;
}

Coloring modular_coloring(const GridDrawing& dr, int q) {
  dr.check_shape();
  if (q < 2) throw input_error("modulus must be >= 2");
  long long k = 1;
  for (int t = 0; t < dr.dim; ++t) {
    k *= q;
    if (k > 1'000'000) throw input_error("q^d too large for a coloring");
  }
  Coloring c;
  c.k = static_cast<int>(k);
  c.color.resize(dr.graph.vertex_count());
  for (int v = 0; v < dr.graph.vertex_count(); ++v) {
    long long id = 0, weight = 1;
    for (int t = 0; t < dr.dim; ++t) {
      long long digit = big_mod(dr.points[v].coords[t], q).get_si();
      id += digit * weight;
      weight *= q;
    }
    c.color[v] = static_cast<int>(id);
  }
  return c;
}

}  // namespace gridloc

#ifndef GRIDLOC_GEOMETRY_HPP
#define GRIDLOC_GEOMETRY_HPP

// Exact 2D segment predicates, shared by the integer drawing checks and the
// rational embedding checks. T is BigInt or Rational.

#include <algorithm>
#include <optional>
#include <utility>

namespace gridloc {

template <typename T>
int sign_of(const T& x) {
  if (x < 0) return -1;
  if (x > 0) return 1;
  return 0;
}

template <typename T>
struct Point2 {
  T x, y;
  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// Orientation of r relative to directed line pq: sign of cross(q-p, r-p).
template <typename T>
int orient2(const Point2<T>& p, const Point2<T>& q, const Point2<T>& r) {
  T cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign_of(cross);
}

template <typename T>
bool on_segment2(const Point2<T>& p, const Point2<T>& a, const Point2<T>& b) {
  if (orient2(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Checks whether closed segments ab and cd meet only in ways a planar
// drawing allows: not at all, or exactly at `shared` (when given).
template <typename T>
bool segments_meet_safely(const Point2<T>& a, const Point2<T>& b,
                          const Point2<T>& c, const Point2<T>& d,
                          const std::optional<Point2<T>>& shared) {
  int o1 = orient2(a, b, c);
  int o2 = orient2(a, b, d);
  int o3 = orient2(c, d, a);
  int o4 = orient2(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return false;  // proper crossing
  if (o1 == 0 && o2 == 0) {
    // collinear: compare 1D intervals on the dominant axis
    bool use_x = !(a.x == b.x);
    auto coord = [&](const Point2<T>& p) { return use_x ? p.x : p.y; };
    T lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
    T lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
    T lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return true;  // disjoint
    if (lo < hi) return false; // interval overlap
    // single common point: must be the shared vertex
    if (!shared) return false;
    const Point2<T>& s = *shared;
    return on_segment2(s, a, b) && on_segment2(s, c, d) &&
           coord(s) == lo;
  }
  // non-collinear: gather touch points (endpoint of one on the other)
  const Point2<T>* touches[4];
  int count = 0;
  if (o1 == 0 && on_segment2(c, a, b)) touches[count++] = &c;
  if (o2 == 0 && on_segment2(d, a, b)) touches[count++] = &d;
  if (o3 == 0 && on_segment2(a, c, d)) touches[count++] = &a;
  if (o4 == 0 && on_segment2(b, c, d)) touches[count++] = &b;
  for (int i = 0; i < count; ++i) {
    if (!shared || !(*touches[i] == *shared)) return false;
  }
  return true;
}

// Squared distance from point p to the closed segment ab, exact.
// Returned as a pair (num, den) representing num/den.
template <typename T>
std::pair<T, T> point_segment_dist_sq(const Point2<T>& p, const Point2<T>& a,
                                      const Point2<T>& b) {
  T dx = b.x - a.x, dy = b.y - a.y;
  T len2 = dx * dx + dy * dy;
  if (len2 == 0) {
    T ex = p.x - a.x, ey = p.y - a.y;
    return {ex * ex + ey * ey, T(1)};
  }
  T dot = (p.x - a.x) * dx + (p.y - a.y) * dy;
  if (dot <= 0) {
    T ex = p.x - a.x, ey = p.y - a.y;
    return {ex * ex + ey * ey, T(1)};
  }
  if (dot >= len2) {
    T ex = p.x - b.x, ey = p.y - b.y;
    return {ex * ex + ey * ey, T(1)};
  }
  T cross = dx * (p.y - a.y) - dy * (p.x - a.x);
  return {cross * cross, len2};
}

// Squared distance between closed segments, exact rational num/den.
// 0 when they intersect.
template <typename T>
std::pair<T, T> segment_segment_dist_sq(const Point2<T>& a, const Point2<T>& b,
                                        const Point2<T>& c,
                                        const Point2<T>& d) {
  int o1 = orient2(a, b, c);
  int o2 = orient2(a, b, d);
  int o3 = orient2(c, d, a);
  int o4 = orient2(c, d, b);
  bool cross = (o1 * o2 < 0 && o3 * o4 < 0);
  if (cross || on_segment2(c, a, b) || on_segment2(d, a, b) ||
      on_segment2(a, c, d) || on_segment2(b, c, d))
    return {T(0), T(1)};
  auto best = point_segment_dist_sq(a, c, d);
  auto cmp_keep = [&](std::pair<T, T> q) {
    if (q.first * best.second < best.first * q.second) best = q;
  };
  cmp_keep(point_segment_dist_sq(b, c, d));
  cmp_keep(point_segment_dist_sq(c, a, b));
  cmp_keep(point_segment_dist_sq(d, a, b));
  return best;
}

}  // namespace gridloc

#endif

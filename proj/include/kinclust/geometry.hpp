#ifndef KINCLUST_GEOMETRY_HPP
#define KINCLUST_GEOMETRY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kinclust/scalar.hpp"

namespace kinclust {

using Index = std::size_t;

/// A point moving with constant velocity on the line during t in [0,1],
/// stored by its positions at t=0 and t=1.
struct Trajectory {
  Scalar x0;
  Scalar x1;

  Scalar velocity() const { return x1 - x0; }

  friend bool operator==(const Trajectory& a, const Trajectory& b) {
    return a.x0 == b.x0 && a.x1 == b.x1;
  }
};

/// Lexicographic (x0, x1) order; the minimum is the bottom-leftmost trajectory.
inline bool bottom_left_less(const Trajectory& a, const Trajectory& b) {
  if (a.x0 != b.x0) return a.x0 < b.x0;
  return a.x1 < b.x1;
}

/// Sorted set of trajectory indices.
class Cluster {
 public:
  Cluster() = default;
  Cluster(std::initializer_list<Index> ids) : Cluster(std::vector<Index>(ids)) {}
  explicit Cluster(std::vector<Index> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
      throw std::invalid_argument("Cluster: repeated index");
  }

  static Cluster range(Index n) {
    Cluster c;
    c.ids_.resize(n);
    for (Index i = 0; i < n; ++i) c.ids_[i] = i;
    return c;
  }

  const std::vector<Index>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Index front() const { return ids_.front(); }

  bool contains(Index i) const { return std::binary_search(ids_.begin(), ids_.end(), i); }

  bool intersects(const Cluster& o) const {
    auto a = ids_.begin(), b = o.ids_.begin();
    while (a != ids_.end() && b != o.ids_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  bool subset_of(const Cluster& o) const {
    return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
  }

  friend Cluster intersection(const Cluster& a, const Cluster& b) {
    Cluster r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend Cluster difference(const Cluster& a, const Cluster& b) {
    Cluster r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend Cluster set_union(const Cluster& a, const Cluster& b) {
    Cluster r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }

  friend bool operator==(const Cluster&, const Cluster&) = default;
  friend auto operator<=>(const Cluster& a, const Cluster& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<Index> ids_;
};

inline std::string to_string(const Cluster& c) {
  std::string s = "{";
  for (Index i : c) {
    if (s.size() > 1) s += ",";
    s += std::to_string(i);
  }
  return s + "}";
}

/// Immutable, duplicate-free list of trajectories with stable indices.
class TrajectorySet {
 public:
  TrajectorySet() = default;
  explicit TrajectorySet(std::vector<Trajectory> items) : items_(std::move(items)) {
    std::vector<Index> order(items_.size());
    for (Index i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return bottom_left_less(items_[a], items_[b]); });
    for (Index i = 1; i < order.size(); ++i) {
      if (items_[order[i - 1]] == items_[order[i]])
        throw std::invalid_argument("TrajectorySet: trajectories " + std::to_string(order[i - 1]) +
                                    " and " + std::to_string(order[i]) + " are identical");
    }
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Trajectory& operator[](Index i) const { return items_[i]; }
  const std::vector<Trajectory>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  Cluster all() const { return Cluster::range(items_.size()); }

  friend bool operator==(const TrajectorySet&, const TrajectorySet&) = default;

 private:
  std::vector<Trajectory> items_;
};

/// A partition of a trajectory set. Empty clusters are allowed here; solver
/// outputs are normalized.
struct Clustering {
  std::vector<Cluster> clusters;

  std::size_t size() const { return clusters.size(); }

  std::size_t nonempty_count() const {
    return static_cast<std::size_t>(std::count_if(clusters.begin(), clusters.end(),
                                                  [](const Cluster& c) { return !c.empty(); }));
  }

  /// Drops empty clusters and sorts the rest, so equal partitions compare equal.
  Clustering normalized() const {
    Clustering r;
    for (const auto& c : clusters)
      if (!c.empty()) r.clusters.push_back(c);
    std::sort(r.clusters.begin(), r.clusters.end());
    return r;
  }

  friend bool operator==(const Clustering&, const Clustering&) = default;
  friend auto operator<=>(const Clustering& a, const Clustering& b) {
    return a.clusters <=> b.clusters;
  }
};

inline std::string to_string(const Clustering& c) {
  std::string s;
  for (const auto& cl : c.clusters) {
    if (!s.empty()) s += " ";
    s += to_string(cl);
  }
  return s;
}

/// Throws std::invalid_argument unless `c` partitions the index set of `s`.
inline void validate_clustering(const TrajectorySet& s, const Clustering& c) {
  std::vector<bool> seen(s.size(), false);
  for (const auto& cl : c.clusters) {
    for (Index i : cl) {
      if (i >= s.size()) throw std::invalid_argument("clustering: index out of range");
      if (seen[i]) throw std::invalid_argument("clustering: clusters overlap");
      seen[i] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("clustering: not every trajectory is assigned");
}

inline Scalar position(const Trajectory& s, const Scalar& t) {
  if (t < 0 || t > 1) throw std::domain_error("position: t outside [0,1]");
  return s.x0 + (s.x1 - s.x0) * t;
}

/// Position at t = 1/2.
inline Scalar midpoint(const Trajectory& s) {
  Scalar m = (s.x0 + s.x1) / 2;
  return m;
}

/// Integral over [0,1] of |a(t) - b(t)|, i.e. the area between two trajectories.
inline Scalar pairwise_diameter(const Trajectory& a, const Trajectory& b) {
  Scalar d0 = a.x0 - b.x0;
  Scalar d1 = a.x1 - b.x1;
  if (sgn(d0) * sgn(d1) >= 0) {
    Scalar r = abs(d0 + d1) / 2;
    return r;
  }
  Scalar cross = d0 / (d0 - d1);
  Scalar r = (abs(d0) * cross + abs(d1) * (1 - cross)) / 2;
  return r;
}

enum class Side { left, right };

struct Breakpoint {
  Scalar t;
  Scalar x;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear function on [0,1] given by its breakpoints.
class Envelope {
 public:
  Envelope() = default;
  explicit Envelope(std::vector<Breakpoint> points) : points_(std::move(points)) {}

  const std::vector<Breakpoint>& points() const { return points_; }

  Scalar value_at(const Scalar& t) const {
    if (points_.empty()) throw std::domain_error("Envelope: empty");
    if (t < points_.front().t || t > points_.back().t)
      throw std::domain_error("Envelope: t outside domain");
    auto it = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const Breakpoint& p, const Scalar& v) { return p.t < v; });
    if (it->t == t) return it->x;
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    Scalar r = lo.x + (hi.x - lo.x) * (t - lo.t) / (hi.t - lo.t);
    return r;
  }

  friend bool operator==(const Envelope&, const Envelope&) = default;

 private:
  std::vector<Breakpoint> points_;
};

namespace detail {

inline const Scalar& pick(Side side, const Scalar& a, const Scalar& b) {
  if (side == Side::left) return a < b ? a : b;
  return a > b ? a : b;
}

/// Drops breakpoints that lie on the segment joining their neighbours.
inline std::vector<Breakpoint> drop_collinear(std::vector<Breakpoint> pts) {
  if (pts.size() <= 2) return pts;
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  out.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const Breakpoint& a = out.back();
    const Breakpoint& b = pts[i];
    const Breakpoint& c = pts[i + 1];
    // (b - a) x (c - a) == 0
    if ((b.t - a.t) * (c.x - a.x) != (c.t - a.t) * (b.x - a.x)) out.push_back(b);
  }
  out.push_back(pts.back());
  return out;
}

/// Evaluates both envelopes at the union of their breakpoint times.
inline void sample_common(const Envelope& a, const Envelope& b, std::vector<Scalar>& times,
                          std::vector<Scalar>& va, std::vector<Scalar>& vb) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  times.clear();
  times.reserve(pa.size() + pb.size());
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    if (j == pb.size() || (i < pa.size() && pa[i].t < pb[j].t)) {
      times.push_back(pa[i++].t);
    } else if (i == pa.size() || pb[j].t < pa[i].t) {
      times.push_back(pb[j++].t);
    } else {
      times.push_back(pa[i].t);
      ++i;
      ++j;
    }
  }
  va.clear();
  vb.clear();
  va.reserve(times.size());
  vb.reserve(times.size());
  for (const auto& t : times) {
    va.push_back(a.value_at(t));
    vb.push_back(b.value_at(t));
  }
}

inline Envelope merge_envelopes(const Envelope& a, const Envelope& b, Side side) {
  std::vector<Scalar> times, va, vb;
  sample_common(a, b, times, va, vb);
  std::vector<Breakpoint> out;
  out.reserve(2 * times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    out.push_back({times[i], pick(side, va[i], vb[i])});
    if (i + 1 == times.size()) break;
    Scalar d0 = va[i] - vb[i];
    Scalar d1 = va[i + 1] - vb[i + 1];
    if (sgn(d0) * sgn(d1) < 0) {
      Scalar frac = d0 / (d0 - d1);
      Scalar t = times[i] + (times[i + 1] - times[i]) * frac;
      Scalar x = va[i] + (va[i + 1] - va[i]) * frac;
      out.push_back({t, x});
    }
  }
  return Envelope(drop_collinear(std::move(out)));
}

inline Envelope envelope_of(const TrajectorySet& s, const std::vector<Index>& ids, std::size_t lo,
                            std::size_t hi, Side side) {
  if (hi - lo == 1) {
    const Trajectory& tr = s[ids[lo]];
    return Envelope({{Scalar(0), tr.x0}, {Scalar(1), tr.x1}});
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return merge_envelopes(envelope_of(s, ids, lo, mid, side), envelope_of(s, ids, mid, hi, side),
                         side);
}

}  // namespace detail

/// Left (pointwise minimum) or right (pointwise maximum) side of a nonempty
/// cluster, by divide and conquer.
inline Envelope envelope(const TrajectorySet& s, const Cluster& c, Side side) {
  if (c.empty()) throw std::domain_error("envelope: empty cluster");
  return detail::envelope_of(s, c.ids(), 0, c.size(), side);
}

/// Exact area between two envelopes; `right` must dominate `left`.
inline Scalar area_between(const Envelope& left, const Envelope& right) {
  std::vector<Scalar> times, vl, vr;
  detail::sample_common(left, right, times, vl, vr);
  Scalar area = 0;
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    Scalar w = (vr[i] - vl[i]) + (vr[i + 1] - vl[i + 1]);
    area += w * (times[i + 1] - times[i]);
  }
  area /= 2;
  return area;
}

/// Area of the cluster's span: the integral of its width over [0,1].
inline Scalar diameter(const TrajectorySet& s, const Cluster& c) {
  if (c.size() <= 1) return Scalar(0);
  if (c.size() == 2) return pairwise_diameter(s[c.ids()[0]], s[c.ids()[1]]);
  return area_between(envelope(s, c, Side::left), envelope(s, c, Side::right));
}

/// Index of the member with minimum x0, ties broken by minimum x1.
inline Index bottom_leftmost_index(const TrajectorySet& s, const Cluster& c) {
  if (c.empty()) throw std::domain_error("bottom_leftmost: empty cluster");
  Index best = c.front();
  for (Index i : c)
    if (bottom_left_less(s[i], s[best])) best = i;
  return best;
}

inline const Trajectory& bottom_leftmost(const TrajectorySet& s, const Cluster& c) {
  return s[bottom_leftmost_index(s, c)];
}

}  // namespace kinclust

#endif  // KINCLUST_GEOMETRY_HPP

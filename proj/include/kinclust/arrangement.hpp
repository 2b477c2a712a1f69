#ifndef KINCLUST_ARRANGEMENT_HPP
#define KINCLUST_ARRANGEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kinclust/geometry.hpp"

namespace kinclust {

enum class HoleKind { unbounded_left, bounded, unbounded_right };

inline const char* to_string(HoleKind k) {
  switch (k) {
    case HoleKind::unbounded_left: return "unbounded_left";
    case HoleKind::unbounded_right: return "unbounded_right";
    default: return "bounded";
  }
}

/// A positive-area face of the arrangement of trajectories in the strip,
/// identified by the set of trajectories to its left.
struct Hole {
  Cluster left_set;
  Scalar t_lo;
  Scalar t_hi;
  HoleKind kind = HoleKind::bounded;
};

struct HoleSet {
  std::vector<Hole> holes;
  std::size_t size() const { return holes.size(); }
  auto begin() const { return holes.begin(); }
  auto end() const { return holes.end(); }
  const Hole& operator[](std::size_t i) const { return holes[i]; }
};

/// Times in (0,1) at which some pair of trajectories cross, plus 0 and 1,
/// sorted and deduplicated.
inline std::vector<Scalar> event_times(const TrajectorySet& s) {
  std::vector<Scalar> times{Scalar(0), Scalar(1)};
  for (Index i = 0; i < s.size(); ++i) {
    for (Index j = i + 1; j < s.size(); ++j) {
      Scalar d0 = s[i].x0 - s[j].x0;
      Scalar d1 = s[i].x1 - s[j].x1;
      if (sgn(d0) * sgn(d1) < 0) {
        Scalar t = d0 / (d0 - d1);
        times.push_back(t);
      }
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

/// Trajectory indices sorted by position at time t. Ties (a crossing exactly
/// at t) are broken by index.
inline std::vector<Index> order_at(const TrajectorySet& s, const Scalar& t) {
  std::vector<Scalar> pos;
  pos.reserve(s.size());
  for (const auto& tr : s) pos.push_back(position(tr, t));
  std::vector<Index> order(s.size());
  for (Index i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return pos[a] < pos[b]; });
  return order;
}

/// Slab sweep. Between consecutive crossing times the left-to-right order is
/// fixed and strict, so every prefix of it is the left set of a face piece;
/// pieces with equal left sets belong to the same face (the gap function of a
/// fixed left set is concave, hence positive on a single interval).
inline HoleSet compute_holes(const TrajectorySet& s) {
  if (s.empty()) throw std::domain_error("compute_holes: empty trajectory set");
  const auto times = event_times(s);

  std::map<Cluster, std::size_t> slot;
  HoleSet result;
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    const Scalar& lo = times[k];
    const Scalar& hi = times[k + 1];
    Scalar mid = (lo + hi) / 2;
    const auto order = order_at(s, mid);
    std::vector<Index> prefix;
    prefix.reserve(s.size());
    for (std::size_t j = 0; j <= s.size(); ++j) {
      if (j > 0) prefix.push_back(order[j - 1]);
      Cluster left(prefix);
      auto [it, inserted] = slot.try_emplace(left, result.holes.size());
      if (inserted) {
        HoleKind kind = j == 0 ? HoleKind::unbounded_left
                        : j == s.size() ? HoleKind::unbounded_right
                                        : HoleKind::bounded;
        result.holes.push_back({std::move(left), lo, hi, kind});
      } else {
        Hole& h = result.holes[it->second];
        if (lo < h.t_lo) h.t_lo = lo;
        if (hi > h.t_hi) h.t_hi = hi;
      }
    }
  }
  return result;
}

/// (S_l(h), S_r(h)).
inline std::pair<Cluster, Cluster> side_partition(const TrajectorySet& s, const Hole& h) {
  return {h.left_set, difference(s.all(), h.left_set)};
}

/// A hole lies inside span(C) exactly when C has members on both of its sides:
/// no trajectory enters a face during the face's time extent, so one member on
/// each side brackets the whole face. Tangential contact at a corner is
/// measure zero and counts as inside.
inline bool hole_within_span(const TrajectorySet& s, const Hole& h, const Cluster& c) {
  bool left = false, right = false;
  for (Index i : c) {
    if (h.left_set.contains(i)) left = true; else right = true;
    if (left && right) return true;
  }
  (void)s;
  return false;
}

inline bool is_covered(const TrajectorySet& s, const Hole& h, const Clustering& clustering) {
  return std::any_of(clustering.clusters.begin(), clustering.clusters.end(),
                     [&](const Cluster& c) { return hole_within_span(s, h, c); });
}

inline bool separates(const TrajectorySet& s, const Hole& h, const Cluster& a, const Cluster& b) {
  (void)s;
  auto on_left = [&](const Cluster& c) {
    return std::all_of(c.begin(), c.end(), [&](Index i) { return h.left_set.contains(i); });
  };
  auto on_right = [&](const Cluster& c) {
    return std::none_of(c.begin(), c.end(), [&](Index i) { return h.left_set.contains(i); });
  };
  return (on_left(a) && on_right(b)) || (on_right(a) && on_left(b));
}

/// Every pair of distinct nonempty clusters is separated by a hole that no
/// cluster covers.
inline bool is_well_separated(const TrajectorySet& s, const HoleSet& holes,
                              const Clustering& clustering) {
  std::vector<const Hole*> uncovered;
  for (const auto& h : holes)
    if (!is_covered(s, h, clustering)) uncovered.push_back(&h);
  std::vector<const Cluster*> parts;
  for (const auto& c : clustering.clusters)
    if (!c.empty()) parts.push_back(&c);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      bool ok = std::any_of(uncovered.begin(), uncovered.end(),
                            [&](const Hole* h) { return separates(s, *h, *parts[a], *parts[b]); });
      if (!ok) return false;
    }
  }
  return true;
}

inline bool is_well_separated(const TrajectorySet& s, const Clustering& clustering) {
  return is_well_separated(s, compute_holes(s), clustering);
}

/// The side sets of all holes ordered by inclusion. Elements are sorted by
/// (size, contents), so index 0 is the empty set and the last index is S.
class SeparatorPoset {
 public:
  SeparatorPoset() = default;
  explicit SeparatorPoset(std::vector<Cluster> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), [](const Cluster& a, const Cluster& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    supersets_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t j = i + 1; j < elements_.size(); ++j)
        if (elements_[i].size() < elements_[j].size() && elements_[i].subset_of(elements_[j]))
          supersets_[i].push_back(j);
  }

  std::size_t size() const { return elements_.size(); }
  const Cluster& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Cluster>& elements() const { return elements_; }

  /// Indices of all strict supersets of element i (the dag's reachability).
  const std::vector<std::size_t>& supersets(std::size_t i) const { return supersets_[i]; }

  std::size_t index_of(const Cluster& c) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == c) return i;
    throw std::out_of_range("SeparatorPoset: not an element");
  }

  std::size_t source() const { return 0; }
  std::size_t sink() const { return elements_.size() - 1; }

  /// Cover relation: i -> j with no element strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j : supersets_[i]) {
        bool direct = true;
        for (std::size_t m : supersets_[i]) {
          if (m != j && elements_[m].size() < elements_[j].size() &&
              elements_[m].subset_of(elements_[j])) {
            direct = false;
            break;
          }
        }
        if (direct) edges.emplace_back(i, j);
      }
    }
    return edges;
  }

 private:
  std::vector<Cluster> elements_;
  std::vector<std::vector<std::size_t>> supersets_;
};

inline SeparatorPoset build_poset(const TrajectorySet& s, const HoleSet& holes) {
  std::vector<Cluster> sides;
  sides.reserve(2 * holes.size());
  for (const auto& h : holes) {
    auto [l, r] = side_partition(s, h);
    sides.push_back(std::move(l));
    sides.push_back(std::move(r));
  }
  return SeparatorPoset(std::move(sides));
}

}  // namespace kinclust

#endif  // KINCLUST_ARRANGEMENT_HPP

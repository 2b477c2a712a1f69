#ifndef KINCLUST_MD_SOLVERS_HPP
#define KINCLUST_MD_SOLVERS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinclust/geometry.hpp"

namespace kinclust {

struct MdSolution {
  Clustering clustering;
  Scalar value;
  std::string method;
  /// GP: bottom-leftmost representative of each cluster, pairwise more than D
  /// apart. k-center: the centers.
  std::vector<Index> witnesses;
  /// Binary search bookkeeping: final interval [a, b], precision delta.
  std::optional<Scalar> a, b, delta;
  std::size_t iterations = 0;
};

inline Scalar md_value(const TrajectorySet& s, const Clustering& c) {
  Scalar best = 0;
  for (const auto& cl : c.clusters) {
    Scalar d = diameter(s, cl);
    if (d > best) best = d;
  }
  return best;
}

struct GreedyPartition {
  Clustering clustering;
  std::vector<Index> representatives;
  std::size_t size() const { return clustering.size(); }
};

/// Repeatedly takes the bottom-leftmost remaining trajectory s and removes
/// every remaining s' with diam({s, s'}) <= D as one cluster. O(n^2).
inline GreedyPartition greedy_partition(const TrajectorySet& s, const Scalar& d) {
  if (d < 0) throw std::domain_error("gp: D must be nonnegative");
  std::vector<Index> remaining(s.size());
  for (Index i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::sort(remaining.begin(), remaining.end(),
            [&](Index a, Index b) { return bottom_left_less(s[a], s[b]); });

  GreedyPartition out;
  while (!remaining.empty()) {
    const Index rep = remaining.front();
    std::vector<Index> members, rest;
    for (Index i : remaining) {
      if (pairwise_diameter(s[rep], s[i]) <= d) members.push_back(i);
      else rest.push_back(i);
    }
    out.clustering.clusters.emplace_back(std::move(members));
    out.representatives.push_back(rep);
    remaining = std::move(rest);
  }
  return out;
}

inline MdSolution gp(const TrajectorySet& s, const Scalar& d) {
  GreedyPartition part = greedy_partition(s, d);
  MdSolution sol;
  sol.clustering = part.clustering.normalized();
  sol.value = md_value(s, sol.clustering);
  sol.method = "gp";
  sol.witnesses = std::move(part.representatives);
  return sol;
}

/// (4 + sqrt2) with sqrt2 rounded up, used for the binary-search precision.
inline Scalar gp_ratio_denominator() {
  Scalar r = 4 + sqrt2_upper();
  return r;
}

/// Approximate binary search for the smallest D at which gp returns at most
/// k clusters; the final clustering has md at most ((4+sqrt2)/2 + eps) opt.
/// All arithmetic is exact.
///
/// gp's cluster count is not known to be monotone in D; as in the original
/// bottleneck scheme, the bracket [a, b] only relies on the feasibility of
/// the values actually tested.
inline MdSolution bsearch(const TrajectorySet& s, std::size_t k, const Scalar& eps) {
  if (k < 1) throw std::domain_error("bsearch: k must be positive");
  if (eps <= 0) throw std::domain_error("bsearch: eps must be positive");
  MdSolution sol;
  sol.method = "bsearch";
  if (k >= s.size()) {
    for (Index i = 0; i < s.size(); ++i) sol.clustering.clusters.push_back(Cluster{i});
    sol.value = 0;
    sol.witnesses.resize(s.size());
    for (Index i = 0; i < s.size(); ++i) sol.witnesses[i] = i;
    return sol;
  }

  Scalar min_pair;
  bool first = true;
  for (Index i = 0; i < s.size(); ++i) {
    for (Index j = i + 1; j < s.size(); ++j) {
      Scalar d = pairwise_diameter(s[i], s[j]);
      if (first || d < min_pair) min_pair = d;
      first = false;
    }
  }

  Scalar a = 0;
  Scalar b = diameter(s, s.all());
  Scalar delta = 2 * eps / gp_ratio_denominator() * min_pair;
  std::optional<GreedyPartition> last;
  std::size_t iterations = 0;
  while (b - a > delta) {
    Scalar d = (a + b) / 2;
    GreedyPartition part = greedy_partition(s, d);
    if (part.size() > k) a = d; else b = d;
    last = std::move(part);
    ++iterations;
  }
  if (!last || last->size() > k) last = greedy_partition(s, b);

  sol.clustering = last->clustering.normalized();
  sol.value = md_value(s, sol.clustering);
  sol.witnesses = last->representatives;
  sol.a = a;
  sol.b = b;
  sol.delta = delta;
  sol.iterations = iterations;
  return sol;
}

/// Centers X and the induced assignment. assignment[i] is a position in
/// `centers`.
struct CenterSet {
  std::vector<Index> centers;
  std::vector<std::size_t> assignment;
  Scalar radius;
};

struct KCenterResult {
  CenterSet centers;
  Clustering clustering;
};

/// Farthest-point greedy for metric k-center under d = pairwise_diameter,
/// seeded at the bottom-leftmost trajectory. Each trajectory joins its
/// nearest center; ties go to the center with the lowest trajectory index.
inline KCenterResult kcenter_gonzalez(const TrajectorySet& s, std::size_t k) {
  if (k < 1 || k > s.size()) throw std::domain_error("kcenter_gonzalez: k must satisfy 1 <= k <= n");
  const std::size_t n = s.size();
  CenterSet cs;
  cs.centers.push_back(bottom_leftmost_index(s, s.all()));

  std::vector<Scalar> nearest(n);
  for (Index i = 0; i < n; ++i) nearest[i] = pairwise_diameter(s[i], s[cs.centers[0]]);
  while (cs.centers.size() < k) {
    Index far = 0;
    for (Index i = 1; i < n; ++i)
      if (nearest[i] > nearest[far]) far = i;
    cs.centers.push_back(far);
    for (Index i = 0; i < n; ++i) {
      Scalar d = pairwise_diameter(s[i], s[far]);
      if (d < nearest[i]) nearest[i] = d;
    }
  }

  cs.assignment.assign(n, 0);
  cs.radius = 0;
  for (Index i = 0; i < n; ++i) {
    std::size_t best = 0;
    Scalar best_d = pairwise_diameter(s[i], s[cs.centers[0]]);
    for (std::size_t c = 1; c < cs.centers.size(); ++c) {
      Scalar d = pairwise_diameter(s[i], s[cs.centers[c]]);
      if (d < best_d || (d == best_d && cs.centers[c] < cs.centers[best])) {
        best = c;
        best_d = d;
      }
    }
    cs.assignment[i] = best;
    if (best_d > cs.radius) cs.radius = best_d;
  }

  std::vector<std::vector<Index>> groups(cs.centers.size());
  for (Index i = 0; i < n; ++i) groups[cs.assignment[i]].push_back(i);
  KCenterResult out;
  for (auto& g : groups) out.clustering.clusters.emplace_back(std::move(g));
  out.clustering = out.clustering.normalized();
  out.centers = std::move(cs);
  return out;
}

}  // namespace kinclust

#endif  // KINCLUST_MD_SOLVERS_HPP

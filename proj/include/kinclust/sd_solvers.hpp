#ifndef KINCLUST_SD_SOLVERS_HPP
#define KINCLUST_SD_SOLVERS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kinclust/arrangement.hpp"
#include "kinclust/geometry.hpp"

namespace kinclust {

enum class Objective { sum, max };

inline const char* to_string(Objective o) { return o == Objective::sum ? "sd" : "md"; }

/// One split step: `cluster` of the current clustering is cut along `hole`.
struct SplitStep {
  Hole hole;
  Cluster cluster;
};

using GoodSequence = std::vector<SplitStep>;

struct SdSolution {
  Clustering clustering;
  Scalar value;
  std::string method;
  Objective objective = Objective::sum;
  /// False when no clustering with the requested number of clusters exists
  /// for the method; `clustering` and `value` then describe `achieved_k`.
  bool feasible = true;
  std::size_t achieved_k = 0;
  std::optional<GoodSequence> good_sequence;
  /// Nested separator sets C_1 < ... < C_{k-1} that define the clustering.
  std::optional<std::vector<Cluster>> chain;
};

/// Memoized cluster diameters.
class DiameterCache {
 public:
  explicit DiameterCache(const TrajectorySet& s) : s_(&s) {}

  const Scalar& operator()(const Cluster& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, diameter(*s_, c)).first;
    return it->second;
  }

 private:
  const TrajectorySet* s_;
  std::map<Cluster, Scalar> cache_;
};

inline Scalar sd_value(const TrajectorySet& s, const Clustering& c) {
  Scalar total = 0;
  for (const auto& cl : c.clusters) total += diameter(s, cl);
  return total;
}

/// Applies the splits of `seq` to {S}. Throws std::invalid_argument if a
/// step names a cluster not in the current clustering or a hole outside the
/// cluster's span.
inline Clustering replay_good_sequence(const TrajectorySet& s, const GoodSequence& seq) {
  Clustering current{{s.all()}};
  for (const auto& step : seq) {
    auto it = std::find(current.clusters.begin(), current.clusters.end(), step.cluster);
    if (it == current.clusters.end())
      throw std::invalid_argument("good sequence: cluster not in current clustering");
    if (!hole_within_span(s, step.hole, step.cluster))
      throw std::invalid_argument("good sequence: hole not within the cluster's span");
    Cluster left = intersection(step.cluster, step.hole.left_set);
    Cluster right = difference(step.cluster, step.hole.left_set);
    current.clusters.erase(it);
    current.clusters.push_back(std::move(left));
    current.clusters.push_back(std::move(right));
  }
  return current.normalized();
}

namespace detail {

inline void check_k(const TrajectorySet& s, std::size_t k, const char* who) {
  if (k < 1 || k > s.size())
    throw std::domain_error(std::string(who) + ": k must satisfy 1 <= k <= n");
}

/// Value first, then the lexicographically smaller canonical clustering.
inline bool better(const Scalar& v, const Clustering& c, const Scalar& best_v,
                   const Clustering& best_c) {
  if (v != best_v) return v < best_v;
  return c < best_c;
}

}  // namespace detail

/// Exact optimum for a fixed k: depth-first enumeration of all clusterings
/// reachable by k-1 hole splits starting from {S}. Every optimal clustering
/// arises this way, so the minimum over the reachable set is opt_sd(S, k).
inline SdSolution sd_exact_goodseq(const TrajectorySet& s, std::size_t k) {
  detail::check_k(s, k, "sd_exact_goodseq");
  const HoleSet holes = compute_holes(s);
  DiameterCache diam(s);

  SdSolution best;
  best.method = "goodseq";
  best.achieved_k = k;
  bool have_best = false;

  std::set<std::vector<Cluster>> visited;
  GoodSequence path;

  std::function<void(const std::vector<Cluster>&)> explore = [&](const std::vector<Cluster>& state) {
    if (state.size() == k) {
      Scalar v = 0;
      for (const auto& c : state) v += diam(c);
      Clustering cand{state};
      if (!have_best || detail::better(v, cand, best.value, best.clustering)) {
        have_best = true;
        best.value = v;
        best.clustering = std::move(cand);
        best.good_sequence = path;
      }
      return;
    }
    for (std::size_t ci = 0; ci < state.size(); ++ci) {
      const Cluster& c = state[ci];
      if (c.size() < 2) continue;
      for (const auto& h : holes) {
        if (!hole_within_span(s, h, c)) continue;
        std::vector<Cluster> next;
        next.reserve(state.size() + 1);
        for (std::size_t j = 0; j < state.size(); ++j)
          if (j != ci) next.push_back(state[j]);
        next.push_back(intersection(c, h.left_set));
        next.push_back(difference(c, h.left_set));
        std::sort(next.begin(), next.end());
        if (!visited.insert(next).second) continue;
        path.push_back({h, c});
        explore(next);
        path.pop_back();
      }
    }
  };
  explore({s.all()});
  if (!have_best) throw std::logic_error("sd_exact_goodseq: no clustering reached");
  return best;
}

/// Optimal well-separated clustering by dynamic programming over the
/// separator poset. table(C, j) is the best objective for splitting S \ C
/// into j nonempty clusters along a chain of strict supersets of C.
inline SdSolution wellsep_dp(const TrajectorySet& s, std::size_t k, Objective objective) {
  detail::check_k(s, k, objective == Objective::sum ? "sd_wellsep_dp" : "md_wellsep_dp");
  const HoleSet holes = compute_holes(s);
  const SeparatorPoset poset = build_poset(s, holes);
  const std::size_t m = poset.size();
  const std::size_t src = poset.source();
  const std::size_t sink = poset.sink();
  DiameterCache diam(s);

  auto combine = [objective](const Scalar& a, const Scalar& b) -> Scalar {
    if (objective == Objective::sum) return a + b;
    return a > b ? a : b;
  };

  // table[j][i], j = 1..k; next[j][i] is the chosen superset for traceback.
  std::vector<std::vector<std::optional<Scalar>>> table(k + 1, std::vector<std::optional<Scalar>>(m));
  std::vector<std::vector<std::size_t>> next(k + 1, std::vector<std::size_t>(m, sink));
  const Cluster all = s.all();

  for (std::size_t i = 0; i < m; ++i)
    if (i != sink) table[1][i] = diam(difference(all, poset[i]));

  for (std::size_t j = 2; j <= k; ++j) {
    for (std::size_t ii = m; ii-- > 0;) {
      if (ii == sink) continue;
      for (std::size_t sup : poset.supersets(ii)) {
        if (sup == sink || !table[j - 1][sup]) continue;
        Scalar cand = combine(diam(difference(poset[sup], poset[ii])), *table[j - 1][sup]);
        if (!table[j][ii] || cand < *table[j][ii]) {
          table[j][ii] = std::move(cand);
          next[j][ii] = sup;
        }
      }
    }
  }

  SdSolution sol;
  sol.method = "wellsep";
  sol.objective = objective;
  std::size_t j = k;
  while (j > 1 && !table[j][src]) --j;
  sol.feasible = j == k;
  sol.achieved_k = j;
  sol.value = *table[j][src];

  std::vector<Cluster> chain;
  std::size_t at = src;
  for (std::size_t layer = j; layer > 1; --layer) {
    at = next[layer][at];
    chain.push_back(poset[at]);
  }
  Clustering clustering;
  Cluster prev;
  for (const auto& c : chain) {
    clustering.clusters.push_back(difference(c, prev));
    prev = c;
  }
  clustering.clusters.push_back(difference(all, prev));
  sol.clustering = clustering.normalized();
  sol.chain = std::move(chain);
  return sol;
}

inline SdSolution sd_wellsep_dp(const TrajectorySet& s, std::size_t k) {
  return wellsep_dp(s, k, Objective::sum);
}

inline SdSolution md_wellsep_dp(const TrajectorySet& s, std::size_t k) {
  return wellsep_dp(s, k, Objective::max);
}

}  // namespace kinclust

#endif  // KINCLUST_SD_SOLVERS_HPP

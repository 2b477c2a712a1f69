#ifndef KINCLUST_TESTS_SUPPORT_HPP
#define KINCLUST_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kinclust/kinclust.hpp"

namespace kinclust::testing {

inline Scalar q(const char* text) { return parse_scalar(text); }

inline Trajectory traj(const char* x0, const char* x1) { return {q(x0), q(x1)}; }

inline TrajectorySet make_set(std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<Trajectory> items;
  for (auto [a, b] : rows) items.push_back(traj(a, b));
  return TrajectorySet(std::move(items));
}

/// x = 0 and x = 1 for all t.
inline TrajectorySet two_verticals() { return make_set({{"0", "0"}, {"1", "1"}}); }

/// Two crossing diagonals and a vertical at 0.2; crossings at t = 0.1, 0.5, 0.9.
inline TrajectorySet three_crossing() { return make_set({{"0", "2"}, {"2", "0"}, {"0.2", "0.2"}}); }

/// The four trajectories of the max-diameter counterexample, with sqrt(2)
/// rounded to 1.4142135624.
inline TrajectorySet fig5() {
  return make_set({{"-2.4142135624", "1"}, {"-0.9", "2"}, {"0", "0"}, {"0.1", "-0.4142135624"}});
}

/// Five trajectories drawn over t in [0,4]; the shaded 3-clustering is
/// {{0,2},{1},{3,4}}.
inline TrajectorySet fig3() {
  return make_set({{"0.5", "0.5"}, {"1.3", "5"}, {"3", "4"}, {"5", "2"}, {"6", "6"}});
}

inline Clustering fig3_clustering() { return Clustering{{Cluster{0, 2}, Cluster{1}, Cluster{3, 4}}}; }

/// Six trajectories of the separator-poset figure.
inline TrajectorySet fig4() {
  return make_set({{"0", "1.5"}, {"0.7", "11"}, {"3", "4.5"}, {"4", "8"}, {"6", "3"}, {"10", "6"}});
}

/// Four trajectories whose full span is the highlighted region of the first
/// figure (coordinates scaled by the drawing's 2.5 height).
inline TrajectorySet fig1() {
  return make_set({{"0", "6.15385"}, {"2.46154", "2.46154"}, {"4.92308", "1.23077"}, {"8", "4.30769"}});
}

inline TrajectorySet random_set(std::uint64_t seed, std::size_t n) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.n = n;
  return generate_instance(cfg);
}

/// Random subset of {0..n-1} with at least `min_size` members.
inline Cluster random_cluster(std::uint64_t& state, std::size_t n, std::size_t min_size = 1) {
  for (;;) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t bits = state >> 20;
    std::vector<Index> ids;
    for (Index i = 0; i < n; ++i)
      if (bits & (std::uint64_t{1} << i)) ids.push_back(i);
    if (ids.size() >= min_size) return Cluster(ids);
  }
}

/// Width max - min over a cluster at time t, directly from the trajectories.
inline Scalar brute_width(const TrajectorySet& s, const Cluster& c, const Scalar& t) {
  Scalar lo = position(s[c.front()], t), hi = lo;
  for (Index i : c) {
    Scalar x = position(s[i], t);
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return hi - lo;
}

/// Exact area of a span without envelopes: between consecutive pairwise
/// crossing times the width is linear, so the trapezoid rule is exact there.
inline Scalar brute_area(const TrajectorySet& s, const Cluster& c) {
  if (c.size() <= 1) return Scalar(0);
  std::vector<Scalar> times{Scalar(0), Scalar(1)};
  for (Index i : c) {
    for (Index j : c) {
      if (i >= j) continue;
      Scalar d0 = s[i].x0 - s[j].x0, d1 = s[i].x1 - s[j].x1;
      if (sgn(d0) * sgn(d1) < 0) {
        Scalar t = d0 / (d0 - d1);
        times.push_back(t);
      }
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  Scalar area = 0;
  for (std::size_t i = 0; i + 1 < times.size(); ++i)
    area += (brute_width(s, c, times[i]) + brute_width(s, c, times[i + 1])) * (times[i + 1] - times[i]) / 2;
  return area;
}

/// Additive recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::vector<std::vector<mpz_class>> stirling2_table(unsigned n_max) {
  std::vector<std::vector<mpz_class>> t(n_max + 1, std::vector<mpz_class>(n_max + 1, 0));
  t[0][0] = 1;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 1; k <= n; ++k) t[n][k] = k * t[n - 1][k] + t[n - 1][k - 1];
  return t;
}

/// Minimal well-formedness check: every element is closed in LIFO order and
/// attribute quotes balance.
inline bool xml_well_formed(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = doc.find('<', pos)) != std::string::npos) {
    std::size_t end = doc.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = doc.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;
    stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
  }
  return stack.empty();
}

inline std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace kinclust::testing

#endif  // KINCLUST_TESTS_SUPPORT_HPP

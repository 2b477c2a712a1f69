#ifndef KINCLUST_ORACLE_HPP
#define KINCLUST_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kinclust/arrangement.hpp"
#include "kinclust/geometry.hpp"
#include "kinclust/md_solvers.hpp"
#include "kinclust/sd_solvers.hpp"

// Exhaustive ground truth. Nothing here calls the solver algorithms; only
// core geometry and the arrangement predicates.

namespace kinclust::oracle {

inline constexpr std::size_t kMaxExhaustiveN = 12;

/// All partitions of {0..n-1} into at most k nonempty blocks, as restricted
/// growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]), with a[i] < k.
class PartitionStream {
 public:
  PartitionStream(std::size_t n, std::size_t k) : n_(n), k_(k), rgs_(n, 0), prefix_max_(n, 0) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("enumerate_partitions: need 1 <= k <= n");
    if (n > kMaxExhaustiveN) throw std::domain_error("enumerate_partitions: n > 12 refused");
  }

  /// Advances to the next partition; the first call yields the one-block
  /// partition. Returns false once exhausted.
  bool next() {
    if (!started_) {
      started_ = true;
      return true;
    }
    for (std::size_t i = n_; i-- > 1;) {
      if (rgs_[i] + 1 < k_ && rgs_[i] <= prefix_max_[i - 1]) {
        ++rgs_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
        for (std::size_t j = i + 1; j < n_; ++j) {
          rgs_[j] = 0;
          prefix_max_[j] = prefix_max_[i];
        }
        return true;
      }
    }
    return false;
  }

  const std::vector<std::size_t>& labels() const { return rgs_; }
  std::size_t blocks() const { return n_ == 0 ? 0 : prefix_max_[n_ - 1] + 1; }

  /// Block masks (bit i set for member i), in order of first member.
  std::vector<std::uint32_t> masks() const {
    std::vector<std::uint32_t> out(blocks(), 0);
    for (std::size_t i = 0; i < n_; ++i) out[rgs_[i]] |= std::uint32_t{1} << i;
    return out;
  }

  Clustering clustering() const {
    std::vector<std::vector<Index>> groups(blocks());
    for (std::size_t i = 0; i < n_; ++i) groups[rgs_[i]].push_back(i);
    Clustering c;
    for (auto& g : groups) c.clusters.emplace_back(std::move(g));
    return c;
  }

 private:
  std::size_t n_, k_;
  std::vector<std::size_t> rgs_;
  std::vector<std::size_t> prefix_max_;
  bool started_ = false;
};

inline PartitionStream enumerate_partitions(std::size_t n, std::size_t k) {
  return PartitionStream(n, k);
}

/// Stirling number of the second kind by the alternating sum
/// (1/k!) sum_i (-1)^(k-i) C(k,i) i^n.
inline mpz_class stirling2(unsigned long n, unsigned long k) {
  if (k > n) throw std::domain_error("stirling2: need k <= n");
  mpz_class sum = 0;
  for (unsigned long i = 0; i <= k; ++i) {
    mpz_class binom, power;
    mpz_bin_uiui(binom.get_mpz_t(), k, i);
    mpz_ui_pow_ui(power.get_mpz_t(), i, n);
    mpz_class term = binom * power;
    if ((k - i) % 2 == 0) sum += term; else sum -= term;
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  mpz_class r = sum / fact;
  return r;
}

/// Diameter of every subset of S, indexed by bitmask.
inline std::vector<Scalar> subset_diameters(const TrajectorySet& s) {
  if (s.size() > kMaxExhaustiveN) throw std::domain_error("oracle: n > 12 refused");
  const std::uint32_t count = std::uint32_t{1} << s.size();
  std::vector<Scalar> out(count);
  std::vector<Index> ids;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    ids.clear();
    for (Index i = 0; i < s.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) ids.push_back(i);
    if (ids.size() >= 2) out[mask] = diameter(s, Cluster(ids));
  }
  return out;
}

namespace detail {

inline Scalar objective_value(const std::vector<std::uint32_t>& masks,
                              const std::vector<Scalar>& diam, Objective obj) {
  Scalar v = 0;
  for (auto m : masks) {
    if (obj == Objective::sum) v += diam[m];
    else if (diam[m] > v) v = diam[m];
  }
  return v;
}

struct Best {
  bool have = false;
  Scalar value;
  Clustering clustering;

  /// Smaller value, then more nonempty clusters, then the lexicographically
  /// smaller canonical clustering.
  bool offer(const Scalar& v, const PartitionStream& p) {
    if (have && v > value) return false;
    Clustering c = p.clustering();
    if (have && v == value) {
      if (c.size() < clustering.size()) return false;
      if (c.size() == clustering.size() && !(c < clustering)) return false;
    }
    have = true;
    value = v;
    clustering = std::move(c);
    return true;
  }
};

inline Best brute(const TrajectorySet& s, std::size_t k, Objective obj) {
  if (s.size() > kMaxExhaustiveN) throw std::domain_error("oracle: n > 12 refused");
  const auto diam = subset_diameters(s);
  Best best;
  auto stream = enumerate_partitions(s.size(), k);
  while (stream.next()) best.offer(objective_value(stream.masks(), diam, obj), stream);
  return best;
}

}  // namespace detail

inline SdSolution brute_opt_sd(const TrajectorySet& s, std::size_t k) {
  auto best = detail::brute(s, k, Objective::sum);
  SdSolution sol;
  sol.clustering = std::move(best.clustering);
  sol.value = std::move(best.value);
  sol.method = "brute";
  sol.achieved_k = sol.clustering.size();
  return sol;
}

inline MdSolution brute_opt_md(const TrajectorySet& s, std::size_t k) {
  auto best = detail::brute(s, k, Objective::max);
  MdSolution sol;
  sol.clustering = std::move(best.clustering);
  sol.value = std::move(best.value);
  sol.method = "brute";
  return sol;
}

/// Optimum over well-separated clusterings with exactly k nonempty clusters.
/// `feasible` is false if there is none.
inline SdSolution brute_opt_wellsep(const TrajectorySet& s, std::size_t k, Objective obj) {
  const auto diam = subset_diameters(s);
  const HoleSet holes = compute_holes(s);
  detail::Best best;
  auto stream = enumerate_partitions(s.size(), k);
  while (stream.next()) {
    if (stream.blocks() != k) continue;
    Scalar v = detail::objective_value(stream.masks(), diam, obj);
    if (best.have && v > best.value) continue;
    if (!is_well_separated(s, holes, stream.clustering())) continue;
    best.offer(v, stream);
  }
  SdSolution sol;
  sol.method = "brute-wellsep";
  sol.objective = obj;
  sol.feasible = best.have;
  if (best.have) {
    sol.clustering = std::move(best.clustering);
    sol.value = std::move(best.value);
    sol.achieved_k = k;
  }
  return sol;
}

/// Midpoint-rule integral of the width max - min over `steps` equal
/// subintervals of [0,1], in exact arithmetic.
inline Scalar numeric_diameter(const TrajectorySet& s, const Cluster& c, std::size_t steps) {
  if (steps < 1) throw std::domain_error("numeric_diameter: steps must be positive");
  if (c.size() <= 1) return Scalar(0);
  Scalar total = 0;
  const Scalar denom(static_cast<unsigned long>(2 * steps));
  for (std::size_t i = 0; i < steps; ++i) {
    Scalar t = Scalar(static_cast<unsigned long>(2 * i + 1)) / denom;
    bool first = true;
    Scalar lo, hi;
    for (Index idx : c) {
      Scalar x = s[idx].x0 + (s[idx].x1 - s[idx].x0) * t;
      if (first || x < lo) lo = x;
      if (first || x > hi) hi = x;
      first = false;
    }
    total += hi - lo;
  }
  total /= static_cast<unsigned long>(steps);
  return total;
}

}  // namespace kinclust::oracle

#endif  // KINCLUST_ORACLE_HPP

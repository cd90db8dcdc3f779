#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "maxecd/graph.hpp"

namespace maxecd {

// Nonnegative per-edge dual prices. "Infinite" weight is a blocked flag,
// never a float sentinel, so weight arithmetic stays exact.
class DualWeights {
 public:
  explicit DualWeights(std::vector<double> values);
  static DualWeights zeros(int m);

  int size() const { return static_cast<int>(values_.size()); }
  double value(int e) const { return values_[e]; }
  bool blocked(int e) const { return blocked_[e] != 0; }
  void block(int e) { blocked_[e] = 1; }
  void unblock(int e) { blocked_[e] = 0; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
  std::vector<char> blocked_;
};

struct PricedCycle {
  Cycle cycle;
  double weight = 0.0;
};

// Minimum-weight simple cycle over the unblocked edges: for each edge
// (u,v), block it, find a minimum-weight u-v path, and close it; return the
// best. Ties are broken by cycle length, then lexicographic canonical
// vertices. nullopt when no cycle remains.
std::optional<PricedCycle> minimum_weight_cycle(const Graph& g,
                                                const DualWeights& w);

struct PricingLimits {
  std::uint64_t copy_budget = 1'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct PricingOutcome {
  std::optional<PricedCycle> best;
  bool budget_exceeded = false;
  bool deadline_hit = false;
  std::uint64_t copies_examined = 0;
};

// Minimum-weight cycle over all cycles except the forbidden ones: for every
// choice of one edge per forbidden cycle, block those edges and search a
// copy; duplicate blocked-edge sets are skipped. Equivalent to the minimum
// over the full cycle set minus the forbidden set.
PricingOutcome minimum_weight_cycle_avoiding(const Graph& g,
                                             const DualWeights& w,
                                             const std::vector<Cycle>& forbidden,
                                             const PricingLimits& limits = {});

// The avoiding minimum if its weight is below 1 - eps (a violated dual
// constraint), otherwise no cycle: the duals are feasible.
PricingOutcome price(const Graph& g, const DualWeights& w,
                     const std::vector<Cycle>& forbidden, double eps = 1e-6,
                     const PricingLimits& limits = {});

}  // namespace maxecd

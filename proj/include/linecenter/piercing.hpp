#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "linecenter/geometry.hpp"

namespace linecenter {

struct PiercingResult {
  std::size_t count{0};
  std::vector<double> points;  // ascending; every input interval contains one
};

/// Minimum piercing of closed intervals: greedily stab at the leftmost right
/// endpoint, drop everything it hits, repeat. Containment is closed, so a
/// point equal to an endpoint pierces. Ties among equal right endpoints are
/// broken by input index; throws if any interval is empty.
inline PiercingResult min_piercing(const std::vector<Interval>& intervals) {
  for (const Interval& iv : intervals) {
    if (iv.is_empty()) throw std::invalid_argument("min_piercing: empty interval");
  }
  std::vector<std::size_t> order(intervals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (intervals[a].hi != intervals[b].hi) return intervals[a].hi < intervals[b].hi;
    return a < b;
  });
  PiercingResult result;
  double cur = 0.0;
  bool have = false;
  for (std::size_t idx : order) {
    const Interval& iv = intervals[idx];
    if (!have || iv.lo > cur) {
      cur = iv.hi;
      result.points.push_back(cur);
      have = true;
    }
  }
  result.count = result.points.size();
  return result;
}

/// Exhaustive reference for the piercing number. Candidate stab points are
/// the right endpoints (sufficient by the greedy exchange argument); searches
/// all subsets, so inputs are capped at 20 intervals.
inline std::size_t min_piercing_oracle(const std::vector<Interval>& intervals) {
  if (intervals.size() > 20) throw std::invalid_argument("min_piercing_oracle: size guard");
  for (const Interval& iv : intervals) {
    if (iv.is_empty()) throw std::invalid_argument("min_piercing_oracle: empty interval");
  }
  if (intervals.empty()) return 0;
  std::vector<double> cands;
  cands.reserve(intervals.size());
  for (const Interval& iv : intervals) cands.push_back(iv.hi);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  const std::size_t c = cands.size();
  std::size_t best = intervals.size();
  for (std::uint32_t mask = 1; mask < (1u << c); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    bool all_pierced = true;
    for (const Interval& iv : intervals) {
      bool pierced = false;
      for (std::size_t i = 0; i < c; ++i) {
        if ((mask >> i) & 1u) {
          if (iv.contains(cands[i])) {
            pierced = true;
            break;
          }
        }
      }
      if (!pierced) {
        all_pierced = false;
        break;
      }
    }
    if (all_pierced) best = size;
  }
  return best;
}

}  // namespace linecenter

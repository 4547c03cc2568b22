#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ext_point.hpp"

namespace cg {

// Nonempty open interval with extended endpoints.
struct Interval {
  ExtPoint lo;
  ExtPoint hi;

  bool contains(const ExtPoint& p) const { return lo < p && p < hi; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
  std::string str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }
};

// Finite union of disjoint open intervals, kept sorted. Overlapping inputs
// are merged; components that merely share a boundary point stay separate
// (the shared point is not in the set, e.g. the support of a map fixing one
// interior point).
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);
  static IntervalSet empty() { return IntervalSet(); }
  static IntervalSet single(Interval iv) { return IntervalSet({std::move(iv)}); }
  static IntervalSet whole_line() {
    return single({ExtPoint::neg_infinity(), ExtPoint::pos_infinity()});
  }

  const std::vector<Interval>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }
  size_t size() const { return components_.size(); }

  std::optional<Interval> single_interval() const;
  std::optional<Interval> hull() const;
  bool is_bounded() const;

  bool contains(const ExtPoint& p) const;
  bool subset_of(const IntervalSet& o) const;
  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;

  bool operator==(const IntervalSet& o) const { return components_ == o.components_; }
  std::string str() const;

private:
  std::vector<Interval> components_;
};

}  // namespace cg

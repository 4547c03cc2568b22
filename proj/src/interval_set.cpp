#include "interval_set.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cg {

const Rational& ExtPoint::finite() const {
  if (kind_ != Kind::finite) fail(Errc::invalid_argument, "endpoint is not finite");
  return value_;
}

std::string ExtPoint::str() const {
  switch (kind_) {
    case Kind::neg_inf:
      return "-inf";
    case Kind::pos_inf:
      return "inf";
    default:
      return value_.str();
  }
}

ExtPoint ExtPoint::parse(std::string_view s) {
  if (s == "-inf") return neg_infinity();
  if (s == "inf" || s == "+inf") return pos_infinity();
  return ExtPoint(Rational::parse(s));
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (!(iv.lo < iv.hi)) fail(Errc::invalid_argument, "empty interval " + iv.str());
  }
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  for (auto& iv : intervals) {
    if (!components_.empty() && iv.lo < components_.back().hi) {
      if (components_.back().hi < iv.hi) components_.back().hi = iv.hi;
    } else {
      components_.push_back(iv);
    }
  }
}

std::optional<Interval> IntervalSet::single_interval() const {
  if (components_.size() == 1) return components_.front();
  return std::nullopt;
}

std::optional<Interval> IntervalSet::hull() const {
  if (components_.empty()) return std::nullopt;
  return Interval{components_.front().lo, components_.back().hi};
}

bool IntervalSet::is_bounded() const {
  if (components_.empty()) return true;
  return components_.front().lo.is_finite() && components_.back().hi.is_finite();
}

bool IntervalSet::contains(const ExtPoint& p) const {
  for (const auto& iv : components_)
    if (iv.contains(p)) return true;
  return false;
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
  for (const auto& iv : components_) {
    bool covered = false;
    for (const auto& big : o.components_) {
      if (big.lo <= iv.lo && iv.hi <= big.hi) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = components_;
  all.insert(all.end(), o.components_.begin(), o.components_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const auto& a : components_) {
    for (const auto& b : o.components_) {
      ExtPoint lo = std::max(a.lo, b.lo);
      ExtPoint hi = std::min(a.hi, b.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  }
  return IntervalSet(std::move(out));
}

std::string IntervalSet::str() const {
  if (components_.empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out += " u ";
    out += components_[i].str();
  }
  return out;
}

}  // namespace cg

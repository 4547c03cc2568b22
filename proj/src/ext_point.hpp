#pragma once

#include <string>
#include <string_view>

#include "rational.hpp"

namespace cg {

// Point of the extended line: -inf < every rational < +inf.
class ExtPoint {
public:
  ExtPoint() : kind_(Kind::finite) {}
  ExtPoint(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT
  static ExtPoint neg_infinity() { return ExtPoint(Kind::neg_inf); }
  static ExtPoint pos_infinity() { return ExtPoint(Kind::pos_inf); }
  static ExtPoint parse(std::string_view s);

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_infinity() const { return kind_ == Kind::neg_inf; }
  bool is_pos_infinity() const { return kind_ == Kind::pos_inf; }
  const Rational& finite() const;

  std::string str() const;

  bool operator==(const ExtPoint& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ != Kind::finite || value_ == o.value_;
  }
  bool operator!=(const ExtPoint& o) const { return !(*this == o); }
  bool operator<(const ExtPoint& o) const {
    if (kind_ == o.kind_) return kind_ == Kind::finite && value_ < o.value_;
    if (kind_ == Kind::neg_inf) return true;
    if (kind_ == Kind::pos_inf) return false;
    return o.kind_ == Kind::pos_inf;
  }
  bool operator<=(const ExtPoint& o) const { return !(o < *this); }
  bool operator>(const ExtPoint& o) const { return o < *this; }
  bool operator>=(const ExtPoint& o) const { return !(*this < o); }

private:
  enum class Kind { neg_inf, finite, pos_inf };
  explicit ExtPoint(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

}  // namespace cg

#pragma once

#include <string>
#include <vector>

#include "interval_set.hpp"
#include "rational.hpp"

namespace cg {

struct Knot {
  Rational x;
  Rational y;
  bool operator==(const Knot& o) const { return x == o.x && y == o.y; }
};

// Tail behavior of a map: x -> slope * x + offset.
struct Affine {
  Rational slope;
  Rational offset;
  bool operator==(const Affine& o) const { return slope == o.slope && offset == o.offset; }
};

struct GermData {
  Affine left_tail;
  Affine right_tail;
};

// Finitely-piecewise-linear orientation-preserving homeomorphism of the
// line: linear interpolation between knots, affine tails beyond the first
// and last knot. Values are immutable and always kept in canonical form:
// no knot joins two pieces of equal slope, and a globally affine map is
// stored as its value at 0. Structural equality therefore coincides with
// equality as functions.
class PLMap {
public:
  PLMap() : PLMap(identity()) {}

  static PLMap identity();
  static PLMap make(std::vector<Knot> knots, Rational left_slope, Rational right_slope);

  const std::vector<Knot>& knots() const { return knots_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  Rational evaluate(const Rational& x) const;
  ExtPoint evaluate_ext(const ExtPoint& x) const;
  Rational preimage(const Rational& y) const;

  bool is_identity() const;
  bool operator==(const PLMap& o) const {
    return knots_ == o.knots_ && left_slope_ == o.left_slope_ && right_slope_ == o.right_slope_;
  }
  bool operator!=(const PLMap& o) const { return !(*this == o); }

  std::string str() const;

private:
  PLMap(std::vector<Knot> knots, Rational ls, Rational rs)
      : knots_(std::move(knots)), left_slope_(std::move(ls)), right_slope_(std::move(rs)) {}
  static PLMap canonical(std::vector<Knot> knots, Rational ls, Rational rs);

  std::vector<Knot> knots_;
  Rational left_slope_;
  Rational right_slope_;
};

// compose(f, g) applies g first: x -> f(g(x)).
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
PLMap power(const PLMap& f, long n);
// g f g^-1; its support is the g-image of supp f.
PLMap conjugate(const PLMap& g, const PLMap& f);
// f g f^-1 g^-1
PLMap commutator(const PLMap& f, const PLMap& g);

// Exact open set {x : f(x) != x}.
IntervalSet support(const PLMap& f);
// Whether f(x) >= x everywhere.
bool moves_right(const PLMap& f);
GermData germ_at_infinity(const PLMap& f);

Interval image(const PLMap& f, const Interval& iv);
IntervalSet image(const PLMap& f, const IntervalSet& s);

}  // namespace cg

#include "plmap.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cg {

PLMap PLMap::identity() { return PLMap({{Rational(0), Rational(0)}}, Rational(1), Rational(1)); }

bool PLMap::is_identity() const {
  return knots_.size() == 1 && knots_[0].x.is_zero() && knots_[0].y.is_zero() &&
         left_slope_ == Rational(1) && right_slope_ == Rational(1);
}

PLMap PLMap::canonical(std::vector<Knot> knots, Rational ls, Rational rs) {
  // slopes[i] = slope of the piece left of knot i; slopes[n] right of the last
  size_t n = knots.size();
  std::vector<Rational> slopes;
  slopes.reserve(n + 1);
  slopes.push_back(ls);
  for (size_t i = 0; i + 1 < n; ++i) {
    slopes.push_back((knots[i + 1].y - knots[i].y) / (knots[i + 1].x - knots[i].x));
  }
  slopes.push_back(rs);

  std::vector<Knot> kept;
  for (size_t i = 0; i < n; ++i) {
    if (slopes[i] != slopes[i + 1]) kept.push_back(knots[i]);
  }
  if (kept.empty()) {
    // globally affine; anchor at x = 0
    const Knot& k = knots.front();
    kept.push_back({Rational(0), k.y - ls * k.x});
  }
  return PLMap(std::move(kept), std::move(ls), std::move(rs));
}

PLMap PLMap::make(std::vector<Knot> knots, Rational left_slope, Rational right_slope) {
  if (knots.empty()) fail(Errc::empty_knots, "a map needs at least one knot");
  if (left_slope.sign() <= 0 || right_slope.sign() <= 0)
    fail(Errc::non_monotone, "tail slopes must be positive");
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i].x < knots[i + 1].x) || !(knots[i].y < knots[i + 1].y))
      fail(Errc::non_monotone, "knots must increase strictly in both coordinates");
  }
  return canonical(std::move(knots), std::move(left_slope), std::move(right_slope));
}

Rational PLMap::evaluate(const Rational& x) const {
  if (x <= knots_.front().x)
    return knots_.front().y + left_slope_ * (x - knots_.front().x);
  if (x >= knots_.back().x)
    return knots_.back().y + right_slope_ * (x - knots_.back().x);
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](const Rational& v, const Knot& k) { return v < k.x; });
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  Rational slope = (hi.y - lo.y) / (hi.x - lo.x);
  return lo.y + slope * (x - lo.x);
}

ExtPoint PLMap::evaluate_ext(const ExtPoint& x) const {
  if (!x.is_finite()) return x;
  return ExtPoint(evaluate(x.finite()));
}

Rational PLMap::preimage(const Rational& y) const {
  if (y <= knots_.front().y)
    return knots_.front().x + (y - knots_.front().y) / left_slope_;
  if (y >= knots_.back().y)
    return knots_.back().x + (y - knots_.back().y) / right_slope_;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), y,
                             [](const Rational& v, const Knot& k) { return v < k.y; });
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  Rational slope = (hi.y - lo.y) / (hi.x - lo.x);
  return lo.x + (y - lo.y) / slope;
}

std::string PLMap::str() const {
  std::string out = "PL[";
  for (size_t i = 0; i < knots_.size(); ++i) {
    if (i) out += " ";
    out += "(" + knots_[i].x.str() + "," + knots_[i].y.str() + ")";
  }
  out += "; " + left_slope_.str() + "|" + right_slope_.str() + "]";
  return out;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // Breakpoints of f(g(x)) lie among g's knots and g-preimages of f's knots.
  std::vector<Rational> xs;
  xs.reserve(g.knots().size() + f.knots().size());
  for (const auto& k : g.knots()) xs.push_back(k.x);
  for (const auto& k : f.knots()) xs.push_back(g.preimage(k.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Knot> knots;
  knots.reserve(xs.size());
  for (const auto& x : xs) knots.push_back({x, f.evaluate(g.evaluate(x))});
  return PLMap::make(std::move(knots), f.left_slope() * g.left_slope(),
                     f.right_slope() * g.right_slope());
}

PLMap invert(const PLMap& f) {
  std::vector<Knot> knots;
  knots.reserve(f.knots().size());
  for (const auto& k : f.knots()) knots.push_back({k.y, k.x});
  return PLMap::make(std::move(knots), Rational(1) / f.left_slope(),
                     Rational(1) / f.right_slope());
}

PLMap power(const PLMap& f, long n) {
  if (n == 0) return PLMap::identity();
  PLMap base = n > 0 ? f : invert(f);
  unsigned long e = n > 0 ? static_cast<unsigned long>(n) : 0UL - static_cast<unsigned long>(n);
  PLMap acc = PLMap::identity();
  while (e > 0) {
    if (e & 1UL) acc = compose(acc, base);
    e >>= 1UL;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

PLMap conjugate(const PLMap& g, const PLMap& f) { return compose(compose(g, f), invert(g)); }

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(f, g), compose(invert(f), invert(g)));
}

IntervalSet support(const PLMap& f) {
  // Breakpoints: knot abscissas plus crossings of each affine piece with the
  // diagonal. Between consecutive breakpoints the sign of f(x) - x is
  // constant, so one exact probe per gap decides it.
  std::vector<Rational> bps;
  for (const auto& k : f.knots()) bps.push_back(k.x);

  auto add_crossing = [&bps](const Rational& slope, const Knot& anchor) {
    if (slope == Rational(1)) return;
    // solve anchor.y + slope*(x - anchor.x) = x
    Rational x = (anchor.y - slope * anchor.x) / (Rational(1) - slope);
    bps.push_back(x);
  };
  add_crossing(f.left_slope(), f.knots().front());
  for (size_t i = 0; i + 1 < f.knots().size(); ++i) {
    const Knot& a = f.knots()[i];
    const Knot& b = f.knots()[i + 1];
    Rational slope = (b.y - a.y) / (b.x - a.x);
    add_crossing(slope, a);
  }
  add_crossing(f.right_slope(), f.knots().back());

  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  auto moved = [&f](const Rational& x) { return f.evaluate(x) != x; };

  std::vector<ExtPoint> cuts;
  cuts.push_back(ExtPoint::neg_infinity());
  for (const auto& b : bps) cuts.push_back(ExtPoint(b));
  cuts.push_back(ExtPoint::pos_infinity());

  std::vector<Interval> result;
  bool prev_moved = false;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const ExtPoint& lo = cuts[i];
    const ExtPoint& hi = cuts[i + 1];
    Rational probe;
    if (!lo.is_finite() && !hi.is_finite())
      probe = Rational(0);
    else if (!lo.is_finite())
      probe = hi.finite() - Rational(1);
    else if (!hi.is_finite())
      probe = lo.finite() + Rational(1);
    else
      probe = midpoint(lo.finite(), hi.finite());

    bool piece_moved = moved(probe);
    if (piece_moved) {
      bool join = prev_moved && lo.is_finite() && moved(lo.finite());
      if (join)
        result.back().hi = hi;
      else
        result.push_back({lo, hi});
    }
    prev_moved = piece_moved;
  }
  return IntervalSet(std::move(result));
}

bool moves_right(const PLMap& f) {
  for (const auto& k : f.knots())
    if (k.y < k.x) return false;
  return f.left_slope() <= Rational(1) && f.right_slope() >= Rational(1);
}

GermData germ_at_infinity(const PLMap& f) {
  const Knot& first = f.knots().front();
  const Knot& last = f.knots().back();
  return GermData{
      Affine{f.left_slope(), first.y - f.left_slope() * first.x},
      Affine{f.right_slope(), last.y - f.right_slope() * last.x},
  };
}

Interval image(const PLMap& f, const Interval& iv) {
  return Interval{f.evaluate_ext(iv.lo), f.evaluate_ext(iv.hi)};
}

IntervalSet image(const PLMap& f, const IntervalSet& s) {
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& iv : s.components()) out.push_back(image(f, iv));
  return IntervalSet(std::move(out));
}

}  // namespace cg

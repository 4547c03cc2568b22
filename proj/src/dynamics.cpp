#include "dynamics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "errors.hpp"

namespace cg {

OrbitSample orbit(const std::vector<PLMap>& gens, const Rational& x, long budget) {
  if (budget <= 0) fail(Errc::invalid_argument, "orbit budget must be positive");
  OrbitSample sample;
  sample.base_point = x;
  std::set<Rational> seen{x};
  sample.visit_order.push_back(x);

  struct Node {
    Rational point;
    int depth;
  };
  std::deque<Node> queue{{x, 0}};
  bool budget_hit = static_cast<long>(seen.size()) >= budget;

  while (!queue.empty() && !budget_hit) {
    Node node = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < gens.size() && !budget_hit; ++i) {
      for (int sign : {1, -1}) {
        Rational next = sign > 0 ? gens[i].evaluate(node.point) : gens[i].preimage(node.point);
        if (!seen.insert(next).second) continue;
        sample.visit_order.push_back(next);
        sample.word_length_bound = node.depth + 1;
        queue.push_back({next, node.depth + 1});
        if (static_cast<long>(seen.size()) >= budget) {
          budget_hit = true;
          break;
        }
      }
    }
  }
  sample.frontier_exhausted = queue.empty() && !budget_hit;
  sample.points.assign(seen.begin(), seen.end());
  return sample;
}

GapReport gap_report(const OrbitSample& sample, const Rational& window_lo,
                     const Rational& window_hi) {
  if (!(window_lo < window_hi)) fail(Errc::empty_window, "window is empty");
  if (sample.points.empty() || window_lo < sample.points.front() ||
      sample.points.back() < window_hi)
    fail(Errc::invalid_argument, "window must lie inside the convex hull of the sample");

  auto lo_it = std::lower_bound(sample.points.begin(), sample.points.end(), window_lo);
  auto hi_it = std::upper_bound(sample.points.begin(), sample.points.end(), window_hi);
  if (std::distance(lo_it, hi_it) < 2)
    fail(Errc::empty_window, "fewer than two sample points in the window");

  GapReport report{window_lo, window_hi, Rational(0), *lo_it};
  for (auto it = lo_it; it + 1 != hi_it; ++it) {
    Rational gap = *(it + 1) - *it;
    if (gap > report.max_gap) {
      report.max_gap = gap;
      report.gap_location = *it;
    }
  }
  return report;
}

namespace {

IntervalSet group_support(const ChainSystem& sys) {
  IntervalSet s;
  for (const auto& part : sys.supports) s = s.unite(part);
  return s;
}

bool image_inside(const std::vector<std::pair<Rational, Rational>>& endpoints,
                  const OpenInterval& B) {
  for (const auto& [lo, hi] : endpoints) {
    if (!(B.lo < lo && hi < B.hi)) return false;
  }
  return true;
}

std::vector<std::pair<Rational, Rational>> apply_to_all(
    const PLMap& m, const std::vector<std::pair<Rational, Rational>>& endpoints) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(endpoints.size());
  for (const auto& [lo, hi] : endpoints) out.emplace_back(m.evaluate(lo), m.evaluate(hi));
  return out;
}

constexpr size_t kSearchNodeCap = 50000;

}  // namespace

Word co_transitivity_witness(const ChainSystem& sys, const std::vector<ClosedInterval>& A,
                             const OpenInterval& B, int depth) {
  if (A.empty()) fail(Errc::invalid_argument, "need at least one interval");
  if (!(B.lo < B.hi)) fail(Errc::invalid_argument, "target interval is empty");
  IntervalSet supp = group_support(sys);
  std::vector<std::pair<Rational, Rational>> base;
  for (const auto& iv : A) {
    if (iv.hi < iv.lo) fail(Errc::invalid_argument, "interval with hi < lo");
    if (!supp.contains(ExtPoint(iv.lo)) || !supp.contains(ExtPoint(iv.hi)))
      fail(Errc::invalid_argument, "compact set must lie inside the group support");
    base.emplace_back(iv.lo, iv.hi);
  }
  if (supp.intersect(IntervalSet::single({ExtPoint(B.lo), ExtPoint(B.hi)})).is_empty())
    fail(Errc::not_found, "target interval misses the group support");

  if (image_inside(base, B)) return Word::empty();

  // Structured family first: push the set deep into the first support with
  // the full composite, then ride the first generator up into B. The ride
  // accumulates at the right endpoint of the first support, so this stage
  // only lands in targets reaching up to that point.
  size_t n = sys.size();
  std::vector<WordFactor> h_factors;
  for (size_t i = n; i-- > 0;) h_factors.push_back({static_cast<int>(i), 1});
  Word h_word((std::vector<WordFactor>(h_factors)));
  PLMap h_inverse = invert(evaluate_word(h_word, sys.generators));
  const PLMap& g1 = sys.generators[0];

  auto structured = [&](const OpenInterval& target) -> std::optional<Word> {
    std::vector<std::pair<Rational, Rational>> pulled = base;
    for (int m = 0; m <= depth; ++m) {
      if (m > 0) pulled = apply_to_all(h_inverse, pulled);
      std::vector<std::pair<Rational, Rational>> lifted = pulled;
      for (int l = 0; l <= depth; ++l) {
        if (l > 0) lifted = apply_to_all(g1, lifted);
        if (image_inside(lifted, target))
          return Word::generator(0, l).concat(h_word.pow(-m));
      }
    }
    return std::nullopt;
  };

  if (auto direct = structured(B)) return *direct;

  // General targets: find an element s carrying the accumulation point into
  // B along its orbit, shrink a one-sided neighborhood J of that point until
  // s(J) lands inside B, and ride the structured family into J.
  ExtPoint acc_ext = support(g1).single_interval()->hi;
  if (acc_ext.is_finite()) {
    Rational acc = acc_ext.finite();
    struct Node {
      Rational point;
      Word word;
      int depth;
    };
    std::deque<Node> queue{{acc, Word::empty(), 0}};
    std::set<Rational> seen{acc};
    std::optional<Word> carrier;
    auto strictly_inside = [&B](const Rational& x) { return B.lo < x && x < B.hi; };
    if (strictly_inside(acc)) carrier = Word::empty();
    size_t expansions = 0;
    while (!carrier && !queue.empty() && expansions < kSearchNodeCap) {
      Node node = queue.front();
      queue.pop_front();
      if (node.depth == depth) continue;
      for (size_t i = 0; i < n && !carrier; ++i) {
        for (int sign : {1, -1}) {
          ++expansions;
          const PLMap& g = sys.generators[i];
          Rational next = sign > 0 ? g.evaluate(node.point) : g.preimage(node.point);
          if (!seen.insert(next).second) continue;
          Word w = Word::generator(static_cast<int>(i), sign).concat(node.word);
          if (strictly_inside(next)) {
            carrier = w;
            break;
          }
          queue.push_back({next, std::move(w), node.depth + 1});
        }
      }
    }
    if (carrier) {
      PLMap carrier_map = evaluate_word(*carrier, sys.generators);
      Rational eps(1, 2);
      for (int attempt = 0; attempt < 128; ++attempt, eps = eps / Rational(2)) {
        Rational j_lo = acc - eps;
        if (!(B.lo < carrier_map.evaluate(j_lo))) continue;
        if (!(carrier_map.evaluate(acc) < B.hi)) break;
        if (auto ride = structured({j_lo, acc})) return carrier->concat(*ride);
      }
    }
  }

  // bounded breadth-first fallback over short words
  struct Node {
    std::vector<std::pair<Rational, Rational>> endpoints;
    Word word;
    int depth;
  };
  auto key_of = [](const std::vector<std::pair<Rational, Rational>>& endpoints) {
    std::string key;
    for (const auto& [lo, hi] : endpoints) key += lo.str() + "|" + hi.str() + ";";
    return key;
  };
  std::deque<Node> queue{{base, Word::empty(), 0}};
  std::set<std::string> seen{key_of(base)};
  size_t expansions = 0;
  while (!queue.empty() && expansions < kSearchNodeCap) {
    Node node = queue.front();
    queue.pop_front();
    if (node.depth == depth) continue;
    for (size_t i = 0; i < n; ++i) {
      for (int sign : {1, -1}) {
        ++expansions;
        PLMap step = sign > 0 ? sys.generators[i] : invert(sys.generators[i]);
        auto next = apply_to_all(step, node.endpoints);
        if (!seen.insert(key_of(next)).second) continue;
        Word w = Word::generator(static_cast<int>(i), sign).concat(node.word);
        if (image_inside(next, B)) return w;
        queue.push_back({std::move(next), std::move(w), node.depth + 1});
      }
    }
  }
  fail(Errc::not_found, "no witness within depth " + std::to_string(depth));
}

Word higman_triple_witness(const ChainSystem& sys, const Word& r, const Word& s, const Word& t,
                           int depth) {
  PLMap rm = evaluate_word(r, sys.generators);
  PLMap sm = evaluate_word(s, sys.generators);
  PLMap tm = evaluate_word(t, sys.generators);
  if (rm.is_identity() || sm.is_identity() || tm.is_identity())
    fail(Errc::invalid_argument, "all three words must evaluate to nonidentity maps");

  IntervalSet S = support(rm).unite(support(sm));
  if (!S.is_bounded())
    fail(Errc::invalid_argument, "support union must be compact");

  auto verify = [&](const PLMap& u) {
    IntervalSet moved = image(invert(u), image(tm, image(u, S)));
    return moved.intersect(S).is_empty();
  };
  if (verify(PLMap::identity())) return Word::empty();

  // an interval B moved off itself by t: a shrinking ball around a point t
  // displaces, with the disjointness t(B) cap B = {} checked exactly
  IntervalSet t_support = support(tm);
  Interval first = t_support.components().front();
  Rational probe;
  if (first.lo.is_finite() && first.hi.is_finite())
    probe = midpoint(first.lo.finite(), first.hi.finite());
  else if (first.lo.is_finite())
    probe = first.lo.finite() + Rational(1);
  else if (first.hi.is_finite())
    probe = first.hi.finite() - Rational(1);
  else
    probe = Rational(0);
  Rational moved_to = tm.evaluate(probe);
  Rational radius = abs(moved_to - probe) / Rational(4);
  OpenInterval B{probe - radius, probe + radius};
  for (int attempt = 0; attempt < 128; ++attempt, radius = radius / Rational(2)) {
    B = {probe - radius, probe + radius};
    IntervalSet ball = IntervalSet::single({ExtPoint(B.lo), ExtPoint(B.hi)});
    if (image(tm, ball).intersect(ball).is_empty()) break;
  }

  std::vector<ClosedInterval> A;
  for (const auto& c : S.components()) A.push_back({c.lo.finite(), c.hi.finite()});

  Word u = co_transitivity_witness(sys, A, B, depth);
  if (!verify(evaluate_word(u, sys.generators)))
    fail(Errc::internal, "co-transitivity witness fails the displacement re-check");
  return u;
}

Word agree_on_compact_in_commutator(const ChainSystem& sys, const Word& g,
                                    const ClosedInterval& A, int depth) {
  if (A.hi < A.lo) fail(Errc::invalid_argument, "interval with hi < lo");
  IntervalSet supp = group_support(sys);
  if (!supp.contains(ExtPoint(A.lo)) || !supp.contains(ExtPoint(A.hi)))
    fail(Errc::invalid_argument, "compact set must lie inside the group support");
  if (g.max_index() >= static_cast<int>(sys.size()))
    fail(Errc::index_out_of_range, "word index out of range");
  if (g.is_empty()) return Word::empty();

  size_t n = sys.size();

  // letters of g in application order (rightmost factor first)
  struct Letter {
    int index;
    int sign;
  };
  std::vector<Letter> letters;
  for (auto it = g.factors().rbegin(); it != g.factors().rend(); ++it) {
    long long reps = it->exponent < 0 ? -it->exponent : it->exponent;
    int sign = it->exponent < 0 ? -1 : 1;
    for (long long k = 0; k < reps; ++k) letters.push_back({it->index, sign});
  }

  // partial images of A under the letter prefixes
  std::vector<std::pair<Rational, Rational>> partials;
  Rational lo = A.lo, hi = A.hi;
  for (const auto& letter : letters) {
    const PLMap& m = sys.generators[static_cast<size_t>(letter.index)];
    lo = letter.sign > 0 ? m.evaluate(lo) : m.preimage(lo);
    hi = letter.sign > 0 ? m.evaluate(hi) : m.preimage(hi);
    partials.emplace_back(lo, hi);
  }

  // end zones J, K inside the outermost supports, shrunk past every partial
  // image
  Interval first = *sys.supports.front().single_interval();
  Interval last = *sys.supports.back().single_interval();
  ExtPoint j_hi = first.hi;
  ExtPoint k_lo = last.lo;
  for (const auto& [plo, phi] : partials) {
    j_hi = std::min(j_hi, ExtPoint(plo));
    k_lo = std::max(k_lo, ExtPoint(phi));
  }
  Interval J{first.lo, j_hi};
  Interval K{k_lo, last.hi};
  if (!(J.lo < J.hi) || !(K.lo < K.hi))
    fail(Errc::not_found, "end zones vanish for this compact set");

  // for each letter, a conjugator pushing its support into an end zone;
  // depends only on the generator index, so cache the searches
  std::map<int, Word> conjugators;
  auto find_conjugator = [&](int index) -> const Word& {
    auto it = conjugators.find(index);
    if (it != conjugators.end()) return it->second;

    Interval target = *sys.supports[static_cast<size_t>(index)].single_interval();
    auto fits = [&](const Interval& iv) {
      return (J.lo <= iv.lo && iv.hi <= J.hi) || (K.lo <= iv.lo && iv.hi <= K.hi);
    };
    struct Node {
      Interval iv;
      Word word;
      int depth;
    };
    std::deque<Node> queue{{target, Word::empty(), 0}};
    std::set<std::string> seen{target.str()};
    size_t expansions = 0;
    while (!queue.empty() && expansions < kSearchNodeCap) {
      Node node = queue.front();
      queue.pop_front();
      if (fits(node.iv)) return conjugators.emplace(index, node.word).first->second;
      if (node.depth == depth) continue;
      for (size_t i = 0; i < n; ++i) {
        for (int sign : {1, -1}) {
          ++expansions;
          PLMap step = sign > 0 ? sys.generators[i] : invert(sys.generators[i]);
          Interval next = image(step, node.iv);
          if (!seen.insert(next.str()).second) continue;
          Word w = Word::generator(static_cast<int>(i), sign).concat(node.word);
          queue.push_back({next, std::move(w), node.depth + 1});
        }
      }
    }
    fail(Errc::not_found, "no conjugator pushes generator " + std::to_string(index) +
                              " into an end zone within depth " + std::to_string(depth));
  };

  Word u;
  for (const auto& letter : letters) {
    const Word& h = find_conjugator(letter.index);
    Word cancel = Word::generator(letter.index, -letter.sign).conjugated_by(h);
    u = u.concat(cancel);
  }
  u = u.concat(g);

  for (long long total : exponent_sum(u, static_cast<int>(n)))
    if (total != 0) fail(Errc::internal, "correction word has nonzero exponent sum");

  // exact agreement on A: probe endpoints, all knots of both maps in A, and
  // midpoints in between
  PLMap um = evaluate_word(u, sys.generators);
  PLMap gm = evaluate_word(g, sys.generators);
  std::vector<Rational> probes{A.lo, A.hi};
  for (const PLMap* m : {&um, &gm})
    for (const auto& k : m->knots())
      if (A.lo <= k.x && k.x <= A.hi) probes.push_back(k.x);
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  std::vector<Rational> mids;
  for (size_t i = 0; i + 1 < probes.size(); ++i) mids.push_back(midpoint(probes[i], probes[i + 1]));
  probes.insert(probes.end(), mids.begin(), mids.end());
  for (const auto& x : probes)
    if (um.evaluate(x) != gm.evaluate(x))
      fail(Errc::internal, "constructed word disagrees with the target at " + x.str());

  return u;
}

}  // namespace cg

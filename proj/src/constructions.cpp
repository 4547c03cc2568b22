#include "constructions.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cg {

StandardGenerators standard_generators() {
  PLMap a = PLMap::make({{Rational(0), Rational(1)}}, Rational(1), Rational(1));
  PLMap b = PLMap::make({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}}, Rational(1),
                        Rational(1));
  return {std::move(a), std::move(b)};
}

std::vector<PLMap> standard_three_chain() {
  auto [a, b] = standard_generators();
  PLMap f0 = compose(invert(b), a);
  PLMap f1 = compose(compose(a, invert(b)), compose(invert(a), b));
  PLMap f2 = conjugate(a, b);
  return {std::move(f0), std::move(f1), std::move(f2)};
}

ClassAReport class_A_membership(const PLMap& g) {
  ClassAReport report;
  auto violation = [&report](std::string msg, std::optional<Rational> at = std::nullopt) {
    report.member = false;
    report.violation = std::move(msg);
    report.violation_point = std::move(at);
    return report;
  };

  Rational zero(0), one(1), two(2);
  if (g.evaluate(zero) != zero) return violation("g(0) != 0", zero);
  if (g.evaluate(one) != two) return violation("g(1) != 2", one);

  IntervalSet supp = support(g);
  IntervalSet below = IntervalSet::single({ExtPoint::neg_infinity(), ExtPoint(zero)});
  if (!supp.intersect(below).is_empty())
    return violation("not the identity below 0");

  PLMap shifted_down = compose(invert(standard_generators().a), g);
  IntervalSet above = IntervalSet::single({ExtPoint(one), ExtPoint::pos_infinity()});
  if (!support(shifted_down).intersect(above).is_empty())
    return violation("not translation by one above 1");

  // strictly between the diagonal and its unit translate on (0,1); the
  // displacement is affine between breakpoints, so knot values decide it
  for (const auto& k : g.knots()) {
    if (zero < k.x && k.x < one) {
      Rational d = k.y - k.x;
      if (!(zero < d && d < one))
        return violation("value leaves (x, x+1) inside (0,1)", k.x);
    }
  }
  report.member = true;
  return report;
}

namespace {

// Substitutes per-symbol replacement words into w.
Word substitute(const Word& w, const std::vector<Word>& table) {
  Word out;
  for (const auto& f : w.factors()) {
    out = out.concat(table[static_cast<size_t>(f.index)].pow(f.exponent));
  }
  return out;
}

void verify_class_a_chain(ChainSystem& sys, size_t n) {
  // expected supports (-inf,1), (0,2), ..., (n-2,n), (n-1,inf)
  if (sys.status == ChainStatus::unclassified)
    fail(Errc::internal, "constructed system is not a prechain: " + sys.diagnostic);
  auto expect = [&sys](size_t i, ExtPoint lo, ExtPoint hi) {
    auto iv = sys.supports[i].single_interval();
    if (!iv || !(iv->lo == lo) || !(iv->hi == hi))
      fail(Errc::internal, "constructed support " + std::to_string(i) + " is " +
                               sys.supports[i].str() + ", expected (" + lo.str() + ", " +
                               hi.str() + ")");
  };
  expect(0, ExtPoint::neg_infinity(), ExtPoint(Rational(1)));
  for (size_t i = 1; i < n; ++i)
    expect(i, ExtPoint(Rational(static_cast<long>(i) - 1)),
           ExtPoint(Rational(static_cast<long>(i) + 1)));
  expect(n, ExtPoint(Rational(static_cast<long>(n) - 1)), ExtPoint::pos_infinity());

  for (size_t i = 1; i < n; ++i) {
    Rational at(static_cast<long>(i));
    Rational moved = sys.generators[i + 1].evaluate(sys.generators[i].evaluate(at));
    if (moved != Rational(static_cast<long>(i) + 1))
      fail(Errc::internal, "overlap displacement fails at " + at.str());
  }

  SystemCertificates certs = certify(sys);
  if (sys.status != ChainStatus::chain_certified &&
      sys.status != ChainStatus::higman_thompson_certified)
    fail(Errc::internal, "constructed system is not chain-certified");
  (void)certs;
}

}  // namespace

ClassAChainResult chain_from_class_A(const std::vector<PLMap>& gs) {
  if (gs.empty()) fail(Errc::invalid_argument, "need at least one class-A map");
  for (size_t i = 0; i < gs.size(); ++i) {
    ClassAReport r = class_A_membership(gs[i]);
    if (!r.member)
      fail(Errc::not_in_class_a,
           "input " + std::to_string(i) + " is not in class A: " + r.violation);
  }
  int n = static_cast<int>(gs.size());
  int t = n;  // translation symbol

  std::vector<Word> words;
  words.push_back(Word({{0, -1}, {t, 1}}));
  for (int i = 1; i <= n - 1; ++i) {
    words.push_back(Word({{t, i}, {i, -1}, {t, -i}, {t, i - 1}, {i - 1, 1}, {t, 1 - i}}));
  }
  if (n >= 1) {
    words.push_back(Word({{t, n - 1}, {n - 1, 1}, {t, 1 - n}}));
  }

  std::vector<PLMap> assignment = gs;
  assignment.push_back(standard_generators().a);
  std::vector<PLMap> maps;
  maps.reserve(words.size());
  for (const auto& w : words) maps.push_back(evaluate_word(w, assignment));

  ClassAChainResult result;
  result.system = classify_prechain(maps);
  result.provenance = std::move(words);
  verify_class_a_chain(result.system, static_cast<size_t>(n));
  return result;
}

EmbedResult embed_compactly_supported(const std::vector<PLMap>& gens) {
  Rational quarter(1, 4), half(1, 2);
  IntervalSet all_supports;
  for (size_t i = 0; i < gens.size(); ++i) {
    IntervalSet s = support(gens[i]);
    if (!s.is_bounded())
      fail(Errc::unbounded_support, "generator " + std::to_string(i) + " has unbounded support");
    all_supports = all_supports.unite(s);
  }

  PLMap squeeze = PLMap::identity();
  if (auto hull = all_supports.hull()) {
    Rational lo = hull->lo.finite(), hi = hull->hi.finite();
    bool inside = quarter <= lo && hi <= half;
    if (!inside) {
      // affine map sending [lo, hi] onto [5/16, 7/16]
      Rational target_lo(5, 16), target_hi(7, 16);
      Rational slope = (target_hi - target_lo) / (hi - lo);
      squeeze = PLMap::make({{lo, target_lo}}, slope, slope);
    }
  }

  auto [a, b] = standard_generators();
  std::vector<PLMap> squeezed;
  std::vector<PLMap> class_a_inputs;
  for (const auto& g : gens) {
    PLMap gp = conjugate(squeeze, g);
    class_a_inputs.push_back(compose(b, gp));
    squeezed.push_back(std::move(gp));
  }
  class_a_inputs.push_back(b);

  ClassAChainResult chain = chain_from_class_A(class_a_inputs);

  EmbedResult result;
  result.system = std::move(chain.system);
  result.squeeze = squeeze;

  // translate chain provenance (over class-A inputs + translation) to the
  // alphabet (squeezed inputs, translation, doubling generator)
  int n = static_cast<int>(gens.size());
  int ta = n, tb = n + 1;
  std::vector<Word> table;
  for (int i = 0; i < n; ++i) table.push_back(Word({{tb, 1}, {i, 1}}));  // b g_i'
  table.push_back(Word::generator(tb));                                 // b
  table.push_back(Word::generator(ta));                                 // a
  for (const auto& w : chain.provenance) result.provenance.push_back(substitute(w, table));

  // invert the construction: with m = n+1 class-A inputs c_1..c_m,
  //   t^{i-1} c_i t^{1-i} = f_m f_{m-1} ... f_i   and   a = f_m ... f_1 f_0,
  // so every squeezed input is a word over the outputs.
  int m = n + 1;
  std::vector<Word> descending(static_cast<size_t>(m) + 1);  // descending[i] = f_m ... f_i
  Word acc;
  for (int i = m; i >= 1; --i) {
    acc = acc.concat(Word::generator(i));
    descending[static_cast<size_t>(i)] = acc;
  }
  Word a_word = acc.concat(Word::generator(0));
  Word b_word = a_word.pow(-(m - 1))
                    .concat(descending[static_cast<size_t>(m)])
                    .concat(a_word.pow(m - 1));
  std::vector<PLMap> outputs = result.system.generators;
  for (int i = 1; i <= n; ++i) {
    Word ci = a_word.pow(-(i - 1))
                  .concat(descending[static_cast<size_t>(i)])
                  .concat(a_word.pow(i - 1));
    Word gi = b_word.inverse().concat(ci);
    if (evaluate_word(gi, outputs) != squeezed[static_cast<size_t>(i) - 1])
      fail(Errc::internal, "input witness word does not reproduce squeezed generator " +
                               std::to_string(i - 1));
    result.input_witnesses.push_back(std::move(gi));
  }

  // provenance words must reproduce the outputs exactly
  std::vector<PLMap> full_inputs = squeezed;
  full_inputs.push_back(a);
  full_inputs.push_back(b);
  for (size_t i = 0; i < result.provenance.size(); ++i) {
    if (evaluate_word(result.provenance[i], full_inputs) != outputs[i])
      fail(Errc::internal, "provenance word does not reproduce output " + std::to_string(i));
  }
  return result;
}

ExtendResult extend_chain(const ChainSystem& sys, int M_max) {
  size_t n = sys.size();
  if (n < 3)
    fail(Errc::too_few_generators,
         "chain extension needs at least three generators; for a two-generator system build a "
         "longer chain through the class-A construction");
  ChainSystem checked = sys;
  if (checked.status == ChainStatus::unclassified)
    fail(Errc::not_prechain, "system is not a prechain: " + checked.diagnostic);
  certify(checked);
  if (checked.status == ChainStatus::prechain)
    fail(Errc::not_certified, "chain extension needs a chain-certified system");

  const PLMap& p = sys.generators[n - 3];
  const PLMap& q = sys.generators[n - 2];
  const PLMap& r = sys.generators[n - 1];
  int pi = static_cast<int>(n) - 3, qi = static_cast<int>(n) - 2, ri = static_cast<int>(n) - 1;
  Word pr_word({{pi, 1}, {ri, 1}});
  PLMap pr = compose(p, r);

  for (int M = 1; M <= M_max; ++M) {
    PLMap d = conjugate(power(q, -M), p);
    PLMap f = conjugate(power(pr, M), q);
    PLMap fM = power(f, M);
    PLMap e = conjugate(power(f, -M), q);

    std::vector<PLMap> maps(sys.generators.begin(), sys.generators.end() - 3);
    maps.push_back(d);
    maps.push_back(e);
    maps.push_back(fM);
    maps.push_back(r);

    ChainSystem candidate = classify_prechain(maps);
    if (candidate.status == ChainStatus::unclassified) continue;
    SystemCertificates certs = certify(candidate);
    if (candidate.status == ChainStatus::prechain) continue;

    ExtPoint e_left = support(e).single_interval()->lo;
    ExtPoint q_left = support(q).single_interval()->lo;
    if (e_left != q_left)
      fail(Errc::internal, "left endpoints of the new and old middle supports differ");

    ExtendResult result;
    result.system = std::move(candidate);
    result.M = M;
    for (size_t i = 0; i + 3 < n; ++i) result.provenance.push_back(Word::generator(static_cast<int>(i)));
    Word f_word = pr_word.pow(M).concat(Word::generator(qi)).concat(pr_word.pow(-M));
    result.provenance.push_back(
        Word({{qi, -M}, {pi, 1}, {qi, M}}));                                    // d
    result.provenance.push_back(
        f_word.pow(-M).concat(Word::generator(qi)).concat(f_word.pow(M)));     // e
    result.provenance.push_back(f_word.pow(M));                                 // f^M
    result.provenance.push_back(Word::generator(ri));                           // r
    for (size_t i = 0; i < result.provenance.size(); ++i) {
      if (evaluate_word(result.provenance[i], sys.generators) != result.system.generators[i])
        fail(Errc::internal, "provenance word does not reproduce output " + std::to_string(i));
    }
    (void)certs;
    return result;
  }
  fail(Errc::not_found, "no exponent up to " + std::to_string(M_max) +
                            " certifies the extended chain");
}

}  // namespace cg

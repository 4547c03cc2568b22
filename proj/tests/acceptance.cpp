// Acceptance suite: one criterion per function, each with a pinned runtime
// budget, printing one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "blowup.hpp"
#include "chain.hpp"
#include "constructions.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "test_helpers.hpp"
#include "word.hpp"

using namespace cg;
using namespace cg::testing;

namespace {

struct Checker {
  std::string failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && failure.empty()) failure = what;
  }
};

struct Criterion {
  std::string name;
  double limit_ms;
  std::function<void(Checker&)> run;
};

std::vector<PLMap> powered(const std::vector<PLMap>& gens, long n) {
  std::vector<PLMap> out;
  for (const auto& g : gens) out.push_back(power(g, n));
  return out;
}

void criterion_standard_generators(Checker& c) {
  auto [a, b] = standard_generators();
  c.expect(a.evaluate(Rational(0)) == Rational(1), "a(0) != 1");
  c.expect(b.evaluate(Rational(1, 2)) == Rational(1), "b(1/2) != 1");
  c.expect(b.evaluate(Rational(-3)) == Rational(-3), "b(-3) != -3");
}

void criterion_standard_chain(Checker& c) {
  auto chain = standard_three_chain();
  ChainSystem sys = classify_prechain(chain);
  c.expect(sys.status == ChainStatus::prechain, "standard chain is not a prechain");
  c.expect(*sys.supports[0].single_interval() ==
               Interval{ExtPoint::neg_infinity(), ExtPoint(Rational(1))},
           "first support is not (-inf,1)");
  c.expect(*sys.supports[1].single_interval() ==
               Interval{ExtPoint(Rational(0)), ExtPoint(Rational(2))},
           "middle support is not (0,2)");
  c.expect(*sys.supports[2].single_interval() ==
               Interval{ExtPoint(Rational(1)), ExtPoint::pos_infinity()},
           "last support is not (1,inf)");
  c.expect(chain[1].evaluate(chain[0].evaluate(Rational(0))) == Rational(1),
           "f1 f0 (0) != 1");
  c.expect(chain[2].evaluate(chain[1].evaluate(Rational(1))) == Rational(2),
           "f2 f1 (1) != 2");
}

void criterion_f_relators(Checker& c) {
  auto [a, b] = standard_generators();
  RelatorReport f_report = check_relators(relators({RelatorFamilyKind::thompson_f}), {a, b});
  c.expect(f_report.all_hold, "presentation relators fail on the standard copy");

  auto chain = standard_three_chain();
  for (size_t pair = 0; pair + 1 < chain.size(); ++pair) {
    const PLMap& f = chain[pair];
    const PLMap& g = chain[pair + 1];
    c.expect(two_chain_F_certificate(f, g).holds, "pair certificate fails");
    PLMap gf = compose(g, f);
    for (int k = 1; k <= 4; ++k) {
      PLMap inner = conjugate(power(gf, k), g);
      c.expect(commutator(f, inner).is_identity(),
               "derived relator fails at k=" + std::to_string(k));
    }
  }
}

void criterion_stabilization(Checker& c) {
  auto chain = standard_three_chain();
  ChainSystem sys = classify_prechain(chain);
  c.expect(!higman_thompson_certificate(sys).holds, "criterion holds already at N=1");
  ChainSystem squared = classify_prechain(powered(chain, 2));
  c.expect(higman_thompson_certificate(squared).holds, "criterion fails at N=2");

  StabilizationResult result = stabilize(sys, StabilizationTarget::higman_thompson, 64);
  c.expect(result.minimal_N == 2, "minimal exponent is not 2");

  // independent displacement evaluation
  Rational once = Rational(0);
  for (const auto& g : chain) once = g.evaluate(once);
  c.expect(once < Rational(2), "single composite already reaches 2");
  Rational twice = Rational(0);
  for (const auto& g : chain) twice = g.evaluate(g.evaluate(twice));
  c.expect(twice >= Rational(2), "squared composite falls short of 2");
  c.expect(twice == Rational(13, 4), "squared composite image is not 13/4");

  // presentation relations truncated at index bound 6
  const int n = 3, bound = 6;
  std::vector<PLMap> h = fn_witness_generators(squared, bound + n);
  for (int i = 0; i <= bound; ++i)
    for (int j = i + 1; j <= bound; ++j) {
      PLMap lhs = compose(compose(invert(h[size_t(i)]), h[size_t(j)]), h[size_t(i)]);
      c.expect(lhs == h[size_t(j + n - 1)],
               "relation fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

void criterion_extension(Checker& c) {
  ChainSystem sys = classify_prechain(standard_three_chain());
  certify(sys);
  ExtendResult r = extend_chain(sys, 64);
  c.expect(r.system.size() == 4, "extension does not have 4 generators");
  ChainSystem recheck = classify_prechain(r.system.generators);
  c.expect(recheck.status == ChainStatus::prechain, "extension is not a prechain");
  for (size_t i = 0; i + 1 < r.system.size(); ++i)
    c.expect(two_chain_F_certificate(r.system.generators[i], r.system.generators[i + 1]).holds,
             "extension pair certificate fails");
  c.expect(support(r.system.generators[1]).single_interval()->lo ==
               support(sys.generators[1]).single_interval()->lo,
           "left endpoints of the middle supports differ");
  for (size_t i = 0; i < r.system.size(); ++i)
    c.expect(evaluate_word(r.provenance[i], sys.generators) == r.system.generators[i],
             "provenance word fails to reproduce output " + std::to_string(i));
}

void criterion_class_a(Checker& c) {
  auto [a, b] = standard_generators();
  c.expect(class_A_membership(b).member, "the doubling map is not recognized");
  Rng rng(606);
  for (int i = 0; i < 50; ++i) {
    PLMap g = rng.bump(Rational(1, 4), Rational(1, 2), size_t(rng.integer(1, 3)));
    c.expect(class_A_membership(compose(b, g)).member,
             "composition with a supported factor leaves the class");
  }
  PLMap k1 = rng.bump(Rational(0), Rational(1));
  PLMap k2 = rng.bump(Rational(0), Rational(1), 3);
  EmbedResult embedded = embed_compactly_supported({k1, k2});
  c.expect(embedded.system.size() == 4, "embedding is not a 4-chain");
  c.expect(embedded.system.status == ChainStatus::chain_certified ||
               embedded.system.status == ChainStatus::higman_thompson_certified,
           "embedding is not certified");
}

void criterion_blowup(Checker& c) {
  BlowupSystem sys = make_blowup_system();
  BlowupClaims claims = verify_claims(sys, 8);
  c.expect(claims.claim1, "claim 1 fails");
  c.expect(claims.claim2, "claim 2 fails");
  c.expect(claims.claim2_element.base.is_identity(), "claim 2 base is not the identity");
  c.expect(claims.claim2_element.shift.size() == 1 &&
               claims.claim2_element.shift.begin()->second == 1,
           "claim 2 shift is not a single unit delta");
  c.expect(claims.claim3, "claim 3 fails");
  std::map<Rational, long long> expected{{Rational(1), 1}, {Rational(0), -1}};
  c.expect(claims.claim3_element.shift == expected, "claim 3 element is not delta_1 - delta_0");
  c.expect(claims.claim3_base_word.length() == 2, "claim 3 witness word is not of length 2");
  Rational via = sys.base_generators[1].preimage(Rational(1));
  c.expect(via == Rational(1, 2), "witness does not pass through 1/2");
  c.expect(sys.base_generators[0].preimage(via) == Rational(0), "witness does not reach 0");
}

void criterion_lamplighter(Checker& c) {
  auto chain = standard_three_chain();
  auto [a, b] = standard_generators();
  PLMap f = commutator(chain[0], chain[1]);
  IntervalSet supp = support(f);
  c.expect(!supp.is_empty() && supp.is_bounded(), "commutator support is not compact");
  Rational lo = supp.hull()->lo.finite(), hi = supp.hull()->hi.finite();
  Rational diameter = hi - lo;
  long N = 1;
  while (Rational(N) <= diameter) ++N;  // smallest integer exceeding the diameter

  auto rels = relators({RelatorFamilyKind::lamplighter, static_cast<int>(N), 3});
  c.expect(check_relators(rels, {a, f}).all_hold, "lamplighter relators fail on (a, f)");
  c.expect(check_relators(rels, {power(a, N), f}).all_hold,
           "lamplighter relators fail on (a^N, f)");

  // exact disjointness of the N-translates certifies the whole family
  c.expect(Rational(N) > diameter, "translation step does not exceed the diameter");
  for (long k : {-2L, -1L, 1L, 2L}) {
    IntervalSet translated = image(power(a, k * N), supp);
    c.expect(translated.intersect(supp).is_empty(),
             "translate k=" + std::to_string(k) + " meets the support");
  }
}

void criterion_witnesses(Checker& c) {
  ChainSystem sys = classify_prechain(standard_three_chain());

  Word u = co_transitivity_witness(sys, {{Rational(0), Rational(3, 2)}},
                                   {Rational(1, 2), Rational(3, 2)}, 32);
  PLMap um = evaluate_word(u, sys.generators);
  c.expect(um.evaluate(Rational(0)) > Rational(1, 2) &&
               um.evaluate(Rational(3, 2)) < Rational(3, 2),
           "co-transitivity witness fails the endpoint check");

  Word comm = Word::commutator(Word::generator(0), Word::generator(1));
  Word h = higman_triple_witness(sys, comm, comm, comm, 32);
  PLMap cm = evaluate_word(comm, sys.generators);
  PLMap hm = evaluate_word(h, sys.generators);
  IntervalSet S = support(cm);
  c.expect(image(invert(hm), image(cm, image(hm, S))).intersect(S).is_empty(),
           "displacement witness fails the disjointness re-check");

  Word agree = agree_on_compact_in_commutator(sys, Word::generator(1),
                                              {Rational(1, 2), Rational(3, 2)}, 32);
  auto sums = exponent_sum(agree, 3);
  c.expect(sums == std::vector<long long>{0, 0, 0}, "agreement word has nonzero exponent sum");
  PLMap am = evaluate_word(agree, sys.generators);
  const PLMap& f1 = sys.generators[1];
  bool agreement = true;
  for (long k = 0; k <= 32; ++k) {
    Rational x = Rational(1, 2) + Rational(k, 32);
    agreement = agreement && am.evaluate(x) == f1.evaluate(x);
  }
  c.expect(agreement, "agreement word differs on the interval");
}

void criterion_properties(Checker& c) {
  Rng rng(707);
  auto chain = standard_three_chain();

  for (int i = 0; i < 1000; ++i) {
    PLMap f = rng.plmap(), g = rng.plmap(), h = rng.plmap();
    c.expect(compose(f, invert(f)).is_identity(), "inverse law fails");
    c.expect(compose(compose(f, g), h) == compose(f, compose(g, h)), "associativity fails");
  }
  for (int i = 0; i < 1000; ++i) {
    PLMap f = rng.plmap(), g = rng.plmap();
    c.expect(support(conjugate(g, f)) == image(g, support(f)), "support equivariance fails");
  }
  for (int i = 0; i < 1000; ++i) {
    PLMap f = rng.plmap();
    std::vector<Knot> dense;
    const auto& ks = f.knots();
    for (size_t k = 0; k < ks.size(); ++k) {
      dense.push_back(ks[k]);
      if (k + 1 < ks.size()) {
        Rational mx = midpoint(ks[k].x, ks[k + 1].x);
        dense.push_back({mx, f.evaluate(mx)});
      }
    }
    PLMap rebuilt = PLMap::make(std::move(dense), f.left_slope(), f.right_slope());
    c.expect(rebuilt == f, "canonical equality misses a redundant subdivision");
    PLMap g = rng.plmap();
    c.expect(functions_equal(f, g) == (f == g), "structural equality disagrees with probing");
  }
  for (int i = 0; i < 1000; ++i) {
    Word u = rng.word(3), v = rng.word(3);
    c.expect(evaluate_word(u.concat(v), chain) ==
                 compose(evaluate_word(u, chain), evaluate_word(v, chain)),
             "word evaluation is not a homomorphism");
  }
  BlowupSystem bsys = make_blowup_system();
  for (int i = 0; i < 1000; ++i) {
    BlowupElement x = bl_word_eval(bsys, rng.word(3, 4));
    BlowupElement y = bl_word_eval(bsys, rng.word(3, 4));
    BlowupElement z = bl_word_eval(bsys, rng.word(3, 4));
    c.expect(bl_mul(bl_mul(x, y), z) == bl_mul(x, bl_mul(y, z)),
             "blow-up associativity fails");
    c.expect(bl_mul(x, bl_inverse(x)).is_identity(), "blow-up inverse fails");
  }
  for (int i = 0; i < 1000; ++i) {
    Rational base = rng.rational(4);
    long budget = rng.integer(1, 24);
    OrbitSample s1 = orbit(chain, base, budget);
    OrbitSample s2 = orbit(chain, base, budget);
    c.expect(s1.points == s2.points && s1.visit_order == s2.visit_order,
             "orbit enumeration is not deterministic");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"standard generators evaluate exactly", 1.0, criterion_standard_generators},
      {"standard 3-chain supports and displacements", 10.0, criterion_standard_chain},
      {"presentation and derived relator families vanish", 100.0, criterion_f_relators},
      {"stabilization at the minimal exponent 2", 1000.0, criterion_stabilization},
      {"chain extension with provenance", 5000.0, criterion_extension},
      {"interpolating class and embedding", 5000.0, criterion_class_a},
      {"blow-up claims", 100.0, criterion_blowup},
      {"lamplighter relators with translation certificate", 1000.0, criterion_lamplighter},
      {"witness machinery", 30000.0, criterion_witnesses},
      {"randomized property suites", 60000.0, criterion_properties},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].run(checker);
      error = checker.failure;
    } catch (const std::exception& e) {
      error = e.what();
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = ms < criteria[i].limit_ms;
    bool pass = error.empty() && in_budget;
    if (!pass) ++failures;
    std::printf("%s  criterion %zu: %s  (%.2f ms, budget %.0f ms)%s%s\n",
                pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(), ms,
                criteria[i].limit_ms, error.empty() ? "" : " -- ", error.c_str());
  }
  return failures == 0 ? 0 : 1;
}

#include "blowup.hpp"

#include <deque>
#include <set>

#include "constructions.hpp"
#include "errors.hpp"

namespace cg {

BlowupElement bl_identity() { return BlowupElement{{}, PLMap::identity()}; }

namespace {
void add_shift(std::map<Rational, long long>& into, const Rational& at, long long count) {
  if (count == 0) return;
  auto [it, inserted] = into.emplace(at, count);
  if (!inserted) {
    it->second += count;
    if (it->second == 0) into.erase(it);
  }
}
}  // namespace

BlowupElement bl_mul(const BlowupElement& a, const BlowupElement& b) {
  BlowupElement out;
  out.shift = a.shift;
  for (const auto& [y, k] : b.shift) add_shift(out.shift, a.base.evaluate(y), k);
  out.base = compose(a.base, b.base);
  return out;
}

BlowupElement bl_inverse(const BlowupElement& a) {
  BlowupElement out;
  out.base = invert(a.base);
  for (const auto& [y, k] : a.shift) add_shift(out.shift, out.base.evaluate(y), -k);
  return out;
}

BlowupElement bl_pow(const BlowupElement& a, long long n) {
  BlowupElement base = n >= 0 ? a : bl_inverse(a);
  long long reps = n >= 0 ? n : -n;
  BlowupElement acc = bl_identity();
  for (long long i = 0; i < reps; ++i) acc = bl_mul(acc, base);
  return acc;
}

BlowupSystem make_blowup_system(const Rational& marked_point) {
  BlowupSystem sys;
  sys.base_generators = standard_three_chain();
  sys.marked_point = marked_point;

  const PLMap& f0 = sys.base_generators[0];
  const PLMap& f1 = sys.base_generators[1];
  const PLMap& f2 = sys.base_generators[2];
  if (f0.evaluate(marked_point) != marked_point)
    fail(Errc::bad_marked_point, "marked point " + marked_point.str() +
                                     " is not fixed by the first generator");
  if (f2.evaluate(marked_point) != marked_point)
    fail(Errc::bad_marked_point, "marked point " + marked_point.str() +
                                     " is not fixed by the last generator");
  if (f1.evaluate(marked_point) == marked_point)
    fail(Errc::bad_marked_point,
         "marked point " + marked_point.str() + " is not moved by the middle generator");

  sys.generators.push_back(BlowupElement{{}, f0});
  sys.generators.push_back(BlowupElement{{{marked_point, 1}}, f1});
  sys.generators.push_back(BlowupElement{{}, f2});

  // the inserted map commutes with the outer generators
  BlowupElement h{{{marked_point, 1}}, PLMap::identity()};
  for (size_t i : {size_t{0}, size_t{2}}) {
    const BlowupElement& g = sys.generators[i];
    BlowupElement comm = bl_mul(bl_mul(h, g), bl_mul(bl_inverse(h), bl_inverse(g)));
    if (!comm.is_identity())
      fail(Errc::bad_marked_point, "inserted map fails to commute with generator " +
                                       std::to_string(i));
  }
  return sys;
}

BlowupElement bl_word_eval(const BlowupSystem& sys, const Word& word) {
  BlowupElement acc = bl_identity();
  for (const auto& f : word.factors()) {
    if (f.index >= static_cast<int>(sys.generators.size()))
      fail(Errc::index_out_of_range, "word index out of range");
    acc = bl_mul(acc, bl_pow(sys.generators[static_cast<size_t>(f.index)], f.exponent));
  }
  return acc;
}

Word blowup_kernel_word() {
  // g1 g0 g2 g1 (g2 g1 g0)^-1
  Word head({{1, 1}, {0, 1}, {2, 1}, {1, 1}});
  Word tail({{2, 1}, {1, 1}, {0, 1}});
  return head.concat(tail.inverse());
}

BlowupClaims verify_claims(const BlowupSystem& sys, int depth) {
  BlowupClaims claims;

  ChainSystem base = classify_prechain(sys.base_generators);
  certify(base);
  claims.base_status = base.status;
  claims.claim1 = base.status == ChainStatus::chain_certified ||
                  base.status == ChainStatus::higman_thompson_certified;

  claims.claim2_word = blowup_kernel_word();
  claims.claim2_element = bl_word_eval(sys, claims.claim2_word);
  const auto& shift = claims.claim2_element.shift;
  claims.claim2 = claims.claim2_element.base.is_identity() && shift.size() == 1 &&
                  shift.begin()->second == 1;
  if (claims.claim2) claims.claim2_orbit_label = shift.begin()->first;

  KernelWitness witness = kernel_commutator_witness(sys, depth);
  claims.claim3_element = witness.element;
  claims.claim3_base_word = witness.base_word;
  claims.claim3_defining_word = witness.defining_word;
  claims.claim3_exponent_sums = witness.exponent_sums;
  bool sums_zero = true;
  for (long long v : witness.exponent_sums) sums_zero = sums_zero && v == 0;
  claims.claim3 = !witness.element.is_identity() && witness.element.base.is_identity() &&
                  sums_zero;
  return claims;
}

KernelWitness kernel_commutator_witness(const BlowupSystem& sys, int depth) {
  if (depth < 2) fail(Errc::invalid_argument, "search depth must be at least 2");

  // breadth-first over the base action: generator index ascending, positive
  // exponent before negative
  const Rational target(0);
  struct Node {
    Rational point;
    Word word;
    int depth;
  };
  std::deque<Node> queue;
  std::set<Rational> seen;
  queue.push_back({sys.marked_point, Word::empty(), 0});
  seen.insert(sys.marked_point);

  Word found;
  bool ok = sys.marked_point == target;
  while (!ok && !queue.empty()) {
    Node node = queue.front();
    queue.pop_front();
    if (node.depth == depth) continue;
    for (size_t i = 0; i < sys.base_generators.size() && !ok; ++i) {
      for (int sign : {1, -1}) {
        const PLMap& g = sys.base_generators[i];
        Rational next = sign > 0 ? g.evaluate(node.point) : g.preimage(node.point);
        if (!seen.insert(next).second) continue;
        Word w = Word::generator(static_cast<int>(i), sign).concat(node.word);
        if (next == target) {
          found = w;
          ok = true;
          break;
        }
        queue.push_back({next, w, node.depth + 1});
      }
    }
  }
  if (!ok)
    fail(Errc::not_found,
         "no word of length up to " + std::to_string(depth) + " moves the marked point to 0");

  BlowupElement h{{{sys.marked_point, 1}}, PLMap::identity()};
  BlowupElement lift = bl_word_eval(sys, found);
  BlowupElement element = bl_mul(bl_mul(h, lift), bl_mul(bl_inverse(h), bl_inverse(lift)));

  // the inserted map itself is a word over the generators: conjugate the
  // kernel word back over the marked point
  Word h_word = Word::generator(1, -1).concat(blowup_kernel_word()).concat(Word::generator(1));
  Word defining = Word::commutator(h_word, found);
  if (!(bl_word_eval(sys, defining) == element))
    fail(Errc::internal, "defining word does not reproduce the kernel witness");

  KernelWitness witness;
  witness.element = std::move(element);
  witness.base_word = std::move(found);
  witness.exponent_sums = exponent_sum(defining, static_cast<int>(sys.generators.size()));
  witness.defining_word = std::move(defining);
  return witness;
}

}  // namespace cg

#pragma once

#include <map>
#include <string>
#include <vector>

#include "chain.hpp"
#include "word.hpp"

namespace cg {

// Element of the blown-up group, written as (shift, base): base acts on the
// line, shift counts transported copies of the inserted interval map over
// each orbit point. Multiplication pushes the right factor's shift through
// the left factor's base:
//   (t1, w1)(t2, w2) = (t1 + w1.t2, w1 w2),  (w.t)(y) = t(w^-1(y)).
struct BlowupElement {
  std::map<Rational, long long> shift;  // zero coefficients are never stored
  PLMap base;

  bool is_identity() const { return shift.empty() && base.is_identity(); }
  bool operator==(const BlowupElement& o) const { return shift == o.shift && base == o.base; }
};

BlowupElement bl_identity();
BlowupElement bl_mul(const BlowupElement& a, const BlowupElement& b);
BlowupElement bl_inverse(const BlowupElement& a);
BlowupElement bl_pow(const BlowupElement& a, long long n);

struct BlowupSystem {
  std::vector<PLMap> base_generators;     // the standard 3-chain
  Rational marked_point;                  // orbit point carrying the inserted map
  std::vector<BlowupElement> generators;  // (0,f0), (delta_marked, f1), (0,f2)
};

// The marked point must be fixed by the outer generators and moved by the
// middle one; the commutation of the inserted map with the outer generators
// is re-checked in the model.
BlowupSystem make_blowup_system(const Rational& marked_point = Rational(1));

BlowupElement bl_word_eval(const BlowupSystem& sys, const Word& word);

struct BlowupClaims {
  // claim 1: the base generators form a certified chain system
  bool claim1 = false;
  ChainStatus base_status = ChainStatus::unclassified;
  // claim 2: a fixed word evaluates to a nontrivial kernel element
  bool claim2 = false;
  Word claim2_word;
  BlowupElement claim2_element;
  Rational claim2_orbit_label;  // where the single delta sits
  // claim 3: a kernel element lying in the commutator subgroup
  bool claim3 = false;
  BlowupElement claim3_element;
  Word claim3_base_word;
  Word claim3_defining_word;
  std::vector<long long> claim3_exponent_sums;

  bool all() const { return claim1 && claim2 && claim3; }
};

// The word whose evaluation lands in the kernel with base identity.
Word blowup_kernel_word();

BlowupClaims verify_claims(const BlowupSystem& sys, int depth = 16);

struct KernelWitness {
  BlowupElement element;
  Word base_word;      // moves the marked point to 0
  Word defining_word;  // over the blown-up generators; zero exponent sums
  std::vector<long long> exponent_sums;
};

// Searches (breadth-first over the base action) for a word carrying the
// marked point to 0 and returns the commutator of the inserted map with any
// lift of it: a nontrivial element with identity base.
KernelWitness kernel_commutator_witness(const BlowupSystem& sys, int depth);

}  // namespace cg

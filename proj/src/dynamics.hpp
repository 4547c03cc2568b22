#pragma once

#include <string>
#include <vector>

#include "chain.hpp"
#include "word.hpp"

namespace cg {

struct OrbitSample {
  Rational base_point;
  std::vector<Rational> points;       // sorted ascending
  std::vector<Rational> visit_order;  // discovery order, base point first
  bool frontier_exhausted = false;
  int word_length_bound = 0;
};

// Deterministic breadth-first enumeration of the orbit of x: generators in
// index order, positive exponent before negative; stops once `budget`
// distinct points are collected or nothing new appears.
OrbitSample orbit(const std::vector<PLMap>& gens, const Rational& x, long budget);

struct GapReport {
  Rational window_lo;
  Rational window_hi;
  Rational max_gap;
  Rational gap_location;  // left end of the widest gap
};

// Largest distance between consecutive sample points inside the closed
// window. A finite-resolution probe only: a small gap at a large budget
// suggests but never proves density.
GapReport gap_report(const OrbitSample& sample, const Rational& window_lo,
                     const Rational& window_hi);

struct ClosedInterval {
  Rational lo;
  Rational hi;
};

struct OpenInterval {
  Rational lo;
  Rational hi;
};

// Word u with u(A) contained in the open interval B, endpoint-verified.
// Searches the structured family g_1^l (g_n ... g_1)^-m first, then falls
// back to a bounded breadth-first search over short words.
Word co_transitivity_witness(const ChainSystem& sys, const std::vector<ClosedInterval>& A,
                             const OpenInterval& B, int depth);

// Word u such that S and u^-1 t u (S) are disjoint, where S is the union of
// the supports of r and s. Reduces to co_transitivity_witness with a target
// interval moved off itself by t.
Word higman_triple_witness(const ChainSystem& sys, const Word& r, const Word& s, const Word& t,
                           int depth);

// Word with zero exponent-sum vector agreeing with g on the compact
// interval A, built by conjugating each letter of g into end zones of the
// chain that miss every partial image of A.
Word agree_on_compact_in_commutator(const ChainSystem& sys, const Word& g,
                                    const ClosedInterval& A, int depth);

}  // namespace cg

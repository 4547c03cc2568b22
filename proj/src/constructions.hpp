#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chain.hpp"
#include "word.hpp"

namespace cg {

struct StandardGenerators {
  PLMap a;  // x + 1
  PLMap b;  // identity below 0, doubling on (0,1), x + 1 above 1
};

StandardGenerators standard_generators();

// The standard 3-chain (b^-1 a, a b^-1 a^-1 b, a b a^-1) with supports
// (-inf,1), (0,2), (1,inf).
std::vector<PLMap> standard_three_chain();

struct ClassAReport {
  bool member = false;
  std::string violation;
  std::optional<Rational> violation_point;
};

// Membership in the class of maps that are the identity below 0, translation
// by one above 1, and strictly between x and x+1 on (0,1).
ClassAReport class_A_membership(const PLMap& g);

// Result of a constructive procedure: the system plus, for each output
// generator, its defining word over the procedure's input alphabet.
struct ClassAChainResult {
  ChainSystem system;
  // alphabet: indices 0..n-1 are the class-A inputs, index n is the unit
  // translation
  std::vector<Word> provenance;
};

// Builds the (n+1)-generator chain f_0 = g_1^-1 t, f_i = (t^i g_{i+1}^-1
// t^-i)(t^{i-1} g_i t^{1-i}), f_n = t^{n-1} g_n t^{1-n} from class-A maps
// g_1..g_n, with t the unit translation. Supports come out as (-inf,1),
// (0,2), ..., (n-1,inf) and every consecutive certificate holds; all of
// this is re-verified before returning.
ClassAChainResult chain_from_class_A(const std::vector<PLMap>& gs);

struct EmbedResult {
  ChainSystem system;
  PLMap squeeze;  // affine map used to conjugate the inputs into (1/4,1/2)
  // alphabet for output provenance: 0..n-1 squeezed inputs, n = translation,
  // n+1 = the doubling generator
  std::vector<Word> provenance;
  // each squeezed input as a word over the output generators
  std::vector<Word> input_witnesses;
};

// Realizes a finite list of boundedly supported maps inside an (n+2)-chain
// system: conjugate everything into (1/4,1/2) by one affine map, then apply
// chain_from_class_A to (b g_1', ..., b g_n', b).
EmbedResult embed_compactly_supported(const std::vector<PLMap>& gens);

struct ExtendResult {
  ChainSystem system;  // n+1 generators
  int M;
  std::vector<Word> provenance;  // over the input generators
};

// Converts an n-chain system (n >= 3) into an (n+1)-chain system generating
// the same group, replacing the last three generators p, q, r by
// d = q^-M p q^M, e = f^-M q f^M, f^M, r with f = (pr)^M q (pr)^-M,
// for the minimal M <= M_max at which every certificate holds.
ExtendResult extend_chain(const ChainSystem& sys, int M_max);

}  // namespace cg

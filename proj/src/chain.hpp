#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plmap.hpp"

namespace cg {

enum class ChainStatus {
  unclassified,
  prechain,
  chain_certified,
  higman_thompson_certified,
};

std::string to_string(ChainStatus s);

// Ordered generator system with cached supports. A prechain system has
// single-interval supports forming a chain with strictly increasing left
// endpoints, and every generator moves points to the right.
struct ChainSystem {
  std::vector<PLMap> generators;
  std::vector<IntervalSet> supports;
  ChainStatus status = ChainStatus::unclassified;
  std::string diagnostic;  // first violated condition when unclassified

  size_t size() const { return generators.size(); }
};

// Outcome of a dynamical certificate together with the exact inequality
// instance that was checked; a holding witness re-verifies under evaluate.
struct CertResult {
  bool holds = false;
  std::vector<std::pair<std::string, ExtPoint>> witness;

  std::optional<ExtPoint> witness_value(const std::string& key) const;
};

bool is_chain_of_intervals(const std::vector<IntervalSet>& sets);

ChainSystem classify_prechain(const std::vector<PLMap>& maps);

// Displacement criterion for a pair with overlapping single-interval
// supports (x,z), (y,w), x < y < z < w: holds iff g(f(y)) >= z, in which
// case <f,g> is a copy of Thompson's group F.
CertResult two_chain_F_certificate(const PLMap& f, const PLMap& g);

// n-generator criterion: the composite g_n ... g_1 must carry the left
// block of the chain past the right overlap; holds iff the image of the
// second left endpoint reaches the second-to-last right endpoint.
CertResult higman_thompson_certificate(const ChainSystem& sys);

// Runs the consecutive-pair certificates (and the n-generator criterion)
// and upgrades sys.status accordingly.
struct SystemCertificates {
  std::vector<CertResult> pair_certificates;
  std::optional<CertResult> fn_certificate;
};
SystemCertificates certify(ChainSystem& sys);

enum class StabilizationTarget { chain, higman_thompson };

struct StabilizationTrace {
  int exponent;
  bool holds;
  std::string detail;
};

struct StabilizationResult {
  std::optional<int> minimal_N;
  StabilizationTarget target;
  std::vector<StabilizationTrace> trace;
  std::optional<ChainSystem> stabilized;  // generators raised to minimal_N
};

// Minimal N <= N_max such that the generators raised to the N-th power pass
// the requested certificates; the scan is linear so every smaller exponent
// is recorded as failing.
StabilizationResult stabilize(const ChainSystem& sys, StabilizationTarget target, int N_max);

// The generators h_0, h_1, ... realizing the Higman-Thompson presentation
// on a certified system: h_i = f_{i+1}^-1 ... f_n^-1 for 0 <= i <= n-1,
// extended by h_{i+q(n-1)} = h_0^-q h_i h_0^q.
std::vector<PLMap> fn_witness_generators(const ChainSystem& sys, int count);

}  // namespace cg

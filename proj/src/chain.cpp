#include "chain.hpp"

#include "errors.hpp"

namespace cg {

std::string to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::unclassified:
      return "unclassified";
    case ChainStatus::prechain:
      return "prechain";
    case ChainStatus::chain_certified:
      return "chain-certified";
    case ChainStatus::higman_thompson_certified:
      return "higman-thompson-certified";
  }
  return "?";
}

std::optional<ExtPoint> CertResult::witness_value(const std::string& key) const {
  for (const auto& [k, v] : witness)
    if (k == key) return v;
  return std::nullopt;
}

bool is_chain_of_intervals(const std::vector<IntervalSet>& sets) {
  std::vector<Interval> ivs;
  ivs.reserve(sets.size());
  for (const auto& s : sets) {
    auto iv = s.single_interval();
    if (!iv) fail(Errc::not_single_interval, "chain members must be single intervals");
    ivs.push_back(*iv);
  }
  size_t n = ivs.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = i + 1; k < n; ++k) {
      ExtPoint lo = std::max(ivs[i].lo, ivs[k].lo);
      ExtPoint hi = std::min(ivs[i].hi, ivs[k].hi);
      bool overlap = lo < hi;
      if (k == i + 1) {
        if (!overlap) return false;
        // proper nonempty subinterval of both
        if (lo == ivs[i].lo && hi == ivs[i].hi) return false;
        if (lo == ivs[k].lo && hi == ivs[k].hi) return false;
      } else if (overlap) {
        return false;
      }
    }
  }
  return true;
}

ChainSystem classify_prechain(const std::vector<PLMap>& maps) {
  if (maps.size() < 2)
    fail(Errc::fewer_than_two_generators, "a prechain needs at least two generators");
  ChainSystem sys;
  sys.generators = maps;
  for (const auto& m : maps) sys.supports.push_back(support(m));

  auto diagnose = [&sys](std::string msg) {
    sys.status = ChainStatus::unclassified;
    sys.diagnostic = std::move(msg);
    return sys;
  };

  for (size_t i = 0; i < maps.size(); ++i) {
    if (!sys.supports[i].single_interval())
      return diagnose("generator " + std::to_string(i) +
                      " does not have single-interval support: " + sys.supports[i].str());
  }
  for (size_t i = 0; i < maps.size(); ++i) {
    if (!moves_right(maps[i]))
      return diagnose("generator " + std::to_string(i) + " does not move points to the right");
  }
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    ExtPoint a = sys.supports[i].single_interval()->lo;
    ExtPoint b = sys.supports[i + 1].single_interval()->lo;
    if (!(a < b))
      return diagnose("left endpoints of supports " + std::to_string(i) + "," +
                      std::to_string(i + 1) + " do not increase strictly");
  }
  if (!is_chain_of_intervals(sys.supports))
    return diagnose("supports do not form a chain of intervals");
  sys.status = ChainStatus::prechain;
  return sys;
}

CertResult two_chain_F_certificate(const PLMap& f, const PLMap& g) {
  auto sf = support(f).single_interval();
  auto sg = support(g).single_interval();
  if (!sf || !sg) fail(Errc::bad_support_shape, "both supports must be single intervals");
  if (!moves_right(f) || !moves_right(g))
    fail(Errc::bad_support_shape, "both maps must move points to the right");
  const auto& [x, z] = *sf;
  const auto& [y, w] = *sg;
  if (!(x < y && y < z && z < w))
    fail(Errc::bad_support_shape, "supports must overlap as x < y < z < w");

  Rational yq = y.finite();  // x < y < z forces y, z finite
  Rational fy = f.evaluate(yq);
  Rational gfy = g.evaluate(fy);
  CertResult res;
  res.holds = ExtPoint(gfy) >= z;
  res.witness = {{"y", ExtPoint(yq)}, {"f_y", ExtPoint(fy)}, {"gf_y", ExtPoint(gfy)}, {"z", z}};
  return res;
}

CertResult higman_thompson_certificate(const ChainSystem& sys) {
  if (sys.status == ChainStatus::unclassified)
    fail(Errc::not_prechain, "system is not a prechain: " + sys.diagnostic);
  size_t n = sys.size();
  // image of supp f_1 \ supp f_2 under f_n ... f_1 is the half-open
  // interval up to the image of the second left endpoint; it meets
  // supp f_n \ supp f_{n-1} iff that image reaches the right overlap.
  Rational start = sys.supports[1].single_interval()->lo.finite();
  Rational m = start;
  for (const auto& g : sys.generators) m = g.evaluate(m);
  ExtPoint threshold = sys.supports[n - 2].single_interval()->hi;

  CertResult res;
  res.holds = ExtPoint(m) >= threshold;
  res.witness = {{"start", ExtPoint(start)},
                 {"image", ExtPoint(m)},
                 {"threshold", threshold}};
  return res;
}

SystemCertificates certify(ChainSystem& sys) {
  SystemCertificates out;
  if (sys.status == ChainStatus::unclassified) return out;
  bool all = true;
  for (size_t i = 0; i + 1 < sys.size(); ++i) {
    out.pair_certificates.push_back(
        two_chain_F_certificate(sys.generators[i], sys.generators[i + 1]));
    all = all && out.pair_certificates.back().holds;
  }
  if (all) sys.status = ChainStatus::chain_certified;
  out.fn_certificate = higman_thompson_certificate(sys);
  if (all && out.fn_certificate->holds) sys.status = ChainStatus::higman_thompson_certified;
  return out;
}

StabilizationResult stabilize(const ChainSystem& sys, StabilizationTarget target, int N_max) {
  if (sys.status == ChainStatus::unclassified)
    fail(Errc::not_prechain, "system is not a prechain: " + sys.diagnostic);
  StabilizationResult result;
  result.target = target;
  for (int N = 1; N <= N_max; ++N) {
    std::vector<PLMap> powered;
    powered.reserve(sys.size());
    for (const auto& g : sys.generators) powered.push_back(power(g, N));
    ChainSystem candidate = classify_prechain(powered);
    std::string detail;
    bool ok = candidate.status != ChainStatus::unclassified;
    if (!ok) detail = candidate.diagnostic;
    if (ok) {
      SystemCertificates certs = certify(candidate);
      if (candidate.status == ChainStatus::prechain) {
        ok = false;
        for (size_t i = 0; i < certs.pair_certificates.size(); ++i) {
          if (!certs.pair_certificates[i].holds) {
            detail = "pair " + std::to_string(i) + "," + std::to_string(i + 1) +
                     " certificate fails";
            break;
          }
        }
      } else if (target == StabilizationTarget::higman_thompson &&
                 candidate.status != ChainStatus::higman_thompson_certified) {
        ok = false;
        detail = "n-generator criterion fails";
      }
    }
    result.trace.push_back({N, ok, detail});
    if (ok) {
      result.minimal_N = N;
      result.stabilized = std::move(candidate);
      break;
    }
  }
  return result;
}

std::vector<PLMap> fn_witness_generators(const ChainSystem& sys, int count) {
  CertResult cert = higman_thompson_certificate(sys);
  if (!cert.holds)
    fail(Errc::not_certified, "system does not satisfy the n-generator criterion");
  int n = static_cast<int>(sys.size());
  if (count < n)
    fail(Errc::invalid_argument, "need at least n = " + std::to_string(n) + " witnesses");

  std::vector<PLMap> base(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    // h_i = f_{i+1}^-1 ... f_n^-1 (1-based); the tail for i = n-1 is f_n^-1
    PLMap acc = invert(sys.generators[static_cast<size_t>(i)]);
    if (i + 1 < n) acc = compose(acc, base[static_cast<size_t>(i) + 1]);
    base[static_cast<size_t>(i)] = acc;
  }

  std::vector<PLMap> out;
  out.reserve(static_cast<size_t>(count));
  for (int m = 0; m < count; ++m) {
    if (m < n) {
      out.push_back(base[static_cast<size_t>(m)]);
      continue;
    }
    int i = ((m - 1) % (n - 1)) + 1;
    long q = (m - i) / (n - 1);
    const PLMap& h0 = base[0];
    out.push_back(compose(compose(power(h0, -q), base[static_cast<size_t>(i)]), power(h0, q)));
  }
  return out;
}

}  // namespace cg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup.hpp"
#include "chain.hpp"
#include "constructions.hpp"
#include "dynamics.hpp"
#include "word.hpp"

namespace cg {

// Wire formats. PLMap serialization is bit-exact under round trip: values
// are canonical and rationals are written in lowest terms.
std::string plmap_to_json(const PLMap& m);
PLMap plmap_from_json(const std::string& text);
std::string system_to_json(const std::vector<PLMap>& gens);
std::vector<PLMap> system_from_json(const std::string& text);
std::string word_to_json(const Word& w);
Word word_from_json(const std::string& text);
// Accepts {"relators": [...]} or a bare array of words.
std::vector<Word> words_from_json(const std::string& text);
std::string blowup_element_to_json(const BlowupElement& e);

// Reports, all deterministic for fixed inputs.
std::string verify_report(const ChainSystem& sys, const SystemCertificates& certs);
std::string stabilize_report(const StabilizationResult& result, int max_n);
std::string extend_report(const ExtendResult& result);
std::string embed_report(const EmbedResult& result);
std::string blowup_report(const Rational& marked, const BlowupClaims& claims);
std::string class_a_report(const ClassAReport& report);
std::string cotrans_report(const ChainSystem& sys, const std::vector<ClosedInterval>& A,
                           const OpenInterval& B, const Word& witness);
std::string higman_report(const ChainSystem& sys, const Word& r, const Word& s, const Word& t,
                          const Word& witness);
std::string agree_report(const ChainSystem& sys, const Word& g, const ClosedInterval& A,
                         const Word& witness);
std::string relators_json(const std::vector<Word>& rels);
std::string relator_check_report(const RelatorReport& report);
std::string orbit_csv(const OrbitSample& sample);
std::string gap_report_json(const GapReport& report, long budget);

// Figure rendering: support intervals as stacked segments, optionally the
// generator graphs; single-map input renders its graph with knots marked.
std::string plot_svg(const std::string& input_json, bool include_graphs);

// Helpers shared with the CLI surface.
std::vector<ClosedInterval> closed_intervals_from_json(const std::string& text);
OpenInterval open_interval_from_json(const std::string& text);

}  // namespace cg

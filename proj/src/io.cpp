#include "io.hpp"

#include <json.hpp>

#include "errors.hpp"

namespace cg {

using json = nlohmann::ordered_json;

namespace {

json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
  if (!j.is_string()) fail(Errc::parse_error, "rationals must be JSON strings");
  return Rational::parse(j.get<std::string>());
}

json ext_json(const ExtPoint& p) { return p.str(); }

json interval_set_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& iv : s.components()) out.push_back({ext_json(iv.lo), ext_json(iv.hi)});
  return out;
}

json plmap_json(const PLMap& m) {
  json knots = json::array();
  for (const auto& k : m.knots()) knots.push_back({rational_json(k.x), rational_json(k.y)});
  return json{{"knots", std::move(knots)},
              {"left_slope", rational_json(m.left_slope())},
              {"right_slope", rational_json(m.right_slope())}};
}

PLMap plmap_from(const json& j) {
  if (!j.is_object() || !j.contains("knots") || !j.contains("left_slope") ||
      !j.contains("right_slope"))
    fail(Errc::parse_error, "a map needs knots, left_slope and right_slope");
  std::vector<Knot> knots;
  for (const auto& k : j.at("knots")) {
    if (!k.is_array() || k.size() != 2) fail(Errc::parse_error, "knots are [x, y] pairs");
    knots.push_back({rational_from(k[0]), rational_from(k[1])});
  }
  return PLMap::make(std::move(knots), rational_from(j.at("left_slope")),
                     rational_from(j.at("right_slope")));
}

json word_json(const Word& w) {
  json out = json::array();
  for (const auto& f : w.factors())
    out.push_back({std::to_string(f.index), std::to_string(f.exponent)});
  return out;
}

Word word_from(const json& j) {
  if (!j.is_array()) fail(Errc::parse_error, "a word is an array of [index, exponent] pairs");
  std::vector<WordFactor> factors;
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 2)
      fail(Errc::parse_error, "word factors are [index, exponent] pairs");
    auto parse_int = [](const json& v) -> long long {
      if (v.is_number_integer()) return v.get<long long>();
      if (v.is_string()) {
        try {
          size_t used = 0;
          std::string s = v.get<std::string>();
          long long value = std::stoll(s, &used);
          if (used == s.size()) return value;
        } catch (const std::exception&) {
        }
      }
      fail(Errc::parse_error, "word entries must be integers or integer strings");
    };
    factors.push_back({static_cast<int>(parse_int(f[0])), parse_int(f[1])});
  }
  return Word(std::move(factors));
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, e.what());
  }
}

json blowup_element_json(const BlowupElement& e) {
  json shift = json::array();
  for (const auto& [y, k] : e.shift) shift.push_back({rational_json(y), std::to_string(k)});
  return json{{"shift", std::move(shift)}, {"base", plmap_json(e.base)}};
}

json cert_json(const CertResult& cert) {
  json witness = json::object();
  for (const auto& [k, v] : cert.witness) witness[k] = ext_json(v);
  return json{{"holds", cert.holds}, {"witness", std::move(witness)}};
}

json germ_json(const GermData& germ) {
  auto affine = [](const Affine& a) {
    return json{{"slope", rational_json(a.slope)}, {"offset", rational_json(a.offset)}};
  };
  return json{{"left", affine(germ.left_tail)}, {"right", affine(germ.right_tail)}};
}

}  // namespace

std::string plmap_to_json(const PLMap& m) { return plmap_json(m).dump(); }

PLMap plmap_from_json(const std::string& text) { return plmap_from(parse_text(text)); }

std::string system_to_json(const std::vector<PLMap>& gens) {
  json arr = json::array();
  for (const auto& g : gens) arr.push_back(plmap_json(g));
  return json{{"generators", std::move(arr)}}.dump();
}

std::vector<PLMap> system_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array())
    fail(Errc::parse_error, "a system needs a generators array");
  std::vector<PLMap> out;
  for (const auto& g : j.at("generators")) out.push_back(plmap_from(g));
  return out;
}

std::string word_to_json(const Word& w) { return word_json(w).dump(); }

Word word_from_json(const std::string& text) { return word_from(parse_text(text)); }

std::vector<Word> words_from_json(const std::string& text) {
  json j = parse_text(text);
  if (j.is_object() && j.contains("relators")) j = j.at("relators");
  if (!j.is_array()) fail(Errc::parse_error, "expected an array of words");
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(word_from(w));
  return out;
}

std::string blowup_element_to_json(const BlowupElement& e) {
  return blowup_element_json(e).dump();
}

std::string verify_report(const ChainSystem& sys, const SystemCertificates& certs) {
  json pairs = json::array();
  for (size_t i = 0; i < certs.pair_certificates.size(); ++i) {
    json entry = cert_json(certs.pair_certificates[i]);
    entry["pair"] = {i, i + 1};
    pairs.push_back(std::move(entry));
  }
  json supports = json::array();
  json germs = json::array();
  for (size_t i = 0; i < sys.size(); ++i) {
    supports.push_back(interval_set_json(sys.supports[i]));
    germs.push_back(germ_json(germ_at_infinity(sys.generators[i])));
  }
  json report{{"command", "verify"},
              {"generators", sys.size()},
              {"status", to_string(sys.status)},
              {"prechain", sys.status != ChainStatus::unclassified},
              {"diagnostic", sys.diagnostic},
              {"supports", std::move(supports)},
              {"pair_certificates", std::move(pairs)},
              {"fn_certificate",
               certs.fn_certificate ? cert_json(*certs.fn_certificate) : json(nullptr)},
              {"germs", std::move(germs)}};
  return report.dump();
}

std::string stabilize_report(const StabilizationResult& result, int max_n) {
  json trace = json::array();
  for (const auto& t : result.trace)
    trace.push_back(json{{"N", t.exponent}, {"holds", t.holds}, {"detail", t.detail}});
  json report{{"command", "stabilize"},
              {"target", result.target == StabilizationTarget::chain ? "chain" : "higman_thompson"},
              {"max_n", max_n},
              {"found", result.minimal_N.has_value()},
              {"minimal_N", result.minimal_N ? json(*result.minimal_N) : json(nullptr)},
              {"certified_level",
               result.stabilized ? json(to_string(result.stabilized->status)) : json(nullptr)},
              {"trace", std::move(trace)}};
  return report.dump();
}

std::string extend_report(const ExtendResult& result) {
  json provenance = json::array();
  for (const auto& w : result.provenance) provenance.push_back(word_json(w));
  json supports = json::array();
  for (const auto& s : result.system.supports) supports.push_back(interval_set_json(s));
  json report{{"command", "extend"},
              {"M", result.M},
              {"generators", result.system.size()},
              {"status", to_string(result.system.status)},
              {"supports", std::move(supports)},
              {"provenance", std::move(provenance)}};
  return report.dump();
}

std::string embed_report(const EmbedResult& result) {
  json provenance = json::array();
  for (const auto& w : result.provenance) provenance.push_back(word_json(w));
  json witnesses = json::array();
  for (const auto& w : result.input_witnesses) witnesses.push_back(word_json(w));
  json supports = json::array();
  for (const auto& s : result.system.supports) supports.push_back(interval_set_json(s));
  json report{{"command", "embed"},
              {"generators", result.system.size()},
              {"status", to_string(result.system.status)},
              {"squeeze", plmap_json(result.squeeze)},
              {"supports", std::move(supports)},
              {"provenance", std::move(provenance)},
              {"input_witnesses", std::move(witnesses)}};
  return report.dump();
}

std::string blowup_report(const Rational& marked, const BlowupClaims& claims) {
  json sums = json::array();
  for (long long v : claims.claim3_exponent_sums) sums.push_back(std::to_string(v));
  json report{
      {"command", "blowup"},
      {"marked_point", rational_json(marked)},
      {"claim1", json{{"holds", claims.claim1}, {"base_status", to_string(claims.base_status)}}},
      {"claim2", json{{"holds", claims.claim2},
                      {"word", word_json(claims.claim2_word)},
                      {"element", blowup_element_json(claims.claim2_element)},
                      {"orbit_label", rational_json(claims.claim2_orbit_label)}}},
      {"claim3", json{{"holds", claims.claim3},
                      {"element", blowup_element_json(claims.claim3_element)},
                      {"base_word", word_json(claims.claim3_base_word)},
                      {"defining_word", word_json(claims.claim3_defining_word)},
                      {"exponent_sums", std::move(sums)}}},
      {"all", claims.all()}};
  return report.dump();
}

std::string class_a_report(const ClassAReport& report) {
  json j{{"member", report.member},
         {"violation", report.violation},
         {"violation_point",
          report.violation_point ? json(report.violation_point->str()) : json(nullptr)}};
  return j.dump();
}

std::string cotrans_report(const ChainSystem& sys, const std::vector<ClosedInterval>& A,
                           const OpenInterval& B, const Word& witness) {
  PLMap u = evaluate_word(witness, sys.generators);
  json images = json::array();
  json inputs = json::array();
  for (const auto& iv : A) {
    inputs.push_back({rational_json(iv.lo), rational_json(iv.hi)});
    images.push_back({rational_json(u.evaluate(iv.lo)), rational_json(u.evaluate(iv.hi))});
  }
  json report{{"command", "witness-cotrans"},
              {"found", true},
              {"word", word_json(witness)},
              {"compact_set", std::move(inputs)},
              {"target", json::array({rational_json(B.lo), rational_json(B.hi)})},
              {"images", std::move(images)}};
  return report.dump();
}

std::string higman_report(const ChainSystem& sys, const Word& r, const Word& s, const Word& t,
                          const Word& witness) {
  PLMap rm = evaluate_word(r, sys.generators);
  PLMap sm = evaluate_word(s, sys.generators);
  PLMap tm = evaluate_word(t, sys.generators);
  PLMap u = evaluate_word(witness, sys.generators);
  IntervalSet S = support(rm).unite(support(sm));
  IntervalSet moved = image(invert(u), image(tm, image(u, S)));
  json report{{"command", "witness-higman"},
              {"found", true},
              {"word", word_json(witness)},
              {"support_union", interval_set_json(S)},
              {"conjugated_image", interval_set_json(moved)},
              {"disjoint", moved.intersect(S).is_empty()}};
  return report.dump();
}

std::string agree_report(const ChainSystem& sys, const Word& g, const ClosedInterval& A,
                         const Word& witness) {
  json sums = json::array();
  for (long long v : exponent_sum(witness, static_cast<int>(sys.size())))
    sums.push_back(std::to_string(v));
  json report{{"command", "witness-agree"},
              {"found", true},
              {"word", word_json(witness)},
              {"target_word", word_json(g)},
              {"interval", json::array({rational_json(A.lo), rational_json(A.hi)})},
              {"exponent_sums", std::move(sums)}};
  return report.dump();
}

std::string relators_json(const std::vector<Word>& rels) {
  json arr = json::array();
  for (const auto& w : rels) arr.push_back(word_json(w));
  return json{{"relators", std::move(arr)}}.dump();
}

std::string relator_check_report(const RelatorReport& report) {
  json outcomes = json::array();
  for (const auto& o : report.outcomes) {
    json entry{{"relator", word_json(o.relator)}, {"holds", o.holds}};
    if (!o.holds) {
      entry["witness_x"] = rational_json(o.witness_x);
      entry["witness_fx"] = rational_json(o.witness_fx);
    }
    outcomes.push_back(std::move(entry));
  }
  return json{{"command", "check-relators"},
              {"all_hold", report.all_hold},
              {"outcomes", std::move(outcomes)}}
      .dump();
}

std::string orbit_csv(const OrbitSample& sample) {
  std::string out = "exact,approx\n";
  for (const auto& p : sample.points) {
    out += p.str();
    out += ",";
    out += p.decimal(12);
    out += "\n";
  }
  return out;
}

std::string gap_report_json(const GapReport& report, long budget) {
  json j{{"command", "gap-report"},
         {"budget", budget},
         {"window", json::array({rational_json(report.window_lo), rational_json(report.window_hi)})},
         {"max_gap", rational_json(report.max_gap)},
         {"max_gap_decimal", report.max_gap.decimal(12)},
         {"location", rational_json(report.gap_location)}};
  return j.dump();
}

std::vector<ClosedInterval> closed_intervals_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_array()) fail(Errc::parse_error, "expected an array of [lo, hi] pairs");
  std::vector<ClosedInterval> out;
  for (const auto& iv : j) {
    if (!iv.is_array() || iv.size() != 2)
      fail(Errc::parse_error, "intervals are [lo, hi] pairs");
    out.push_back({rational_from(iv[0]), rational_from(iv[1])});
  }
  return out;
}

OpenInterval open_interval_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_array() || j.size() != 2) fail(Errc::parse_error, "expected one [lo, hi] pair");
  return {rational_from(j[0]), rational_from(j[1])};
}

namespace {

// Fixed-point decimal for SVG coordinates.
std::string svg_num(const Rational& r) { return r.decimal(8); }

struct ViewScale {
  Rational data_lo, data_hi;
  Rational px_lo, px_hi;
  Rational to_px(const Rational& x) const {
    return px_lo + (x - data_lo) * (px_hi - px_lo) / (data_hi - data_lo);
  }
};

void collect_finite(const IntervalSet& s, std::vector<Rational>& out) {
  for (const auto& iv : s.components()) {
    if (iv.lo.is_finite()) out.push_back(iv.lo.finite());
    if (iv.hi.is_finite()) out.push_back(iv.hi.finite());
  }
}

std::string svg_header(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
}

std::string graph_svg(const PLMap& m, const std::string& label, int x0, int y0, int size) {
  // data window: knot range padded by one unit on each side
  Rational pad(1);
  Rational xlo = m.knots().front().x - pad, xhi = m.knots().back().x + pad;
  Rational ylo = std::min(m.evaluate(xlo), xlo), yhi = std::max(m.evaluate(xhi), xhi);
  ViewScale xs{xlo, xhi, Rational(x0), Rational(x0 + size)};
  ViewScale ys{ylo, yhi, Rational(y0 + size), Rational(y0)};  // flipped

  std::string out;
  out += "<rect x=\"" + std::to_string(x0) + "\" y=\"" + std::to_string(y0) + "\" width=\"" +
         std::to_string(size) + "\" height=\"" + std::to_string(size) +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
  // diagonal
  out += "<line x1=\"" + svg_num(xs.to_px(xlo)) + "\" y1=\"" + svg_num(ys.to_px(xlo)) +
         "\" x2=\"" + svg_num(xs.to_px(xhi)) + "\" y2=\"" + svg_num(ys.to_px(xhi)) +
         "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  // graph polyline through the padded window
  std::string pts = svg_num(xs.to_px(xlo)) + "," + svg_num(ys.to_px(m.evaluate(xlo)));
  for (const auto& k : m.knots())
    pts += " " + svg_num(xs.to_px(k.x)) + "," + svg_num(ys.to_px(k.y));
  pts += " " + svg_num(xs.to_px(xhi)) + "," + svg_num(ys.to_px(m.evaluate(xhi)));
  out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
  for (const auto& k : m.knots()) {
    out += "<circle cx=\"" + svg_num(xs.to_px(k.x)) + "\" cy=\"" + svg_num(ys.to_px(k.y)) +
           "\" r=\"3\" fill=\"#d33\"/>\n";
  }
  out += "<text x=\"" + std::to_string(x0 + 4) + "\" y=\"" + std::to_string(y0 + 16) +
         "\" font-family=\"monospace\" font-size=\"12\">" + label + "</text>\n";
  return out;
}

}  // namespace

std::string plot_svg(const std::string& input_json, bool include_graphs) {
  json j = parse_text(input_json);
  std::vector<PLMap> maps;
  bool is_system = j.is_object() && j.contains("generators");
  if (is_system) {
    for (const auto& g : j.at("generators")) maps.push_back(plmap_from(g));
    if (maps.empty()) fail(Errc::invalid_argument, "system has no generators");
  } else if (j.is_object() && j.contains("knots")) {
    maps.push_back(plmap_from(j));
  } else {
    fail(Errc::parse_error, "expected a map or a generator system");
  }

  if (!is_system) {
    std::string out = svg_header(400, 400);
    out += graph_svg(maps[0], "map", 20, 20, 360);
    out += "</svg>\n";
    return out;
  }

  std::vector<IntervalSet> supports;
  std::vector<Rational> finite;
  for (const auto& m : maps) {
    supports.push_back(support(m));
    collect_finite(supports.back(), finite);
  }
  Rational vlo(-4), vhi(4);
  if (!finite.empty()) {
    vlo = *std::min_element(finite.begin(), finite.end()) - Rational(1);
    vhi = *std::max_element(finite.begin(), finite.end()) + Rational(1);
  }
  const int width = 720;
  int rows = static_cast<int>(maps.size());
  int band_height = 40 + rows * 28 + 20;
  int height = band_height + (include_graphs ? 40 + ((rows + 2) / 3) * 240 : 0);
  ViewScale xs{vlo, vhi, Rational(60), Rational(width - 40)};

  std::string out = svg_header(width, height);
  out += "<line x1=\"60\" y1=\"" + std::to_string(band_height - 24) + "\" x2=\"" +
         std::to_string(width - 40) + "\" y2=\"" + std::to_string(band_height - 24) +
         "\" stroke=\"#aaa\"/>\n";
  for (int i = 0; i < rows; ++i) {
    int y = 40 + i * 28;
    out += "<text x=\"8\" y=\"" + std::to_string(y + 4) +
           "\" font-family=\"monospace\" font-size=\"12\">f" + std::to_string(i) + "</text>\n";
    for (const auto& iv : supports[static_cast<size_t>(i)].components()) {
      Rational a = iv.lo.is_finite() ? std::max(iv.lo.finite(), vlo) : vlo;
      Rational b = iv.hi.is_finite() ? std::min(iv.hi.finite(), vhi) : vhi;
      if (!(a < b)) continue;
      std::string dash = (!iv.lo.is_finite() || !iv.hi.is_finite())
                             ? " stroke-dasharray=\"8 4\""
                             : "";
      out += "<line x1=\"" + svg_num(xs.to_px(a)) + "\" y1=\"" + std::to_string(y) + "\" x2=\"" +
             svg_num(xs.to_px(b)) + "\" y2=\"" + std::to_string(y) +
             "\" stroke=\"#1f5fa8\" stroke-width=\"6\" stroke-linecap=\"round\"" + dash + "/>\n";
    }
  }
  if (include_graphs) {
    for (int i = 0; i < rows; ++i) {
      int gx = 20 + (i % 3) * 236;
      int gy = band_height + 20 + (i / 3) * 240;
      out += graph_svg(maps[static_cast<size_t>(i)], "f" + std::to_string(i), gx, gy, 216);
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cg

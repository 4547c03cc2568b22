#include "chaingroup.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "blowup.hpp"
#include "chain.hpp"
#include "constructions.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "word.hpp"

using namespace cg;

struct cg_plmap {
  PLMap value;
};

struct cg_system {
  std::vector<PLMap> generators;
};

namespace {

thread_local std::string t_last_error;

cg_status status_of(Errc code) {
  switch (code) {
    case Errc::parse_error:
      return CG_ERROR_PARSE;
    case Errc::not_found:
      return CG_ERROR_NOT_FOUND;
    case Errc::denominator_limit:
      return CG_ERROR_LIMIT;
    case Errc::io_error:
      return CG_ERROR_IO;
    case Errc::internal:
      return CG_ERROR_INTERNAL;
    default:
      return CG_ERROR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
cg_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return CG_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CG_ERROR_INTERNAL;
  }
}

cg_status require(bool cond, const char* message) {
  if (cond) return CG_OK;
  t_last_error = message;
  return CG_ERROR_INVALID;
}

ChainSystem classified(const cg_system* sys) { return classify_prechain(sys->generators); }

}  // namespace

extern "C" {

const char* cg_last_error(void) { return t_last_error.c_str(); }

void cg_string_free(char* s) { std::free(s); }

const char* cg_version(void) { return "1.0.0"; }

cg_status cg_set_denominator_limit_bits(unsigned long bits) {
  set_denominator_limit_bits(bits);
  t_last_error.clear();
  return CG_OK;
}

cg_status cg_plmap_from_json(const char* json, cg_plmap** out) {
  if (cg_status s = require(json && out, "null argument")) return s;
  return guarded([&] { *out = new cg_plmap{plmap_from_json(json)}; });
}

cg_status cg_plmap_to_json(const cg_plmap* map, char** out) {
  if (cg_status s = require(map && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(plmap_to_json(map->value)); });
}

void cg_plmap_free(cg_plmap* map) { delete map; }

cg_status cg_plmap_identity(cg_plmap** out) {
  if (cg_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new cg_plmap{PLMap::identity()}; });
}

cg_status cg_standard_generators(cg_plmap** a_out, cg_plmap** b_out) {
  if (cg_status s = require(a_out && b_out, "null argument")) return s;
  return guarded([&] {
    auto [a, b] = standard_generators();
    *a_out = new cg_plmap{std::move(a)};
    *b_out = new cg_plmap{std::move(b)};
  });
}

cg_status cg_plmap_evaluate(const cg_plmap* map, const char* x, char** y_out) {
  if (cg_status s = require(map && x && y_out, "null argument")) return s;
  return guarded([&] { *y_out = dup_string(map->value.evaluate(Rational::parse(x)).str()); });
}

cg_status cg_plmap_compose(const cg_plmap* f, const cg_plmap* g, cg_plmap** out) {
  if (cg_status s = require(f && g && out, "null argument")) return s;
  return guarded([&] { *out = new cg_plmap{compose(f->value, g->value)}; });
}

cg_status cg_plmap_invert(const cg_plmap* f, cg_plmap** out) {
  if (cg_status s = require(f && out, "null argument")) return s;
  return guarded([&] { *out = new cg_plmap{invert(f->value)}; });
}

cg_status cg_plmap_power(const cg_plmap* f, long n, cg_plmap** out) {
  if (cg_status s = require(f && out, "null argument")) return s;
  return guarded([&] { *out = new cg_plmap{power(f->value, n)}; });
}

cg_status cg_plmap_support_json(const cg_plmap* f, char** out) {
  if (cg_status s = require(f && out, "null argument")) return s;
  return guarded([&] {
    IntervalSet supp = support(f->value);
    std::string json = "[";
    for (size_t i = 0; i < supp.size(); ++i) {
      if (i) json += ",";
      json += "[\"" + supp.components()[i].lo.str() + "\",\"" + supp.components()[i].hi.str() +
              "\"]";
    }
    json += "]";
    *out = dup_string(json);
  });
}

cg_status cg_plmap_moves_right(const cg_plmap* f, int* out) {
  if (cg_status s = require(f && out, "null argument")) return s;
  return guarded([&] { *out = moves_right(f->value) ? 1 : 0; });
}

cg_status cg_plmap_germs_json(const cg_plmap* f, char** out) {
  if (cg_status s = require(f && out, "null argument")) return s;
  return guarded([&] {
    GermData g = germ_at_infinity(f->value);
    std::string json = "{\"left\":{\"slope\":\"" + g.left_tail.slope.str() + "\",\"offset\":\"" +
                       g.left_tail.offset.str() + "\"},\"right\":{\"slope\":\"" +
                       g.right_tail.slope.str() + "\",\"offset\":\"" + g.right_tail.offset.str() +
                       "\"}}";
    *out = dup_string(json);
  });
}

cg_status cg_plmap_class_a_json(const cg_plmap* f, char** report_out) {
  if (cg_status s = require(f && report_out, "null argument")) return s;
  return guarded([&] { *report_out = dup_string(class_a_report(class_A_membership(f->value))); });
}

cg_status cg_system_from_json(const char* json, cg_system** out) {
  if (cg_status s = require(json && out, "null argument")) return s;
  return guarded([&] { *out = new cg_system{system_from_json(json)}; });
}

cg_status cg_system_to_json(const cg_system* sys, char** out) {
  if (cg_status s = require(sys && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(system_to_json(sys->generators)); });
}

void cg_system_free(cg_system* sys) { delete sys; }

cg_status cg_system_size(const cg_system* sys, size_t* out) {
  if (cg_status s = require(sys && out, "null argument")) return s;
  *out = sys->generators.size();
  t_last_error.clear();
  return CG_OK;
}

cg_status cg_system_verify_json(const cg_system* sys, char** report_out) {
  if (cg_status s = require(sys && report_out, "null argument")) return s;
  return guarded([&] {
    ChainSystem classified_sys = classified(sys);
    SystemCertificates certs;
    if (classified_sys.status != ChainStatus::unclassified) certs = certify(classified_sys);
    *report_out = dup_string(verify_report(classified_sys, certs));
  });
}

cg_status cg_system_stabilize_json(const cg_system* sys, const char* target, int max_n,
                                   char** report_out, cg_system** powered_out) {
  if (cg_status s = require(sys && target && report_out, "null argument")) return s;
  StabilizationTarget parsed;
  std::string t = target;
  if (t == "chain")
    parsed = StabilizationTarget::chain;
  else if (t == "higman_thompson")
    parsed = StabilizationTarget::higman_thompson;
  else
    return require(false, "target must be 'chain' or 'higman_thompson'");
  return guarded([&] {
    StabilizationResult result = stabilize(classified(sys), parsed, max_n);
    *report_out = dup_string(stabilize_report(result, max_n));
    if (powered_out) {
      *powered_out =
          result.stabilized ? new cg_system{result.stabilized->generators} : nullptr;
    }
  });
}

cg_status cg_system_extend_json(const cg_system* sys, int max_m, char** report_out,
                                cg_system** extended_out) {
  if (cg_status s = require(sys && report_out, "null argument")) return s;
  return guarded([&] {
    ExtendResult result = extend_chain(classified(sys), max_m);
    *report_out = dup_string(extend_report(result));
    if (extended_out) *extended_out = new cg_system{result.system.generators};
  });
}

cg_status cg_embed_json(const cg_plmap* const* gens, size_t count, char** report_out,
                        cg_system** system_out) {
  if (cg_status s = require(report_out && (count == 0 || gens), "null argument")) return s;
  return guarded([&] {
    std::vector<PLMap> inputs;
    inputs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!gens[i]) fail(Errc::invalid_argument, "null map handle");
      inputs.push_back(gens[i]->value);
    }
    EmbedResult result = embed_compactly_supported(inputs);
    *report_out = dup_string(embed_report(result));
    if (system_out) *system_out = new cg_system{result.system.generators};
  });
}

cg_status cg_blowup_claims_json(const char* marked_point, int depth, char** report_out) {
  if (cg_status s = require(report_out != nullptr, "null argument")) return s;
  return guarded([&] {
    Rational marked = marked_point ? Rational::parse(marked_point) : Rational(1);
    BlowupSystem sys = make_blowup_system(marked);
    BlowupClaims claims = verify_claims(sys, depth > 0 ? depth : 16);
    *report_out = dup_string(blowup_report(marked, claims));
  });
}

cg_status cg_orbit_csv(const cg_system* sys, const char* point, long budget, char** csv_out) {
  if (cg_status s = require(sys && point && csv_out, "null argument")) return s;
  return guarded([&] {
    OrbitSample sample = orbit(sys->generators, Rational::parse(point), budget);
    *csv_out = dup_string(orbit_csv(sample));
  });
}

cg_status cg_orbit_gap_json(const cg_system* sys, const char* point, long budget,
                            const char* window_lo, const char* window_hi, char** report_out) {
  if (cg_status s = require(sys && point && window_lo && window_hi && report_out, "null argument"))
    return s;
  return guarded([&] {
    OrbitSample sample = orbit(sys->generators, Rational::parse(point), budget);
    GapReport report =
        gap_report(sample, Rational::parse(window_lo), Rational::parse(window_hi));
    *report_out = dup_string(gap_report_json(report, budget));
  });
}

cg_status cg_witness_cotrans_json(const cg_system* sys, const char* set_json,
                                  const char* into_json, int depth, char** report_out) {
  if (cg_status s = require(sys && set_json && into_json && report_out, "null argument")) return s;
  return guarded([&] {
    ChainSystem classified_sys = classified(sys);
    auto A = closed_intervals_from_json(set_json);
    OpenInterval B = open_interval_from_json(into_json);
    Word u = co_transitivity_witness(classified_sys, A, B, depth);
    *report_out = dup_string(cotrans_report(classified_sys, A, B, u));
  });
}

cg_status cg_witness_higman_json(const cg_system* sys, const char* r_word, const char* s_word,
                                 const char* t_word, int depth, char** report_out) {
  if (cg_status s = require(sys && r_word && s_word && t_word && report_out, "null argument"))
    return s;
  return guarded([&] {
    ChainSystem classified_sys = classified(sys);
    Word r = word_from_json(r_word), sw = word_from_json(s_word), t = word_from_json(t_word);
    Word u = higman_triple_witness(classified_sys, r, sw, t, depth);
    *report_out = dup_string(higman_report(classified_sys, r, sw, t, u));
  });
}

cg_status cg_witness_agree_json(const cg_system* sys, const char* g_word, const char* set_json,
                                int depth, char** report_out) {
  if (cg_status s = require(sys && g_word && set_json && report_out, "null argument")) return s;
  return guarded([&] {
    ChainSystem classified_sys = classified(sys);
    Word g = word_from_json(g_word);
    auto intervals = closed_intervals_from_json(set_json);
    if (intervals.size() != 1)
      fail(Errc::invalid_argument, "agreement takes a single closed interval");
    ClosedInterval A{intervals[0].lo, intervals[0].hi};
    Word u = agree_on_compact_in_commutator(classified_sys, g, A, depth);
    *report_out = dup_string(agree_report(classified_sys, g, A, u));
  });
}

cg_status cg_relators_json(const char* family, int n, int bound, char** words_out) {
  if (cg_status s = require(family && words_out, "null argument")) return s;
  return guarded([&] {
    std::string f = family;
    RelatorFamily spec;
    if (f == "F")
      spec = {RelatorFamilyKind::thompson_f, 0, 0};
    else if (f == "Fn")
      spec = {RelatorFamilyKind::higman_thompson_fn, n, bound};
    else if (f == "lamplighter")
      spec = {RelatorFamilyKind::lamplighter, n, bound};
    else
      fail(Errc::bad_parameters, "family must be F, Fn or lamplighter");
    *words_out = dup_string(relators_json(relators(spec)));
  });
}

cg_status cg_check_relators_json(const char* relators_text, const cg_system* assignment,
                                 char** report_out) {
  if (cg_status s = require(relators_text && assignment && report_out, "null argument")) return s;
  return guarded([&] {
    RelatorReport report =
        check_relators(words_from_json(relators_text), assignment->generators);
    *report_out = dup_string(relator_check_report(report));
  });
}

cg_status cg_plot_svg(const char* input_json, int include_graphs, char** svg_out) {
  if (cg_status s = require(input_json && svg_out, "null argument")) return s;
  return guarded([&] { *svg_out = dup_string(plot_svg(input_json, include_graphs != 0)); });
}

}  // extern "C"

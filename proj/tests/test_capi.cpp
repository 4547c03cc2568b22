#include <doctest.h>

#include <chaingroup.h>

#include <string>

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { cg_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

const char* kChainJson =
    R"({"generators":[)"
    R"({"knots":[["-1","0"],["1","1"]],"left_slope":"1","right_slope":"1"},)"
    R"({"knots":[["0","0"],["1/2","1"],["1","3/2"],["2","2"]],"left_slope":"1","right_slope":"1"},)"
    R"({"knots":[["1","1"],["2","3"]],"left_slope":"1","right_slope":"1"}]})";

}  // namespace

TEST_CASE("map handles round-trip and evaluate") {
  cg_plmap* a = nullptr;
  cg_plmap* b = nullptr;
  REQUIRE(cg_standard_generators(&a, &b) == CG_OK);

  Str y;
  REQUIRE(cg_plmap_evaluate(b, "1/2", &y.p) == CG_OK);
  CHECK(y.s() == "1");

  Str json;
  REQUIRE(cg_plmap_to_json(b, &json.p) == CG_OK);
  cg_plmap* b2 = nullptr;
  REQUIRE(cg_plmap_from_json(json.p, &b2) == CG_OK);
  Str json2;
  REQUIRE(cg_plmap_to_json(b2, &json2.p) == CG_OK);
  CHECK(json.s() == json2.s());

  cg_plmap* ab = nullptr;
  REQUIRE(cg_plmap_compose(b, a, &ab) == CG_OK);
  Str at0;
  REQUIRE(cg_plmap_evaluate(ab, "0", &at0.p) == CG_OK);
  CHECK(at0.s() == "2");

  cg_plmap* binv = nullptr;
  REQUIRE(cg_plmap_invert(b, &binv) == CG_OK);
  Str half;
  REQUIRE(cg_plmap_evaluate(binv, "1", &half.p) == CG_OK);
  CHECK(half.s() == "1/2");

  int right = 0;
  REQUIRE(cg_plmap_moves_right(a, &right) == CG_OK);
  CHECK(right == 1);

  Str supp;
  REQUIRE(cg_plmap_support_json(b, &supp.p) == CG_OK);
  CHECK(supp.s() == R"([["0","inf"]])");

  Str germs;
  REQUIRE(cg_plmap_germs_json(b, &germs.p) == CG_OK);
  CHECK(germs.s().find("\"offset\":\"1\"") != std::string::npos);

  Str class_a;
  REQUIRE(cg_plmap_class_a_json(b, &class_a.p) == CG_OK);
  CHECK(class_a.s().find("\"member\":true") != std::string::npos);

  cg_plmap_free(a);
  cg_plmap_free(b);
  cg_plmap_free(b2);
  cg_plmap_free(ab);
  cg_plmap_free(binv);
}

TEST_CASE("parse errors set messages and codes") {
  cg_plmap* m = nullptr;
  CHECK(cg_plmap_from_json("{", &m) == CG_ERROR_PARSE);
  CHECK(std::string(cg_last_error()).size() > 0);
  CHECK(cg_plmap_from_json(nullptr, &m) == CG_ERROR_INVALID);
  CHECK(cg_plmap_from_json(R"({"knots":[["0","0"],["1","0"]],"left_slope":"1","right_slope":"1"})",
                           &m) == CG_ERROR_INVALID);
}

TEST_CASE("system verification through the shared library") {
  cg_system* sys = nullptr;
  REQUIRE(cg_system_from_json(kChainJson, &sys) == CG_OK);
  size_t n = 0;
  REQUIRE(cg_system_size(sys, &n) == CG_OK);
  CHECK(n == 3);

  Str report;
  REQUIRE(cg_system_verify_json(sys, &report.p) == CG_OK);
  CHECK(report.s().find("\"status\":\"chain-certified\"") != std::string::npos);

  Str stab;
  cg_system* powered = nullptr;
  REQUIRE(cg_system_stabilize_json(sys, "higman_thompson", 8, &stab.p, &powered) == CG_OK);
  CHECK(stab.s().find("\"minimal_N\":2") != std::string::npos);
  REQUIRE(powered != nullptr);
  Str powered_report;
  REQUIRE(cg_system_verify_json(powered, &powered_report.p) == CG_OK);
  CHECK(powered_report.s().find("higman-thompson-certified") != std::string::npos);

  Str ext;
  cg_system* extended = nullptr;
  REQUIRE(cg_system_extend_json(sys, 8, &ext.p, &extended) == CG_OK);
  CHECK(ext.s().find("\"M\":1") != std::string::npos);
  size_t next = 0;
  REQUIRE(cg_system_size(extended, &next) == CG_OK);
  CHECK(next == 4);

  Str csv;
  REQUIRE(cg_orbit_csv(sys, "1", 100, &csv.p) == CG_OK);
  CHECK(csv.s().rfind("exact,approx\n", 0) == 0);

  Str gap;
  REQUIRE(cg_orbit_gap_json(sys, "1", 2000, "1/4", "7/4", &gap.p) == CG_OK);
  CHECK(gap.s().find("max_gap") != std::string::npos);

  Str cot;
  REQUIRE(cg_witness_cotrans_json(sys, R"([["0","3/2"]])", R"(["1/2","3/2"])", 32, &cot.p) ==
          CG_OK);
  CHECK(cot.s().find("\"found\":true") != std::string::npos);

  Str svg;
  REQUIRE(cg_plot_svg(kChainJson, 0, &svg.p) == CG_OK);
  CHECK(svg.s().rfind("<svg", 0) == 0);

  cg_system_free(sys);
  cg_system_free(powered);
  cg_system_free(extended);
}

TEST_CASE("blow-up claims and relator checks through the shared library") {
  Str blowup;
  REQUIRE(cg_blowup_claims_json("1", 8, &blowup.p) == CG_OK);
  CHECK(blowup.s().find("\"all\":true") != std::string::npos);
  Str bad;
  CHECK(cg_blowup_claims_json("3", 8, &bad.p) == CG_ERROR_INVALID);

  Str rels;
  REQUIRE(cg_relators_json("F", 0, 0, &rels.p) == CG_OK);

  cg_plmap* a = nullptr;
  cg_plmap* b = nullptr;
  REQUIRE(cg_standard_generators(&a, &b) == CG_OK);
  Str aj, bj;
  REQUIRE(cg_plmap_to_json(a, &aj.p) == CG_OK);
  REQUIRE(cg_plmap_to_json(b, &bj.p) == CG_OK);
  std::string pair_json = std::string(R"({"generators":[)") + aj.s() + "," + bj.s() + "]}";
  cg_system* pair = nullptr;
  REQUIRE(cg_system_from_json(pair_json.c_str(), &pair) == CG_OK);
  Str outcome;
  REQUIRE(cg_check_relators_json(rels.p, pair, &outcome.p) == CG_OK);
  CHECK(outcome.s().find("\"all_hold\":true") != std::string::npos);

  Str embed_report;
  cg_system* embedded = nullptr;
  const cg_plmap* empty_list[] = {nullptr};
  REQUIRE(cg_embed_json(empty_list, 0, &embed_report.p, &embedded) == CG_OK);
  size_t n = 0;
  REQUIRE(cg_system_size(embedded, &n) == CG_OK);
  CHECK(n == 2);

  cg_plmap_free(a);
  cg_plmap_free(b);
  cg_system_free(pair);
  cg_system_free(embedded);
}

TEST_CASE("denominator limit surfaces as CG_ERROR_LIMIT") {
  REQUIRE(cg_set_denominator_limit_bits(4) == CG_OK);
  cg_plmap* m = nullptr;
  cg_status status =
      cg_plmap_from_json(R"({"knots":[["0","1/257"]],"left_slope":"1","right_slope":"1"})", &m);
  CHECK(status == CG_ERROR_LIMIT);
  REQUIRE(cg_set_denominator_limit_bits(0) == CG_OK);
}

// Command-line front end for the chaingroup shared library. Everything
// goes through the C API; this file only shuffles files, flags and text.

#include <chaingroup.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

using njson = nlohmann::ordered_json;

struct CString {
  char* ptr = nullptr;
  ~CString() { cg_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct SystemHandle {
  cg_system* ptr = nullptr;
  ~SystemHandle() { cg_system_free(ptr); }
};

struct MapHandle {
  cg_plmap* ptr = nullptr;
  ~MapHandle() { cg_plmap_free(ptr); }
};

[[noreturn]] void die(cg_status status) {
  std::cerr << "error: " << cg_last_error() << "\n";
  std::exit(status == CG_ERROR_PARSE ? 2 : 1);
}

void check(cg_status status) {
  if (status != CG_OK) die(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(1);
  }
}

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Structured run record: identical inputs give identical "result"; timing
// is reported separately.
void emit_json(const std::string& command, const std::string& digest,
               const std::string& result_json, double elapsed_ms) {
  njson wrapper{{"command", command},
                {"input_digest", digest},
                {"result", njson::parse(result_json)},
                {"elapsed_ms", elapsed_ms}};
  std::cout << wrapper.dump(2) << "\n";
}

int exit_verify(const njson& report) {
  std::string status = report.at("status").get<std::string>();
  return (status == "chain-certified" || status == "higman-thompson-certified") ? 0 : 1;
}

void print_verify(const njson& r) {
  std::string status = r.at("status").get<std::string>();
  bool prechain = r.at("prechain").get<bool>();
  std::cout << "prechain: " << (prechain ? "yes" : "no") << "\n";
  if (!prechain) {
    std::cout << "diagnostic: " << r.at("diagnostic").get<std::string>() << "\n";
    return;
  }
  bool chain_cert = status == "chain-certified" || status == "higman-thompson-certified";
  std::cout << "chain-certified: " << (chain_cert ? "yes" : "no") << "\n";
  std::cout << "F_n-certified: " << (status == "higman-thompson-certified" ? "yes" : "no")
            << " (n=" << r.at("generators").get<int>() << ")\n";
  for (const auto& pc : r.at("pair_certificates")) {
    const auto& w = pc.at("witness");
    std::cout << "pair (" << pc.at("pair")[0].get<int>() << "," << pc.at("pair")[1].get<int>()
              << "): " << (pc.at("holds").get<bool>() ? "holds" : "fails") << "  [y="
              << w.at("y").get<std::string>() << ", f(y)=" << w.at("f_y").get<std::string>()
              << ", gf(y)=" << w.at("gf_y").get<std::string>()
              << ", z=" << w.at("z").get<std::string>() << "]\n";
  }
  const auto& fn = r.at("fn_certificate");
  const auto& w = fn.at("witness");
  std::cout << "n-generator criterion: " << (fn.at("holds").get<bool>() ? "holds" : "fails")
            << "  [image=" << w.at("image").get<std::string>()
            << ", threshold=" << w.at("threshold").get<std::string>() << "]\n";
  size_t i = 0;
  for (const auto& germ : r.at("germs")) {
    std::cout << "germ f" << i++ << ": left slope=" << germ.at("left").at("slope").get<std::string>()
              << " offset=" << germ.at("left").at("offset").get<std::string>()
              << "; right slope=" << germ.at("right").at("slope").get<std::string>()
              << " offset=" << germ.at("right").at("offset").get<std::string>() << "\n";
  }
}

std::string sibling_path(const std::string& input, const std::string& suffix) {
  std::string out = input;
  auto dot = out.rfind(".json");
  if (dot != std::string::npos && dot == out.size() - 5) out.resize(dot);
  return out + suffix;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* limit = std::getenv("CHAINTOOL_DENOM_LIMIT")) {
    cg_set_denominator_limit_bits(std::strtoul(limit, nullptr, 10));
  }

  CLI::App app{"exact chain-group toolkit"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit the structured run record");

  // verify
  std::string verify_path;
  auto* cmd_verify = app.add_subcommand("verify", "classify a system and run its certificates");
  cmd_verify->add_option("file", verify_path)->required();

  // stabilize
  std::string stab_path, stab_target = "chain", stab_out;
  int stab_max = 64;
  auto* cmd_stab = app.add_subcommand("stabilize", "find the minimal certifying power");
  cmd_stab->add_option("file", stab_path)->required();
  cmd_stab->add_option("--target", stab_target)
      ->check(CLI::IsMember({"chain", "higman_thompson"}));
  cmd_stab->add_option("--max-n", stab_max);
  cmd_stab->add_option("-o,--output", stab_out, "where to write the powered system");

  // extend
  std::string ext_path, ext_out;
  int ext_max = 64;
  auto* cmd_ext = app.add_subcommand("extend", "lengthen a certified chain by one generator");
  cmd_ext->add_option("file", ext_path)->required();
  cmd_ext->add_option("--max-m", ext_max);
  cmd_ext->add_option("-o,--output", ext_out);

  // embed
  std::vector<std::string> embed_paths;
  std::string embed_out;
  auto* cmd_embed = app.add_subcommand("embed", "embed boundedly supported maps into a chain");
  cmd_embed->add_option("files", embed_paths);
  cmd_embed->add_option("-o,--output", embed_out);

  // blowup
  bool blowup_claims = false;
  std::string marked = "1";
  int blowup_depth = 16;
  auto* cmd_blowup = app.add_subcommand("blowup", "verify the blown-up system's claims");
  cmd_blowup->add_flag("--claims", blowup_claims, "check all three claims");
  cmd_blowup->add_option("--marked-point", marked);
  cmd_blowup->add_option("--depth", blowup_depth);

  // orbit
  std::string orbit_path, orbit_point = "1", orbit_csv_out;
  long orbit_budget = 10000;
  std::vector<std::string> orbit_window;
  auto* cmd_orbit = app.add_subcommand("orbit", "enumerate an orbit breadth-first");
  cmd_orbit->add_option("file", orbit_path)->required();
  cmd_orbit->add_option("--point", orbit_point);
  cmd_orbit->add_option("--budget", orbit_budget);
  cmd_orbit->add_option("--csv", orbit_csv_out, "write the sample as CSV");
  cmd_orbit->add_option("--window", orbit_window, "gap report window [lo hi]")->expected(2);

  // witness
  auto* cmd_witness = app.add_subcommand("witness", "search for dynamical witnesses");
  cmd_witness->require_subcommand(1);
  std::string wc_path, wc_set, wc_into;
  int wc_depth = 32;
  auto* cmd_cotrans = cmd_witness->add_subcommand("co-trans", "map a compact set into an interval");
  cmd_cotrans->add_option("file", wc_path)->required();
  cmd_cotrans->add_option("--set", wc_set, "closed intervals [[lo,hi],...]")->required();
  cmd_cotrans->add_option("--into", wc_into, "open interval [lo,hi]")->required();
  cmd_cotrans->add_option("--depth", wc_depth);

  std::string wh_path, wh_r, wh_s, wh_t;
  int wh_depth = 32;
  auto* cmd_higman = cmd_witness->add_subcommand("higman", "displace a support union off itself");
  cmd_higman->add_option("file", wh_path)->required();
  cmd_higman->add_option("--r", wh_r)->required();
  cmd_higman->add_option("--s", wh_s)->required();
  cmd_higman->add_option("--t", wh_t)->required();
  cmd_higman->add_option("--depth", wh_depth);

  std::string wa_path, wa_word, wa_set;
  int wa_depth = 32;
  auto* cmd_agree =
      cmd_witness->add_subcommand("agree", "commutator word agreeing on a compact interval");
  cmd_agree->add_option("file", wa_path)->required();
  cmd_agree->add_option("--word", wa_word)->required();
  cmd_agree->add_option("--set", wa_set, "closed interval [[lo,hi]]")->required();
  cmd_agree->add_option("--depth", wa_depth);

  // relators
  std::string rel_family = "F", rel_check;
  int rel_n = 3, rel_bound = 6, rel_step = 0, rel_kmax = 3;
  auto* cmd_rel = app.add_subcommand("relators", "emit or check relator families");
  cmd_rel->add_option("--family", rel_family)->check(CLI::IsMember({"F", "Fn", "lamplighter"}));
  cmd_rel->add_option("--n", rel_n, "rank for the Fn family");
  cmd_rel->add_option("--bound", rel_bound, "index bound for the Fn family");
  cmd_rel->add_option("--step", rel_step, "translation step for the lamplighter family");
  cmd_rel->add_option("--kmax", rel_kmax, "conjugate bound for the lamplighter family");
  cmd_rel->add_option("--check", rel_check, "evaluate the relators on this system file");

  // plot
  std::string plot_path, plot_svg_out;
  bool plot_graphs = false;
  auto* cmd_plot = app.add_subcommand("plot", "render supports (and graphs) as SVG");
  cmd_plot->add_option("file", plot_path)->required();
  cmd_plot->add_option("--svg", plot_svg_out)->required();
  cmd_plot->add_flag("--graphs", plot_graphs);

  // let --json appear after the subcommand name
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);
  Timer timer;

  if (*cmd_verify) {
    std::string input = read_file(verify_path);
    SystemHandle sys;
    check(cg_system_from_json(input.c_str(), &sys.ptr));
    CString report;
    check(cg_system_verify_json(sys.ptr, &report.ptr));
    njson r = njson::parse(report.str());
    if (json_mode)
      emit_json("verify", fnv1a(input), report.str(), timer.ms());
    else
      print_verify(r);
    return exit_verify(r);
  }

  if (*cmd_stab) {
    std::string input = read_file(stab_path);
    SystemHandle sys;
    check(cg_system_from_json(input.c_str(), &sys.ptr));
    CString report;
    SystemHandle powered;
    check(cg_system_stabilize_json(sys.ptr, stab_target.c_str(), stab_max, &report.ptr,
                                   &powered.ptr));
    njson r = njson::parse(report.str());
    bool found = r.at("found").get<bool>();
    if (found && powered.ptr) {
      std::string out_path =
          stab_out.empty() ? sibling_path(stab_path, ".stabilized.json") : stab_out;
      CString powered_json;
      check(cg_system_to_json(powered.ptr, &powered_json.ptr));
      write_file(out_path, powered_json.str());
      if (!json_mode) std::cout << "powered system written to " << out_path << "\n";
    }
    if (json_mode)
      emit_json("stabilize", fnv1a(input), report.str(), timer.ms());
    else if (found)
      std::cout << "minimal N = " << r.at("minimal_N").get<int>() << " (target " << stab_target
                << ")\n";
    else
      std::cout << "no exponent up to " << stab_max << " certifies the target\n";
    return found ? 0 : 1;
  }

  if (*cmd_ext) {
    std::string input = read_file(ext_path);
    SystemHandle sys;
    check(cg_system_from_json(input.c_str(), &sys.ptr));
    CString report;
    SystemHandle extended;
    check(cg_system_extend_json(sys.ptr, ext_max, &report.ptr, &extended.ptr));
    njson r = njson::parse(report.str());
    std::string out_path = ext_out.empty() ? sibling_path(ext_path, ".extended.json") : ext_out;
    CString extended_json;
    check(cg_system_to_json(extended.ptr, &extended_json.ptr));
    write_file(out_path, extended_json.str());
    if (json_mode)
      emit_json("extend", fnv1a(input), report.str(), timer.ms());
    else
      std::cout << "extended to " << r.at("generators").get<int>() << " generators with M = "
                << r.at("M").get<int>() << "; written to " << out_path << "\n";
    return 0;
  }

  if (*cmd_embed) {
    std::vector<MapHandle> maps(embed_paths.size());
    std::vector<const cg_plmap*> raw;
    std::string digest_input;
    for (size_t i = 0; i < embed_paths.size(); ++i) {
      std::string text = read_file(embed_paths[i]);
      digest_input += text;
      check(cg_plmap_from_json(text.c_str(), &maps[i].ptr));
      raw.push_back(maps[i].ptr);
    }
    CString report;
    SystemHandle out_sys;
    check(cg_embed_json(raw.data(), raw.size(), &report.ptr, &out_sys.ptr));
    njson r = njson::parse(report.str());
    if (!embed_out.empty()) {
      CString sys_json;
      check(cg_system_to_json(out_sys.ptr, &sys_json.ptr));
      write_file(embed_out, sys_json.str());
    }
    if (json_mode)
      emit_json("embed", fnv1a(digest_input), report.str(), timer.ms());
    else
      std::cout << "embedded " << embed_paths.size() << " map(s) into a "
                << r.at("generators").get<int>() << "-chain system ("
                << r.at("status").get<std::string>() << ")\n";
    return 0;
  }

  if (*cmd_blowup) {
    if (!blowup_claims) {
      std::cerr << "error: nothing to do; pass --claims\n";
      return 2;
    }
    CString report;
    check(cg_blowup_claims_json(marked.c_str(), blowup_depth, &report.ptr));
    njson r = njson::parse(report.str());
    if (json_mode) {
      emit_json("blowup", fnv1a(marked), report.str(), timer.ms());
    } else {
      auto line = [&](const char* name, const njson& claim) {
        std::cout << name << ": " << (claim.at("holds").get<bool>() ? "PASS" : "FAIL") << "\n";
      };
      line("claim 1 (base is a certified chain)", r.at("claim1"));
      line("claim 2 (kernel element with identity base)", r.at("claim2"));
      line("claim 3 (kernel meets the commutator subgroup)", r.at("claim3"));
    }
    return r.at("all").get<bool>() ? 0 : 1;
  }

  if (*cmd_orbit) {
    std::string input = read_file(orbit_path);
    SystemHandle sys;
    check(cg_system_from_json(input.c_str(), &sys.ptr));
    CString csv;
    check(cg_orbit_csv(sys.ptr, orbit_point.c_str(), orbit_budget, &csv.ptr));
    if (!orbit_csv_out.empty())
      write_file(orbit_csv_out, csv.str());
    else if (!json_mode)
      std::cout << csv.str();
    if (!orbit_window.empty()) {
      CString gap;
      check(cg_orbit_gap_json(sys.ptr, orbit_point.c_str(), orbit_budget,
                              orbit_window[0].c_str(), orbit_window[1].c_str(), &gap.ptr));
      if (json_mode)
        emit_json("orbit", fnv1a(input), gap.str(), timer.ms());
      else {
        njson g = njson::parse(gap.str());
        std::cout << "max gap in [" << orbit_window[0] << ", " << orbit_window[1]
                  << "]: " << g.at("max_gap").get<std::string>() << " ("
                  << g.at("max_gap_decimal").get<std::string>() << ") at "
                  << g.at("location").get<std::string>() << "\n";
      }
    } else if (json_mode) {
      njson summary{{"rows", orbit_budget}, {"csv_written", !orbit_csv_out.empty()}};
      emit_json("orbit", fnv1a(input), summary.dump(), timer.ms());
    }
    return 0;
  }

  auto run_witness = [&](const std::string& path, const std::string& command,
                         auto&& call) -> int {
    std::string input = read_file(path);
    SystemHandle sys;
    check(cg_system_from_json(input.c_str(), &sys.ptr));
    CString report;
    check(call(sys.ptr, &report.ptr));
    if (json_mode) {
      emit_json(command, fnv1a(input), report.str(), timer.ms());
    } else {
      njson r = njson::parse(report.str());
      std::cout << "witness word: " << r.at("word").dump() << "\n";
    }
    return 0;
  };

  if (*cmd_cotrans)
    return run_witness(wc_path, "witness-cotrans", [&](cg_system* s, char** out) {
      return cg_witness_cotrans_json(s, wc_set.c_str(), wc_into.c_str(), wc_depth, out);
    });
  if (*cmd_higman)
    return run_witness(wh_path, "witness-higman", [&](cg_system* s, char** out) {
      return cg_witness_higman_json(s, wh_r.c_str(), wh_s.c_str(), wh_t.c_str(), wh_depth, out);
    });
  if (*cmd_agree)
    return run_witness(wa_path, "witness-agree", [&](cg_system* s, char** out) {
      return cg_witness_agree_json(s, wa_word.c_str(), wa_set.c_str(), wa_depth, out);
    });

  if (*cmd_rel) {
    int n = rel_family == "lamplighter" ? (rel_step > 0 ? rel_step : 3) : rel_n;
    int bound = rel_family == "lamplighter" ? rel_kmax : rel_bound;
    CString words;
    check(cg_relators_json(rel_family.c_str(), n, bound, &words.ptr));
    if (rel_check.empty()) {
      if (json_mode)
        emit_json("relators", fnv1a(rel_family), words.str(), timer.ms());
      else
        std::cout << words.str() << "\n";
      return 0;
    }
    std::string input = read_file(rel_check);
    SystemHandle sys;
    check(cg_system_from_json(input.c_str(), &sys.ptr));
    CString report;
    check(cg_check_relators_json(words.ptr, sys.ptr, &report.ptr));
    njson r = njson::parse(report.str());
    bool all = r.at("all_hold").get<bool>();
    if (json_mode)
      emit_json("check-relators", fnv1a(input), report.str(), timer.ms());
    else
      std::cout << (all ? "all relators hold" : "some relators fail") << " ("
                << r.at("outcomes").size() << " checked)\n";
    return all ? 0 : 1;
  }

  if (*cmd_plot) {
    std::string input = read_file(plot_path);
    CString svg;
    check(cg_plot_svg(input.c_str(), plot_graphs ? 1 : 0, &svg.ptr));
    write_file(plot_svg_out, svg.str());
    if (json_mode) {
      njson summary{{"svg_bytes", svg.str().size()}, {"path", plot_svg_out}};
      emit_json("plot", fnv1a(input), summary.dump(), timer.ms());
    } else {
      std::cout << "wrote " << plot_svg_out << " (" << svg.str().size() << " bytes)\n";
    }
    return 0;
  }

  return 2;
}

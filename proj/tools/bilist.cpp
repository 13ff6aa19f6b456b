// Command-line front end: every library operation behind one scriptable
// binary with reproducible output.
//
// Exit codes: 0 affirmative/verified, 1 negative/refuted (with witness),
// 2 usage error, 3 resource cap hit (bracket printed).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bilist/bounds.hpp"
#include "bilist/canonical.hpp"
#include "bilist/certificate.hpp"
#include "bilist/choosability.hpp"
#include "bilist/colorability.hpp"
#include "bilist/constructions.hpp"
#include "bilist/error.hpp"
#include "bilist/probabilistic.hpp"
#include "bilist/steiner.hpp"
#include "bilist/version.hpp"

namespace {

using namespace bilist;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapped = 3;

struct GlobalOptions {
  std::string format = "human";
  int jobs = 1;
  std::uint64_t max_nodes = 20000000;
  double timeout = 0;
  std::string fixtures;
};

std::string fixtures_dir(const GlobalOptions& g) {
  if (!g.fixtures.empty()) return g.fixtures;
  if (const char* env = std::getenv("BILIST_FIXTURES")) return env;
  return "fixtures";
}

search::SearchCaps caps_from(const GlobalOptions& g) {
  search::SearchCaps caps;
  caps.max_nodes = g.max_nodes;
  caps.timeout_seconds = g.timeout;
  caps.jobs = g.jobs;
  return caps;
}

std::string write_witness(const GlobalOptions& g, const NonChoosabilityCertificate& cert,
                          const std::string& out_path, const std::string& default_name) {
  std::string path = out_path;
  if (path.empty()) {
    std::filesystem::create_directories(fixtures_dir(g));
    path = fixtures_dir(g) + "/" + default_name;
  }
  save_certificate_file(cert, path);
  return path;
}

SetFamily fano_lines() {
  // Point-line structure generated by the difference set {0,1,3} mod 7.
  std::vector<std::vector<int>> lines;
  for (int s = 0; s < 7; ++s) {
    std::vector<int> line{s % 7, (s + 1) % 7, (s + 3) % 7};
    std::sort(line.begin(), line.end());
    lines.push_back(line);
  }
  return SetFamily::create(7, 3, lines).normalized();
}

SetFamily fano_complements() {
  SetFamily lines = fano_lines();
  std::vector<std::uint64_t> comps;
  for (std::uint64_t m : lines.blocks) comps.push_back(~m & 0x7f);
  return SetFamily::from_masks(7, 4, comps).normalized();
}

SetFamily all_triples_7() {
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) blocks.push_back({a, b, c});
  return SetFamily::create(7, 3, blocks);
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MALFORMED, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return SetFamily::from_text(buf.str());
}

void print_colouring(std::ostream& os, const ProperColouring& col) {
  os << "colours_a:";
  for (int c : col.colours_a) os << ' ' << c;
  os << "\ncolours_b:";
  for (int c : col.colours_b) os << ' ' << c;
  os << '\n';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string inputs_echo(const bounds::ConditionEntry& e) {
  std::string s;
  for (const auto& [name, value] : e.inputs) {
    if (!s.empty()) s += ";";
    std::ostringstream v;
    v.precision(17);
    v << value;
    s += name + "=" + v.str();
  }
  return s;
}

void emit_condition_rows(std::ostream& os, const GlobalOptions& g,
                         const std::vector<bounds::ConditionReport>& reports) {
  if (g.format == "csv") {
    os << "mode,first,second,k_a,k_b,condition,applicable,holds,margin,inputs\n";
    for (const auto& rep : reports)
      for (const auto& e : rep.entries) {
        bool complete = rep.point.mode == bounds::PointMode::COMPLETE;
        os << (complete ? "complete" : "degree") << ','
           << (complete ? rep.point.a : rep.point.delta_a) << ','
           << (complete ? rep.point.b : rep.point.delta_b) << ',' << rep.point.k_a << ','
           << rep.point.k_b << ',' << e.id << ',' << (e.applicable ? 1 : 0) << ','
           << (e.holds ? 1 : 0) << ',';
        os.precision(17);
        os << e.margin << ',' << csv_escape(inputs_echo(e)) << '\n';
      }
  } else if (g.format == "structured") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports)
      for (const auto& e : rep.entries) {
        nlohmann::ordered_json row;
        row["mode"] = rep.point.mode == bounds::PointMode::COMPLETE ? "complete" : "degree";
        row["first"] =
            rep.point.mode == bounds::PointMode::COMPLETE ? rep.point.a : rep.point.delta_a;
        row["second"] =
            rep.point.mode == bounds::PointMode::COMPLETE ? rep.point.b : rep.point.delta_b;
        row["k_a"] = rep.point.k_a;
        row["k_b"] = rep.point.k_b;
        row["condition"] = e.id;
        row["applicable"] = e.applicable;
        row["holds"] = e.holds;
        row["margin"] = e.margin;
        for (const auto& [name, value] : e.inputs) row["inputs"][name] = value;
        arr.push_back(row);
      }
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& rep : reports)
      for (const auto& e : rep.entries) {
        os << e.id << " @ (" << rep.point.delta_a << ',' << rep.point.delta_b << ",k_a="
           << rep.point.k_a << ",k_b=" << rep.point.k_b << "): ";
        if (!e.applicable)
          os << "n/a";
        else
          os << (e.holds ? "holds" : "fails") << " margin=" << e.margin;
        os << "  [" << inputs_echo(e) << "]\n";
      }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search, verification and sampling for bipartite list colouring"};
  app.set_version_flag("--version", std::string("bilist ") + kVersion);

  GlobalOptions g;
  app.add_option("--format", g.format, "output format: human|csv|structured")
      ->check(CLI::IsMember({"human", "csv", "structured"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker count for parallel search")->capture_default_str();
  app.add_option("--max-nodes", g.max_nodes, "search node cap")->capture_default_str();
  app.add_option("--timeout", g.timeout, "search timeout in seconds (0 = none)")
      ->capture_default_str();
  app.add_option("--fixtures", g.fixtures, "fixture directory (overrides BILIST_FIXTURES)");
  app.require_subcommand(1);

  // ----- decide ---------------------------------------------------------
  auto* cmd_decide = app.add_subcommand("decide", "find a proper colouring of an instance");
  std::string decide_instance;
  cmd_decide->add_option("instance", decide_instance, "instance file (certificate format)")
      ->required();

  // ----- verify ---------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "verify a non-choosability certificate");
  std::string verify_path;
  cmd_verify->add_option("certificate", verify_path, "certificate file")->required();

  // ----- choosable ------------------------------------------------------
  auto* cmd_choosable = app.add_subcommand("choosable", "decide complete-graph choosability");
  std::vector<int> choosable_ab;
  int cho_ka = 0, cho_kb = 0, cho_palette_cap = 0;
  std::string cho_out;
  cmd_choosable->add_option("--complete", choosable_ab, "part sizes a b")
      ->expected(2)
      ->required();
  cmd_choosable->add_option("--ka", cho_ka, "A-side list size")->required();
  cmd_choosable->add_option("--kb", cho_kb, "B-side list size")->required();
  cmd_choosable->add_option("--palette-cap", cho_palette_cap, "palette size cap (0 = b*k_b)");
  cmd_choosable->add_option("--out", cho_out, "witness certificate path");

  // ----- threshold ------------------------------------------------------
  auto* cmd_threshold = app.add_subcommand("threshold", "least non-choosable A-side size");
  int th_b = 0, th_ka = 0, th_kb = 0, th_palette_cap = 0;
  std::string th_out;
  cmd_threshold->add_option("--b", th_b, "B-side size")->required();
  cmd_threshold->add_option("--ka", th_ka, "A-side list size")->required();
  cmd_threshold->add_option("--kb", th_kb, "B-side list size")->required();
  cmd_threshold->add_option("--palette-cap", th_palette_cap, "palette size cap (0 = b*k_b)");
  cmd_threshold->add_option("--out", th_out, "witness certificate path");

  // ----- mbar -----------------------------------------------------------
  auto* cmd_mbar = app.add_subcommand("mbar", "extremal blocking-family size");
  int mb_k1 = 0, mb_k2 = 0, mb_l = 0;
  bool mb_bounds_only = false;
  cmd_mbar->add_option("--k1", mb_k1, "hitting-set size")->required();
  cmd_mbar->add_option("--k2", mb_k2, "block size")->required();
  cmd_mbar->add_option("--l", mb_l, "ground set size")->required();
  cmd_mbar->add_flag("--bounds-only", mb_bounds_only, "print only the closed-form sandwich");

  // ----- bounds ---------------------------------------------------------
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate closed-form conditions");
  std::string bd_conditions = "transversal,coupon";
  std::vector<std::int64_t> bd_point; // mode encoded by flag
  bool bd_degree_mode = false;
  std::vector<std::int64_t> bd_grid; // first lo,hi,step, second lo,hi,step, ka..., kb...
  double bd_p = 0.5, bd_eps = 0.5, bd_t = 2.0;
  std::size_t bd_max_rows = 100000;
  cmd_bounds->add_option("--conditions", bd_conditions,
                         "comma list: transversal,coupon,cu1,cu2,c3c1,c3c2,c3c3,boundary,degrees");
  cmd_bounds->add_option("--point", bd_point, "single point: first second k_a k_b")->expected(4);
  cmd_bounds->add_flag("--degree-mode", bd_degree_mode, "treat the point as max degrees");
  cmd_bounds->add_option("--grid", bd_grid,
                         "grid: f_lo f_hi f_step s_lo s_hi s_step ka_lo ka_hi ka_step kb_lo "
                         "kb_hi kb_step")
      ->expected(12);
  cmd_bounds->add_option("--p", bd_p, "bipartition probability for cu1/cu2");
  cmd_bounds->add_option("--eps", bd_eps, "epsilon for cu2/c3c1");
  cmd_bounds->add_option("--t", bd_t, "t for c3c2");
  cmd_bounds->add_option("--max-rows", bd_max_rows, "sweep row cap");

  // ----- construct ------------------------------------------------------
  auto* cmd_construct = app.add_subcommand("construct", "emit a verified certificate");
  cmd_construct->require_subcommand(1);
  std::string con_out;
  bool con_fixture = false;

  auto* con_classic = cmd_construct->add_subcommand("classic", "disjoint-list construction");
  int cl_k = 0, cl_delta = 0;
  con_classic->add_option("--k", cl_k)->required();
  con_classic->add_option("--delta", cl_delta)->required();

  auto* con_steiner = cmd_construct->add_subcommand("steiner", "blocking-family construction");
  std::string st_fam_a, st_fam_b, st_preset;
  int st_trim = 0;
  con_steiner->add_option("--fam-a", st_fam_a, "A-side family file");
  con_steiner->add_option("--fam-b", st_fam_b, "B-side family file");
  con_steiner->add_option("--preset", st_preset, "fano-35 | fano-28")
      ->check(CLI::IsMember({"fano-35", "fano-28"}));
  con_steiner->add_option("--trim", st_trim, "trim the A side to this size");

  auto* con_boundary = cmd_construct->add_subcommand("boundary", "lists one short of degree");
  int bo_b = 0, bo_delta = 0;
  con_boundary->add_option("--b", bo_b)->required();
  con_boundary->add_option("--delta", bo_delta)->required();

  auto* con_gadget = cmd_construct->add_subcommand("gadget", "recursive low-degree gadget");
  int ga_k = 0, ga_delta = 0;
  con_gadget->add_option("--k", ga_k)->required();
  con_gadget->add_option("--delta", ga_delta)->required();

  auto* con_cond3 = cmd_construct->add_subcommand("cond3", "segment-based witness");
  int c3_k = 0, c3_m = 0, c3_segments = 0;
  double c3_delta = 0;
  std::uint64_t c3_seed = 1;
  con_cond3->add_option("--k", c3_k)->required();
  con_cond3->add_option("--delta", c3_delta)->required();
  con_cond3->add_option("--m", c3_m, "override the derived palette size");
  con_cond3->add_option("--segments", c3_segments, "override the derived segment count");
  con_cond3->add_option("--seed", c3_seed, "seed for the sampled A-side family");

  for (auto* sub : {con_classic, con_steiner, con_boundary, con_gadget, con_cond3}) {
    sub->add_option("--out", con_out, "output path (default stdout)");
    sub->add_flag("--fixture", con_fixture, "write into the fixtures directory");
  }

  // ----- sample ---------------------------------------------------------
  auto* cmd_sample = app.add_subcommand("sample", "constructive randomized routines");
  cmd_sample->require_subcommand(1);
  std::string sa_instance, sa_out;
  std::uint64_t sa_seed = 0;
  bool sa_seed_set = false;
  std::uint64_t sa_budget = 100000;
  int sa_da = 0, sa_db = 0, sa_ka = 0, sa_kb = 0, sa_asize = 0, sa_bsize = 0, sa_palette = 0;

  auto* sa_trans = cmd_sample->add_subcommand("transversal", "independent-transversal colouring");
  auto* sa_coupon = cmd_sample->add_subcommand("coupon", "per-vertex uniform colouring");
  auto* sa_split = cmd_sample->add_subcommand("split", "random palette bipartition");
  double sp_p = 0.5, sp_eps = 0.5;
  std::string sp_mode = "eq1";
  sa_split->add_option("--p", sp_p, "probability a colour joins the B side");
  sa_split->add_option("--eps", sp_eps, "epsilon for the eq2 acceptance test");
  sa_split->add_option("--mode", sp_mode, "eq1 | eq2")->check(CLI::IsMember({"eq1", "eq2"}));

  for (auto* sub : {sa_trans, sa_coupon, sa_split}) {
    sub->add_option("--instance", sa_instance, "instance file (certificate format)");
    sub->add_option_function<std::uint64_t>(
           "--seed", [&](std::uint64_t v) { sa_seed = v; sa_seed_set = true; }, "RNG seed")
        ->expected(1);
    sub->add_option("--budget", sa_budget, "resample budget")->capture_default_str();
    sub->add_option("--out", sa_out, "write the witness colouring/certificate here");
  }
  for (auto* sub : {sa_trans, sa_coupon}) {
    sub->add_option("--da", sa_da, "random instance: A-side max degree");
    sub->add_option("--db", sa_db, "random instance: B-side max degree");
    sub->add_option("--ka", sa_ka, "random instance: A-side list size");
    sub->add_option("--kb", sa_kb, "random instance: B-side list size");
    sub->add_option("--a-size", sa_asize, "random instance: |A|");
    sub->add_option("--b-size", sa_bsize, "random instance: |B|");
    sub->add_option("--palette", sa_palette, "random instance: palette size");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n'
              << "hint: run with --help for the command surface\n";
    return kExitUsage;
  }

  // Reproducibility header: version and exact invocation.
  {
    std::ostringstream line;
    line << "bilist " << kVersion << " |";
    for (int i = 0; i < argc; ++i) line << ' ' << argv[i];
    std::cerr << line.str() << '\n';
  }

  try {
    if (*cmd_decide) {
      auto cert = load_certificate_file(decide_instance);
      auto col = find_proper_colouring(cert.graph, cert.assignment);
      if (col) {
        if (g.format == "csv")
          std::cout << "result\nCOLOURABLE\n";
        else {
          std::cout << "COLOURABLE\n";
          print_colouring(std::cout, *col);
        }
        return kExitOk;
      }
      std::cout << (g.format == "csv" ? "result\nNOT_COLOURABLE\n" : "NOT_COLOURABLE\n");
      return kExitNegative;
    }

    if (*cmd_verify) {
      auto cert = load_certificate_file(verify_path);
      auto result = verify_certificate(cert);
      if (result.verified) {
        std::cout << "VERIFIED\n";
        return kExitOk;
      }
      std::cout << "REFUTED\n";
      print_colouring(std::cout, *result.refutation);
      return kExitNegative;
    }

    if (*cmd_choosable) {
      auto caps = caps_from(g);
      auto ans = search::is_choosable_complete(choosable_ab[0], choosable_ab[1], cho_ka, cho_kb,
                                               cho_palette_cap, caps);
      if (ans.verdict == search::ChoosabilityAnswer::Verdict::YES) {
        std::cout << "YES\n";
        return kExitOk;
      }
      if (ans.verdict == search::ChoosabilityAnswer::Verdict::NO) {
        std::string name = "not-choosable-" + std::to_string(choosable_ab[0]) + "-" +
                           std::to_string(choosable_ab[1]) + "-" + std::to_string(cho_ka) + "-" +
                           std::to_string(cho_kb) + ".cert";
        std::string path = write_witness(g, *ans.witness, cho_out, name);
        std::cout << "NO " << path << '\n';
        return kExitNegative;
      }
      std::cout << "UNKNOWN " << ans.detail.proof_note << '\n';
      return kExitCapped;
    }

    if (*cmd_threshold) {
      auto caps = caps_from(g);
      auto res = search::threshold_a(th_b, th_ka, th_kb, th_palette_cap, caps);
      std::string status = res.status == search::ThresholdStatus::EXACT       ? "EXACT"
                           : res.status == search::ThresholdStatus::UNBOUNDED ? "UNBOUNDED"
                                                                              : "CAPPED";
      std::string witness_path;
      if (res.witness && !th_out.empty()) {
        save_certificate_file(*res.witness, th_out);
        witness_path = th_out;
      }
      if (g.format == "csv") {
        std::cout << "b,k_a,k_b,status,a_star,witness_palette,exhausted_palette,families,nodes,"
                     "witness\n";
        std::cout << res.b << ',' << res.k_a << ',' << res.k_b << ',' << status << ','
                  << res.a_star << ',' << res.witness_palette << ',' << res.exhausted_palette
                  << ',' << res.families_examined << ',' << res.nodes << ','
                  << csv_escape(witness_path) << '\n';
      } else {
        std::cout << "a*(" << res.b << ", " << res.k_a << ", " << res.k_b << ") = "
                  << (res.status == search::ThresholdStatus::UNBOUNDED
                          ? "unbounded"
                          : std::to_string(res.a_star))
                  << " [" << status << "]\n";
        if (!res.proof_note.empty()) std::cout << res.proof_note << '\n';
        if (!witness_path.empty()) std::cout << "witness: " << witness_path << '\n';
      }
      return res.status == search::ThresholdStatus::CAPPED ? kExitCapped : kExitOk;
    }

    if (*cmd_mbar) {
      auto bounds = steiner::mbar_bounds(mb_k1, mb_k2, mb_l);
      if (mb_bounds_only) {
        std::cout << "lower=" << bounds.lower_ceil << " upper<" << bounds.upper << '\n';
        return kExitOk;
      }
      steiner::MbarCaps caps;
      caps.max_nodes = g.max_nodes;
      caps.timeout_seconds = g.timeout;
      auto res = steiner::mbar_exact(mb_k1, mb_k2, mb_l, caps);
      if (res.status == steiner::MbarResult::Status::CAPPED) {
        std::cout << "bracket [" << res.value << ", " << res.upper_bracket << ")\n";
        return kExitCapped;
      }
      if (g.format == "csv") {
        std::cout << "k1,k2,l,value,lower,upper\n"
                  << mb_k1 << ',' << mb_k2 << ',' << mb_l << ',' << res.value << ','
                  << bounds.lower_ceil << ',' << bounds.upper << '\n';
      } else {
        std::cout << res.value << '\n';
        if (res.extremal) std::cout << res.extremal->to_text();
      }
      return kExitOk;
    }

    if (*cmd_bounds) {
      std::vector<std::string> ids;
      std::stringstream ss(bd_conditions);
      std::string id;
      while (std::getline(ss, id, ','))
        if (!id.empty()) ids.push_back(id);

      std::vector<bounds::ConditionReport> reports;
      if (!bd_grid.empty()) {
        bounds::SweepRegion region;
        region.mode = bd_degree_mode ? bounds::PointMode::DEGREE : bounds::PointMode::COMPLETE;
        region.first = {bd_grid[0], bd_grid[1], bd_grid[2]};
        region.second = {bd_grid[3], bd_grid[4], bd_grid[5]};
        region.k_a = {bd_grid[6], bd_grid[7], bd_grid[8]};
        region.k_b = {bd_grid[9], bd_grid[10], bd_grid[11]};
        reports = bounds::sweep(region, ids, bd_max_rows);
      } else if (!bd_point.empty()) {
        bounds::ParamPoint point =
            bd_degree_mode
                ? bounds::ParamPoint::degrees(bd_point[0], bd_point[1], int(bd_point[2]),
                                              int(bd_point[3]))
                : bounds::ParamPoint::complete(bd_point[0], bd_point[1], int(bd_point[2]),
                                               int(bd_point[3]));
        bounds::ConditionReport rep;
        rep.point = point;
        for (const auto& cid : ids) {
          if (cid == "transversal") {
            rep.entries.push_back(bounds::check_transversal_condition(point));
          } else if (cid == "coupon") {
            rep.entries.push_back(bounds::check_coupon_condition(point));
          } else if (cid == "cu1" || cid == "cu2") {
            auto r = bounds::check_completeupper(point, bd_p, bd_eps);
            rep.entries.push_back(cid == "cu1" ? r.eq1 : r.eq2);
          } else if (cid == "c3c1" || cid == "c3c2" || cid == "c3c3") {
            auto entries = bounds::check_3cases(point, bd_eps, bd_t);
            rep.entries.push_back(cid == "c3c1" ? entries[0]
                                  : cid == "c3c2" ? entries[1]
                                                  : entries[2]);
          } else if (cid == "boundary") {
            bounds::ConditionEntry e;
            e.id = "boundary";
            std::int64_t th = bounds::boundary_threshold(int(point.b), point.k_b);
            e.holds = point.a < th;
            e.margin = double(th - point.a);
            e.inputs = {{"threshold", double(th)}};
            rep.entries.push_back(e);
          } else if (cid == "degrees") {
            bounds::ConditionEntry e;
            e.id = "degrees";
            double th = bounds::degrees_threshold(point.a, point.b, point.k_a);
            e.holds = true;
            e.margin = th;
            e.inputs = {{"threshold", th}};
            rep.entries.push_back(e);
          } else {
            throw Error(ErrorCode::USAGE, "unknown condition id '" + cid + "'");
          }
        }
        reports.push_back(rep);
      } else {
        throw Error(ErrorCode::USAGE, "bounds needs --point or --grid");
      }
      emit_condition_rows(std::cout, g, reports);
      return kExitOk;
    }

    if (*cmd_construct) {
      NonChoosabilityCertificate cert;
      std::string default_name;
      if (*con_classic) {
        cert = construct::construct_classic(cl_k, cl_delta);
        default_name =
            "classic-" + std::to_string(cl_k) + "-" + std::to_string(cl_delta) + ".cert";
      } else if (*con_steiner) {
        if (!st_preset.empty()) {
          cert = construct::construct_steiner(all_triples_7(), fano_complements());
          if (st_preset == "fano-28") cert = construct::trim_a_lists(cert, 28);
          default_name = st_preset == "fano-28" ? "steiner-k28-7.cert" : "steiner-k35-7.cert";
        } else {
          if (st_fam_a.empty() || st_fam_b.empty())
            throw Error(ErrorCode::USAGE, "steiner needs --preset or both family files");
          cert = construct::construct_steiner(load_family(st_fam_a), load_family(st_fam_b));
          if (st_trim > 0) cert = construct::trim_a_lists(cert, st_trim);
          default_name = "steiner.cert";
        }
      } else if (*con_boundary) {
        cert = construct::construct_boundary(construct::BoundaryParams::derive(bo_b, bo_delta));
        default_name =
            "boundary-" + std::to_string(bo_b) + "-" + std::to_string(bo_delta) + ".cert";
      } else if (*con_gadget) {
        cert = construct::construct_gadget(ga_k, ga_delta);
        default_name =
            "gadget-" + std::to_string(ga_k) + "-" + std::to_string(ga_delta) + ".cert";
      } else {
        auto result = construct::construct_witness_cond3(
            c3_k, c3_delta, c3_m > 0 ? std::optional<int>(c3_m) : std::nullopt,
            c3_segments > 0 ? std::optional<int>(c3_segments) : std::nullopt, c3_seed);
        const auto& rep = result.report;
        std::cout << "k=" << rep.k << " delta=" << rep.delta << " c=" << rep.c
                  << " m_real=" << rep.m_real << " m=" << rep.m << " segments=" << rep.segments
                  << " k1=" << rep.k1 << " |A|=" << rep.a_size << " |B|=" << rep.b_size << '\n';
        if (!result.certificate) {
          std::cout << "report-only: " << rep.note << '\n';
          return kExitCapped;
        }
        cert = *result.certificate;
        default_name = "cond3-k" + std::to_string(rep.k) + "-m" + std::to_string(rep.m) + ".cert";
      }

      if (con_fixture) {
        std::string path = write_witness(g, cert, "", default_name);
        std::cout << path << '\n';
      } else if (!con_out.empty()) {
        save_certificate_file(cert, con_out);
        std::cout << con_out << '\n';
      } else {
        std::cout << write_certificate(cert);
      }
      return kExitOk;
    }

    if (*cmd_sample) {
      if (g.format == "csv" && !sa_seed_set)
        throw Error(ErrorCode::USAGE, "csv mode requires an explicit --seed");
      std::uint64_t seed = sa_seed_set ? sa_seed : 1;

      BipartiteGraph graph;
      ListAssignment assignment;
      if (!sa_instance.empty()) {
        auto cert = load_certificate_file(sa_instance);
        graph = cert.graph;
        assignment = cert.assignment;
      } else if (*sa_split) {
        throw Error(ErrorCode::USAGE, "split sampling needs --instance");
      } else {
        if (sa_asize <= 0 || sa_bsize <= 0 || sa_palette <= 0)
          throw Error(ErrorCode::USAGE, "random instances need --a-size --b-size --palette");
        graph = prob::random_bipartite(sa_asize, sa_bsize, sa_da, sa_db, seed ^ 0x9e3779b9);
        assignment = prob::random_assignment(graph, sa_ka, sa_kb, sa_palette, seed ^ 0x7f4a7c15);
      }

      prob::SamplerOutcome outcome;
      if (*sa_trans) {
        outcome = prob::sample_transversal_colouring(graph, assignment, seed, sa_budget);
      } else if (*sa_coupon) {
        outcome = prob::sample_coupon_colouring(graph, assignment, seed, sa_budget);
      } else {
        outcome = prob::sample_palette_split(graph, assignment, sp_p, sp_eps,
                                             sp_mode == "eq1" ? prob::SplitMode::EQ1
                                                              : prob::SplitMode::EQ2,
                                             seed, sa_budget);
      }

      if (g.format == "csv") {
        std::cout << "sampler,seed,budget,success,resamples,algorithm\n";
        std::cout << (*sa_trans ? "transversal" : *sa_coupon ? "coupon" : "split") << ','
                  << outcome.seed << ',' << outcome.budget << ',' << (outcome.success ? 1 : 0)
                  << ',' << outcome.resample_count << ',' << outcome.algorithm << '\n';
      } else {
        std::cout << (outcome.success ? "SUCCESS" : "BUDGET_EXHAUSTED") << " seed="
                  << outcome.seed << " resamples=" << outcome.resample_count
                  << " algorithm=" << outcome.algorithm << '\n';
        if (outcome.success && outcome.colouring && sa_out.empty())
          print_colouring(std::cout, *outcome.colouring);
      }
      if (outcome.success && outcome.colouring && !sa_out.empty()) {
        std::ofstream out(sa_out);
        print_colouring(out, *outcome.colouring);
      }
      return outcome.success ? kExitOk : kExitCapped;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::USAGE) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::TOO_LARGE || e.code() == ErrorCode::REGION_TOO_LARGE
               ? kExitCapped
               : kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

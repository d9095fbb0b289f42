#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "augrule/atlas.hpp"
#include "augrule/errors.hpp"
#include "augrule/json_io.hpp"
#include "augrule/random_plat.hpp"
#include "augrule/verify.hpp"

namespace augrule {

namespace {

struct Settings {
  std::string input;
  std::vector<int> rhos;
  std::string format = "json";
  std::uint64_t seed = 1;
  int count = 200;
  int threads = 0;
  int max_eligible = AugmentOptions{}.max_eligible;
  std::size_t disk_budget = DiskOptions{}.budget;
  int cusps = 4;
  int crossings = 12;
  bool sweep = false;
  bool traces = false;
};

PlatDiagram load(const std::string& input) {
  if (input.empty()) throw SyntaxError("no input diagram given");
  if (input.rfind("atlas:", 0) == 0) {
    const AtlasEntry* e = find_atlas(input.substr(6));
    if (!e) throw SyntaxError("unknown atlas entry '" + input.substr(6) + "'");
    return e->diagram;
  }
  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(input);
    if (!f) throw SyntaxError("cannot open '" + input + "'");
    buf << f.rdbuf();
  }
  return parse_plat(buf.str());
}

// Requested rhos, or the admissible members of {0, 1} when none were given.
std::vector<int> rhos_for(const Settings& s, const MaslovData& m) {
  if (!s.rhos.empty()) return s.rhos;
  std::vector<int> out;
  if (m.modulus == 0) out.push_back(0);
  out.push_back(1);
  return out;
}

bool odd_or_zero(int rho) { return rho == 0 || rho % 2 != 0; }

Json cmd_info(const PlatDiagram& d, const Settings& s) {
  MaslovData m = maslov(d);
  Dga g = build_dga(d, m, {s.disk_budget});
  Json out = info_json(d, m);
  Json by_rho = Json::array();
  for (int rho : rhos_for(s, m)) {
    Json dist = Json::object();
    for (const auto& [deg, n] : degree_distribution(g, rho)) dist[std::to_string(deg)] = n;
    Json j{{"rho", rho}};
    if (odd_or_zero(rho)) j["chi"] = chi_star(g, rho);
    j["degree_distribution"] = dist;
    by_rho.push_back(std::move(j));
  }
  out["by_rho"] = by_rho;
  return out;
}

Json cmd_dga(const PlatDiagram& d, const Settings& s) {
  MaslovData m = maslov(d);
  Dga g = build_dga(d, m, {s.disk_budget});
  Json out{{"diagram", to_json(d)}};
  out.update(to_json(g));
  return out;
}

Json cmd_augs(const PlatDiagram& d, const Settings& s) {
  MaslovData m = maslov(d);
  Dga g = build_dga(d, m, {s.disk_budget});
  Json by_rho = Json::array();
  for (int rho : rhos_for(s, m)) {
    auto augs = enumerate_augmentations(g, rho, {s.max_eligible});
    Json list = Json::array();
    for (const Augmentation& eps : augs) list.push_back(to_json(g, eps));
    Json j{{"rho", rho}, {"count", augs.size()}};
    if (odd_or_zero(rho)) {
      std::int64_t chi = chi_star(g, rho);
      j["chi"] = chi;
      j["aug"] = to_json(HalfPow::scaled(augs.size(), -chi));
    }
    j["augmentations"] = list;
    by_rho.push_back(std::move(j));
  }
  return Json{{"diagram", to_json(d)}, {"by_rho", by_rho}};
}

Json cmd_rulings(const PlatDiagram& d, const Settings& s) {
  MaslovData m = maslov(d);
  Json by_rho = Json::array();
  for (int rho : rhos_for(s, m)) {
    auto rulings = enumerate_rulings(d, m, rho);
    Json list = Json::array();
    for (const Ruling& r : rulings) {
      Json j = to_json(r);
      if (odd_or_zero(rho)) j["interlacing_trace"] = interlacing_trace(d, m, r, rho);
      list.push_back(std::move(j));
    }
    by_rho.push_back(Json{{"rho", rho},
                          {"count", rulings.size()},
                          {"thetas", theta_multiset(rulings)},
                          {"polynomial", to_json(ruling_polynomial(d, m, rho))},
                          {"rulings", list}});
  }
  return Json{{"diagram", to_json(d)}, {"by_rho", by_rho}};
}

struct Outcome {
  Json json;
  bool passed = true;
};

Outcome cmd_correspond(const PlatDiagram& d, const Settings& s) {
  MaslovData m = maslov(d);
  Dga g = build_dga(d, m, {s.disk_budget});
  Json by_rho = Json::array();
  bool passed = true;
  for (int rho : rhos_for(s, m)) {
    CorrespondenceReport report = verify_correspondence(d, m, g, rho, {s.max_eligible});
    passed = passed && report.passed();
    Json j = to_json(report, g);
    if (s.traces) {
      Json traces = Json::array();
      for (const Augmentation& eps : enumerate_augmentations(g, rho, {s.max_eligible}))
        traces.push_back(to_json(g, ruling_from_augmentation(d, m, g, eps, rho)));
      j["traces"] = traces;
    }
    by_rho.push_back(std::move(j));
  }
  return {Json{{"diagram", to_json(d)}, {"by_rho", by_rho}}, passed};
}

VerifyOptions verify_options(const Settings& s) {
  VerifyOptions v;
  v.disk.budget = s.disk_budget;
  v.augment.max_eligible = s.max_eligible;
  return v;
}

Outcome cmd_verify(const PlatDiagram& d, const Settings& s) {
  MaslovData m = maslov(d);
  std::vector<int> rhos = rhos_for(s, m);
  DiagramReport report = verify_diagram(d, rhos, verify_options(s));
  Json j{{"version", kToolVersion}};
  j.update(to_json(report));
  return {j, report.passed()};
}

Outcome cmd_sweep(const Settings& s) {
  SweepOptions o;
  o.count = s.count;
  o.seed = s.seed;
  o.threads = s.threads;
  o.max_cusps = s.cusps;
  o.max_crossings = s.crossings;
  if (!s.rhos.empty()) o.rhos = s.rhos;
  o.verify = verify_options(s);
  SweepReport report = sweep_verify(o);
  return {to_json(report), report.passed()};
}

Json cmd_random(const Settings& s) {
  PlatDiagram d = random_plat(s.cusps, s.crossings, s.seed);
  return Json{{"seed", s.seed}, {"diagram", to_json(d)}, {"text", to_text(d)}};
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Augmentations and rulings of Legendrian plat fronts", "augrule"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("input", s.input, "plat file (.plat text or .json), '-' for stdin, or atlas:<name>");
    if (needs_input) in->required();
    sub->add_option("--rho", s.rhos, "grading modulus rho (repeatable)")
        ->allow_extra_args(false)
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"json"}));
    sub->add_option("--max-eligible", s.max_eligible, "largest augmentation search, in free bits")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--disk-budget", s.disk_budget, "disk enumeration state budget");
  };

  auto* info = app.add_subcommand("info", "Thurston-Bennequin number, rotation, degrees and chi*");
  auto* dga = app.add_subcommand("dga", "generators and differential");
  auto* augs = app.add_subcommand("augs", "rho-graded augmentations and Aug_rho");
  auto* rulings = app.add_subcommand("rulings", "rho-graded normal rulings and the ruling polynomial");
  auto* correspond = app.add_subcommand("correspond", "augmentation to ruling map and fiber table");
  auto* verify = app.add_subcommand("verify", "run every identity check on one diagram, or a random sweep");
  auto* random = app.add_subcommand("random", "random plat knot");
  for (auto* sub : {info, dga, augs, rulings, correspond}) add_common(sub, true);
  add_common(verify, false);
  add_common(random, false);
  correspond->add_flag("--traces", s.traces, "include the virtual augmentation trace of every augmentation");
  verify->add_flag("--sweep", s.sweep, "verify random diagrams instead of an input");
  for (auto* sub : {verify, random}) {
    sub->add_option("--seed", s.seed, "random seed");
    sub->add_option("--cusps", s.cusps, "cusp count (maximum, for a sweep)")->check(CLI::PositiveNumber);
    sub->add_option("--crossings", s.crossings, "crossing count (maximum, for a sweep)")
        ->check(CLI::NonNegativeNumber);
  }
  verify->add_option("--count", s.count, "number of random diagrams")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", s.threads, "sweep worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "augrule: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    Outcome result;
    if (*verify && (s.sweep || s.input.empty())) {
      if (!s.input.empty()) throw SyntaxError("--sweep takes no input diagram");
      result = cmd_sweep(s);
    } else if (*random) {
      if (!s.input.empty()) throw SyntaxError("random takes no input diagram");
      result.json = cmd_random(s);
    } else {
      PlatDiagram d = load(s.input);
      if (*info) result.json = cmd_info(d, s);
      else if (*dga) result.json = cmd_dga(d, s);
      else if (*augs) result.json = cmd_augs(d, s);
      else if (*rulings) result.json = cmd_rulings(d, s);
      else if (*correspond) result = cmd_correspond(d, s);
      else result = cmd_verify(d, s);
    }
    out << result.json.dump(2) << "\n";
    if (!result.passed) {
      err << "augrule: verification failed\n";
      return kVerificationFailed;
    }
    return kOk;
  } catch (const ResourceLimit& e) {
    err << "augrule: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const ReportFailure& e) {
    err << "augrule: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const CorrespondenceBreakdown& e) {
    err << "augrule: correspondence broke down: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "augrule: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace augrule

#include "augrule/json_io.hpp"

namespace augrule {

namespace {

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Crossing: return "crossing";
    case GeneratorKind::RightCusp: return "right_cusp";
    case GeneratorKind::Stabilization: return "stabilization";
  }
  return "?";
}

std::string crossing_name(int j) { return "q" + std::to_string(j + 1); }

Json word_json(const Dga& g, const Word& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(g.generators[static_cast<std::size_t>(x)].name);
  return out;
}

Json grading_json(const Grading& gr) { return gr.value(); }

}  // namespace

Json to_json(const PlatDiagram& d) { return Json{{"cusps", d.cusps}, {"word", d.word}}; }

Json to_json(const HalfPow& h) {
  return Json{{"mantissa", h.mantissa()}, {"halfexp", h.halfexp()}, {"text", to_string(h)}};
}

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = c;
  return Json{{"text", to_string(p)}, {"terms", terms}};
}

Json to_json(const Dga& g) {
  Json gens = Json::array();
  for (int x = 0; x < g.size(); ++x) {
    const Generator& gen = g.generators[static_cast<std::size_t>(x)];
    Json diff = Json::array();
    for (const Word& w : g.differential[static_cast<std::size_t>(x)]) diff.push_back(word_json(g, w));
    gens.push_back(Json{{"name", gen.name},
                        {"kind", kind_name(gen.kind)},
                        {"degree", grading_json(gen.grading)},
                        {"differential", diff}});
  }
  return Json{{"grading_modulus", g.modulus}, {"generators", gens}};
}

Json to_json(const Dga& g, const Augmentation& eps) {
  Json out = Json::object();
  for (int x = 0; x < g.size(); ++x) out[g.generators[static_cast<std::size_t>(x)].name] = eps[x] ? 1 : 0;
  return out;
}

Json to_json(const Ruling& r) {
  Json switches = Json::array();
  for (int j : r.switches) switches.push_back(j + 1);
  Json classification = Json::object();
  for (std::size_t j = 0; j < r.types.size(); ++j) {
    if (r.types[j] == CrossingType::Ineligible) continue;
    classification[crossing_name(static_cast<int>(j))] = std::string(1, static_cast<char>(r.types[j]));
  }
  return Json{{"switches", switches}, {"pattern", r.pattern()}, {"classification", classification},
              {"theta", r.theta},       {"s", r.s},                {"d", r.d},
              {"r", r.r}};
}

Json to_json(const Dga& g, const FiberTable& table, std::int64_t chi) {
  Json out = Json::array();
  for (const Fiber& f : table) {
    Json augs = Json::array();
    for (const Augmentation& eps : f.augmentations) augs.push_back(to_json(g, eps));
    std::int64_t e = expected_fiber_exponent(f.ruling, chi);
    out.push_back(Json{{"ruling", to_json(f.ruling)},
                       {"theta", f.ruling.theta},
                       {"fiber", augs},
                       {"expected_size", e >= 0 && e < 63 ? Json(std::uint64_t{1} << e) : Json(nullptr)},
                       {"actual_size", f.augmentations.size()}});
  }
  return out;
}

Json to_json(const Dga& g, const Correspondence& c) {
  Json records = Json::array();
  for (const ExtensionRecord& rec : c.trace.records) {
    Json passes = Json::array();
    for (SegmentKind k : rec.passes) passes.push_back(k == SegmentKind::CrossingStrands ? "crossing" : "companion");
    Json flipped = Json::array();
    for (const auto& pass : rec.flipped) {
      Json names = Json::array();
      for (int k : pass) names.push_back(crossing_name(k));
      flipped.push_back(names);
    }
    Json r{{"crossing", crossing_name(rec.crossing)}, {"label", to_string(rec.label)}, {"passes", passes},
           {"flipped", flipped}};
    if (rec.intermediate) r["intermediate"] = to_json(g, *rec.intermediate);
    records.push_back(std::move(r));
  }
  Json virtuals = Json::array();
  for (const Augmentation& v : c.trace.virtuals) virtuals.push_back(to_json(g, v));
  return Json{{"augmentation", to_json(g, c.trace.virtuals.front())},
              {"ruling", to_json(c.ruling)},
              {"final", to_json(g, c.trace.final_virtual())},
              {"virtuals", virtuals},
              {"records", records}};
}

Json to_json(const CorrespondenceReport& report, const Dga& g) {
  Json clauses = Json::array();
  for (const Clause& c : report.clauses)
    clauses.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"rho", report.rho},
              {"chi", report.chi},
              {"augmentations", report.augmentation_count},
              {"aug", to_json(report.aug)},
              {"theta_sum", to_json(report.theta_sum)},
              {"passed", report.passed()},
              {"clauses", clauses},
              {"fibers", to_json(g, report.fibers, report.chi)}};
}

Json to_json(const Check& c) {
  Json out{{"name", c.name}, {"rho", c.rho ? Json(*c.rho) : Json(nullptr)}, {"passed", c.passed}};
  if (!c.passed) out["detail"] = c.detail;
  return out;
}

Json to_json(const DiagramReport& report) {
  Json by_rho = Json::array();
  for (const RhoSummary& s : report.summaries) {
    Json j{{"rho", s.rho}, {"rulings", s.rulings}, {"thetas", s.thetas}, {"augmentations", s.augmentations}};
    if (s.chi) j["chi"] = *s.chi;
    if (s.aug) j["aug"] = to_json(*s.aug);
    if (s.theta_sum) j["theta_sum"] = to_json(*s.theta_sum);
    by_rho.push_back(std::move(j));
  }
  Json checks = Json::array();
  for (const Check& c : report.checks) checks.push_back(to_json(c));
  return Json{{"diagram", to_json(report.diagram)}, {"tb", report.tb},
              {"rotation", report.rotation},         {"passed", report.passed()},
              {"skipped_rhos", report.skipped_rhos}, {"by_rho", by_rho},
              {"checks", checks}};
}

Json to_json(const SweepReport& report) {
  const SweepOptions& o = report.options;
  Json failures = Json::array();
  for (const SweepFailure& f : report.failures)
    failures.push_back(Json{{"index", f.index},
                            {"diagram", to_json(f.diagram)},
                            {"counterexample", to_json(f.shrunk)},
                            {"check", to_json(f.check)}});
  return Json{{"version", kToolVersion},
              {"seed", o.seed},
              {"count", o.count},
              {"rhos", o.rhos},
              {"max_cusps", o.max_cusps},
              {"min_crossings", o.min_crossings},
              {"max_crossings", o.max_crossings},
              {"max_eligible", o.verify.augment.max_eligible},
              {"disk_budget", o.verify.disk.budget},
              {"diagrams", report.diagrams},
              {"checks_run", report.checks_run},
              {"checks_passed", report.checks_passed},
              {"passed", report.passed()},
              {"failures", failures},
              {"elapsed_ms", report.elapsed_ms}};
}

Json info_json(const PlatDiagram& d, const MaslovData& m) {
  return Json{{"diagram", to_json(d)}, {"cusps", d.cusps},        {"crossings", d.crossings()},
              {"tb", m.tb},            {"rotation", m.rotation},  {"writhe", m.writhe},
              {"grading_modulus", m.modulus}, {"potential", m.potential}};
}

}  // namespace augrule

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "augrule/atlas.hpp"
#include "augrule/errors.hpp"
#include "augrule/json_io.hpp"
#include "augrule/random_plat.hpp"
#include "augrule/verify.hpp"
#include "cli.hpp"

using namespace augrule;

namespace {

const std::filesystem::path kData = AUGRULE_DATA_DIR;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string atlas_file(const std::string& name) { return (kData / "atlas" / (name + ".plat")).string(); }

}  // namespace

TEST(Atlas, RecomputationMatchesStoredValues) {
  ASSERT_EQ(atlas().size(), 6u);
  for (const AtlasEntry& e : atlas()) {
    MaslovData m = maslov(e.diagram);
    EXPECT_EQ(m.tb, e.tb) << e.name;
    EXPECT_EQ(m.rotation, e.rotation) << e.name;
    EXPECT_FALSE(e.provenance.empty());
    Dga g = build_dga(e.diagram, m);
    for (const AtlasExpectation& x : e.expected) {
      auto rulings = enumerate_rulings(e.diagram, m, x.rho);
      EXPECT_EQ(theta_multiset(rulings), x.thetas) << e.name << " rho=" << x.rho;
      EXPECT_EQ(enumerate_augmentations(g, x.rho).size(), x.augmentations) << e.name << " rho=" << x.rho;
      if (x.chi) {
        EXPECT_EQ(chi_star(g, x.rho), *x.chi) << e.name;
      }
      if (x.aug) {
        EXPECT_EQ(aug_number(g, x.rho), *x.aug) << e.name;
      }
    }
  }
}

TEST(Atlas, DataFilesMatchBuiltIns) {
  for (const AtlasEntry& e : atlas()) {
    std::ifstream f(atlas_file(e.name));
    ASSERT_TRUE(f) << e.name;
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_EQ(parse_plat(buf.str()), e.diagram) << e.name;
  }
  EXPECT_EQ(find_atlas("trefoil")->diagram, (PlatDiagram{2, {2, 2, 2}}));
  EXPECT_EQ(find_atlas("no_such_knot"), nullptr);
}

TEST(Atlas, ChekanovPairIsDistinguishedByAug0) {
  const AtlasEntry* a = find_atlas("chekanov_5_2_a");
  const AtlasEntry* b = find_atlas("chekanov_5_2_b");
  ASSERT_TRUE(a && b);
  EXPECT_EQ(maslov(a->diagram).tb, maslov(b->diagram).tb);
  EXPECT_EQ(maslov(a->diagram).rotation, maslov(b->diagram).rotation);
  HalfPow aa = aug_number(build_dga(a->diagram, maslov(a->diagram)), 0);
  HalfPow ab = aug_number(build_dga(b->diagram, maslov(b->diagram)), 0);
  EXPECT_NE(aa, ab);
}

TEST(RandomPlat, Deterministic) {
  EXPECT_EQ(random_plat(2, 3, 7), random_plat(2, 3, 7));
  EXPECT_EQ(random_plat(4, 12, 99), random_plat(4, 12, 99));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PlatDiagram d = random_plat(3, 7, seed);
    EXPECT_EQ(count_components(d.cusps, d.word), 1);
    EXPECT_EQ(d.crossings(), 7);
  }
}

TEST(RandomPlat, Errors) {
  EXPECT_THROW(random_plat(2, 0, 1), GiveUp);
  EXPECT_EQ(random_plat(1, 0, 5), (PlatDiagram{1, {}}));
  EXPECT_THROW(random_plat(1, 3, 5), GiveUp);
  EXPECT_THROW(random_plat(0, 3, 5), RangeError);
  EXPECT_THROW(random_plat(2, -1, 5), RangeError);
}

TEST(Verify, TrefoilAllChecksPass) {
  std::vector<int> rhos{0, 1, 3};
  DiagramReport r = verify_diagram(PlatDiagram{2, {2, 2, 2}}, rhos);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.skipped_rhos.empty());
  ASSERT_EQ(r.summaries.size(), 3u);
  EXPECT_EQ(*r.summaries[0].aug, HalfPow(5, -1));
  EXPECT_EQ(*r.summaries[0].theta_sum, HalfPow(5, -1));
}

TEST(Verify, SkipsInadmissibleRho) {
  std::vector<int> rhos{0, 1, 2};
  DiagramReport r = verify_diagram(PlatDiagram{2, {1, 2}}, rhos);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.skipped_rhos, std::vector<int>{0});
  ASSERT_EQ(r.summaries.size(), 2u);
  EXPECT_EQ(r.summaries[0].augmentations, 0u);
  EXPECT_EQ(r.summaries[0].rulings, 0u);
}

TEST(Sweep, DefaultSeedPasses) {
  SweepOptions o;
  o.count = 200;
  o.seed = 1;
  SweepReport r = sweep_verify(o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.diagrams, 200u);
  EXPECT_EQ(r.checks_passed, r.checks_run);
}

TEST(Sweep, EmptyAndDeterministic) {
  SweepOptions o;
  o.count = 0;
  SweepReport empty = sweep_verify(o);
  EXPECT_TRUE(empty.passed());
  EXPECT_EQ(empty.diagrams, 0u);

  o.count = 20;
  o.seed = 42;
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(sweep_diagram(o, i), sweep_diagram(o, i));
  o.threads = 1;
  SweepReport a = sweep_verify(o);
  o.threads = 4;
  SweepReport b = sweep_verify(o);
  Json ja = to_json(a);
  Json jb = to_json(b);
  ja.erase("elapsed_ms");
  jb.erase("elapsed_ms");
  EXPECT_EQ(ja, jb);
}

TEST(Sweep, BudgetExhaustion) {
  SweepOptions o;
  o.count = 1;
  o.seed = 1;
  o.min_crossings = 30;
  o.max_crossings = 30;
  o.max_cusps = 4;
  o.rhos = {0};
  o.verify.disk.budget = 10;
  EXPECT_THROW(sweep_verify(o), ResourceLimit);
}

TEST(Json, Serializations) {
  PlatDiagram t{2, {2, 2, 2}};
  MaslovData m = maslov(t);
  Dga g = build_dga(t, m);
  EXPECT_EQ(to_json(t).dump(), R"({"cusps":2,"word":[2,2,2]})");
  Json dga = to_json(g);
  EXPECT_EQ(dga["generators"][3]["name"], "c1");
  EXPECT_EQ(dga["generators"][3]["differential"][0], Json::array());
  EXPECT_EQ(dga["generators"][3]["differential"].size(), 4u);
  auto rulings = enumerate_rulings(t, m, 0);
  Json r = to_json(rulings[0]);
  EXPECT_EQ(r["switches"], Json::array({1}));
  EXPECT_EQ(r["classification"]["q2"], "D");
  EXPECT_EQ(r["theta"], 1);
  Augmentation eps{{1, 1, 1, 0, 0}};
  EXPECT_EQ(to_json(g, eps).dump(), R"({"q1":1,"q2":1,"q3":1,"c1":0,"c2":0})");
}

TEST(Json, ClassificationOmitsIneligibleCrossings) {
  // The 5_2 words have crossings of nonzero degree.
  for (const PlatDiagram& d : {PlatDiagram{3, {2, 1, 4, 3, 3, 2, 4, 4}}, PlatDiagram{3, {2, 2, 1, 3, 2, 2, 2, 4}}}) {
    MaslovData md = maslov(d);
    for (const Ruling& r : enumerate_rulings(d, md, 0)) {
      Json j = to_json(r);
      std::size_t eligible = 0;
      for (CrossingType t : r.types) eligible += t != CrossingType::Ineligible;
      EXPECT_EQ(j["classification"].size(), eligible);
    }
  }
}

TEST(Cli, InfoTrefoil) {
  CliRun r = run({"info", "--rho", "0", atlas_file("trefoil")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["tb"], 1);
  EXPECT_EQ(j["rotation"], 0);
  EXPECT_EQ(j["by_rho"][0]["chi"], 1);
  EXPECT_EQ(j["by_rho"][0]["degree_distribution"], Json({{"0", 3}, {"1", 2}}));
}

TEST(Cli, RulingsTrefoil) {
  CliRun r = run({"rulings", "--rho", "0", atlas_file("trefoil")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json()["by_rho"][0];
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["thetas"], Json::array({-1, 1, 1}));
  EXPECT_EQ(j["polynomial"]["text"], "z^-1 + 2z");
}

TEST(Cli, VerifyTrefoil) {
  CliRun r = run({"verify", "--rho", "0", atlas_file("trefoil")});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["version"], kToolVersion);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"dga", "atlas:unknot"}).code, 0);
  CliRun augs = run({"augs", "--rho", "1", "atlas:unknot"});
  ASSERT_EQ(augs.code, 0);
  EXPECT_EQ(augs.json()["by_rho"][0]["count"], 2);
  CliRun corr = run({"correspond", "--rho", "0", "--traces", "atlas:trefoil"});
  ASSERT_EQ(corr.code, 0);
  EXPECT_EQ(corr.json()["by_rho"][0]["traces"].size(), 5u);
  CliRun rnd = run({"random", "--cusps", "2", "--crossings", "3", "--seed", "7"});
  ASSERT_EQ(rnd.code, 0);
  EXPECT_EQ(rnd.json()["diagram"], to_json(random_plat(2, 3, 7)));
  CliRun sweep = run({"verify", "--sweep", "--count", "5", "--seed", "3"});
  EXPECT_EQ(sweep.code, 0);
  EXPECT_EQ(sweep.json()["diagrams"], 5);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kInvalidInput);
  EXPECT_EQ(run({"frobnicate"}).code, kInvalidInput);
  EXPECT_EQ(run({"info", (kData / "missing.plat").string()}).code, kInvalidInput);
  EXPECT_EQ(run({"info", "atlas:nothing"}).code, kInvalidInput);
  EXPECT_EQ(run({"augs", "--rho", "0", "atlas:unknot_stabilized"}).code, kInvalidInput);
  EXPECT_EQ(run({"augs", "--rho", "2", "--format", "yaml", "atlas:unknot_stabilized"}).code, kInvalidInput);
  EXPECT_EQ(run({"augs", "--rho", "1", "--max-eligible", "2", "atlas:trefoil"}).code, kResourceLimit);
  EXPECT_EQ(run({"dga", "--disk-budget", "1", "atlas:trefoil"}).code, kResourceLimit);
  EXPECT_EQ(run({"verify", "--sweep", "--count", "1", "--cusps", "4", "--crossings", "30", "--disk-budget", "10"}).code,
            kResourceLimit);
  EXPECT_EQ(run({"random", "--cusps", "2", "--crossings", "0"}).code, kInvalidInput);
}

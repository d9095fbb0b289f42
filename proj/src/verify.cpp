#include "augrule/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <random>
#include <thread>

#include "augrule/errors.hpp"
#include "augrule/random_plat.hpp"
#include "augrule/ruling.hpp"

namespace augrule {

namespace {

// Collects pass/fail per check name, keeping the first counterexample.
class CheckSet {
 public:
  CheckSet(std::vector<Check>& out, std::optional<int> rho) : out_(out), rho_(rho) {}

  void expect(const std::string& name, bool ok, const std::string& detail = {}) {
    auto it = std::find_if(out_.begin(), out_.end(), [&](const Check& c) { return c.name == name && c.rho == rho_; });
    if (it == out_.end()) {
      out_.push_back({name, rho_, true, {}});
      it = std::prev(out_.end());
    }
    if (!ok && it->passed) {
      it->passed = false;
      it->detail = detail;
    }
  }

 private:
  std::vector<Check>& out_;
  std::optional<int> rho_;
};

std::string ruling_tag(const Ruling& r) { return "ruling " + r.pattern(); }

void check_dga(const Dga& g, std::vector<Check>& out) {
  CheckSet checks(out, std::nullopt);
  checks.expect("d_squared", verify_d_squared(g), "d^2 != 0");
  Grading one(1, g.modulus);
  for (int x = 0; x < g.size(); ++x) {
    for (const Word& w : g.differential[static_cast<std::size_t>(x)]) {
      bool ok = g.word_grading(w) + one == g.generators[static_cast<std::size_t>(x)].grading;
      checks.expect("grading_drop", ok, "a term of d " + g.generators[static_cast<std::size_t>(x)].name +
                                            " does not have degree one lower");
    }
  }
  checks.expect("grading_drop", true);
}

// Counting identities for a single ruling.
void check_ruling(const PlatDiagram& d, const MaslovData& m, const std::vector<Grading>& degrees, const Ruling& r,
                  int rho, std::int64_t chi, CheckSet& checks) {
  const std::string tag = ruling_tag(r);
  const std::int64_t c = d.cusps;

  std::int64_t expected_r = rho == 1 ? (r.theta + chi) / 2 - c : (r.theta + chi) / 2;
  checks.expect("theta_parity", (r.theta + chi) % 2 == 0, tag + ": theta + chi* is odd");
  checks.expect("return_count", r.r == expected_r,
                tag + ": r = " + std::to_string(r.r) + ", formula gives " + std::to_string(expected_r));

  if (rho == 1) checks.expect("departures_equal_returns", r.d == r.r, tag + ": d != r");

  if (rho == 0) {
    // d - r + sum_{k>0} (-1)^k a_k + sum_{k<0} (-1)^(k+1) a_k, over non-switch crossings.
    std::int64_t total = r.d - r.r;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      std::int64_t k = degrees[j].value();
      if (k == 0) continue;
      bool odd = k % 2 != 0;
      if (k > 0) total += odd ? -1 : 1;
      else total += odd ? 1 : -1;
    }
    checks.expect("degree_balance", total == 0, tag + ": balance sum is " + std::to_string(total));
  }

  auto trace = interlacing_trace(d, m, r, rho);
  checks.expect("trace_endpoints", trace.front() == 0 && trace.back() == 0,
                tag + ": trace starts at " + std::to_string(trace.front()) + " and ends at " +
                    std::to_string(trace.back()));
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    const int step = trace[j + 1] - trace[j];
    const CrossingType t = r.types[j];
    int expected = 0;
    bool ok = false;
    if (t == CrossingType::Switch) {
      ok = step == 0;
    } else if (rho == 0) {
      expected = interlacing_step(degrees[j].value(), t);
      ok = step == expected;
    } else if (rho == 1) {
      expected = t == CrossingType::Departure ? 1 : -1;
      ok = step == expected;
    } else {
      ok = step == 1 || step == -1;
    }
    checks.expect("trace_steps", ok,
                  tag + ": step " + std::to_string(step) + " at q" + std::to_string(j + 1));
  }
}

void check_rho_case(const PlatDiagram& d, const MaslovData& m, const Dga& g, int rho, const VerifyOptions& options,
                    DiagramReport& report) {
  CheckSet checks(report.checks, rho);
  RhoSummary summary;
  summary.rho = rho;

  auto rulings = enumerate_rulings(d, m, rho);
  summary.rulings = rulings.size();
  summary.thetas = theta_multiset(rulings);

  LaurentPolynomial from_rulings;
  for (const Ruling& r : rulings) from_rulings += LaurentPolynomial::monomial(r.theta);
  LaurentPolynomial dp = ruling_polynomial(d, m, rho);
  checks.expect("polynomial_matches_enumeration", dp == from_rulings,
                "transfer sweep gives " + to_string(dp) + ", enumeration gives " + to_string(from_rulings));

  const bool even_nonzero = rho != 0 && rho % 2 == 0;
  if (even_nonzero) {
    auto augs = enumerate_augmentations(g, rho, options.augment);
    summary.augmentations = augs.size();
    checks.expect("existence", augs.empty() == rulings.empty(),
                  std::to_string(augs.size()) + " augmentations but " + std::to_string(rulings.size()) + " rulings");
    report.summaries.push_back(std::move(summary));
    return;
  }

  CorrespondenceReport corr = verify_correspondence(d, m, g, rho, options.augment);
  summary.augmentations = corr.augmentation_count;
  summary.chi = corr.chi;
  summary.aug = corr.aug;
  summary.theta_sum = corr.theta_sum;

  checks.expect("existence", (corr.augmentation_count == 0) == rulings.empty(),
                std::to_string(corr.augmentation_count) + " augmentations but " + std::to_string(rulings.size()) +
                    " rulings");
  for (const Clause& clause : corr.clauses) checks.expect(clause.name, clause.passed, clause.detail);

  const auto degrees = crossing_gradings(d, m);
  for (const Ruling& r : rulings) check_ruling(d, m, degrees, r, rho, corr.chi, checks);
  // Register every ruling check even when there are no rulings.
  for (const char* name : {"theta_parity", "return_count", "trace_endpoints", "trace_steps"}) checks.expect(name, true);
  if (rho == 1) checks.expect("departures_equal_returns", true);
  if (rho == 0) checks.expect("degree_balance", true);

  report.summaries.push_back(std::move(summary));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool fails_check(const PlatDiagram& d, const SweepOptions& options, const Check& target) {
  try {
    DiagramReport r = verify_diagram(d, options.rhos, options.verify);
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [&](const Check& c) { return !c.passed && c.name == target.name && c.rho == target.rho; });
  } catch (const Error&) {
    return false;
  }
}

// Greedy letter deletion, keeping the diagram a knot that still fails.
PlatDiagram shrink(const PlatDiagram& start, const SweepOptions& options, const Check& target) {
  PlatDiagram best = start;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < best.word.size(); ++i) {
      PlatDiagram candidate = best;
      candidate.word.erase(candidate.word.begin() + static_cast<std::ptrdiff_t>(i));
      if (count_components(candidate.cusps, candidate.word) != 1) continue;
      if (fails_check(candidate, options, target)) {
        best = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return best;
}

}  // namespace

bool DiagramReport::passed() const { return first_failure() == nullptr; }

const Check* DiagramReport::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

DiagramReport verify_diagram(const PlatDiagram& d, std::span<const int> rhos, const VerifyOptions& options) {
  DiagramReport report;
  report.diagram = d;
  MaslovData m = maslov(d);
  report.tb = m.tb;
  report.rotation = m.rotation;
  Dga g = build_dga(d, m, options.disk);
  check_dga(g, report.checks);

  for (int rho : rhos) {
    if (rho < 0) throw RangeError("rho must be non-negative");
    const bool admissible = rho == 0 ? m.modulus == 0 : m.modulus % rho == 0;
    if (!admissible) {
      report.skipped_rhos.push_back(rho);
      continue;
    }
    check_rho_case(d, m, g, rho, options, report);
  }
  return report;
}

PlatDiagram sweep_diagram(const SweepOptions& options, std::size_t index) {
  if (options.max_cusps < 1) throw RangeError("max_cusps must be positive");
  if (options.min_crossings < 0 || options.max_crossings < options.min_crossings)
    throw RangeError("crossing bounds are empty");
  std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(index)));
  std::uniform_int_distribution<int> cusps_dist(1, options.max_cusps);
  std::uniform_int_distribution<int> crossings_dist(options.min_crossings, options.max_crossings);
  // Some (cusps, crossings) pairs admit no knot at all, so redraw the shape too.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int n = cusps_dist(rng);
    int c = crossings_dist(rng);
    if (n == 1 && c > 0) continue;
    try {
      return random_plat(n, c, rng(), 200);
    } catch (const GiveUp&) {
    }
  }
  throw GiveUp("no knot found for sweep index " + std::to_string(index));
}

SweepReport sweep_verify(const SweepOptions& options) {
  if (options.count < 0) throw RangeError("count must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.options = options;

  // Workers fill per-index slots; assembly below runs in index order so the
  // report does not depend on scheduling.
  const std::size_t count = static_cast<std::size_t>(options.count);
  std::vector<std::optional<DiagramReport>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = verify_diagram(sweep_diagram(options, i), options.rhos, options.verify);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = options.threads > 0 ? static_cast<std::size_t>(options.threads)
                                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    const DiagramReport& r = *slots[i];
    ++report.diagrams;
    for (const Check& c : r.checks) {
      ++report.checks_run;
      if (c.passed) {
        ++report.checks_passed;
        continue;
      }
      report.failures.push_back({i, r.diagram, shrink(r.diagram, options, c), c});
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace augrule

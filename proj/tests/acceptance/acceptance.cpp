// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <thread>

#include "brauerion/catalog.hpp"
#include "brauerion/context.hpp"
#include "brauerion/monomial.hpp"
#include "brauerion/verify.hpp"
#include "oracles.hpp"

using namespace brauerion;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitNamed = 60;
constexpr double kLimitTables = 180;
constexpr double kLimitBrauer = 300;
constexpr double kLimitMackey = 300;
constexpr double kLimitSuite = 300;
constexpr double kLimitOracle = 120;

struct Outcome {
  bool ok = false;
  std::string note;
};

int jobs() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

Outcome from_suite(const std::string& name, int order_cap = 0) {
  SuiteOptions o;
  o.jobs = jobs();
  o.order_cap = order_cap;
  auto report = run_suite(name, o);
  std::string note = std::to_string(report.tally.passed) + " checks passed, " + std::to_string(report.tally.failed) +
                     " failed over " + std::to_string(report.groups.size()) + " groups";
  for (const auto& g : report.groups)
    for (const auto& f : g.failures) note += "\n    " + g.label + ": " + f;
  return {report.ok() && report.tally.passed > 0, note};
}

Outcome named_examples() {
  auto gl = GroupContext::create(construct("GL23"));
  auto sl = GroupContext::create(construct("SL23"));
  auto a = classify(*gl, 2);
  auto b = classify(*sl, 2);
  bool ok = a.is_m_p.value_or(false) && !a.is_m && b.is_super_m_p.value_or(false) && !b.is_m &&
            a.assertions_hold() && b.assertions_hold();
  std::string note = std::string("GL23: M_2=") + (a.is_m_p.value_or(false) ? "true" : "false") +
                     " M=" + (a.is_m ? "true" : "false") + "; SL23: super_M_2=" +
                     (b.is_super_m_p.value_or(false) ? "true" : "false") + " M=" + (b.is_m ? "true" : "false");
  return {ok, note};
}

Outcome oracle_tables() {
  const std::vector<std::string> groups = {"cyclic 1", "cyclic 2", "cyclic 5", "cyclic 6", "cyclic 12",
                                           "S3", "D8", "Q8", "A4", "SL23", "GL23"};
  std::string note;
  bool ok = true;
  for (const auto& spec : groups) {
    auto g = GroupContext::create(construct(spec));
    const auto& cc = g->classes();
    std::set<std::vector<std::string>> fast, slow;
    for (const auto& r : g->table().rows) fast.insert(r.printed());
    for (const auto& chi : oracle::irreducibles_by_decomposition(g->group())) {
      std::vector<std::string> row;
      for (int c = 0; c < cc.class_count; ++c) row.push_back(chi[cc.rep[c]].to_string());
      slow.insert(row);
    }
    const bool same = !slow.empty() && fast == slow;
    if (!same) note += (note.empty() ? "" : ", ") + spec + " differs";
    ok = ok && same;
  }
  if (ok) note = std::to_string(groups.size()) + " groups agree";
  return {ok, note};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "named examples GL23 and SL23 at p = 2", kLimitNamed, named_examples},
      {2, "character table integrity up to order 200", kLimitTables, [] { return from_suite("tables", 200); }},
      {3, "Brauer table integrity and lifting", kLimitBrauer, [] { return from_suite("fongswan"); }},
      {4, "Mackey identity up to order 48", kLimitMackey, [] { return from_suite("mackey", 48); }},
      {5, "lifts of primitive Brauer characters are primitive", kLimitSuite, [] { return from_suite("lemma21"); }},
      {6, "monomial Brauer characters restrict monomially", kLimitSuite, [] { return from_suite("lemma23"); }},
      {7, "super M_p hypotheses imply super M_p", kLimitSuite, [] { return from_suite("theorem1"); }},
      {8, "normal subgroups of odd-order M_p-groups", kLimitSuite, [] { return from_suite("theorem2"); }},
      {9, "classification consistency", kLimitSuite, [] { return from_suite("consistency"); }},
      {10, "tables match the slow decomposition oracle", kLimitOracle, oracle_tables},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit;
    const bool pass = out.ok && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.number, c.name, seconds,
                c.limit, in_time ? "" : " too slow");
    std::printf("    %s\n", out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

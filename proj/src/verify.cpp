#include "brauerion/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "brauerion/brauer.hpp"
#include "brauerion/error.hpp"
#include "brauerion/induct.hpp"
#include "brauerion/monomial.hpp"
#include "brauerion/numtheory.hpp"

namespace brauerion {

void GroupResult::check(bool ok, const std::string& what) {
  tally.record(ok);
  if (!ok && failures.size() < 10) failures.push_back(what);
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << command << "\n";
  for (const auto& g : groups) {
    os << g.label << " (order " << g.order << "): ";
    if (g.skipped) {
      os << "skipped, " << *g.skipped << "\n";
      continue;
    }
    os << (g.tally.failed ? "FAIL" : "pass") << " " << g.tally.passed << " passed, " << g.tally.failed << " failed\n";
    for (const auto& d : g.details) os << "  " << d << "\n";
    for (const auto& f : g.failures) os << "  failure: " << f << "\n";
  }
  os << "total: " << tally.passed << " passed, " << tally.failed << " failed\n";
  return os.str();
}

nlohmann::json RunReport::to_json(bool with_timing) const {
  nlohmann::json gs = nlohmann::json::array();
  for (const auto& g : groups) {
    nlohmann::json entry = {{"label", g.label},
                            {"order", g.order},
                            {"passed", g.tally.passed},
                            {"failed", g.tally.failed},
                            {"details", g.details},
                            {"failures", g.failures},
                            {"skipped", g.skipped ? nlohmann::json(*g.skipped) : nlohmann::json(nullptr)}};
    if (with_timing) entry["seconds"] = g.seconds;
    gs.push_back(std::move(entry));
  }
  nlohmann::json doc = {
      {"command", command}, {"groups", std::move(gs)}, {"passed", tally.passed}, {"failed", tally.failed}};
  if (with_timing) doc["seconds"] = seconds;
  return doc;
}

CorpusManifest corpus_for(const SuiteOptions& options) {
  return options.corpus ? load_manifest(*options.corpus) : default_corpus();
}

namespace {

using Check = std::function<void(const GroupContext&, const SuiteOptions&, GroupResult&)>;

std::string row_name(int p, int row) { return (p ? "IBr_" + std::to_string(p) : std::string("Irr")) + "[" + std::to_string(row) + "]"; }

int smallest_prime_not_dividing(int n) {
  for (int q = 2;; ++q)
    if (is_prime(q) && n % q != 0) return q;
}

// --- suites ---

void check_tables(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  const auto& t = g.table();
  auto report = verify_orthogonality(g.classes(), g.order(), t);
  r.check(report.ok(), "orthogonality violated (" + std::to_string(report.violations.size()) + " entries)");
  r.check(t.rows.size() == static_cast<std::size_t>(g.classes().class_count), "row count differs from class count");
  Integer sum = 0;
  int linear = 0;
  bool divides = true;
  for (const auto& row : t.rows) {
    Integer d = row.degree();
    sum += d * d;
    if (d == 1) ++linear;
    divides = divides && g.order() % d == 0;
  }
  r.check(sum == g.order(), "sum of squared degrees is " + sum.str());
  r.check(divides, "a degree does not divide the group order");
  long long ab = 1;
  for (int n : g.solvability().abelianization) ab *= n;
  r.check(linear == ab, std::to_string(linear) + " linear characters, abelianization of order " + std::to_string(ab));
}

void check_fongswan(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  for (int p : prime_divisors(g.order())) {
    const auto& t = g.ibr(p);
    Tally before = r.tally;
    r.check(t.rows.size() == g.p_regular(p).size(), "p=" + std::to_string(p) + ": row count");
    for (std::size_t i = 0; i < g.table().rows.size(); ++i) {
      auto coeffs = decompose_in_ibr(restrict_to_p_regular(g.table().rows[i], g.p_regular(p), p), t);
      bool natural = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) {
        return c >= 0 && boost::multiprecision::denominator(c) == 1;
      });
      r.check(natural, "p=" + std::to_string(p) + ": Irr[" + std::to_string(i) + "] has a bad decomposition");
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      bool lifted = true;
      try {
        lifted = restrict_to_p_regular(find_lift(g, t.rows[i]), g.p_regular(p), p) == t.rows[i];
      } catch (const Error&) {
        lifted = false;
      }
      r.check(lifted, "p=" + std::to_string(p) + ": no lift for " + row_name(p, static_cast<int>(i)));
    }
    r.details.push_back("p=" + std::to_string(p) + ": " + std::to_string(t.rows.size()) + " Brauer characters, " +
                        std::to_string(r.tally.passed - before.passed) + " checks passed");
  }
  const int q = smallest_prime_not_dividing(g.order());
  const auto& t = g.ibr(q);
  bool same = t.rows.size() == g.table().rows.size();
  for (std::size_t i = 0; same && i < t.rows.size(); ++i) same = t.rows[i].values == g.table().rows[i].values;
  r.check(same, "p=" + std::to_string(q) + " does not divide the order but IBr differs from Irr");
}

void check_mackey(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  const auto& subs = g.subgroup_classes();
  for (int p : prime_divisors(g.order())) {
    Tally t;
    long long irreducible_cases = 0;
    for (const auto& h : subs) {
      const auto& rows = g.subgroup(h)->ibr(p).rows;
      for (const auto& k : subs) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
          auto dec = mackey_decompose(g, h, rows[i], k);
          bool ok = dec.balanced() && (!dec.left_irreducible || dec.product);
          if (dec.left_irreducible) ++irreducible_cases;
          t.record(ok);
          if (!ok && r.failures.size() < 10)
            r.failures.push_back("p=" + std::to_string(p) + " |H|=" + std::to_string(h.order) +
                                 " |K|=" + std::to_string(k.order) + " row " + std::to_string(i));
        }
      }
    }
    r.tally += t;
    r.details.push_back("p=" + std::to_string(p) + ": " + std::to_string(t.passed) + " pass, " +
                        std::to_string(t.failed) + " fail, " + std::to_string(irreducible_cases) +
                        " with irreducible restriction");
  }
}

void check_lemma21(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  for (int p : prime_divisors(g.order())) {
    const auto& t = g.ibr(p);
    int primitive = 0;
    for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) {
      if (!is_primitive(g, p, i)) continue;
      ++primitive;
      const auto& irr = g.table().rows;
      for (int j = 0; j < static_cast<int>(irr.size()); ++j)
        if (restrict_to_p_regular(irr[j], g.p_regular(p), p) == t.rows[i])
          r.check(is_primitive(g, 0, j), "p=" + std::to_string(p) + ": " + row_name(p, i) +
                                             " is primitive but its lift Irr[" + std::to_string(j) + "] is not");
    }
    r.details.push_back("p=" + std::to_string(p) + ": " + std::to_string(primitive) + " primitive Brauer characters");
  }
}

void check_lemma23(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  for (int p : prime_divisors(g.order())) {
    const auto& t = g.ibr(p);
    long long cases = 0;
    for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) {
      auto verdict = is_monomial(g, p, i);
      if (!verdict.holds) continue;
      const auto& h = verdict.witness->subgroup;
      auto hctx = g.subgroup(h);
      for (const auto& k : g.subgroup_classes()) {
        auto kctx = g.subgroup(k);
        auto phi_k = restrict(g, t.rows[i], *kctx);
        if (!is_irreducible(*kctx, phi_k)) continue;
        ++cases;
        auto meet = g.subgroup(intersect(h.members, k.members));
        auto lambda_meet = restrict(*hctx, verdict.witness->character, *meet);
        auto transported = induce(*meet, lambda_meet, *kctx);
        r.check(lambda_meet.is_linear() && transported == phi_k,
                "p=" + std::to_string(p) + ": " + row_name(p, i) + " restricted to a subgroup of order " +
                    std::to_string(k.order) + " is not induced from the transported witness");
      }
    }
    r.details.push_back("p=" + std::to_string(p) + ": " + std::to_string(cases) + " irreducible restrictions");
  }
}

void check_theorem1(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  for (int p : prime_divisors(g.order())) {
    auto c = theorem1_hypothesis_check(g, p);
    auto flag = [](bool b) { return b ? "true" : "false"; };
    r.details.push_back("p=" + std::to_string(p) + ": hypothesis_i " + flag(c.hypothesis_i) + ", hypothesis_ii " +
                        flag(c.hypothesis_ii) + ", super_M_p " + flag(c.conclusion));
    r.check(!c.hypothesis_i || c.conclusion, "p=" + std::to_string(p) + ": hypothesis (i) holds, conclusion fails");
    r.check(!c.hypothesis_ii || c.conclusion, "p=" + std::to_string(p) + ": hypothesis (ii) holds, conclusion fails");
  }
}

void check_theorem2(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  if (g.order() % 2 == 0) {
    r.skipped = "even order";
    return;
  }
  for (int p : prime_divisors(g.order())) {
    auto scan = normal_closure_scan(g, p);
    if (!scan.applicable) {
      r.details.push_back("p=" + std::to_string(p) + ": not an M_p-group");
      continue;
    }
    for (const auto& n : scan.normal_subgroups)
      r.check(n.is_m_p, "p=" + std::to_string(p) + ": normal subgroup of order " + std::to_string(n.order) +
                            " is not an M_p-group");
    r.details.push_back("p=" + std::to_string(p) + ": " + std::to_string(scan.normal_subgroups.size()) +
                        " normal subgroups, all M_p " + (scan.all_m_p ? "true" : "false") + "; super_M_p " +
                        (*scan.super_m_p ? "true" : "false") + " (recorded only)");
  }
}

void check_clifford(const GroupContext& g, const SuiteOptions&, GroupResult& r) {
  std::vector<int> primes = {0};
  for (int p : prime_divisors(g.order())) primes.push_back(p);
  for (const auto& m : g.normal_structure().maximal_normal) {
    if (!is_prime(g.order() / m.order)) continue;
    auto mctx = g.subgroup(m);
    for (int p : primes) {
      const auto& rows = mctx->irreducibles(p);
      int extends = 0, induces = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string what = "p=" + std::to_string(p) + " |M|=" + std::to_string(m.order) + " " +
                                 row_name(p, static_cast<int>(i));
        try {
          auto out = clifford_dichotomy(g, m, rows[i]);
          if (out.kind == CliffordOutcome::Kind::Extends) {
            ++extends;
            r.check(restrict(g, out.character, *mctx) == rows[i] &&
                        static_cast<int>(out.inertia.members.size()) == g.order(),
                    what + ": extension does not restrict correctly");
          } else {
            ++induces;
            r.check(is_irreducible(g, out.character) && out.inertia.members == m.members,
                    what + ": induced character is reducible");
          }
        } catch (const Error& e) {
          r.check(false, what + ": " + e.what());
        }
      }
      r.details.push_back("p=" + std::to_string(p) + " |M|=" + std::to_string(m.order) + ": " +
                          std::to_string(extends) + " extend, " + std::to_string(induces) + " induce irreducibly");
    }
  }
}

void check_consistency(const GroupContext& g, const SuiteOptions& options, GroupResult& r) {
  for (int p : prime_divisors(g.order())) {
    auto report = classify(g, p);
    for (const auto& a : report.assertions) r.check(a.holds, "p=" + std::to_string(p) + ": " + a.name);
    r.details.push_back("p=" + std::to_string(p) + ": M " + (report.is_m ? "true" : "false") + ", M_p " +
                        (*report.is_m_p ? "true" : "false") + ", super_M " + (report.is_super_m ? "true" : "false") +
                        ", super_M_p " + (*report.is_super_m_p ? "true" : "false"));
  }

  // Super-monomial exactly when every inducing character is monomial
  // (ordinary characters).
  const auto& irr = g.table().rows;
  for (int i = 0; i < static_cast<int>(irr.size()); ++i) {
    bool all_inducers_monomial = true;
    for (const auto& pair : inducing_pairs(g, 0, i))
      all_inducers_monomial = all_inducers_monomial && is_monomial(*g.subgroup(pair.subgroup), 0, pair.row).holds;
    r.check(all_inducers_monomial == is_super_monomial(g, 0, i).holds,
            "Irr[" + std::to_string(i) + "]: super-monomial disagrees with monomial inducers");
  }

  // Induction from a conjugate subgroup gives the same characters.
  std::mt19937_64 rng(options.seed ^ static_cast<std::uint64_t>(g.order()));
  const auto& subs = g.subgroup_classes();
  for (int trial = 0; trial < 5 && !subs.empty(); ++trial) {
    const auto& h = subs[rng() % subs.size()];
    const Element x = static_cast<Element>(rng() % g.order());
    auto hctx = g.subgroup(h);
    for (const auto& theta : hctx->table().rows) {
      auto conj = conjugate_brauer(g, h, theta, x);
      r.check(induce(g, conj.subgroup, conj.character) == induce(*hctx, theta, g),
              "induction from a conjugate subgroup of order " + std::to_string(h.order) + " differs");
    }
  }
}

struct SuiteSpec {
  Check check;
  int default_cap;  // 0 = no bound beyond the engine's
  bool needs_solvable;
};

const std::map<std::string, SuiteSpec>& suites() {
  static const std::map<std::string, SuiteSpec> s = {
      {"tables", {check_tables, 200, false}},     {"fongswan", {check_fongswan, 0, true}},
      {"mackey", {check_mackey, 48, true}},       {"lemma21", {check_lemma21, 0, true}},
      {"lemma23", {check_lemma23, 0, true}},      {"theorem1", {check_theorem1, 0, true}},
      {"theorem2", {check_theorem2, 0, true}},    {"clifford", {check_clifford, 0, true}},
      {"consistency", {check_consistency, 0, true}},
  };
  return s;
}

RunReport run_over_corpus(const std::string& command, const SuiteOptions& options, int cap, bool needs_solvable,
                          const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  const auto manifest = corpus_for(options);
  report.groups.resize(manifest.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < manifest.entries.size();) {
      const auto& entry = manifest.entries[i];
      GroupResult& r = report.groups[i];
      r.label = entry.label;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        auto ctx = GroupContext::create(build_entry(entry));
        r.order = ctx->order();
        if (cap && ctx->order() > cap) {
          r.skipped = "order above " + std::to_string(cap);
        } else if (needs_solvable && !ctx->is_solvable()) {
          r.skipped = "not solvable";
        } else {
          check(*ctx, options, r);
        }
      } catch (const Error& e) {
        r.check(false, e.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& g : report.groups) report.tally += g.tally;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, spec] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

RunReport run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = suites().find(name);
  if (it == suites().end()) throw Error(ErrorCode::BadSpec, "unknown suite '" + name + "'");
  const int cap = options.order_cap ? options.order_cap : it->second.default_cap;
  return run_over_corpus("verify " + name, options, cap, it->second.needs_solvable, it->second.check);
}

RunReport run_corpus(const SuiteOptions& options) {
  auto check = [](const GroupContext& g, const SuiteOptions&, GroupResult& r) {
    auto ordinary = classify(g, std::nullopt);
    for (const auto& a : ordinary.assertions) r.check(a.holds, a.name);
    r.details.push_back(std::string("M ") + (ordinary.is_m ? "true" : "false") + ", super_M " +
                        (ordinary.is_super_m ? "true" : "false"));
    if (!g.is_solvable()) return;
    for (int p : prime_divisors(g.order())) {
      auto report = classify(g, p);
      for (const auto& a : report.assertions) r.check(a.holds, "p=" + std::to_string(p) + ": " + a.name);
      r.details.push_back("p=" + std::to_string(p) + ": M_p " + (*report.is_m_p ? "true" : "false") +
                          ", super_M_p " + (*report.is_super_m_p ? "true" : "false"));
    }
  };
  return run_over_corpus("corpus run", options, options.order_cap, false, check);
}

}  // namespace brauerion

// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout,
// each criterion also held to its runtime budget.  Exit status 0 iff every
// line passed.
#include "fixtures.hpp"
#include "oracles.hpp"

#include <braidcm/lemmas.hpp>
#include <braidcm/report.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace braidcm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

bool all_passed = true;

void criterion(const std::string& id, const std::string& title, double budget_s, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && budget_s > 0 && s > budget_s) {
    o.pass = false;
    o.detail = "runtime budget of " + std::to_string(budget_s) + " s exceeded";
  }
  all_passed = all_passed && o.pass;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << s << " s)";
  if (!o.pass) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
}

/** Highest level for a built-in: 4, or 3 for the dimension-6 algebra. */
int levels(const AlgebraSpec& s) { return s.n_max_cap > 0 ? s.n_max_cap : 4; }

struct BuiltinPair {
  AlgebraSpec spec;
  HopfAlgebra algebra;
  ModularPair pair;
  std::string label;
};

std::vector<BuiltinPair> builtin_pairs() {
  std::vector<BuiltinPair> out;
  for (const auto& n : builtin_names()) {
    AlgebraSpec s = builtin(n);
    HopfAlgebra a = instantiate(s);
    for (const auto& p : s.pairs) out.push_back({s, a, make_pair(a, p), n + "/" + p.name});
  }
  return out;
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + BRAIDCM_CLI_PATH + "' " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[65536];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("wall_time_ms");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

}  // namespace

int main() {
  criterion("1", "Hopf axioms of every built-in; corrupted antipode is named", 5, [] {
    Outcome o;
    for (const auto& n : builtin_names()) {
      Report r = check_hopf_axioms(instantiate_unchecked(builtin(n)));
      o.require(r.passed(), n + ": " + (r.first_failure() ? r.first_failure()->name : ""));
    }
    Report bad = check_hopf_axioms(instantiate_unchecked(corrupted_sweedler()));
    o.require(!bad.passed(), "corrupted Sweedler passed its axioms");
    for (const auto& i : bad.items)
      if (!i.pass) o.require(i.name.rfind("antipode", 0) == 0, "unexpected failing item " + i.name);
    return o;
  });

  criterion("2", "twisted-antipode and operator identity suite for every built-in pair", 120, [] {
    Outcome o;
    for (const auto& b : builtin_pairs()) {
      Report r = run_lemma_suite(b.algebra, b.pair, levels(b.spec));
      o.require(r.passed(), b.label + ": " + (r.first_failure() ? r.first_failure()->name : ""));
    }
    return o;
  });

  criterion("3", "simplicial and paracyclic relations of CM objects", 120, [] {
    Outcome o;
    for (const auto& b : builtin_pairs()) {
      int n = levels(b.spec);
      ParaCocyclicData P = build_cm(b.algebra, b.pair, n + 2);
      RelationReport r = check_relations(P, n, {Family::SR, Family::PCR});
      o.require(r.passed(), b.label + ": " + std::to_string(r.failures()) + " failing instances");
      o.require(r.skipped == 0, b.label + ": instances skipped");
      for (const char* rel : {"PCR.td0", "PCR.td", "PCR.ts0", "PCR.ts", "SR.dd", "SR.ss", "SR.sd"}) {
        bool top = false;
        for (const auto& rec : r.records) top = top || (rec.relation == rel && rec.level == n);
        o.require(top, b.label + ": no " + rel + " instance at level " + std::to_string(n));
      }
    }
    return o;
  });

  criterion("4", "closed formulas for powers of the cyclic operator", 180, [] {
    Outcome o;
    for (const auto& b : builtin_pairs()) {
      int n = levels(b.spec);
      PowersReport r = verify_powers(b.algebra, b.pair, n);
      for (const auto& rec : r.records)
        o.require(rec.pass, b.label + " " + rec.formula + " n=" + std::to_string(rec.n) + " k=" + std::to_string(rec.k));
      int kth = 0, top = 0, via = 0;
      for (const auto& rec : r.records) {
        kth += rec.formula == "kth-power";
        top += rec.formula == "top-power";
        via += rec.formula == "via-unit-pair";
      }
      o.require(kth == n * (n - 1) / 2 && top == n && via == n + 1, b.label + ": missing formula records");
    }
    return o;
  });

  criterion("5", "twisted cocyclicity for pairs in involution and cyclicity of Hom(1, CM)", 60, [] {
    Outcome o;
    std::vector<std::string> seen;
    for (const auto& b : builtin_pairs()) {
      if (!check_twisted_mpi(b.algebra, b.pair)) continue;
      seen.push_back(b.label);
      for (int n = 0; n <= 4; ++n)
        o.require(tau_power(b.algebra, b.pair, n, n + 1) == b.algebra.theta(n),
                  b.label + ": tau^(n+1) != theta at n=" + std::to_string(n));
      CyclicModuleData X = hom_transport(build_cm(b.algebra, b.pair, 4), HomDirection::FromUnit);
      o.require(check_relations(X, 4, {Family::CC}).passed(), b.label + ": Hom(1, CM) not cyclic");
    }
    std::vector<std::string> expect{"trivial/eu", "group_c2/eu", "group_s3/eu", "sweedler/eg"};
    o.require(seen == expect, "pairs in involution differ from trivial, C2, S3 with (e,u) and Sweedler with (e,g)");
    return o;
  });

  criterion("6", "C object of the regular module coalgebra: relations and tau^(n+1) = theta", 120, [] {
    Outcome o;
    for (const auto& n : builtin_names()) {
      HopfAlgebra a = instantiate(builtin(n));
      ModuleCoalgebra c = regular_module_coalgebra(a);
      ParaCocyclicData Q = build_c_object(c, 5);
      RelationReport r = check_relations(Q, 3, {Family::SR, Family::PCR, Family::TwistedCC});
      o.require(r.passed() && r.skipped == 0, n + ": C object relations");
      for (int k = 0; k <= 3; ++k)
        o.require(power(Q.tau[k], k + 1) == twist(a.ctx, Q.levels[k]),
                  n + ": tau^(n+1) != theta at n=" + std::to_string(k));
      if (n == "anyonic_line_q")
        o.require(!(twist(a.ctx, Q.levels[0]) == Mor::identity(Q.levels[0])), "anyonic twist unexpectedly trivial");
    }
    return o;
  });

  criterion("7", "trace solving, trace conditions and the commutations of the trace morphism", 120, [] {
    Outcome o;
    bool nonzero = false;
    for (const auto& b : builtin_pairs()) {
      ModuleCoalgebra c = regular_module_coalgebra(b.algebra);
      TraceSuiteResult t = run_trace_suite(b.algebra, b.pair, c, 3);
      o.require(t.passed(), b.label + ": " + (t.checks.first_failure() ? t.checks.first_failure()->name : ""));
      for (const auto& alpha : t.basis) o.require(check_trace(c, b.pair, alpha).valid(), b.label + ": invalid basis");
      if (t.dimension() > 0) {
        nonzero = true;
        for (const char* fam : {"coface n=3", "codegeneracy n=3", "cyclic operator n=3"}) {
          bool has = false;
          for (const auto& i : t.checks.items) has = has || i.name.find(fam) != std::string::npos;
          o.require(has, b.label + ": no '" + fam + "' commutation");
        }
      }
    }
    o.require(nonzero, "no built-in pair has a nonzero trace");
    for (const auto& n : builtin_names()) {
      RunConfig cfg;
      cfg.n_max = 3;
      SuiteResult s = suite_traces(validate_spec(builtin(n)), cfg);
      o.require(s.passed, n + ": trace suite failed");
      for (const auto& p : s.body["pairs"])
        if (p["dimension"] == 0)
          o.require(p.contains("note") && p["note"].get<std::string>().find("zero-dimensional") != std::string::npos,
                    n + ": zero-dimensional trace space not reported");
    }
    return o;
  });

  criterion("8", "cyclic cohomology of the point and bicomplex identities", 10, [] {
    Outcome o;
    const std::vector<std::size_t> frozen{1, 0, 1, 0, 1};
    CyclicModuleData X = point_module(6, Variance::Cocyclic);
    o.require(oracles::connes_oracle(X, 5) == frozen, "rank oracle disagrees with the regression value");
    Bicomplex B = build_bicomplex(X, 6);
    o.require(B.checks.passed(), "bicomplex identity failed: " +
                                     (B.checks.first_failure() ? B.checks.first_failure()->name : std::string()));
    for (int n = 2; n <= 6; ++n) o.require(compose(B.total[n - 1], B.total[n]).nnz() == 0, "total d^2 != 0");
    ComplexReport r = total_homology(B);
    o.require(std::vector<std::size_t>(r.homology.begin(), r.homology.begin() + 5) == frozen,
              "HC of the point differs from 1,0,1,0,1");
    return o;
  });

  criterion("9", "normal forms on 200 fuzzed words per CM object", 60, [] {
    Outcome o;
    std::mt19937 rng(20240917);
    for (const auto& b : builtin_pairs()) {
      ParaCocyclicData P = build_cm(b.algebra, b.pair, 3);
      for (int k = 0; k < 200; ++k) {
        GenWord w = fixtures::random_word(rng, 3, 50);
        NormalForm nf = normalize(w);
        o.require(normalize(nf.to_word()) == nf, b.label + ": normalize not idempotent on " + w.to_string());
        o.require(evaluate_word(P, w) == evaluate_word(P, nf), b.label + ": value changed on " + w.to_string());
      }
    }
    return o;
  });

  criterion("10", "report is identical across thread counts (timing excluded)", 0, [] {
    Outcome o;
    for (const auto& n : builtin_names()) {
      CliResult a = run_cli("report --builtin " + n, "BRAIDCM_THREADS=1");
      CliResult b = run_cli("report --builtin " + n, "BRAIDCM_THREADS=2");
      o.require(a.code == 0 && b.code == 0, n + ": report exit codes " + std::to_string(a.code) + "/" +
                                                std::to_string(b.code));
      json ja = json::parse(a.out), jb = json::parse(b.out);
      strip_timing(ja);
      strip_timing(jb);
      o.require(ja.dump() == jb.dump(), n + ": reports differ");
    }
    return o;
  });

  const std::string samples = std::string(BRAIDCM_SOURCE_DIR) + "/samples/";
  criterion("extra", "CLI exit codes and the documented command examples", 0, [&] {
    Outcome o;
    o.require(run_cli("powers --builtin sweedler --pair eg --n-max 4").code == 0, "powers sweedler eg");
    o.require(run_cli("relations --builtin anyonic_line_q --q -1 --families SR,PCR,TwistedCC --n-max 3").code == 0,
              "relations anyonic");
    CliResult e1 = run_cli("eval --word \"t(2).d(2,0)\" --builtin group_c2");
    CliResult e2 = run_cli("eval --word \"d(2,2)\" --builtin group_c2");
    o.require(e1.code == 0 && e2.code == 0, "eval exit codes");
    json j1 = json::parse(e1.out)["suites"]["eval"], j2 = json::parse(e2.out)["suites"]["eval"];
    o.require(j1["normal_form"] == "d(2,2)" && j1["matrix"] == j2["matrix"], "eval t(2).d(2,0) != d(2,2)");
    o.require(run_cli("verify --file '" + samples + "sweedler_bad_mult.json'").code == 1, "bad file verify != 1");
    o.require(run_cli("verify --file '" + samples + "sweedler.json'").code == 0, "sample verify != 0");
    o.require(run_cli("verify --builtin quaternions").code == 2, "unknown builtin != 2");
    o.require(run_cli("eval --word \"d(2,5)\" --builtin group_c2").code == 2, "bad word != 2");
    o.require(run_cli("relations --builtin sweedler --pair xy").code == 2, "unknown pair != 2");
    return o;
  });

  std::cout << (all_passed ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
  return all_passed ? 0 : 1;
}

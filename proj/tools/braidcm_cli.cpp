// Command-line front end: loads a built-in or file algebra, runs verification
// suites and prints a JSON report.  Exit codes: 0 = every executed check
// passed, 1 = some check failed, 2 = infrastructure error (bad input, unknown
// name, I/O failure).
#include <braidcm/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace braidcm;

struct Options {
  std::string builtin;
  std::string file;
  std::string q = "-1";
  int cyclotomic = 0;
  std::string pair;
  int n_max = 4;
  int degree_bound = 6;
  std::string families = "SR,PCR";
  std::string word;
  std::string object = "cm";
  std::string out;
};

const char* kWordHelp =
    "Generator words: d(n,i) coface into level n, s(n,j) codegeneracy into level n, t(n) cyclic operator at\n"
    "level n, t^-1(n) its inverse, id(n) the identity. Generators are joined with '.' and composed right to\n"
    "left, as for functions: \"t(2).d(2,0)\" applies d(2,0) first.";

void add_input_options(CLI::App* sub, Options& o) {
  auto* b = sub->add_option("--builtin", o.builtin, "built-in algebra: trivial, group_c2, group_s3, sweedler, anyonic_line_q");
  auto* f = sub->add_option("--file", o.file, "algebra JSON file");
  b->excludes(f);
  f->excludes(b);
  sub->add_option("--q", o.q, "braiding scalar for anyonic_line_q (exact scalar, default -1)");
  sub->add_option("--cyclotomic", o.cyclotomic, "read --q in the cyclotomic field of this order (z = root of unity)");
  sub->add_option("--pair", o.pair, "restrict to one modular pair by name (default: all)");
  sub->add_option("--out", o.out, "write the report to this path instead of stdout");
}

void add_n_max(CLI::App* sub, Options& o) {
  sub->add_option("--n-max", o.n_max, "highest level checked (default 4; algebras of dim >= 6 are capped at 3)")
      ->check(CLI::Range(1, 8));
}

AlgebraSpec input_spec(const Options& o, std::string& source) {
  if (o.builtin.empty() == o.file.empty()) throw Error("exactly one of --builtin or --file is required");
  if (!o.file.empty()) {
    source = "file:" + o.file;
    return parse_algebra_spec(read_text_file(o.file));
  }
  source = "builtin:" + o.builtin;
  FieldSpec field = o.cyclotomic > 0 ? FieldSpec::cyclotomic(o.cyclotomic) : FieldSpec::rationals();
  Scalar q = Scalar::parse(o.q, field);
  if (o.builtin == "anyonic_line_q") source += " q=" + q.to_string();
  return builtin(o.builtin, q, field);
}

json error_json(const std::string& type, const std::string& msg) { return json{{"type", type}, {"message", msg}}; }

int emit(const json& rep, const std::string& out) {
  std::string text = rep.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write '" << out << "'\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int run(const std::string& command, const Options& o) {
  json rep;
  rep["tool"] = "braidcm";
  rep["version"] = kToolVersion;
  rep["schema"] = kReportSchema;
  rep["command"] = command;
  int code = 0;
  try {
    std::string source;
    AlgebraSpec spec = input_spec(o, source);
    rep["input"] = json{{"source", source},
                        {"name", spec.name},
                        {"dim", spec.dim()},
                        {"digest", fnv1a_hex(serialize_algebra(spec).dump())}};
    if (command == "verify" || command == "report") {
      // An algebra failing its axioms is a verification failure here, not an input error.
      auto t0 = std::chrono::steady_clock::now();
      Report ax = check_hopf_axioms(instantiate_unchecked(spec));
      if (!ax.passed()) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rep["suites"] = json{{"axioms", json{{"passed", false},
                                             {"items", report_items_json(ax)},
                                             {"wall_time_ms", static_cast<long long>(ms + 0.5)}}}};
        rep["passed"] = false;
        int io = emit(rep, o.out);
        return io ? io : 1;
      }
    }
    LoadedAlgebra L = validate_spec(spec);
    RunConfig cfg;
    cfg.n_max = o.n_max;
    cfg.degree_bound = o.degree_bound;
    cfg.pair = o.pair;
    cfg.families = parse_families(o.families);
    if (cfg.degree_bound < 1) throw Error("--degree-bound must be at least 1");
    json conf{{"n_max", cfg.n_max}, {"n_max_effective", effective_n_max(L, cfg)}};
    if (command == "relations" || command == "report") conf["families"] = family_names(cfg.families);
    if (command == "homology" || command == "report") conf["degree_bound"] = cfg.degree_bound;
    conf["pair"] = cfg.pair.empty() ? json("all") : json(cfg.pair);
    rep["config"] = conf;

    std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites;
    auto want = [&](const char* c) { return command == c || command == "report"; };
    if (want("verify")) {
      suites.emplace_back("axioms", [&] { return suite_axioms(L); });
      suites.emplace_back("lemmas", [&] { return suite_lemmas(L, cfg); });
    }
    if (want("relations")) suites.emplace_back("relations", [&] { return suite_relations(L, cfg); });
    if (want("powers")) suites.emplace_back("powers", [&] { return suite_powers(L, cfg); });
    if (want("traces")) suites.emplace_back("traces", [&] { return suite_traces(L, cfg); });
    if (want("homology")) suites.emplace_back("homology", [&] { return suite_homology(L, cfg); });
    if (command == "eval") {
      if (o.word.empty()) throw Error("eval needs --word");
      suites.emplace_back("eval", [&] { return eval_word(L, cfg, o.word, o.object); });
    }

    json js = json::object();
    bool passed = true;
    for (auto& [name, fn] : suites) {
      auto t0 = std::chrono::steady_clock::now();
      SuiteResult r = fn();
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      r.body["wall_time_ms"] = static_cast<long long>(ms + 0.5);
      js[name] = r.body;
      passed = passed && r.passed;
    }
    rep["suites"] = js;
    rep["passed"] = passed;
    code = passed ? 0 : 1;
  } catch (const ValidationError& e) {
    json err = error_json("ValidationError", e.what());
    err["report"] = report_items_json(e.report);
    rep["error"] = err;
    rep["passed"] = false;
    code = 2;
  } catch (const ParseError& e) {
    json err = error_json("ParseError", e.what());
    err["line"] = e.line;
    err["column"] = e.column;
    rep["error"] = err;
    rep["passed"] = false;
    code = 2;
  } catch (const UnknownBuiltin& e) {
    rep["error"] = error_json("UnknownBuiltin", e.what());
    rep["passed"] = false;
    code = 2;
  } catch (const InvalidPair& e) {
    rep["error"] = error_json("InvalidPair", e.what());
    rep["passed"] = false;
    code = 2;
  } catch (const WordError& e) {
    rep["error"] = error_json("WordError", e.what());
    rep["passed"] = false;
    code = 2;
  } catch (const std::exception& e) {
    rep["error"] = error_json("Error", e.what());
    rep["passed"] = false;
    code = 2;
  }
  int io = emit(rep, o.out);
  return io ? io : code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidcm: exact verification of Connes-Moscovici paracocyclic objects for Hopf algebras in braided "
               "categories.\nEvery command prints a JSON report. Exit 0: all checks passed; 1: a check failed; 2: "
               "input or infrastructure error.\nThread count: BRAIDCM_THREADS (reports do not depend on it)."};
  app.require_subcommand(1);
  app.footer(kWordHelp);
  Options o;
  std::string command;

  auto* verify = app.add_subcommand("verify", "Hopf axioms and the twisted-antipode / operator property suite");
  add_input_options(verify, o);
  add_n_max(verify, o);

  auto* relations = app.add_subcommand("relations", "relation families on CM(H, pair), its Hom transports and the C object");
  add_input_options(relations, o);
  add_n_max(relations, o);
  relations->add_option("--families", o.families, "comma list of SR, PCR, CC, TwistedCC (default SR,PCR)");

  auto* powers = app.add_subcommand("powers", "closed formulas for powers of the cyclic operator");
  add_input_options(powers, o);
  add_n_max(powers, o);

  auto* traces = app.add_subcommand("traces", "solve for delta-invariant sigma-traces and check the trace morphism");
  add_input_options(traces, o);
  add_n_max(traces, o);

  auto* homology = app.add_subcommand("homology", "cyclic (co)homology dimensions via the cyclic bicomplex");
  add_input_options(homology, o);
  add_n_max(homology, o);
  homology->add_option("--degree-bound", o.degree_bound, "top degree of the truncated bicomplex (default 6)");

  auto* eval = app.add_subcommand("eval", std::string("evaluate a generator word exactly.\n") + kWordHelp);
  add_input_options(eval, o);
  eval->add_option("--word", o.word, "generator word, e.g. \"t(2).d(2,0)\"")->required();
  eval->add_option("--object", o.object, "cm (CM object of --pair, default eu) or c (C object of the module coalgebra)")
      ->check(CLI::IsMember({"cm", "c"}));

  auto* report = app.add_subcommand("report", "all suites");
  add_input_options(report, o);
  add_n_max(report, o);
  report->add_option("--families", o.families, "relation families (default SR,PCR)");
  report->add_option("--degree-bound", o.degree_bound, "top degree for homology (default 6)");

  auto* list = app.add_subcommand("list", "list the built-in algebras");
  auto* exp = app.add_subcommand("export", "print the canonical JSON form of an algebra");
  add_input_options(exp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const auto& n : builtin_names()) std::cout << n << "\n";
    return 0;
  }
  if (exp->parsed()) {
    try {
      std::string source;
      AlgebraSpec spec = input_spec(o, source);
      validate_spec(spec);
      return emit(serialize_algebra(spec), o.out);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }
  for (auto* sub : {verify, relations, powers, traces, homology, eval, report})
    if (sub->parsed()) command = sub->get_name();
  return run(command, o);
}

#include "nilrank/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "nilrank/report.hpp"
#include "nilrank/search.hpp"
#include "nilrank/selftest.hpp"
#include "nilrank/theorems.hpp"

namespace nilrank {
namespace {

using report::Json;

constexpr const char* kPairOrderHelp =
    "Exponent vectors list a_ij for i<j in lexicographic order: "
    "(1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).";

Json envelope(const std::string& command, Json inputs) {
  Json out = Json::object();
  out["schema_version"] = report::kSchemaVersion;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  return out;
}

void flatten(const Json& value, const std::string& path, std::ostream& out) {
  const auto scalar_array = [](const Json& array) {
    for (const auto& x : array) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      flatten(child, path.empty() ? key : path + "." + key, out);
    }
  } else if (value.is_array() && !scalar_array(value)) {
    for (std::size_t k = 0; k < value.size(); ++k) {
      flatten(value[k], path + "[" + std::to_string(k) + "]", out);
    }
  } else if (value.is_string()) {
    out << path << ": " << value.get<std::string>() << "\n";
  } else {
    out << path << ": " << value.dump() << "\n";
  }
}

struct Output {
  std::ostream& out;
  std::string format;

  void emit(const Json& report) const {
    if (format == "text") {
      flatten(report, "", out);
    } else {
      out << report.dump(2) << "\n";
    }
  }
};

int cmd_construct(const std::string& a_text, const Output& output) {
  const IntVec a = parse_integer_list(a_text);
  if (a.size() != 3) throw InvalidInput("construct takes exactly three exponents a1,a2,a3");
  const TheoremAResult result = theorem_a_construct(a[0], a[1], a[2]);
  const WitnessPair& w = result.witness;
  const IntVec d = commutator_exponents(w.alpha1, w.alpha2);

  Json inputs = Json::object();
  inputs["a"] = report::integers(a);
  inputs["order"] = "[x1,x2]^a1 [x2,x3]^a2 [x1,x3]^a3";
  Json doc = envelope("construct", std::move(inputs));
  Json res = Json::object();
  res["diophantine"] = {{"w1", report::integer(result.diophantine.x)},
                        {"w2", report::integer(result.diophantine.y)}};
  res["minors_input_order"] = report::integers({d[0], d[2], d[1]});
  res["witness"] = report::witness(w);
  doc["result"] = std::move(res);
  doc["verdict"] = "rank2-witness";
  output.emit(doc);
  return kExitAffirmative;
}

int cmd_check(std::size_t n, const std::string& a_text, const Output& output) {
  if (n == 3) {
    throw InvalidInput("check needs n >= 4; for n = 3 a rank-2 witness always "
                       "exists, use `construct --a a1,a2,a3`");
  }
  const IntVec a = parse_integer_list(a_text);
  const ConditionCheck check = theorem_c_check(n, a);

  Json inputs = Json::object();
  inputs["n"] = n;
  inputs["a"] = report::integers(a);
  Json doc = envelope("check", std::move(inputs));
  Json reports = Json::array();
  for (const auto& r : check.reports) reports.push_back(report::condition(r));
  doc["result"] = {{"quadruples", std::move(reports)}, {"all_hold", check.all_hold}};
  doc["verdict"] = check.all_hold ? "condition-holds" : "condition-violated";
  output.emit(doc);
  return check.all_hold ? kExitAffirmative : kExitNegative;
}

struct SearchArgs {
  std::size_t n = 0;
  std::string a;
  std::int64_t bound = 2;
  bool allow_trivial_l = false;
  bool skip_rank2 = false;
  bool triple = false;
  unsigned threads = 0;
  std::uint64_t progress = 0;
};

int cmd_search(const SearchArgs& args, const Output& output, std::ostream& err) {
  const IntVec a = parse_integer_list(args.a);
  const SearchSpec spec{CyclicCentralSubgroup(args.n, a), args.bound, !args.skip_rank2,
                        args.allow_trivial_l};

  Json inputs = Json::object();
  inputs["n"] = args.n;
  inputs["a"] = report::integers(a);
  inputs["bound"] = args.bound;
  inputs["mode"] = args.triple ? "triple" : "pair";
  if (!args.triple) {
    inputs["require_rank2"] = spec.require_rank2;
    inputs["allow_trivial_l"] = spec.allow_trivial_l;
  }
  Json doc = envelope("search", std::move(inputs));
  Json res = Json::object();
  res["search_space_size"] = report::integer(search_space_size(spec));

  bool found = false;
  if (args.triple) {
    const auto triple = brute_force_triple_search(spec);
    found = triple.has_value();
    res["witness"] = found ? report::witness(*triple) : Json(nullptr);
  } else {
    res["candidate_pairs"] = candidate_pair_count(spec);
    SearchOptions options;
    options.threads = args.threads;
    options.progress_interval = args.progress;
    options.on_progress = [&err](const SearchProgress& p) {
      err << Json{{"event", "progress"},
                  {"candidates_checked", p.candidates_checked},
                  {"candidates_total", p.candidates_total}}
                 .dump()
          << "\n";
    };
    const auto witness = brute_force_witness_search(spec, options);
    found = witness.has_value();
    res["witness"] = found ? report::witness(*witness) : Json(nullptr);
  }
  doc["result"] = std::move(res);
  doc["verdict"] = found ? "witness-found" : "no-witness";
  output.emit(doc);
  return found ? kExitAffirmative : kExitNegative;
}

int cmd_verify(const std::string& path, const Output& output) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(path);
    if (!file) throw InvalidInput("cannot open witness file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  Json document;
  try {
    document = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("witness file is not valid JSON: ") + e.what());
  }
  const auto checks = report::verify_witness(document);

  Json doc = envelope("verify", {{"witness_file", path}});
  Json rows = Json::array();
  Json mismatches = Json::array();
  for (const auto& c : checks) {
    rows.push_back({{"field", c.field}, {"ok", c.ok}, {"recorded", c.recorded},
                    {"recomputed", c.recomputed}});
    if (!c.ok) mismatches.push_back(c.field);
  }
  const bool ok = mismatches.empty();
  doc["result"] = {{"checks", std::move(rows)}, {"mismatches", std::move(mismatches)}};
  doc["verdict"] = ok ? "verified" : "mismatch";
  output.emit(doc);
  return ok ? kExitAffirmative : kExitNegative;
}

int cmd_selftest(std::uint64_t trials, std::uint64_t seed, unsigned threads,
                 const Output& output) {
  const SelftestReport result = run_selftest(trials, seed, threads);
  Json doc = envelope("selftest", {{"trials", trials}, {"seed", seed}});
  Json suites = Json::array();
  for (const auto& s : result.suites) {
    suites.push_back({{"name", s.name},
                      {"cases", s.cases},
                      {"failures", s.failures},
                      {"first_failure", s.first_failure}});
  }
  Json sweep = report::sweep(result.sweep);
  sweep.erase("trials");
  doc["result"] = {{"suites", std::move(suites)}, {"soundness_sweep", std::move(sweep)}};
  doc["verdict"] = result.passed ? "pass" : "fail";
  output.emit(doc);
  return result.passed ? kExitAffirmative : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-over-centre witnesses in class-2 nilpotent quotients F_n / C.", "nilrank"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string construct_a;
  auto* construct = app.add_subcommand(
      "construct", "Build the explicit rank-2 witness for n = 3. Takes a1,a2,a3 in the order "
                   "[x1,x2]^a1 [x2,x3]^a2 [x1,x3]^a3, all nonzero.");
  construct->add_option("--a", construct_a, "a1,a2,a3")->required();

  std::size_t check_n = 0;
  std::string check_a;
  auto* check = app.add_subcommand(
      "check", std::string("Evaluate the four-index necessary condition on every quadruple "
                           "(n >= 4, entries nonzero). ") + kPairOrderHelp);
  check->add_option("--n", check_n, "Rank of F_n")->required();
  check->add_option("--a", check_a, "Comma-separated exponents")->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "search", std::string("Exhaustive witness search over generator exponents in "
                            "[-bound, bound]. ") + kPairOrderHelp);
  search->add_option("--n", search_args.n, "Rank of F_n")->required();
  search->add_option("--a", search_args.a, "Comma-separated exponents")->required();
  search->add_option("--bound", search_args.bound, "Exponent bound")->capture_default_str();
  search->add_flag("--allow-trivial-l", search_args.allow_trivial_l,
                   "Accept pairs that already commute in F_n (l = 0)");
  search->add_flag("--no-require-rank2", search_args.skip_rank2,
                   "Accept pairs with a nontrivial centrality kernel");
  search->add_flag("--triple", search_args.triple,
                   "Experimental: look for three pairwise commuting elements of rank 3 "
                   "over the centre");
  search->add_option("--threads", search_args.threads, "Worker threads (0 = all cores)");
  search->add_option("--progress", search_args.progress,
                     "Write a JSON progress line to stderr every N candidate pairs");

  std::string verify_path;
  auto* verify = app.add_subcommand(
      "verify", "Re-derive minors, certificate and kernel of a witness file ('-' for stdin).");
  verify->add_option("witness-file", verify_path, "Report or witness JSON")->required();

  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  unsigned selftest_threads = 0;
  auto* selftest = app.add_subcommand("selftest", "Run the randomised property suites.");
  selftest->add_option("--trials", trials, "Cases per suite")->capture_default_str();
  selftest->add_option("--seed", seed, "Random seed")->capture_default_str();
  selftest->add_option("--threads", selftest_threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitAffirmative : kExitUsage;
  }

  const Output output{out, format};
  try {
    if (*construct) return cmd_construct(construct_a, output);
    if (*check) return cmd_check(check_n, check_a, output);
    if (*search) return cmd_search(search_args, output, err);
    if (*verify) return cmd_verify(verify_path, output);
    if (*selftest) return cmd_selftest(trials, seed, selftest_threads, output);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}

}  // namespace nilrank

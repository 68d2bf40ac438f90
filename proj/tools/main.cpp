#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twostack/render.hpp"

namespace {

using namespace twostack;

struct GlobalOptions {
  bool json = false;
  int depth1 = 2;
  int jobs = 0;
  bool unsafe_cap = false;
};

constexpr int kDefaultCap = 10;

int effective_cap(const GlobalOptions& g) {
  return g.unsafe_cap ? machine::kMaxSearchLength : kDefaultCap;
}

machine::MachineConfig machine_config(const GlobalOptions& g) {
  return machine::MachineConfig{g.depth1, std::nullopt};
}

std::vector<std::string> stdin_lines() {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

int run_check(const GlobalOptions& g, const std::vector<std::string>& args, const std::string& method) {
  std::vector<std::string> inputs = args.empty() ? stdin_lines() : args;
  if (inputs.empty()) {
    std::cerr << "check: no permutations given (arguments or standard input)\n";
    return 2;
  }
  bool all_true = true, disagreement = false;
  for (const std::string& text : inputs) {
    Permutation p = parse_permutation(text);
    render::CheckResult result;
    result.perm = p;
    auto add = [&](const char* name, bool value) {
      result.methods.push_back(name);
      result.answers.push_back(value);
    };
    if (method == "alg" || method == "all") add("alg", canon::run_algorithm(p, false).accepted);
    if (method == "brute" || method == "all") {
      if (p.size() > machine::kMaxSearchLength)
        throw std::invalid_argument("check: length " + std::to_string(p.size()) +
                                    " exceeds the search limit of " +
                                    std::to_string(machine::kMaxSearchLength));
      add("brute", machine::generable(p, machine_config(g)).has_value());
    }
    if (method == "avoid" || method == "all") add("avoid", basis::avoids_basis(p));
    if (g.json)
      std::cout << render::check_json(result).dump() << "\n";
    else
      std::cout << render::check_text(result);
    for (bool a : result.answers) all_true = all_true && a;
    if (method == "all" && !result.all_agree()) disagreement = true;
  }
  if (disagreement) {
    std::cerr << "check: methods disagree\n";
    return 2;
  }
  return all_true ? 0 : 1;
}

int run_trace(const GlobalOptions& g, const std::string& text) {
  Permutation p = parse_permutation(text);
  canon::Verdict verdict = canon::run_algorithm(p, true);
  if (g.json)
    std::cout << render::trace_json(p, verdict).dump(2) << "\n";
  else
    std::cout << render::trace_text(p, verdict);
  return verdict.accepted ? 0 : 1;
}

int run_enumerate(const GlobalOptions& g, int n, bool count_only) {
  machine::EnumerateOptions options;
  options.cap = kDefaultCap;
  options.unsafe = g.unsafe_cap;
  options.count_only = count_only;
  options.jobs = g.jobs;
  machine::EnumerateResult result = machine::enumerate_generable(n, machine_config(g), options);
  if (g.json)
    std::cout << render::enumerate_json(result, count_only).dump(2) << "\n";
  else
    std::cout << render::enumerate_text(result, count_only);
  return 0;
}

int run_basis(const GlobalOptions& g, int max_len) {
  if (max_len > effective_cap(g))
    throw std::invalid_argument("basis: max length " + std::to_string(max_len) +
                                " exceeds the cap of " + std::to_string(effective_cap(g)) +
                                (g.unsafe_cap ? "" : "; pass --unsafe-cap to raise it"));
  basis::MemberOracle oracle = [&g](const Permutation& p) {
    return machine::generable(p, machine_config(g)).has_value();
  };
  std::vector<render::MinedLength> mined;
  for (int n = 1; n <= max_len; ++n)
    mined.push_back({n, basis::mine_basis(oracle, n, {.strict = false, .jobs = g.jobs})});
  if (g.json)
    std::cout << render::mined_json(mined).dump(2) << "\n";
  else
    std::cout << render::mined_text(mined);
  return 0;
}

int run_verify(const GlobalOptions& g, int max_len) {
  basis::VerifyOptions options;
  options.cap = kDefaultCap;
  options.unsafe = g.unsafe_cap;
  options.jobs = g.jobs;
  basis::TheoremReport report = basis::verify_theorem(max_len, machine_config(g), options);
  if (g.json)
    std::cout << render::report_json(report).dump(2) << "\n";
  else
    std::cout << render::report_text(report);
  return report.agreed() ? 0 : 1;
}

int run_contains(const GlobalOptions& g, const std::string& p_text, const std::string& q_text) {
  Permutation p = parse_permutation(p_text);
  Permutation q = parse_permutation(q_text);
  auto witness = containment_witness(p, q);
  if (g.json)
    std::cout << render::contains_json(p, q, witness).dump() << "\n";
  else
    std::cout << render::contains_text(p, q, witness);
  return witness ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutations through a depth-2 stack feeding an infinite stack: "
               "check, trace, enumerate, mine and cross-verify."};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--depth1", g.depth1, "capacity of the first stack (default 2)")
      ->check(CLI::Range(1, 64));
  app.add_option("--jobs", g.jobs, "worker threads; 0 = all cores")->check(CLI::Range(0, 4096));
  app.add_flag("--unsafe-cap", g.unsafe_cap,
               "raise the exhaustive cap from 10 to the hard limit of 13");

  auto* check = app.add_subcommand("check", "membership of permutations, one result per line");
  std::vector<std::string> check_perms;
  std::string method = "all";
  check->add_option("perms", check_perms, "permutations (reads standard input when omitted)");
  check->add_option("--method", method, "alg, brute, avoid, or all (default)")
      ->check(CLI::IsMember({"alg", "brute", "avoid", "all"}));
  check->fallthrough();

  auto* trace = app.add_subcommand("trace", "run the deterministic algorithm and print its trace");
  std::string trace_perm;
  trace->add_option("perm", trace_perm, "target permutation")->required();
  trace->fallthrough();

  auto* enumerate = app.add_subcommand("enumerate", "list or count the generable permutations of length n");
  int enum_n = 0;
  bool count_only = false;
  enumerate->add_option("--n", enum_n, "permutation length")->required()->check(CLI::Range(0, 64));
  enumerate->add_flag("--count-only", count_only, "print the count instead of the members");
  enumerate->fallthrough();

  auto* basis_cmd = app.add_subcommand("basis", "mine the minimal non-generable permutations");
  int basis_max_len = 8;
  basis_cmd->add_option("--max-len", basis_max_len, "mine lengths 1..max-len (default 8)")
      ->check(CLI::Range(1, 64));
  basis_cmd->fallthrough();

  auto* verify = app.add_subcommand("verify", "cross-check search, algorithm and avoidance exhaustively");
  int verify_max_len = 8;
  verify->add_option("--max-len", verify_max_len, "check lengths 1..max-len (default 8)")
      ->check(CLI::Range(1, 64));
  verify->fallthrough();

  auto* contains_cmd = app.add_subcommand("contains", "pattern containment with witness positions");
  std::string contains_p, contains_q;
  contains_cmd->add_option("p", contains_p, "host permutation")->required();
  contains_cmd->add_option("q", contains_q, "pattern")->required();
  contains_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(g, check_perms, method);
    if (trace->parsed()) return run_trace(g, trace_perm);
    if (enumerate->parsed()) return run_enumerate(g, enum_n, count_only);
    if (basis_cmd->parsed()) return run_basis(g, basis_max_len);
    if (verify->parsed()) return run_verify(g, verify_max_len);
    if (contains_cmd->parsed()) return run_contains(g, contains_p, contains_q);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

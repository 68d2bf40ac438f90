// Python bindings: a thin string-based veneer over the C++ core. Permutations
// cross the boundary in the same text format the CLI uses.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twostack/basis.hpp"
#include "twostack/canon.hpp"
#include "twostack/machine.hpp"
#include "twostack/perm.hpp"
#include "twostack/render.hpp"

namespace py = pybind11;
using namespace twostack;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  using value_t = nlohmann::json::value_t;
  switch (j.type()) {
    case value_t::null:
      return py::none();
    case value_t::boolean:
      return py::bool_(j.get<bool>());
    case value_t::number_integer:
      return py::int_(j.get<int64_t>());
    case value_t::number_unsigned:
      return py::int_(j.get<uint64_t>());
    case value_t::number_float:
      return py::float_(j.get<double>());
    case value_t::string:
      return py::str(j.get<std::string>());
    case value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default:
      return py::none();
  }
}

machine::MachineConfig config_of(int depth1, std::optional<int> depth2) {
  return machine::MachineConfig{depth1, depth2};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Permutations generated by a bounded stack feeding an unbounded stack: "
      "machine search, the deterministic algorithm, and pattern avoidance.";
  m.attr("MAX_SEARCH_LENGTH") = machine::kMaxSearchLength;

  m.def(
      "algorithm_accepts",
      [](const std::string& perm) {
        return canon::run_algorithm(parse_permutation(perm), false).accepted;
      },
      py::arg("perm"), "Whether the deterministic algorithm accepts the permutation.");

  m.def(
      "trace",
      [](const std::string& perm) {
        const Permutation p = parse_permutation(perm);
        return json_to_py(render::trace_json(p, canon::run_algorithm(p, true)));
      },
      py::arg("perm"),
      "Full run of the deterministic algorithm: events, verdict, and the codeword on accept.");

  m.def(
      "rule_sequence",
      [](const std::string& perm) {
        const canon::Verdict v = canon::run_algorithm(parse_permutation(perm), true);
        std::vector<std::string> names;
        for (canon::RuleId r : canon::rule_sequence(v)) names.push_back(canon::rule_name(r));
        return names;
      },
      py::arg("perm"), "Names of the rules fired, in order, over a full run.");

  m.def(
      "generable",
      [](const std::string& perm, int depth1, std::optional<int> depth2) -> std::optional<std::string> {
        const Permutation p = parse_permutation(perm);
        std::optional<std::string> witness;
        {
          py::gil_scoped_release release;
          witness = machine::generable(p, config_of(depth1, depth2));
        }
        return witness;
      },
      py::arg("perm"), py::arg("depth1") = 2, py::arg("depth2") = py::none(),
      "Witness codeword from the exhaustive machine search, or None.");

  m.def(
      "apply_codeword",
      [](int n, const std::string& word, int depth1, std::optional<int> depth2) {
        return to_string(machine::apply_codeword(n, word, config_of(depth1, depth2)));
      },
      py::arg("n"), py::arg("word"), py::arg("depth1") = 2, py::arg("depth2") = py::none(),
      "Replays a complete codeword on n tokens and returns the output permutation.");

  m.def(
      "enumerate_generable",
      [](int n, int depth1, bool count_only, int jobs, bool unsafe) {
        machine::EnumerateOptions options;
        options.count_only = count_only;
        options.jobs = jobs;
        options.unsafe = unsafe;
        machine::EnumerateResult result;
        {
          py::gil_scoped_release release;
          result = machine::enumerate_generable(n, config_of(depth1, std::nullopt), options);
        }
        return json_to_py(render::enumerate_json(result, count_only));
      },
      py::arg("n"), py::arg("depth1") = 2, py::arg("count_only") = false, py::arg("jobs") = 0,
      py::arg("unsafe") = false,
      "All generable permutations of length n (or just their count).");

  m.def(
      "basis_table", []() {
        std::vector<std::string> out;
        for (const Permutation& b : basis::basis_table().elements) out.push_back(to_string(b));
        return out;
      },
      "The 20 minimal forbidden patterns, by increasing length.");

  m.def(
      "avoids_basis",
      [](const std::string& perm) { return basis::avoids_basis(parse_permutation(perm)); },
      py::arg("perm"), "Whether the permutation avoids every basis pattern.");

  m.def(
      "mine_basis",
      [](int n, int depth1, bool strict, int jobs) {
        const machine::MachineConfig config = config_of(depth1, std::nullopt);
        std::vector<Permutation> mined;
        {
          py::gil_scoped_release release;
          basis::MemberOracle oracle = [&config](const Permutation& p) {
            return machine::generable(p, config).has_value();
          };
          mined = basis::mine_basis(oracle, n, {.strict = strict, .jobs = jobs});
        }
        std::vector<std::string> out;
        for (const Permutation& p : mined) out.push_back(to_string(p));
        return out;
      },
      py::arg("n"), py::arg("depth1") = 2, py::arg("strict") = false, py::arg("jobs") = 0,
      "Length-n minimal non-members for the machine of the given first-stack depth.");

  m.def(
      "verify_theorem",
      [](int max_len, int depth1, int jobs, bool unsafe) {
        basis::VerifyOptions options;
        options.jobs = jobs;
        options.unsafe = unsafe;
        basis::TheoremReport report;
        {
          py::gil_scoped_release release;
          report = basis::verify_theorem(max_len, config_of(depth1, std::nullopt), options);
        }
        return json_to_py(render::report_json(report));
      },
      py::arg("max_len"), py::arg("depth1") = 2, py::arg("jobs") = 0, py::arg("unsafe") = false,
      "Cross-checks search, algorithm and avoidance on every length up to max_len.");

  m.def(
      "check",
      [](const std::string& perm, int depth1) {
        const Permutation p = parse_permutation(perm);
        render::CheckResult result;
        result.perm = p;
        result.methods = {"alg", "brute", "avoid"};
        bool brute;
        {
          py::gil_scoped_release release;
          brute = machine::generable(p, config_of(depth1, std::nullopt)).has_value();
        }
        result.answers = {canon::run_algorithm(p, false).accepted, brute, basis::avoids_basis(p)};
        return json_to_py(render::check_json(result));
      },
      py::arg("perm"), py::arg("depth1") = 2,
      "All three membership answers for one permutation, plus whether they agree.");

  m.def(
      "contains",
      [](const std::string& p, const std::string& q) {
        return containment_witness(parse_permutation(p), parse_permutation(q));
      },
      py::arg("p"), py::arg("q"),
      "Lexicographically least witness positions of q inside p, or None.");

  m.def(
      "delete_entry",
      [](const std::string& perm, int i) {
        return to_string(delete_entry(parse_permutation(perm), i));
      },
      py::arg("perm"), py::arg("i"), "Removes position i (1-based) and standardizes.");

  m.def(
      "standardize",
      [](const std::vector<int>& word) { return to_string(standardize(word)); },
      py::arg("word"), "The permutation order-isomorphic to a sequence of distinct integers.");

  m.def(
      "lemma1_extend",
      [](const std::string& perm) {
        return to_string(basis::lemma1_extend(parse_permutation(perm)));
      },
      py::arg("perm"),
      "The length n+3 non-member extension built from a length-n non-member.");
}

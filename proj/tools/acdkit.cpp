// acdkit: character tables, average p'-degree invariants and the theorem harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "acdkit/error.hpp"
#include "acdkit/group_expr.hpp"
#include "acdkit/harness.hpp"
#include "acdkit/named_groups.hpp"

namespace {

using namespace acdkit;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

int emit(const nlohmann::ordered_json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
  return kExitOk;
}

std::vector<std::pair<std::string, PermGroup>> load_groups(const std::string& path, std::optional<std::uint64_t> max_order) {
  std::vector<std::pair<std::string, PermGroup>> groups;
  for (const auto& entry : read_corpus_file(path)) {
    try {
      const GroupSpec spec = parse_group_expr(entry.text);
      PermGroup g = construct(spec);
      if (max_order && g.order() > *max_order) continue;
      groups.emplace_back(render(spec), std::move(g));
    } catch (const Error& e) {
      std::cerr << "warning: line " << entry.line << ": " << e.what() << "\n";
    }
  }
  return groups;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables and average p'-degree checks for permutation groups"};
  app.require_subcommand(1);

  std::string expr;
  bool as_json = false;
  std::uint64_t prime = 0;
  std::string field = "C";
  std::string corpus_path;
  std::optional<std::uint64_t> max_order;
  std::string out_path;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t fuzz_trials = 0;
  bool timing = false;
  std::size_t m = 2;
  std::string mode = "solvability";

  auto* table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("expr", expr, "Group expression")->required();
  table->add_flag("--json", as_json, "Machine-readable output");

  auto* acd = app.add_subcommand("acd", "Average degree of p'-degree characters with values in a field");
  acd->add_option("expr", expr, "Group expression")->required();
  acd->add_option("--prime", prime, "Prime p")->required();
  acd->add_option("--field", field, "Q, Qp, R or C")->check(CLI::IsMember({"Q", "Qp", "R", "C"}));

  auto* check = app.add_subcommand("check", "Evaluate every theorem entry on one group");
  check->add_option("expr", expr, "Group expression")->required();
  check->add_option("--prime", prime, "Check this prime only");

  auto* verify = app.add_subcommand("verify", "Check every group of a corpus file");
  verify->add_option("--corpus", corpus_path, "Corpus file")->required();
  verify->add_option("--max-order", max_order, "Skip groups above this order");
  verify->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for lemma fuzzing");
  verify->add_option("--fuzz-trials", fuzz_trials, "Subgroup samples per group for lemma fuzzing (0 = off)");
  verify->add_flag("--timing", timing, "Include per-group seconds (breaks byte-identical reruns)");

  auto* fuzz = app.add_subcommand("fuzz", "Test the subgroup counting inequalities on random subgroups");
  fuzz->add_option("expr", expr, "Group expression")->required();
  fuzz->add_option("--trials", trials, "Number of subgroup samples")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed, "Random seed");

  auto* central = app.add_subcommand("centralproduct", "Degree-count identities on SL(2,5) * C(2m)");
  central->add_option("--m", m, "C(2m) factor, default 2")->check(CLI::PositiveNumber);

  auto* sharp = app.add_subcommand("sharpness", "Smallest acd_p' among groups failing a conclusion");
  sharp->add_option("--corpus", corpus_path, "Corpus file")->required();
  sharp->add_option("--prime", prime, "Prime p")->required();
  sharp->add_option("--mode", mode, "solvability or pnilpotency")
      ->check(CLI::IsMember({"solvability", "pnilpotency"}));
  sharp->add_option("--max-order", max_order, "Skip groups above this order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) {
      const CharTable t = compute_table(construct(expr));
      if (as_json) {
        std::cout << table_to_json(t) << "\n";
      } else {
        std::cout << table_to_text(t);
        std::cout << "fields:";
        for (std::size_t r = 0; r < t.size(); ++r) std::cout << " " << minimal_field_name(t, r);
        std::cout << "\n";
      }
      return kExitOk;
    }
    if (*acd) {
      const CharTable t = compute_table(construct(expr));
      const FieldSpec f = FieldSpec::from_name(field, prime);
      const Selection s = summarize(t, irr_pprime(t, prime, f));
      std::cout << "acd_{" << f.name() << "," << prime << "'} = " << to_string(s.average) << "\n";
      std::cout << "degrees:";
      for (std::size_t r : s.rows) std::cout << " " << t.degree(r);
      std::cout << "\n";
      return kExitOk;
    }
    if (*check) {
      const GroupSpec spec = parse_group_expr(expr);
      std::vector<std::uint64_t> primes;
      if (prime != 0) primes.push_back(prime);
      const VerdictReport r = check_group(construct(spec), primes, render(spec));
      emit(to_json(r), "");
      return r.violations == 0 && r.table_ok ? kExitOk : kExitViolations;
    }
    if (*verify) {
      CorpusOptions options;
      options.max_order = max_order;
      options.jobs = jobs;
      options.seed = seed;
      options.fuzz_trials = fuzz_trials;
      options.timing = timing;
      const CorpusSummary s = verify_corpus(read_corpus_file(corpus_path), options);
      emit(to_json(s), out_path);
      std::cerr << s.reports.size() << " groups checked, " << s.violations << " violations, " << s.table_failures
                << " table failures, " << s.warnings.size() << " warnings, " << s.sharpness.size()
                << " sharpness flags\n";
      for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
      return s.ok() ? kExitOk : kExitViolations;
    }
    if (*fuzz) {
      const GroupSpec spec = parse_group_expr(expr);
      const LemmaReport r = fuzz_lemmas(construct(spec), trials, seed, render(spec));
      emit(to_json(r), "");
      return r.violations.empty() ? kExitOk : kExitViolations;
    }
    if (*central) {
      const CentralProductReport r = check_central_product(m);
      emit(to_json(r), "");
      return r.violations == 0 ? kExitOk : kExitViolations;
    }
    if (*sharp) {
      const ScanResult r = sharpness_scan(load_groups(corpus_path, max_order), prime,
                                          mode == "solvability" ? ScanMode::Solvability : ScanMode::PNilpotency);
      emit(to_json(r), "");
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#ifndef ACDKIT_HARNESS_HPP
#define ACDKIT_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "acdkit/theorems.hpp"

namespace acdkit {

/// One non-blank, non-comment line of a corpus file.
struct CorpusEntry {
  std::size_t line = 0;
  std::string text;
};

/// One group expression per line; '#' starts a comment.
std::vector<CorpusEntry> read_corpus(std::istream& in);
std::vector<CorpusEntry> read_corpus_file(const std::filesystem::path& path);

// ---- lemma fuzzing -------------------------------------------------------

struct LemmaViolation {
  std::string lemma;      // "n1", "n2", "n3" or "pprime"
  std::string subgroup;   // generators in cycle notation
  std::string detail;
};

struct LemmaReport {
  std::string group;
  std::size_t samples = 0;
  std::size_t distinct_subgroups = 0;
  std::size_t checks = 0;
  std::vector<LemmaViolation> violations;
};

/// Checks the counting inequalities between G and one subgroup T:
///   n_1(G) <= n_1(T)|G:T|,
///   n_2(G) <= n_2(T)|G:T| + n_1(T)|G:T|/2,
///   n_3(G) <= n_3(T)|G:T| + n_1(T)|G:T|/3,
///   |Irr_p'(G)| <= |G:T| |Irr_p'(T)| for every prime p dividing |G|.
/// Appends failures to `report` and bumps its check counter.
void check_lemmas(const CharTable& g, const CharTable& t, LemmaReport& report);

/// Draws `trials` subgroups generated by 1 to 3 random elements (mt19937_64
/// seeded with `seed`), skips repeats of the same order and class fingerprint,
/// and runs check_lemmas on each distinct one.
LemmaReport fuzz_lemmas(const PermGroup& g, std::size_t trials, std::uint64_t seed, std::string label = "");

nlohmann::ordered_json to_json(const LemmaReport& r);

// ---- central product -----------------------------------------------------

struct Clause {
  std::string id;
  std::string statement;
  bool holds = false;
};

struct CentralProductReport {
  std::string group;
  BigInt order = 0;
  std::map<std::uint64_t, std::uint64_t> n_d;
  std::map<std::uint64_t, std::uint64_t> n_d_quotient;  // of C/Z
  bool hypotheses_hold = false;
  std::vector<Clause> hypotheses;
  std::vector<Clause> clauses;
  std::size_t violations = 0;
};

/// Builds G = (SL(2,5) x C_2m) / <(-I, c^m)> with C the image of C_2m and Z
/// the image of the centre of SL(2,5), then checks the degree-count identities:
///   n_2 = 2 n_1 + n_2(C/Z), n_3 >= 2 n_1, n_4 >= 2 n_1, n_5 >= n_1,
///   n_6 >= n_1, n_8 >= n_2(C/Z).
/// A failing clause counts as a violation only when the hypotheses hold.
CentralProductReport check_central_product(std::size_t m = 2);

nlohmann::ordered_json to_json(const CentralProductReport& r);

// ---- sharpness -----------------------------------------------------------

enum class ScanMode { Solvability, PNilpotency };

struct ScanResult {
  std::uint64_t p = 0;
  ScanMode mode = ScanMode::Solvability;
  std::size_t considered = 0;
  std::size_t failing = 0;
  std::optional<Rational> minimum;
  std::vector<std::string> witnesses;  // groups attaining the minimum, in corpus order
};

/// Minimum of acd_{p'} over the groups that are nonsolvable (Solvability) or
/// lack a normal p-complement (PNilpotency).
ScanResult sharpness_scan(const std::vector<std::pair<std::string, PermGroup>>& corpus, std::uint64_t p,
                          ScanMode mode);

nlohmann::ordered_json to_json(const ScanResult& r);

// ---- corpus verification -------------------------------------------------

struct CorpusOptions {
  std::optional<std::uint64_t> max_order;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  /// Lemma fuzzing samples per group; 0 disables fuzzing.
  std::size_t fuzz_trials = 0;
  bool timing = false;
  /// Overrides default_primes when nonempty.
  std::vector<std::uint64_t> primes;
};

struct SharpnessWitness {
  std::string group;
  std::string theorem;
  std::uint64_t p = 0;
  Rational value;
};

struct CorpusSummary {
  std::vector<VerdictReport> reports;
  std::vector<LemmaReport> fuzz;
  std::vector<std::string> warnings;
  std::vector<std::string> skipped;
  std::size_t violations = 0;
  std::size_t table_failures = 0;
  std::vector<SharpnessWitness> sharpness;
  /// Groups whose acd_{p'} equals (2p+2)/(p+3), as "group@p".
  std::vector<std::string> conjecture_equalities;

  bool ok() const { return violations == 0 && table_failures == 0; }
};

/// Parses, builds and checks each entry; groups run on `jobs` threads and are
/// merged in corpus order, so equal inputs give identical summaries.
/// Unparseable or unbuildable entries become warnings.
CorpusSummary verify_corpus(const std::vector<CorpusEntry>& corpus, const CorpusOptions& options = {});

nlohmann::ordered_json to_json(const CorpusSummary& s);

}  // namespace acdkit

#endif  // ACDKIT_HARNESS_HPP

#ifndef ACDKIT_THEOREMS_HPP
#define ACDKIT_THEOREMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "acdkit/char_table.hpp"
#include "acdkit/invariants.hpp"

namespace acdkit {

/// Which average a catalog entry constrains. The *Pprime kinds average over
/// p'-degrees; the others average over every degree.
enum class Quantity { AcdPprime, AcdQPprime, AcdQpPprime, AcdRPprime, AcdQ, AcdQp, AcdR };
enum class Relation { Less, LessEqual, Equal };
enum class Conclusion { NormalPComplement, Solvable };

struct TheoremEntry {
  std::string id;
  Quantity quantity;
  Relation relation;
  Rational threshold;
  Conclusion conclusion;
  /// Nonzero: the entry is stated for this prime only.
  std::uint64_t fixed_prime = 0;
  /// For entries with a free prime: p must exceed this value.
  std::uint64_t prime_above = 0;
  std::string statement;

  bool applies_to(std::uint64_t p) const;
};

const std::vector<TheoremEntry>& theorem_catalog();
const TheoremEntry& catalog_entry(const std::string& id);

std::string quantity_name(Quantity q);
std::string relation_symbol(Relation r);

enum class Verdict { Consistent, Vacuous, Violation };
std::string verdict_name(Verdict v);

struct TheoremResult {
  std::string id;
  std::uint64_t p = 0;
  Rational value;
  bool hypothesis = false;
  bool conclusion = false;
  Verdict verdict = Verdict::Vacuous;
  /// value == threshold for a strict or non-strict inequality.
  bool sharp = false;
};

/// Informational comparison with (2p+2)/(p+3) for odd p.
struct ConjectureProbe {
  Rational bound;
  int comparison = 0;  // sign of acd_{p'} - bound
  /// acd_{p'} below the bound while G lacks a normal p-complement.
  bool counterexample = false;
};

struct PrimeRecord {
  std::uint64_t p = 0;
  Rational acd_all, acd_Q, acd_Qp, acd_R;  // over p'-degrees
  Rational acd_Qp_any_degree;
  std::map<std::uint64_t, std::uint64_t> n_d;  // over Irr_{p'}(G)
  bool has_normal_p_complement = false;
  std::optional<ConjectureProbe> conjecture;
  /// Per row, the smallest of Q, R, Qp containing its values ("C" if none).
  std::vector<std::string> row_fields;
};

struct VerdictReport {
  std::string group;
  BigInt order = 1;
  bool table_ok = true;
  std::string table_failure;
  bool is_solvable = true;
  Rational acd, acd_Q, acd_R;  // over all degrees
  std::map<std::uint64_t, std::uint64_t> n_d;
  std::vector<PrimeRecord> primes;
  std::vector<TheoremResult> results;
  std::size_t violations = 0;
  std::optional<double> seconds;

  std::vector<const TheoremResult*> sharp_results() const;
};

/// Prime divisors of order, then the smallest prime above 5 not dividing it.
std::vector<std::uint64_t> default_primes(std::uint64_t order);

/// Evaluates every catalog entry that applies to one of `primes` (default_primes
/// when empty). Failures are recorded in the report, never thrown.
VerdictReport check_group(const CharTable& t, std::vector<std::uint64_t> primes = {}, std::string label = "");
VerdictReport check_group(const PermGroup& g, std::vector<std::uint64_t> primes = {}, std::string label = "");

nlohmann::ordered_json to_json(const VerdictReport& r);

}  // namespace acdkit

#endif  // ACDKIT_THEOREMS_HPP

#include "acdkit/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "acdkit/number_theory.hpp"

namespace acdkit {

bool TheoremEntry::applies_to(std::uint64_t p) const {
  if (fixed_prime != 0) return p == fixed_prime;
  return p > prime_above;
}

const std::vector<TheoremEntry>& theorem_catalog() {
  using Q = Quantity;
  using R = Relation;
  using C = Conclusion;
  static const std::vector<TheoremEntry> catalog = {
      {"T1a", Q::AcdPprime, R::Less, Rational(3, 2), C::NormalPComplement, 2, 0,
       "acd_{2'} < 3/2 implies a normal 2-complement"},
      {"T1b", Q::AcdPprime, R::Less, Rational(4, 3), C::NormalPComplement, 0, 2,
       "p odd: acd_{p'} < 4/3 implies a normal p-complement"},
      {"T2i", Q::AcdPprime, R::Less, Rational(3), C::Solvable, 2, 0, "acd_{2'} < 3 implies solvable"},
      {"T2ii", Q::AcdPprime, R::Less, Rational(3), C::Solvable, 3, 0, "acd_{3'} < 3 implies solvable"},
      {"T2iii", Q::AcdPprime, R::Less, Rational(11, 4), C::Solvable, 5, 0, "acd_{5'} < 11/4 implies solvable"},
      {"T2iv", Q::AcdPprime, R::Less, Rational(16, 5), C::Solvable, 0, 5, "p > 5: acd_{p'} < 16/5 implies solvable"},
      {"T3a", Q::AcdQPprime, R::Less, Rational(3, 2), C::NormalPComplement, 2, 0,
       "acd_{Q,2'} < 3/2 implies a normal 2-complement"},
      {"T3b", Q::AcdQpPprime, R::Less, Rational(4, 3), C::NormalPComplement, 0, 2,
       "p odd: acd_{Qp,p'} < 4/3 implies a normal p-complement"},
      {"C4i", Q::AcdQ, R::Less, Rational(3, 2), C::NormalPComplement, 2, 0,
       "acd_Q < 3/2 implies a normal 2-complement"},
      {"C4ii", Q::AcdQp, R::Less, Rational(4, 3), C::NormalPComplement, 0, 2,
       "p odd: acd_{Qp} < 4/3 implies a normal p-complement"},
      {"C4iii", Q::AcdRPprime, R::Less, Rational(3, 2), C::NormalPComplement, 2, 0,
       "acd_{R,2'} < 3/2 implies a normal 2-complement"},
      {"C4iv", Q::AcdR, R::Less, Rational(3, 2), C::NormalPComplement, 2, 0,
       "acd_R < 3/2 implies a normal 2-complement"},
      {"T8i", Q::AcdQPprime, R::Less, Rational(3), C::Solvable, 2, 0, "acd_{Q,2'} < 3 implies solvable"},
      {"T8ii", Q::AcdQpPprime, R::LessEqual, Rational(2), C::Solvable, 0, 2,
       "p > 2: acd_{Qp,p'} <= 2 implies solvable"},
      {"T8iii", Q::AcdQPprime, R::LessEqual, Rational(2), C::Solvable, 0, 3,
       "p > 3: acd_{Q,p'} <= 2 implies solvable"},
      {"THOMPSON", Q::AcdPprime, R::Equal, Rational(1), C::NormalPComplement, 0, 0,
       "acd_{p'} = 1 implies a normal p-complement"},
  };
  return catalog;
}

const TheoremEntry& catalog_entry(const std::string& id) {
  for (const auto& e : theorem_catalog()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("no catalog entry '" + id + "'");
}

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::AcdPprime:
      return "acd_p'";
    case Quantity::AcdQPprime:
      return "acd_Q,p'";
    case Quantity::AcdQpPprime:
      return "acd_Qp,p'";
    case Quantity::AcdRPprime:
      return "acd_R,p'";
    case Quantity::AcdQ:
      return "acd_Q";
    case Quantity::AcdQp:
      return "acd_Qp";
    case Quantity::AcdR:
      return "acd_R";
  }
  return "?";
}

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Less:
      return "<";
    case Relation::LessEqual:
      return "<=";
    case Relation::Equal:
      return "=";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::Vacuous:
      return "vacuous";
    case Verdict::Violation:
      return "VIOLATION";
  }
  return "?";
}

std::vector<const TheoremResult*> VerdictReport::sharp_results() const {
  std::vector<const TheoremResult*> out;
  for (const auto& r : results) {
    if (r.sharp) out.push_back(&r);
  }
  return out;
}

std::vector<std::uint64_t> default_primes(std::uint64_t order) {
  std::vector<std::uint64_t> primes = prime_divisors(order);
  std::uint64_t p = 7;
  while (order % p == 0) p = next_prime(p);
  primes.push_back(p);
  return primes;
}

namespace {

Rational evaluate(const DegreeProfile& profile, Quantity q, std::uint64_t p) {
  switch (q) {
    case Quantity::AcdPprime:
      return profile.select(p, FieldSpec::all()).average;
    case Quantity::AcdQPprime:
      return profile.select(p, FieldSpec::rational()).average;
    case Quantity::AcdQpPprime:
      return profile.select(p, FieldSpec::cyclotomic(p)).average;
    case Quantity::AcdRPprime:
      return profile.select(p, FieldSpec::real()).average;
    case Quantity::AcdQ:
      return profile.select(0, FieldSpec::rational()).average;
    case Quantity::AcdQp:
      return profile.select(0, FieldSpec::cyclotomic(p)).average;
    case Quantity::AcdR:
      return profile.select(0, FieldSpec::real()).average;
  }
  return 0;
}

bool holds(Relation r, const Rational& value, const Rational& threshold) {
  switch (r) {
    case Relation::Less:
      return value < threshold;
    case Relation::LessEqual:
      return value <= threshold;
    case Relation::Equal:
      return value == threshold;
  }
  return false;
}

nlohmann::ordered_json counts_json(const std::map<std::uint64_t, std::uint64_t>& counts) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& [d, n] : counts) out[std::to_string(d)] = n;
  return out;
}

}  // namespace

VerdictReport check_group(const CharTable& t, std::vector<std::uint64_t> primes, std::string label) {
  const PermGroup& g = t.group();
  if (primes.empty()) primes = default_primes(t.group_order());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  VerdictReport report;
  report.group = std::move(label);
  report.order = t.group_order();
  const OrthogonalityReport orth = verify_orthogonality(t);
  report.table_ok = orth.ok;
  report.table_failure = orth.failure;
  report.is_solvable = is_solvable(g);

  const DegreeProfile profile(t);
  report.acd = profile.select(0, FieldSpec::all()).average;
  report.acd_Q = profile.select(0, FieldSpec::rational()).average;
  report.acd_R = profile.select(0, FieldSpec::real()).average;
  report.n_d = profile.select(0, FieldSpec::all()).counts;

  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    PrimeRecord rec;
    rec.p = p;
    rec.acd_all = profile.select(p, FieldSpec::all()).average;
    rec.acd_Q = profile.select(p, FieldSpec::rational()).average;
    rec.acd_Qp = profile.select(p, FieldSpec::cyclotomic(p)).average;
    rec.acd_R = profile.select(p, FieldSpec::real()).average;
    rec.acd_Qp_any_degree = profile.select(0, FieldSpec::cyclotomic(p)).average;
    rec.n_d = profile.select(p, FieldSpec::all()).counts;
    rec.has_normal_p_complement = has_normal_p_complement(g, p);
    for (std::size_t row = 0; row < t.size(); ++row) rec.row_fields.push_back(minimal_field_name(t, row, p));
    if (p > 2) {
      ConjectureProbe probe;
      probe.bound = Rational(2 * p + 2, p + 3);
      probe.comparison = rec.acd_all < probe.bound ? -1 : (rec.acd_all == probe.bound ? 0 : 1);
      probe.counterexample = probe.comparison < 0 && !rec.has_normal_p_complement;
      rec.conjecture = probe;
    }

    for (const auto& entry : theorem_catalog()) {
      if (!entry.applies_to(p)) continue;
      TheoremResult res;
      res.id = entry.id;
      res.p = p;
      res.value = evaluate(profile, entry.quantity, p);
      res.hypothesis = holds(entry.relation, res.value, entry.threshold);
      res.conclusion = entry.conclusion == Conclusion::Solvable ? report.is_solvable : rec.has_normal_p_complement;
      res.verdict = !res.hypothesis ? Verdict::Vacuous : (res.conclusion ? Verdict::Consistent : Verdict::Violation);
      res.sharp = entry.relation != Relation::Equal && res.value == entry.threshold;
      if (res.verdict == Verdict::Violation) ++report.violations;
      report.results.push_back(std::move(res));
    }
    report.primes.push_back(std::move(rec));
  }
  return report;
}

VerdictReport check_group(const PermGroup& g, std::vector<std::uint64_t> primes, std::string label) {
  return check_group(compute_table(g), std::move(primes), std::move(label));
}

nlohmann::ordered_json to_json(const VerdictReport& r) {
  nlohmann::ordered_json doc;
  doc["group"] = r.group;
  doc["order"] = r.order.str();
  doc["table_ok"] = r.table_ok;
  if (!r.table_ok) doc["table_failure"] = r.table_failure;
  doc["is_solvable"] = r.is_solvable;
  doc["acd"] = to_string(r.acd);
  doc["acd_Q"] = to_string(r.acd_Q);
  doc["acd_R"] = to_string(r.acd_R);
  doc["n_d"] = counts_json(r.n_d);
  auto primes = nlohmann::ordered_json::array();
  for (const auto& rec : r.primes) {
    nlohmann::ordered_json pj;
    pj["p"] = rec.p;
    pj["acd_all"] = to_string(rec.acd_all);
    pj["acd_Q"] = to_string(rec.acd_Q);
    pj["acd_Qp"] = to_string(rec.acd_Qp);
    pj["acd_R"] = to_string(rec.acd_R);
    pj["acd_Qp_any_degree"] = to_string(rec.acd_Qp_any_degree);
    pj["n_d"] = counts_json(rec.n_d);
    pj["has_normal_p_complement"] = rec.has_normal_p_complement;
    pj["is_solvable"] = r.is_solvable;
    pj["row_fields"] = rec.row_fields;
    if (rec.conjecture) {
      pj["conjecture_bound"] = to_string(rec.conjecture->bound);
      pj["conjecture_comparison"] =
          rec.conjecture->comparison < 0 ? "below" : (rec.conjecture->comparison == 0 ? "equal" : "above");
      pj["conjecture_counterexample"] = rec.conjecture->counterexample;
    }
    primes.push_back(std::move(pj));
  }
  doc["primes"] = std::move(primes);
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& res : r.results) {
    const TheoremEntry& entry = catalog_entry(res.id);
    nlohmann::ordered_json vj;
    vj["id"] = res.id;
    vj["p"] = res.p;
    vj["quantity"] = quantity_name(entry.quantity);
    vj["value"] = to_string(res.value);
    vj["relation"] = relation_symbol(entry.relation);
    vj["threshold"] = to_string(entry.threshold);
    vj["verdict"] = verdict_name(res.verdict);
    vj["sharp"] = res.sharp;
    verdicts.push_back(std::move(vj));
  }
  doc["verdicts"] = std::move(verdicts);
  doc["violations"] = r.violations;
  if (r.seconds) doc["seconds"] = *r.seconds;
  return doc;
}

}  // namespace acdkit

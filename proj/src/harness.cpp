#include "acdkit/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include "acdkit/error.hpp"
#include "acdkit/group_expr.hpp"
#include "acdkit/named_groups.hpp"
#include "acdkit/number_theory.hpp"

namespace acdkit {

std::vector<CorpusEntry> read_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back({n, line.substr(first, last - first + 1)});
  }
  return out;
}

std::vector<CorpusEntry> read_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path.string());
  return read_corpus(in);
}

namespace {

std::string generators_string(const PermGroup& g) {
  if (g.generators().empty()) return "()";
  std::string out;
  for (const auto& x : g.generators()) {
    if (!out.empty()) out += ", ";
    out += to_cycle_string(x);
  }
  return out;
}

nlohmann::ordered_json counts_json(const std::map<std::uint64_t, std::uint64_t>& counts) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& [d, n] : counts) out[std::to_string(d)] = n;
  return out;
}

std::uint64_t count_of(const std::map<std::uint64_t, std::uint64_t>& counts, std::uint64_t d) {
  const auto it = counts.find(d);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace

void check_lemmas(const CharTable& g, const CharTable& t, LemmaReport& report) {
  const std::uint64_t index = g.group_order() / t.group_order();
  const auto ng = summarize(g, field_rows(g, FieldSpec::all())).counts;
  const auto nt = summarize(t, field_rows(t, FieldSpec::all())).counts;
  const std::uint64_t g1 = count_of(ng, 1), g2 = count_of(ng, 2), g3 = count_of(ng, 3);
  const std::uint64_t t1 = count_of(nt, 1), t2 = count_of(nt, 2), t3 = count_of(nt, 3);
  const std::string sub = generators_string(t.group());
  auto record = [&](bool ok, std::string lemma, std::string detail) {
    ++report.checks;
    if (!ok) report.violations.push_back({std::move(lemma), sub, std::move(detail)});
  };
  const auto s = [](std::uint64_t v) { return std::to_string(v); };
  // The halves and thirds are cleared by scaling both sides.
  record(g1 <= t1 * index, "n1", "n1(G)=" + s(g1) + " > n1(T)|G:T|=" + s(t1 * index));
  record(2 * g2 <= 2 * t2 * index + t1 * index, "n2",
         "2 n2(G)=" + s(2 * g2) + " > 2 n2(T)|G:T| + n1(T)|G:T|=" + s(2 * t2 * index + t1 * index));
  record(3 * g3 <= 3 * t3 * index + t1 * index, "n3",
         "3 n3(G)=" + s(3 * g3) + " > 3 n3(T)|G:T| + n1(T)|G:T|=" + s(3 * t3 * index + t1 * index));
  for (std::uint64_t p : prime_divisors(g.group_order())) {
    const std::uint64_t lhs = irr_pprime(g, p).size();
    const std::uint64_t rhs = index * irr_pprime(t, p).size();
    record(lhs <= rhs, "pprime", "p=" + s(p) + ": |Irr_p'(G)|=" + s(lhs) + " > |G:T||Irr_p'(T)|=" + s(rhs));
  }
}

LemmaReport fuzz_lemmas(const PermGroup& g, std::size_t trials, std::uint64_t seed, std::string label) {
  LemmaReport report;
  report.group = std::move(label);
  const CharTable table = compute_table(g);
  const ElementStore& store = g.elements();
  const ClassData& cd = g.classes();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, store.size() - 1);
  std::uniform_int_distribution<int> how_many(1, 3);
  std::set<std::pair<std::uint64_t, std::vector<std::uint64_t>>> seen;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++report.samples;
    std::vector<Permutation> gens;
    const int k = how_many(rng);
    for (int i = 0; i < k; ++i) gens.push_back(store[pick(rng)]);
    PermGroup sub(g.degree(), std::move(gens));
    // Fingerprint: how often each (element order, class of G) occurs in T.
    std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint64_t> tally;
    for (const auto& x : sub.elements().elements()) ++tally[{x.order(), cd.class_of[store.index_of(x)]}];
    std::vector<std::uint64_t> fingerprint;
    for (const auto& [key, n] : tally) {
      fingerprint.insert(fingerprint.end(), {key.first, key.second, n});
    }
    if (!seen.emplace(sub.small_order(), std::move(fingerprint)).second) continue;
    ++report.distinct_subgroups;
    check_lemmas(table, compute_table(sub), report);
  }
  return report;
}

nlohmann::ordered_json to_json(const LemmaReport& r) {
  nlohmann::ordered_json doc;
  doc["group"] = r.group;
  doc["samples"] = r.samples;
  doc["distinct_subgroups"] = r.distinct_subgroups;
  doc["checks"] = r.checks;
  auto v = nlohmann::ordered_json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"lemma", x.lemma}, {"subgroup", x.subgroup}, {"detail", x.detail}});
  }
  doc["violations"] = std::move(v);
  return doc;
}

CentralProductReport check_central_product(std::size_t m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  CentralProductReport report;
  report.group = "CentralProd(SL(2,5), C(" + std::to_string(2 * m) + "))";

  const PermGroup l = special_linear(5);
  const PermGroup c = cyclic(2 * m);
  const PermGroup product = direct_product(l, c);
  const std::size_t deg = product.degree();
  const Permutation neg = special_linear_negation(5).shifted(0, deg);
  const Permutation cgen = c.generators().front().shifted(l.degree(), deg);
  const QuotientMap map(product, PermGroup(deg, {neg * cgen.pow(static_cast<long long>(m))}));
  const PermGroup& g = map.quotient();

  std::vector<Permutation> lgens;
  for (const auto& x : l.generators()) lgens.push_back(map.image(x.shifted(0, deg)));
  const PermGroup limg(g.degree(), std::move(lgens));
  const PermGroup cimg(g.degree(), {map.image(cgen)});
  const PermGroup zimg(g.degree(), {map.image(neg)});

  const CharTable t = compute_table(g);
  report.order = t.group_order();
  report.n_d = summarize(t, field_rows(t, FieldSpec::all())).counts;
  const CharTable tq = compute_table(quotient_by(cimg, zimg));
  report.n_d_quotient = summarize(tq, field_rows(tq, FieldSpec::all())).counts;

  std::uint64_t shared = 0;
  for (const auto& x : cimg.elements().elements()) shared += limg.contains(x) ? 1 : 0;
  report.hypotheses = {
      {"central", "C is central in G", is_central_subgroup(cimg, g)},
      {"amalgam", "Z = Z(L) = L meet C has order 2", zimg.order() == 2 && shared == 2 && is_central_subgroup(zimg, limg)},
      {"derived", "L is contained in G'", is_subgroup(limg, derived_subgroup(g))},
      {"faithful2", "some degree-2 character does not contain Z in its kernel", n_d_relative(t, zimg, 2) > 0},
  };
  report.hypotheses_hold = true;
  for (const auto& h : report.hypotheses) report.hypotheses_hold = report.hypotheses_hold && h.holds;

  const auto n = [&](std::uint64_t d) { return count_of(report.n_d, d); };
  const std::uint64_t n1 = n(1);
  const std::uint64_t q2 = count_of(report.n_d_quotient, 2);
  report.clauses = {
      {"i", "n2(G) = 2 n1(G) + n2(C/Z)", n(2) == 2 * n1 + q2},
      {"ii", "n3(G) >= 2 n1(G)", n(3) >= 2 * n1},
      {"iii", "n4(G) >= 2 n1(G)", n(4) >= 2 * n1},
      {"iv", "n5(G) >= n1(G)", n(5) >= n1},
      {"v", "n6(G) >= n1(G)", n(6) >= n1},
      {"vi", "n8(G) >= n2(C/Z)", n(8) >= q2},
  };
  if (report.hypotheses_hold) {
    for (const auto& cl : report.clauses) report.violations += cl.holds ? 0 : 1;
  }
  return report;
}

nlohmann::ordered_json to_json(const CentralProductReport& r) {
  nlohmann::ordered_json doc;
  doc["group"] = r.group;
  doc["order"] = r.order.str();
  doc["n_d"] = counts_json(r.n_d);
  doc["n_d_C_mod_Z"] = counts_json(r.n_d_quotient);
  auto clauses_json = [](const std::vector<Clause>& cs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : cs) arr.push_back({{"id", c.id}, {"statement", c.statement}, {"holds", c.holds}});
    return arr;
  };
  doc["hypotheses_hold"] = r.hypotheses_hold;
  doc["hypotheses"] = clauses_json(r.hypotheses);
  doc["clauses"] = clauses_json(r.clauses);
  doc["violations"] = r.violations;
  return doc;
}

ScanResult sharpness_scan(const std::vector<std::pair<std::string, PermGroup>>& corpus, std::uint64_t p,
                          ScanMode mode) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  ScanResult result;
  result.p = p;
  result.mode = mode;
  for (const auto& [name, g] : corpus) {
    ++result.considered;
    const bool fails = mode == ScanMode::Solvability ? !is_solvable(g) : !has_normal_p_complement(g, p);
    if (!fails) continue;
    ++result.failing;
    const Rational value = acd_pprime(compute_table(g), p);
    if (!result.minimum || value < *result.minimum) {
      result.minimum = value;
      result.witnesses.clear();
    }
    if (value == *result.minimum) result.witnesses.push_back(name);
  }
  return result;
}

nlohmann::ordered_json to_json(const ScanResult& r) {
  nlohmann::ordered_json doc;
  doc["p"] = r.p;
  doc["mode"] = r.mode == ScanMode::Solvability ? "solvability" : "pnilpotency";
  doc["considered"] = r.considered;
  doc["failing"] = r.failing;
  if (r.minimum) {
    doc["minimum"] = to_string(*r.minimum);
    doc["witnesses"] = r.witnesses;
  } else {
    doc["minimum"] = nullptr;
    doc["witnesses"] = nlohmann::ordered_json::array();
    doc["note"] = "no witnesses";
  }
  return doc;
}

namespace {

struct Slot {
  std::optional<VerdictReport> report;
  std::optional<LemmaReport> fuzz;
  std::string warning;
  std::string skipped;
  bool internal_failure = false;
};

Slot process(const CorpusEntry& entry, std::size_t index, const CorpusOptions& options) {
  Slot slot;
  const std::string where = "line " + std::to_string(entry.line) + ": ";
  try {
    const GroupSpec spec = parse_group_expr(entry.text);
    const std::string label = render(spec);
    const PermGroup g = construct(spec);
    if (options.max_order && g.order() > *options.max_order) {
      slot.skipped = label + " (order " + g.order().str() + " exceeds " + std::to_string(*options.max_order) + ")";
      return slot;
    }
    const auto start = std::chrono::steady_clock::now();
    const CharTable t = compute_table(g);
    slot.report = check_group(t, options.primes, label);
    if (options.timing) {
      slot.report->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (options.fuzz_trials > 0) slot.fuzz = fuzz_lemmas(g, options.fuzz_trials, options.seed + index, label);
  } catch (const ParseError& e) {
    slot.warning = where + "parse error: " + e.what();
  } catch (const InternalError& e) {
    slot.warning = where + "internal error: " + e.what();
    slot.internal_failure = true;
  } catch (const std::exception& e) {
    slot.warning = where + e.what();
  }
  return slot;
}

}  // namespace

CorpusSummary verify_corpus(const std::vector<CorpusEntry>& corpus, const CorpusOptions& options) {
  std::vector<Slot> slots(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) slots[i] = process(corpus[i], i, options);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, corpus.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CorpusSummary summary;
  for (auto& slot : slots) {
    if (!slot.warning.empty()) summary.warnings.push_back(slot.warning);
    if (slot.internal_failure) ++summary.table_failures;
    if (!slot.skipped.empty()) summary.skipped.push_back(slot.skipped);
    if (slot.fuzz) {
      summary.violations += slot.fuzz->violations.size();
      summary.fuzz.push_back(std::move(*slot.fuzz));
    }
    if (!slot.report) continue;
    const VerdictReport& r = *slot.report;
    summary.violations += r.violations;
    summary.table_failures += r.table_ok ? 0 : 1;
    for (const TheoremResult* res : r.sharp_results()) summary.sharpness.push_back({r.group, res->id, res->p, res->value});
    for (const auto& rec : r.primes) {
      if (rec.conjecture && rec.conjecture->comparison == 0) {
        summary.conjecture_equalities.push_back(r.group + "@" + std::to_string(rec.p));
      }
    }
    summary.reports.push_back(std::move(*slot.report));
  }
  return summary;
}

nlohmann::ordered_json to_json(const CorpusSummary& s) {
  nlohmann::ordered_json doc;
  doc["groups_checked"] = s.reports.size();
  doc["violations"] = s.violations;
  doc["table_failures"] = s.table_failures;
  doc["warnings"] = s.warnings;
  doc["skipped"] = s.skipped;
  auto sharp = nlohmann::ordered_json::array();
  for (const auto& w : s.sharpness) {
    sharp.push_back({{"group", w.group}, {"theorem", w.theorem}, {"p", w.p}, {"value", to_string(w.value)}});
  }
  doc["sharpness_witnesses"] = std::move(sharp);
  doc["conjecture_equalities"] = s.conjecture_equalities;
  auto reports = nlohmann::ordered_json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  doc["reports"] = std::move(reports);
  if (!s.fuzz.empty()) {
    auto fuzz = nlohmann::ordered_json::array();
    for (const auto& f : s.fuzz) fuzz.push_back(to_json(f));
    doc["fuzz"] = std::move(fuzz);
  }
  return doc;
}

}  // namespace acdkit

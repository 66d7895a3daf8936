#include "acdkit/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "acdkit/error.hpp"

namespace acdkit {

ElementStore ElementStore::generate(std::size_t degree, const std::vector<Permutation>& generators) {
  ElementStore store;
  store.elements_.push_back(Permutation::identity(degree));
  store.index_.emplace(store.elements_.back(), 0);
  for (std::size_t i = 0; i < store.elements_.size(); ++i) {
    for (const auto& s : generators) {
      Permutation y = store.elements_[i] * s;
      if (store.index_.contains(y)) continue;
      store.index_.emplace(y, static_cast<std::uint32_t>(store.elements_.size()));
      store.elements_.push_back(std::move(y));
    }
  }
  return store;
}

std::optional<std::uint32_t> ElementStore::find(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementStore::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw InternalError("element not in group: " + to_cycle_string(g));
  return it->second;
}

std::uint32_t ClassData::power(std::size_t j, long long k) const {
  const auto m = static_cast<long long>(element_orders[j]);
  long long r = k % m;
  if (r < 0) r += m;
  return power_map[j][static_cast<std::size_t>(r)];
}

struct PermGroup::Cache {
  std::once_flag chain_once;
  std::optional<StabChain> chain;
  std::once_flag elements_once;
  std::optional<ElementStore> elements;
  std::once_flag classes_once;
  std::optional<ClassData> classes;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw Error("generator " + to_cycle_string(g) + " has degree " + std::to_string(g.degree()) +
                  ", expected " + std::to_string(degree_));
    }
  }
}

const StabChain& PermGroup::stab_chain() const {
  std::call_once(cache_->chain_once, [this] { cache_->chain.emplace(degree_, generators_); });
  return *cache_->chain;
}

std::uint64_t PermGroup::small_order() const {
  const BigInt n = order();
  if (n > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw TooLargeError("group order " + n.str() + " exceeds machine range");
  }
  return n.convert_to<std::uint64_t>();
}

namespace {

ClassData build_classes(const PermGroup& g, const ElementStore& store) {
  const std::size_t n = store.size();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> raw_class(n, kUnset);
  struct Raw {
    std::vector<std::uint32_t> members;
    std::uint32_t rep;
    std::uint64_t order;
  };
  std::vector<Raw> raw;

  for (std::size_t start = 0; start < n; ++start) {
    if (raw_class[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(raw.size());
    Raw cls{{static_cast<std::uint32_t>(start)}, static_cast<std::uint32_t>(start), 0};
    raw_class[start] = id;
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      const Permutation& x = store[cls.members[k]];
      for (const auto& s : g.generators()) {
        const std::uint32_t y = store.index_of(x.conjugate_by(s));
        if (raw_class[y] == kUnset) {
          raw_class[y] = id;
          cls.members.push_back(y);
        }
      }
    }
    for (std::uint32_t m : cls.members) {
      if (store[m] < store[cls.rep]) cls.rep = m;
    }
    cls.order = store[cls.rep].order();
    raw.push_back(std::move(cls));
  }

  std::vector<std::uint32_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::forward_as_tuple(raw[a].order, raw[a].members.size(), store[raw[a].rep]) <
           std::forward_as_tuple(raw[b].order, raw[b].members.size(), store[raw[b].rep]);
  });
  std::vector<std::uint32_t> new_id(raw.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = i;

  ClassData cd;
  for (std::uint32_t old : perm) {
    cd.reps.push_back(store[raw[old].rep]);
    cd.sizes.push_back(raw[old].members.size());
    cd.element_orders.push_back(raw[old].order);
    cd.exponent = std::lcm(cd.exponent, raw[old].order);
  }
  cd.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) cd.class_of[i] = new_id[raw_class[i]];

  cd.power_map.resize(cd.reps.size());
  for (std::size_t j = 0; j < cd.reps.size(); ++j) {
    Permutation x = Permutation::identity(g.degree());
    for (std::uint64_t k = 0; k < cd.element_orders[j]; ++k) {
      cd.power_map[j].push_back(cd.class_of[store.index_of(x)]);
      x = x * cd.reps[j];
    }
  }
  return cd;
}

}  // namespace

const ElementStore& PermGroup::elements(std::size_t cap) const {
  const BigInt n = order();
  if (n > cap) {
    throw TooLargeError("group of order " + n.str() + " is too large for dense mode (cap " +
                        std::to_string(cap) + ")");
  }
  std::call_once(cache_->elements_once,
                 [this] { cache_->elements.emplace(ElementStore::generate(degree_, generators_)); });
  if (cache_->elements->size() != n) {
    throw InternalError("element enumeration found " + std::to_string(cache_->elements->size()) +
                        " elements, stabilizer chain says " + n.str());
  }
  return *cache_->elements;
}

const ClassData& PermGroup::classes(std::size_t cap) const {
  const ElementStore& store = elements(cap);
  std::call_once(cache_->classes_once, [&] { cache_->classes.emplace(build_classes(*this, store)); });
  return *cache_->classes;
}

const ElementStore& enumerate_elements(const PermGroup& g, std::size_t cap) { return g.elements(cap); }

const ClassData& conjugacy_classes(const PermGroup& g, std::size_t cap) { return g.classes(cap); }

bool is_subgroup(const PermGroup& sub, const PermGroup& g) {
  if (sub.degree() != g.degree()) return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

bool is_normal_subgroup(const PermGroup& n, const PermGroup& g) {
  if (!is_subgroup(n, g)) return false;
  for (const auto& x : n.generators()) {
    for (const auto& s : g.generators()) {
      if (!n.contains(x.conjugate_by(s))) return false;
    }
  }
  return true;
}

bool is_central_subgroup(const PermGroup& z, const PermGroup& g) {
  if (!is_subgroup(z, g)) return false;
  for (const auto& x : z.generators()) {
    for (const auto& s : g.generators()) {
      if (x * s != s * x) return false;
    }
  }
  return true;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (s.degree() != g.degree()) throw Error("seed degree does not match group degree");
    if (!s.is_identity()) gens.push_back(s);
  }
  auto chain = std::make_unique<StabChain>(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = gens[i].conjugate_by(s);
      if (!chain->contains(c)) {
        gens.push_back(std::move(c));
        chain = std::make_unique<StabChain>(g.degree(), gens);
      }
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> commutators;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure(g, commutators);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (!series.back().is_trivial()) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

PermGroup p_residual(const PermGroup& g, std::uint64_t p) {
  const ClassData& cd = g.classes();
  std::vector<Permutation> seeds;
  for (std::size_t j = 1; j < cd.count(); ++j) {
    if (cd.element_orders[j] % p != 0) seeds.push_back(cd.reps[j]);
  }
  return normal_closure(g, seeds);
}

bool has_normal_p_complement(const PermGroup& g, std::uint64_t p) {
  return p_residual(g, p).order() % p != 0;
}

QuotientMap::QuotientMap(const PermGroup& g, const PermGroup& n) : source_(g) {
  if (!is_subgroup(n, g)) throw Error("quotient subgroup is not contained in the group");
  if (!is_normal_subgroup(n, g)) throw Error("quotient subgroup is not normal");
  const ElementStore& store = g.elements();
  const ElementStore& sub = n.elements();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  coset_of_.assign(store.size(), kUnset);
  for (std::size_t x = 0; x < store.size(); ++x) {
    if (coset_of_[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(coset_reps_.size());
    coset_reps_.push_back(static_cast<std::uint32_t>(x));
    for (const auto& m : sub.elements()) coset_of_[store.index_of(m * store[x])] = c;
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(image(s));
  quotient_.emplace(coset_reps_.size(), std::move(gens));
}

Permutation QuotientMap::image(const Permutation& x) const {
  const ElementStore& store = source_.elements();
  std::vector<Point> images(coset_reps_.size());
  for (std::size_t c = 0; c < coset_reps_.size(); ++c) {
    images[c] = coset_of_[store.index_of(store[coset_reps_[c]] * x)];
  }
  return Permutation(std::move(images));
}

PermGroup quotient_by(const PermGroup& g, const PermGroup& n) { return QuotientMap(g, n).quotient(); }

}  // namespace acdkit

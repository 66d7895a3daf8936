#ifndef ACDKIT_PERM_GROUP_HPP
#define ACDKIT_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "acdkit/permutation.hpp"
#include "acdkit/stab_chain.hpp"

namespace acdkit {

inline constexpr std::size_t kDefaultEnumerationCap = 200000;

/// Full element list of a group with a reverse index. Element 0 is the identity;
/// the rest appear in breadth-first order over the generators, so the
/// numbering is stable across runs.
class ElementStore {
 public:
  /// Closure of the generators by breadth-first search from the identity.
  static ElementStore generate(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t size() const { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<std::uint32_t> find(const Permutation& g) const;
  /// Index of g; throws InternalError when g is not in the store.
  std::uint32_t index_of(const Permutation& g) const;

 private:
  ElementStore() = default;

  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

/// Conjugacy classes of a dense group.
///
/// Classes are ordered by (element order, class size, representative) and each
/// representative is the lexicographically least image array in its class, so
/// class 0 is always the identity.
struct ClassData {
  std::vector<Permutation> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> element_orders;
  /// class_of[i] is the class of element i of the group's ElementStore.
  std::vector<std::uint32_t> class_of;
  /// power_map[j][k] is the class of reps[j]^k for 0 <= k < element_orders[j].
  std::vector<std::vector<std::uint32_t>> power_map;
  std::uint64_t exponent = 1;

  std::size_t count() const { return reps.size(); }
  /// Class of reps[j]^k for any integer k.
  std::uint32_t power(std::size_t j, long long k) const;
  std::uint32_t inverse_class(std::size_t j) const { return power(j, -1); }
  std::uint64_t centralizer_order(std::size_t j, std::uint64_t group_order) const {
    return group_order / sizes[j];
  }
};

/// A finite group given by permutation generators on {0, ..., degree-1}.
///
/// Immutable. The stabilizer chain, element store and class data are
/// computed on first use and shared between copies; computing them is
/// thread-safe.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabChain& stab_chain() const;
  BigInt order() const { return stab_chain().order(); }
  /// Order as a machine integer; throws TooLargeError past 2^63.
  std::uint64_t small_order() const;
  bool contains(const Permutation& g) const { return stab_chain().contains(g); }
  bool is_trivial() const { return order() == 1; }

  /// Dense element store. Throws TooLargeError when the order exceeds cap.
  const ElementStore& elements(std::size_t cap = kDefaultEnumerationCap) const;
  const ClassData& classes(std::size_t cap = kDefaultEnumerationCap) const;

 private:
  struct Cache;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Same as G.elements(cap); the error message names the cap.
const ElementStore& enumerate_elements(const PermGroup& g, std::size_t cap = kDefaultEnumerationCap);
const ClassData& conjugacy_classes(const PermGroup& g, std::size_t cap = kDefaultEnumerationCap);

bool is_subgroup(const PermGroup& sub, const PermGroup& g);
bool is_normal_subgroup(const PermGroup& n, const PermGroup& g);
/// Every generator of z commutes with every generator of g, and z <= g.
bool is_central_subgroup(const PermGroup& z, const PermGroup& g);
bool is_abelian(const PermGroup& g);

/// Smallest normal subgroup of g containing the seeds.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds);
PermGroup derived_subgroup(const PermGroup& g);
/// G = G0 > G1 > ... ending at the first term equal to its own derived subgroup.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// O^p(G): normal closure of the class representatives of p'-order.
PermGroup p_residual(const PermGroup& g, std::uint64_t p);
bool has_normal_p_complement(const PermGroup& g, std::uint64_t p);

/// Action of a dense group on the cosets of a normal subgroup.
class QuotientMap {
 public:
  /// Throws Error when n is not a normal subgroup of g.
  QuotientMap(const PermGroup& g, const PermGroup& n);

  std::size_t index() const { return coset_reps_.size(); }
  /// Image in the quotient of an element of the source group.
  Permutation image(const Permutation& x) const;
  const PermGroup& quotient() const { return *quotient_; }

 private:
  PermGroup source_;
  std::vector<std::uint32_t> coset_of_;  // per element of source_
  std::vector<std::uint32_t> coset_reps_;
  std::optional<PermGroup> quotient_;
};

/// Faithful permutation image of g/n acting on the cosets of n.
PermGroup quotient_by(const PermGroup& g, const PermGroup& n);

}  // namespace acdkit

#endif  // ACDKIT_PERM_GROUP_HPP

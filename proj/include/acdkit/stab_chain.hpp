#ifndef ACDKIT_STAB_CHAIN_HPP
#define ACDKIT_STAB_CHAIN_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acdkit/permutation.hpp"

namespace acdkit {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Supports exact order and membership without enumerating the group.
class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const { return degree_; }
  BigInt order() const;
  bool contains(const Permutation& g) const;
  const std::vector<Point>& base() const { return base_; }
  /// Orbit lengths of the basic stabilizers; their product is the order.
  std::vector<std::size_t> basic_orbit_lengths() const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    // transversal[b] maps base_point to b
    std::vector<std::optional<Permutation>> transversal;
  };

  // Residue of g after sifting from level `from`, and the level where it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void rebuild_orbit(Level& level) const;
  void add_base_point_for(const Permutation& g);

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

}  // namespace acdkit

#endif  // ACDKIT_STAB_CHAIN_HPP

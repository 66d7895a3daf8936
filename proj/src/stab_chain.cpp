#include "acdkit/stab_chain.hpp"

#include <algorithm>

namespace acdkit {

namespace {

bool fixes_all(const Permutation& g, const std::vector<Point>& points, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (g[points[i]] != points[i]) return false;
  }
  return true;
}

Point first_moved_point(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g[i] != i) return static_cast<Point>(i);
  }
  return 0;
}

}  // namespace

StabChain::StabChain(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  for (const auto& g : gens) {
    if (fixes_all(g, base_, base_.size())) add_base_point_for(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens) {
      if (fixes_all(g, base_, l)) levels_[l].gens.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  // Deterministic Schreier-Sims: every Schreier generator of level i must
  // sift to the identity through levels i+1.. before we move up.
  long long i = static_cast<long long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& level = levels_[i];
    const std::vector<Point> orbit = level.orbit;
    const std::size_t ngens = level.gens.size();
    for (Point b : orbit) {
      for (std::size_t s = 0; s < ngens && !restarted; ++s) {
        const Permutation& gen = levels_[i].gens[s];
        const Point image = gen[b];
        Permutation schreier = *levels_[i].transversal[b] * gen * levels_[i].transversal[image]->inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        if (stop == levels_.size()) add_base_point_for(residue);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<long long>(stop);
        restarted = true;
      }
      if (restarted) break;
    }
    if (!restarted) --i;
  }
}

void StabChain::add_base_point_for(const Permutation& g) {
  Level level;
  level.base_point = first_moved_point(g);
  base_.push_back(level.base_point);
  levels_.push_back(std::move(level));
}

void StabChain::rebuild_orbit(Level& level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.orbit.push_back(level.base_point);
  level.transversal[level.base_point] = Permutation::identity(degree_);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point b = level.orbit[k];
    for (const auto& s : level.gens) {
      const Point c = s[b];
      if (!level.transversal[c]) {
        level.transversal[c] = *level.transversal[b] * s;
        level.orbit.push_back(c);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Point b = g[levels_[l].base_point];
    const auto& u = levels_[l].transversal[b];
    if (!u) return {std::move(g), l};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (const auto& level : levels_) n *= level.orbit.size();
  return n;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<std::size_t> StabChain::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

}  // namespace acdkit

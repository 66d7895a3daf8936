#ifndef ACDKIT_NAMED_GROUPS_HPP
#define ACDKIT_NAMED_GROUPS_HPP

#include <filesystem>
#include <string_view>

#include "acdkit/perm_group.hpp"

namespace acdkit {

/// C_n acting regularly on n points.
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2n on n points (n >= 3); D_1 = C_2 and D_2 = C_2 x C_2
/// are given in their regular actions.
PermGroup dihedral(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// SL(2,q) on the q^2-1 nonzero vectors of F_q^2; q prime or 9.
PermGroup special_linear(std::size_t q);
/// The central element -I of special_linear(q), as a permutation of its points.
Permutation special_linear_negation(std::size_t q);
/// PSL(2,q) on the q+1 points of the projective line; q prime or 9.
PermGroup projective_special_linear(std::size_t q);
/// C_p x| C_d (x -> ax + b with a of order d) on p points; needs d | p-1.
PermGroup affine(std::size_t p, std::size_t d);
/// a x b acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// (SL(2,q) x C_2m) / <(-I, c^m)>, the central product identifying the centres' involutions.
PermGroup central_product_sl2(std::size_t q, std::size_t m);

/// Group record in JSON: {"degree": n, "generators": [[images...] | "(0 1)(2 3)", ...]}.
PermGroup group_from_json(std::string_view text);
PermGroup group_from_file(const std::filesystem::path& path);
std::string group_to_json(const PermGroup& g);

}  // namespace acdkit

#endif  // ACDKIT_NAMED_GROUPS_HPP

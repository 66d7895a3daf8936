#ifndef ACDKIT_GROUP_EXPR_HPP
#define ACDKIT_GROUP_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "acdkit/perm_group.hpp"

namespace acdkit {

enum class GroupKind {
  Cyclic,
  Dihedral,
  Symmetric,
  Alternating,
  SpecialLinear,
  ProjectiveSpecialLinear,
  Affine,
  DirectProduct,
  CentralProduct,
  Quotient,
  File,
};

/// Abstract syntax of a group expression.
///
///   expr := atom ("x" atom)*
///   atom := "(" expr ")" | C(n) | D(n) | S(n) | A(n) | SL(2,q) | PSL(2,q)
///         | Aff(p,d) | DirectProduct(expr, expr) | CentralProd(expr, expr)
///         | Quot(expr; cycles, ...) | File("path")
///
/// Long names (Cyclic, Dihedral, Sym, Alt, Quotient) are accepted as aliases.
struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  std::vector<long long> args;
  std::vector<GroupSpec> operands;
  /// Quotient generators in normalized cycle notation.
  std::vector<std::string> quotient_generators;
  std::string path;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws ParseError with the offset of the first offending character.
GroupSpec parse_group_expr(std::string_view text);
/// Canonical text form; parse_group_expr(render(s)) == s.
std::string render(const GroupSpec& spec);

PermGroup construct(const GroupSpec& spec);
PermGroup construct(std::string_view text);

}  // namespace acdkit

#endif  // ACDKIT_GROUP_EXPR_HPP

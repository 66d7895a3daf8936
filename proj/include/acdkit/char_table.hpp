#ifndef ACDKIT_CHAR_TABLE_HPP
#define ACDKIT_CHAR_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "acdkit/cyclotomic.hpp"
#include "acdkit/mod_linalg.hpp"
#include "acdkit/perm_group.hpp"

namespace acdkit {

/// The prime field in which the table is computed, with an element of
/// multiplicative order `exponent` standing in for exp(2 pi i / exponent).
struct WorkingField {
  std::uint64_t q = 0;
  std::uint64_t w = 0;
  std::uint64_t exponent = 1;

  friend bool operator==(const WorkingField&, const WorkingField&) = default;
};

/// Smallest prime q > max(above, 2*floor(sqrt(order))) with q = 1 mod exponent,
/// paired with the element of exact order `exponent` obtained from the smallest
/// base whose ((q-1)/exponent)-th power has that order.
WorkingField select_prime(std::uint64_t exponent, std::uint64_t order, std::uint64_t above = 0);

/// Irreducible character table of a permutation group.
///
/// Rows are sorted by degree, ties broken by the lifted values (compared class
/// by class), which puts the trivial character first. Columns follow the
/// group's ClassData order.
class CharTable {
 public:
  CharTable(PermGroup group, WorkingField field, std::vector<std::uint64_t> degrees, ModMatrix values_mod_q,
            std::vector<std::vector<CyclotomicValue>> lifted);

  const PermGroup& group() const { return group_; }
  const ClassData& classes() const { return group_.classes(); }
  std::uint64_t group_order() const { return order_; }
  const WorkingField& field() const { return field_; }

  std::size_t size() const { return degrees_.size(); }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  std::uint64_t degree(std::size_t row) const { return degrees_[row]; }
  const ModMatrix& values_mod_q() const { return values_; }
  std::uint64_t value_mod_q(std::size_t row, std::size_t cls) const { return values_[row][cls]; }
  const CyclotomicValue& lifted(std::size_t row, std::size_t cls) const { return lifted_[row][cls]; }
  const std::vector<std::vector<CyclotomicValue>>& lifted() const { return lifted_; }

 private:
  PermGroup group_;
  std::uint64_t order_;
  WorkingField field_;
  std::vector<std::uint64_t> degrees_;
  ModMatrix values_;
  std::vector<std::vector<CyclotomicValue>> lifted_;
};

/// Structure constants of class sum i: entry (j, k) counts x in class i with
/// x^-1 * rep_k in class j. Column sums equal the size of class i.
std::vector<std::vector<std::uint64_t>> class_matrix(const PermGroup& g, std::size_t i);

/// Dixon-Schneider: common eigenvectors of the class matrices over F_q,
/// degrees from the norm of each eigenvector, then exact lifting.
CharTable compute_table(const PermGroup& g);
CharTable compute_table(const PermGroup& g, const WorkingField& field);

/// Multiplicities of the eigenvalues z^l of a representing matrix of class
/// `cls` in character `row`, recovered from the mod-q values on the powers of
/// the class representative. Throws InternalError when a multiplicity falls
/// outside [0, degree].
CyclotomicValue lift_value(const CharTable& t, std::size_t row, std::size_t cls);

struct OrthogonalityReport {
  bool ok = true;
  std::string failure;  // first failing relation, empty when ok
  explicit operator bool() const { return ok; }
};

/// Row and column orthogonality mod q, plus row orthogonality evaluated
/// exactly on the lifted values in Z[z].
OrthogonalityReport verify_orthogonality(const CharTable& t);

/// JSON export: classes, degrees, lifted values ("z" is exp(2 pi i / exponent)),
/// and the raw mod-q matrix with q and w.
std::string table_to_json(const CharTable& t);
/// Human-readable table.
std::string table_to_text(const CharTable& t);

}  // namespace acdkit

#endif  // ACDKIT_CHAR_TABLE_HPP

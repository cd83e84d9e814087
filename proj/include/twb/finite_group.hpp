#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twb {

/// Index of a group element, 0..order-1.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 20000;
inline constexpr std::size_t kFullAuditBelow = 512;

/// Order cap honouring the TWB_ORDER_CAP environment variable.
std::size_t default_order_cap();

enum class AuditMode {
  Auto,     // full below kFullAuditBelow, sampled above
  Full,
  Sampled,
};

struct GroupOptions {
  std::size_t order_cap = default_order_cap();
  AuditMode audit = AuditMode::Auto;
};

/// Whether an audit of a structure of the given order should cover every
/// tuple.
bool audit_is_full(AuditMode mode, std::size_t order);

/// A finite group given by its full multiplication table.
///
/// FiniteGroup is a cheap handle onto immutable shared data; copies refer to
/// the same group. Two handles compare equal only if they share data.
class FiniteGroup {
 public:
  /// Validates the table (square, entries in range, identity, inverses,
  /// associativity per options.audit) and derives identity and inverses.
  static FiniteGroup from_cayley(const std::vector<std::vector<Elem>>& table,
                                 std::vector<std::string> labels = {},
                                 const GroupOptions& options = {});

  /// Closure of permutations of {0..degree-1} under composition. Element 0 is
  /// the identity; the rest follow breadth-first discovery order, trying the
  /// generators in the given order. (a*b)(i) = a(b(i)).
  static FiniteGroup from_permutations(std::size_t degree,
                                       const std::vector<std::vector<std::size_t>>& generators,
                                       const GroupOptions& options = {});

  std::size_t order() const noexcept { return data_->order; }
  Elem identity() const noexcept { return data_->identity; }
  Elem mul(Elem a, Elem b) const noexcept { return data_->table[std::size_t(a) * data_->order + b]; }
  Elem inv(Elem a) const noexcept { return data_->inverse[a]; }
  Elem pow(Elem a, long long n) const;
  std::size_t element_order(Elem a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::string label(Elem a) const;

  /// Small generating set chosen greedily (each step adds the element that
  /// enlarges the generated subgroup the most; ties go to the lowest index).
  const std::vector<Elem>& generators() const noexcept { return data_->generators; }

  /// Elements of the subgroup generated by `gens`, identity first then
  /// breadth-first order.
  std::vector<Elem> closure(std::span<const Elem> gens) const;

  bool same(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

 private:
  struct Data {
    std::size_t order = 0;
    Elem identity = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::string> labels;
    std::vector<Elem> generators;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  static FiniteGroup build(std::size_t order, std::vector<Elem> flat_table,
                           std::vector<std::string> labels, const GroupOptions& options);

  std::shared_ptr<const Data> data_;
};

// Built-in families. Element indexing:
//   cyclic(n):           k  <->  k mod n
//   abelian(d_0..d_m):   mixed radix, index = ((a_0*d_1 + a_1)*d_2 + ...) + a_m
//   dihedral(n):         r^k s^f  <->  k + n*f   (order 2n, s r s = r^-1)
//   symmetric(n):        permutations of {0..n-1} in lexicographic order
//   alternating(n):      even permutations in lexicographic order
//   quaternion8:         1,-1,i,-i,j,-j,k,-k
//   direct_product(a,b): (x,y)  <->  x*|b| + y
FiniteGroup cyclic_group(std::size_t n, const GroupOptions& options = {});
FiniteGroup abelian_group(std::span<const std::size_t> invariants, const GroupOptions& options = {});
FiniteGroup dihedral_group(std::size_t n, const GroupOptions& options = {});
FiniteGroup symmetric_group(std::size_t n, const GroupOptions& options = {});
FiniteGroup alternating_group(std::size_t n, const GroupOptions& options = {});
FiniteGroup quaternion_group(const GroupOptions& options = {});
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupOptions& options = {});

/// Dispatch by name for the families with integer parameters.
/// Throws UnknownName or OrderLimitExceeded.
FiniteGroup builtin_group(std::string_view name, std::span<const long long> params,
                          const GroupOptions& options = {});

/// Permutation in cycle notation, "()" for the identity.
std::string cycle_notation(std::span<const std::size_t> perm);

}  // namespace twb

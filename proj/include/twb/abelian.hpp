#pragma once

#include <cstddef>
#include <vector>

#include "twb/bigint.hpp"
#include "twb/integer_matrix.hpp"
#include "twb/smith.hpp"

namespace twb {

/// Z^rank + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and every d_i >= 2.
/// Generators are ordered free first, then torsion.
class FgAbelianGroup {
 public:
  FgAbelianGroup(std::size_t rank, std::vector<BigInt> torsion);

  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  std::size_t generator_count() const noexcept { return rank_ + torsion_.size(); }

  /// Relation matrix: diag(0,...,0,d_1,...,d_t) restricted to its nonzero
  /// columns, so coker = the group.
  IntegerMatrix relations() const;

 private:
  std::size_t rank_;
  std::vector<BigInt> torsion_;
};

/// Endomorphism given by its action on generators: column j is the image of
/// generator j. Construction checks compatibility with the relations.
class AbelianEndo {
 public:
  /// Throws NotAHomomorphism if a torsion generator is sent somewhere its
  /// order does not allow.
  AbelianEndo(FgAbelianGroup group, IntegerMatrix matrix);

  const FgAbelianGroup& group() const noexcept { return group_; }
  const IntegerMatrix& matrix() const noexcept { return matrix_; }
  IntegerMatrix free_block() const { return matrix_.block(0, 0, group_.rank(), group_.rank()); }

  /// phi^n, with torsion rows reduced modulo their orders.
  AbelianEndo power(std::size_t n) const;

 private:
  FgAbelianGroup group_;
  IntegerMatrix matrix_;
};

/// Order of the cokernel of m on the group: |G / m(G)|, infinite when the
/// quotient has positive rank.
ReidemeisterValue cokernel_order(const FgAbelianGroup& group, const IntegerMatrix& m);

/// R(phi) = |coker(1 - phi)|. Finiteness is cross-checked against
/// det(I - free block) != 0.
ReidemeisterValue reidemeister_abelian(const AbelianEndo& phi);

/// R(phi^n) for n = 1..n_max.
std::vector<ReidemeisterValue> reidemeister_abelian_sequence(const AbelianEndo& phi, std::size_t n_max);

/// One canonical representative per coset of im(1 - phi) in Z^(r+t),
/// pulled back through the Smith basis and reduced into a fundamental box.
/// Sorted. Throws InfiniteClasses when R(phi) is infinite.
std::vector<std::vector<BigInt>> twisted_class_reps_abelian(const AbelianEndo& phi);

/// Canonical representatives of Z^n / (columns of generators) via the Smith
/// basis; shared with the lattice-extension module.
std::vector<std::vector<BigInt>> lattice_coset_reps(const IntegerMatrix& generators);

}  // namespace twb

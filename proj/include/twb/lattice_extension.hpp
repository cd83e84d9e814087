#pragma once

#include <cstddef>
#include <vector>

#include "twb/bigint.hpp"
#include "twb/integer_matrix.hpp"

namespace twb {

/// G = Z^k x|_theta Z with (v, n)(w, m) = (v + theta^n w, n + m).
class LatticeExtensionGroup {
 public:
  /// Throws InvalidInput unless theta is square with determinant +-1.
  explicit LatticeExtensionGroup(IntegerMatrix theta);

  std::size_t rank() const noexcept { return theta_.rows(); }
  const IntegerMatrix& theta() const noexcept { return theta_; }
  const IntegerMatrix& theta_inverse() const noexcept { return theta_inverse_; }
  /// theta^n for any integer n.
  IntegerMatrix theta_power(long long n) const;

 private:
  IntegerMatrix theta_;
  IntegerMatrix theta_inverse_;
};

/// phi(v, n) = (B v, eps n), a homomorphism exactly when B theta = theta^eps B.
struct ExtensionEndo {
  IntegerMatrix B;
  int eps = -1;
};

/// Throws IncompatibleTwist when B theta != theta^eps B.
ExtensionEndo validate_extension_endo(const LatticeExtensionGroup& group, IntegerMatrix B, int eps);

/// Twisted classes of phi, fiber by fiber over the quotient Z.
///
/// With eps = +1 the quotient map is the identity on Z, which has infinitely
/// many classes, and so does phi.
///
/// With eps = -1, (w, m) . (v, n) = (w + theta^m v - theta^(2m+n) B w, n + 2m).
/// Every orbit meets exactly one of the fibers n = 0, 1, and the moves that
/// stay inside a fiber are those with m = 0, i.e. v -> v + (I - theta^n B) w.
/// Hence R(phi) = |det(I - B)| + |det(I - theta B)|, infinite if either
/// vanishes.
ReidemeisterValue reidemeister_extension(const LatticeExtensionGroup& group, const ExtensionEndo& phi);

/// R(phi^n) for n = 1..n_max; phi^n = (B^n, eps^n), so even n are infinite
/// when eps = -1.
std::vector<ReidemeisterValue> reidemeister_extension_sequence(const LatticeExtensionGroup& group,
                                                               const ExtensionEndo& phi, std::size_t n_max);

struct FiberRep {
  std::vector<BigInt> v;
  int fiber = 0;  // 0 or 1

  friend bool operator==(const FiberRep&, const FiberRep&) = default;
};

/// Representatives (v, n0): cosets of (I - theta^n0 B) Z^k for n0 = 0, 1.
/// Throws InfiniteClasses when R(phi) is infinite.
std::vector<FiberRep> fiber_class_reps(const LatticeExtensionGroup& group, const ExtensionEndo& phi);

/// I - theta^n0 B, the lattice map whose cokernel counts the classes in fiber n0.
IntegerMatrix fiber_lattice(const LatticeExtensionGroup& group, const ExtensionEndo& phi, int fiber);

}  // namespace twb

#include "twb/lattice_extension.hpp"

#include "twb/abelian.hpp"
#include "twb/errors.hpp"

namespace twb {

LatticeExtensionGroup::LatticeExtensionGroup(IntegerMatrix theta) : theta_(std::move(theta)) {
  if (!theta_.is_square() || theta_.rows() == 0) throw Error(ErrorCode::InvalidInput, "theta must be a nonempty square matrix");
  auto inverse = unimodular_inverse(theta_);
  if (!inverse) throw Error(ErrorCode::InvalidInput, "theta must have determinant +1 or -1");
  theta_inverse_ = std::move(*inverse);
}

IntegerMatrix LatticeExtensionGroup::theta_power(long long n) const {
  return n >= 0 ? matrix_power(theta_, std::size_t(n)) : matrix_power(theta_inverse_, std::size_t(-n));
}

ExtensionEndo validate_extension_endo(const LatticeExtensionGroup& group, IntegerMatrix B, int eps) {
  if (eps != 1 && eps != -1) throw Error(ErrorCode::InvalidInput, "eps must be +1 or -1");
  if (B.rows() != group.rank() || B.cols() != group.rank()) {
    throw Error(ErrorCode::InvalidInput, "B must be " + std::to_string(group.rank()) + "x" + std::to_string(group.rank()));
  }
  if (B * group.theta() != group.theta_power(eps) * B) {
    throw Error(ErrorCode::IncompatibleTwist, "B theta != theta^" + std::to_string(eps) + " B for B = " + B.to_string());
  }
  return ExtensionEndo{std::move(B), eps};
}

IntegerMatrix fiber_lattice(const LatticeExtensionGroup& group, const ExtensionEndo& phi, int fiber) {
  return IntegerMatrix::identity(group.rank()) - group.theta_power(fiber) * phi.B;
}

ReidemeisterValue reidemeister_extension(const LatticeExtensionGroup& group, const ExtensionEndo& phi) {
  if (phi.eps == 1) return ReidemeisterValue::infinite();
  const auto lattice = FgAbelianGroup::free(group.rank());
  BigInt total = 0;
  for (int fiber = 0; fiber <= 1; ++fiber) {
    const ReidemeisterValue index = cokernel_order(lattice, fiber_lattice(group, phi, fiber));
    if (index.is_infinite()) return ReidemeisterValue::infinite();
    total += index.value();
  }
  return total;
}

std::vector<ReidemeisterValue> reidemeister_extension_sequence(const LatticeExtensionGroup& group,
                                                               const ExtensionEndo& phi, std::size_t n_max) {
  std::vector<ReidemeisterValue> out;
  IntegerMatrix power = IntegerMatrix::identity(group.rank());
  int eps = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    power = phi.B * power;
    eps *= phi.eps;
    out.push_back(reidemeister_extension(group, ExtensionEndo{power, eps}));
  }
  return out;
}

std::vector<FiberRep> fiber_class_reps(const LatticeExtensionGroup& group, const ExtensionEndo& phi) {
  if (reidemeister_extension(group, phi).is_infinite()) {
    throw Error(ErrorCode::InfiniteClasses, "R(phi) is infinite");
  }
  std::vector<FiberRep> out;
  for (int fiber = 0; fiber <= 1; ++fiber) {
    for (auto& v : lattice_coset_reps(fiber_lattice(group, phi, fiber))) out.push_back(FiberRep{std::move(v), fiber});
  }
  return out;
}

}  // namespace twb

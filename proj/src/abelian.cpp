#include "twb/abelian.hpp"

#include <algorithm>
#include <string>

#include "twb/errors.hpp"

namespace twb {

namespace {

constexpr std::size_t kMaxCosetReps = 1'000'000;

BigInt mod_positive(const BigInt& a, const BigInt& d) {
  BigInt r = a % d;
  return r < 0 ? BigInt(r + d) : r;
}

void reduce_torsion_rows(const FgAbelianGroup& g, IntegerMatrix& a) {
  for (std::size_t t = 0; t < g.torsion().size(); ++t)
    for (std::size_t c = 0; c < a.cols(); ++c) a(g.rank() + t, c) = mod_positive(a(g.rank() + t, c), g.torsion()[t]);
}

}  // namespace

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<BigInt> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw Error(ErrorCode::InvalidInput, "torsion invariants must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0) {
      throw Error(ErrorCode::InvalidInput, "torsion invariants must form a divisibility chain");
    }
  }
}

IntegerMatrix FgAbelianGroup::relations() const {
  IntegerMatrix r(generator_count(), torsion_.size());
  for (std::size_t j = 0; j < torsion_.size(); ++j) r(rank_ + j, j) = torsion_[j];
  return r;
}

AbelianEndo::AbelianEndo(FgAbelianGroup group, IntegerMatrix matrix) : group_(std::move(group)), matrix_(std::move(matrix)) {
  const std::size_t n = group_.generator_count();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw Error(ErrorCode::InvalidInput, "endomorphism matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  const std::size_t r = group_.rank();
  for (std::size_t j = 0; j < group_.torsion().size(); ++j) {
    const BigInt& dj = group_.torsion()[j];
    for (std::size_t i = 0; i < r; ++i) {
      if (matrix_(i, r + j) != 0) {
        throw Error(ErrorCode::NotAHomomorphism, "torsion generator " + std::to_string(r + j) +
                                                     " has a nonzero free component in row " + std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < group_.torsion().size(); ++i) {
      if ((dj * matrix_(r + i, r + j)) % group_.torsion()[i] != 0) {
        throw Error(ErrorCode::NotAHomomorphism, "image of torsion generator " + std::to_string(r + j) +
                                                     " has order not dividing " + dj.str());
      }
    }
  }
}

AbelianEndo AbelianEndo::power(std::size_t n) const {
  IntegerMatrix result = IntegerMatrix::identity(matrix_.rows());
  for (std::size_t i = 0; i < n; ++i) {
    result = matrix_ * result;
    reduce_torsion_rows(group_, result);
  }
  return AbelianEndo(group_, std::move(result));
}

ReidemeisterValue cokernel_order(const FgAbelianGroup& group, const IntegerMatrix& m) {
  const std::size_t n = group.generator_count();
  if (m.rows() != n) throw Error(ErrorCode::InvalidInput, "matrix rows must match the generator count");
  if (n == 0) return BigInt(1);
  const IntegerMatrix presentation = IntegerMatrix::hstack(m, group.relations());
  const auto diag = smith_normal_form(presentation).diagonal();
  if (diag.size() < n) return ReidemeisterValue::infinite();
  BigInt order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) return ReidemeisterValue::infinite();
    order *= diag[i];
  }
  return order;
}

ReidemeisterValue reidemeister_abelian(const AbelianEndo& phi) {
  const std::size_t n = phi.group().generator_count();
  const ReidemeisterValue value = cokernel_order(phi.group(), IntegerMatrix::identity(n) - phi.matrix());
  const std::size_t r = phi.group().rank();
  const bool spectral_finite = determinant(IntegerMatrix::identity(r) - phi.free_block()) != 0;
  if (spectral_finite != value.is_finite()) {
    throw Error(ErrorCode::InternalDefect, "cokernel finiteness disagrees with det(I - A_free)");
  }
  return value;
}

std::vector<ReidemeisterValue> reidemeister_abelian_sequence(const AbelianEndo& phi, std::size_t n_max) {
  std::vector<ReidemeisterValue> out;
  IntegerMatrix power = IntegerMatrix::identity(phi.matrix().rows());
  for (std::size_t n = 1; n <= n_max; ++n) {
    power = phi.matrix() * power;
    reduce_torsion_rows(phi.group(), power);
    out.push_back(reidemeister_abelian(AbelianEndo(phi.group(), power)));
  }
  return out;
}

std::vector<std::vector<BigInt>> lattice_coset_reps(const IntegerMatrix& generators) {
  const std::size_t n = generators.rows();
  if (n == 0) return {{}};
  const SmithDecomposition snf = smith_normal_form(generators);
  const auto diag = snf.diagonal();
  if (diag.size() < n || std::any_of(diag.begin(), diag.begin() + std::ptrdiff_t(n), [](const BigInt& d) { return d == 0; })) {
    throw Error(ErrorCode::InfiniteClasses, "the lattice has infinite index");
  }
  BigInt index = 1;
  for (std::size_t i = 0; i < n; ++i) index *= diag[i];
  if (index > kMaxCosetReps) {
    throw Error(ErrorCode::SearchLimitExceeded, "index " + index.str() + " is too large to list representatives");
  }
  const auto hermite = hermite_basis(generators);
  if (!hermite) throw Error(ErrorCode::InternalDefect, "Hermite basis disagrees with the Smith form on rank");

  std::vector<std::vector<BigInt>> reps;
  std::vector<BigInt> digits(n, BigInt(0));
  for (bool done = false; !done;) {
    reps.push_back(reduce_mod_lattice(*hermite, snf.u_inverse * digits));
    for (std::size_t i = n;;) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (++digits[i] < diag[i]) break;
      digits[i] = 0;
    }
  }
  std::sort(reps.begin(), reps.end());
  const std::size_t before = reps.size();
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (reps.size() != before || BigInt(reps.size()) != index) {
    throw Error(ErrorCode::InternalDefect, "coset representatives are not distinct");
  }
  return reps;
}

std::vector<std::vector<BigInt>> twisted_class_reps_abelian(const AbelianEndo& phi) {
  const FgAbelianGroup& g = phi.group();
  const std::size_t n = g.generator_count();
  if (reidemeister_abelian(phi).is_infinite()) {
    throw Error(ErrorCode::InfiniteClasses, "R(phi) is infinite");
  }
  return lattice_coset_reps(IntegerMatrix::hstack(IntegerMatrix::identity(n) - phi.matrix(), g.relations()));
}

}  // namespace twb

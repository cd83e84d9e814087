#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "twb/bigint.hpp"

namespace twb {

using BigRational = boost::multiprecision::cpp_rational;

/// The field Q(zeta_e) with power basis 1, zeta, ..., zeta^(phi(e)-1).
/// Instances are interned per e and immutable.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::size_t e);

  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }
  /// Coefficients of the e-th cyclotomic polynomial, constant term first.
  const std::vector<BigInt>& polynomial() const noexcept { return polynomial_; }
  /// zeta^k reduced to the power basis, 0 <= k < e.
  const std::vector<BigInt>& power(std::size_t k) const { return powers_[k % order_]; }

  explicit CyclotomicField(std::size_t e);

 private:
  std::size_t order_;
  std::size_t degree_;
  std::vector<BigInt> polynomial_;
  std::vector<std::vector<BigInt>> powers_;
};

/// Cyclotomic polynomial Phi_n, constant term first.
std::vector<BigInt> cyclotomic_polynomial(std::size_t n);

/// An element of Q(zeta_e) stored as integer numerators over one positive
/// common denominator, kept in lowest terms. Equality is coefficient
/// equality.
class Cyclotomic {
 public:
  explicit Cyclotomic(std::size_t e);
  Cyclotomic(std::size_t e, const BigRational& value);
  /// Coefficients in the power basis; length must be phi(e).
  Cyclotomic(std::size_t e, std::vector<BigRational> coeffs);

  static Cyclotomic root_of_unity(std::size_t e, std::size_t k);

  std::size_t order() const noexcept { return field_->order(); }
  std::vector<BigRational> coeffs() const;
  const std::vector<BigInt>& numerators() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  BigRational rational_value() const;

  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const;
  /// Numerical value with zeta = exp(2 pi i / e); display and tests only.
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const BigRational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const BigRational& b) { return a *= b; }
  friend Cyclotomic operator-(Cyclotomic a) { return a *= BigRational(-1); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.field_->order() == b.field_->order() && a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Lexicographic on coefficient vectors.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

 private:
  void normalize();
  void check_same_field(const Cyclotomic& other) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<BigInt> num_;
  BigInt den_{1};
};

}  // namespace twb

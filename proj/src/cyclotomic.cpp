#include "twb/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "twb/errors.hpp"

namespace twb {

namespace {

// Exact quotient of a by the monic polynomial b (constant term first).
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {BigInt(0)};
  std::vector<BigInt> q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (a[j] != 0) throw Error(ErrorCode::InternalDefect, "cyclotomic division left a remainder");
  }
  return q;
}

BigInt gcd_big(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic order must be positive");
  std::vector<BigInt> p(n + 1, BigInt(0));
  p[0] = -1;
  p[n] = 1;
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(std::size_t e) : order_(e), polynomial_(cyclotomic_polynomial(e)) {
  degree_ = polynomial_.size() - 1;
  powers_.reserve(e);
  std::vector<BigInt> current(degree_, BigInt(0));
  current[0] = 1;
  for (std::size_t k = 0; k < e; ++k) {
    powers_.push_back(current);
    // multiply by zeta and fold zeta^degree back using the monic relation
    BigInt top = current[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < degree_; ++i) current[i] -= top * polynomial_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::size_t e) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const CyclotomicField>> fields;
  if (e == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic order must be positive");
  std::lock_guard lock(mutex);
  auto& slot = fields[e];
  if (!slot) slot = std::make_shared<const CyclotomicField>(e);
  return slot;
}

Cyclotomic::Cyclotomic(std::size_t e) : field_(CyclotomicField::get(e)), num_(field_->degree(), BigInt(0)) {}

Cyclotomic::Cyclotomic(std::size_t e, const BigRational& value) : Cyclotomic(e) {
  num_[0] = boost::multiprecision::numerator(value);
  den_ = boost::multiprecision::denominator(value);
}

Cyclotomic::Cyclotomic(std::size_t e, std::vector<BigRational> coeffs) : Cyclotomic(e) {
  if (coeffs.size() != num_.size()) {
    throw Error(ErrorCode::InvalidInput, "Q(zeta_" + std::to_string(e) + ") needs " + std::to_string(num_.size()) +
                                             " coefficients, got " + std::to_string(coeffs.size()));
  }
  BigInt common = 1;
  for (const auto& c : coeffs) {
    const BigInt& d = boost::multiprecision::denominator(c);
    common = common / gcd_big(common, d) * d;
  }
  den_ = common;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    num_[i] = boost::multiprecision::numerator(coeffs[i]) * (common / boost::multiprecision::denominator(coeffs[i]));
  }
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::size_t e, std::size_t k) {
  Cyclotomic z(e);
  z.num_ = z.field_->power(k);
  return z;
}

std::vector<BigRational> Cyclotomic::coeffs() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (const auto& n : num_) out.emplace_back(n, den_);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& n : num_)
    if (n != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

BigRational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InternalDefect, "cyclotomic value is not rational");
  return BigRational(num_[0], den_);
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic out(order());
  out.den_ = den_;
  const std::size_t e = order();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const auto& p = field_->power((e - i) % e);
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] != 0) out.num_[j] += num_[i] * p[j];
  }
  out.normalize();
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0.0;
  const double den = den_.convert_to<double>();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * double(i) / double(order());
    sum += num_[i].convert_to<double>() / den * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    BigRational c(num_[i], den_);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (i == 0) os << c;
    else {
      if (c != 1) os << c << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
  }
  return first ? std::string("0") : os.str();
}

void Cyclotomic::check_same_field(const Cyclotomic& other) const {
  if (order() != other.order()) {
    throw Error(ErrorCode::InvalidInput, "mixing Q(zeta_" + std::to_string(order()) + ") and Q(zeta_" +
                                             std::to_string(other.order()) + ")");
  }
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& n : num_) n = -n;
  }
  BigInt g = den_;
  for (const auto& n : num_) {
    if (g == 1) break;
    if (n != 0) g = gcd_big(g, n);
  }
  if (is_zero()) g = den_;
  if (g != 1) {
    den_ /= g;
    for (auto& n : num_) n /= g;
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  const std::size_t d = num_.size();
  std::vector<BigInt> product(2 * d - 1, BigInt(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (rhs.num_[j] != 0) product[i + j] += num_[i] * rhs.num_[j];
  }
  for (std::size_t i = 0; i < d; ++i) num_[i] = std::move(product[i]);
  for (std::size_t k = d; k < product.size(); ++k) {
    if (product[k] == 0) continue;
    const auto& p = field_->power(k);
    for (std::size_t j = 0; j < d; ++j)
      if (p[j] != 0) num_[j] += product[k] * p[j];
  }
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const BigRational& rhs) {
  for (auto& n : num_) n *= boost::multiprecision::numerator(rhs);
  den_ *= boost::multiprecision::denominator(rhs);
  normalize();
  return *this;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    BigInt l = a.num_[i] * b.den_, r = b.num_[i] * a.den_;
    if (l != r) return l < r;
  }
  return false;
}

}  // namespace twb

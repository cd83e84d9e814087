#include "twb/smith.hpp"

#include <algorithm>

#include "twb/errors.hpp"

namespace twb {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Floor division for a possibly negative numerator and positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& a)
      : m_(a.rows()), n_(a.cols()), S_(a), U_(IntegerMatrix::identity(m_)), Ui_(IntegerMatrix::identity(m_)),
        V_(IntegerMatrix::identity(n_)) {}

  SmithDecomposition run() {
    for (std::size_t t = 0; t < std::min(m_, n_); ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        clear_column(t);
        clear_row(t);
        if (!row_and_column_clear(t)) {
          place_pivot(t);
          continue;
        }
        if (!fix_divisibility(t)) break;
      }
      if (S_(t, t) < 0) negate_column(t);
    }
    return {std::move(U_), std::move(S_), std::move(V_), std::move(Ui_)};
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = m_, bj = n_;
    BigInt best;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        if (S_(i, j) == 0) continue;
        BigInt a = abs_big(S_(i, j));
        if (bi == m_ || a < best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (bi == m_) return false;
    swap_rows(t, bi);
    swap_columns(t, bj);
    return true;
  }

  void clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (S_(i, t) == 0) continue;
      BigInt q = S_(i, t) / S_(t, t);
      if (q != 0) add_row_multiple(i, t, -q);
    }
  }

  void clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (S_(t, j) == 0) continue;
      BigInt q = S_(t, j) / S_(t, t);
      if (q != 0) add_column_multiple(j, t, -q);
    }
  }

  bool row_and_column_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < m_; ++i)
      if (S_(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < n_; ++j)
      if (S_(t, j) != 0) return false;
    return true;
  }

  // If some trailing entry is not divisible by the pivot, fold its row into
  // row t and report that more work is needed.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (S_(i, j) % S_(t, t) != 0) {
          add_row_multiple(t, i, 1);
          return true;
        }
    return false;
  }

  // row_i += c * row_k, i.e. U <- E U and U^-1 <- U^-1 E^-1.
  void add_row_multiple(std::size_t i, std::size_t k, const BigInt& c) {
    for (std::size_t j = 0; j < n_; ++j) S_(i, j) += c * S_(k, j);
    for (std::size_t j = 0; j < m_; ++j) U_(i, j) += c * U_(k, j);
    for (std::size_t r = 0; r < m_; ++r) Ui_(r, k) -= c * Ui_(r, i);
  }

  // col_j += c * col_k
  void add_column_multiple(std::size_t j, std::size_t k, const BigInt& c) {
    for (std::size_t i = 0; i < m_; ++i) S_(i, j) += c * S_(i, k);
    for (std::size_t i = 0; i < n_; ++i) V_(i, j) += c * V_(i, k);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap(S_(a, j), S_(b, j));
    for (std::size_t j = 0; j < m_; ++j) std::swap(U_(a, j), U_(b, j));
    for (std::size_t r = 0; r < m_; ++r) std::swap(Ui_(r, a), Ui_(r, b));
  }

  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m_; ++i) std::swap(S_(i, a), S_(i, b));
    for (std::size_t i = 0; i < n_; ++i) std::swap(V_(i, a), V_(i, b));
  }

  void negate_column(std::size_t t) {
    for (std::size_t i = 0; i < m_; ++i) S_(i, t) = -S_(i, t);
    for (std::size_t i = 0; i < n_; ++i) V_(i, t) = -V_(i, t);
  }

  std::size_t m_, n_;
  IntegerMatrix S_, U_, Ui_, V_;
};

}  // namespace

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithDecomposition snf = SmithReducer(a).run();
  verify_smith(a, snf);
  return snf;
}

void verify_smith(const IntegerMatrix& a, const SmithDecomposition& snf) {
  auto fail = [](const char* what) { throw Error(ErrorCode::InternalDefect, std::string("Smith form: ") + what); };
  if (snf.U * a * snf.V != snf.S) fail("S != U A V");
  const BigInt du = determinant(snf.U), dv = determinant(snf.V);
  if (abs_big(du) != 1 || abs_big(dv) != 1) fail("transform is not unimodular");
  if (snf.U * snf.u_inverse != IntegerMatrix::identity(a.rows())) fail("U^-1 is wrong");
  const auto d = snf.diagonal();
  for (std::size_t i = 0; i < snf.S.rows(); ++i)
    for (std::size_t j = 0; j < snf.S.cols(); ++j)
      if (i != j && snf.S(i, j) != 0) fail("S is not diagonal");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) fail("negative invariant factor");
    if (i + 1 < d.size()) {
      if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0) fail("divisibility chain broken");
    }
  }
}

std::optional<IntegerMatrix> hermite_basis(const IntegerMatrix& generators) {
  const std::size_t n = generators.rows();
  IntegerMatrix w = generators;
  const std::size_t m = w.cols();
  if (m < n) return std::nullopt;
  auto add_col = [&](std::size_t j, std::size_t k, const BigInt& c) {
    for (std::size_t i = 0; i < n; ++i) w(i, j) += c * w(i, k);
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (true) {
      std::size_t best = m;
      for (std::size_t j = i; j < m; ++j)
        if (w(i, j) != 0 && (best == m || abs_big(w(i, j)) < abs_big(w(i, best)))) best = j;
      if (best == m) return std::nullopt;
      if (best != i)
        for (std::size_t r = 0; r < n; ++r) std::swap(w(r, i), w(r, best));
      bool clean = true;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (w(i, j) == 0) continue;
        add_col(j, i, -(w(i, j) / w(i, i)));
        if (w(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (w(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) w(r, i) = -w(r, i);
  }
  return w.block(0, 0, n, n);
}

std::vector<BigInt> reduce_mod_lattice(const IntegerMatrix& h, std::vector<BigInt> x) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const BigInt q = floor_div(x[i], h(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < h.rows(); ++r) x[r] -= q * h(r, i);
  }
  return x;
}

}  // namespace twb

#include "twb/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twb/errors.hpp"

namespace twb {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Arithmetic in F_p for p < 2^32.
struct PrimeField {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 n) const {
    u64 r = 1;
    a %= p;
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw Error(ErrorCode::LiftFailure, "division by zero in F_" + std::to_string(p));
    return pow(a, p - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(const PrimeField& F) {
  const auto factors = prime_factors(F.p - 1);
  for (u64 g = 2; g < F.p; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && F.pow(g, (F.p - 1) / q) != 1;
    if (ok) return g;
  }
  return 1;  // p = 2
}

// Characteristic polynomial (constant term first) via Hessenberg reduction.
Vec charpoly(const PrimeField& F, Mat a) {
  const std::size_t n = a.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && a[pivot][m - 1] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      std::swap(a[pivot], a[m]);
      for (auto& row : a) std::swap(row[pivot], row[m]);
    }
    const u64 inv_pivot = F.inv(a[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      const u64 u = F.mul(a[i][m - 1], inv_pivot);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) a[i][c] = F.sub(a[i][c], F.mul(u, a[m][c]));
      for (std::size_t r = 0; r < n; ++r) a[r][m] = F.add(a[r][m], F.mul(u, a[r][i]));
    }
  }
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t k = 1; k <= n; ++k) {
    const Vec& prev = polys[k - 1];
    Vec cur(k + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = F.add(cur[i + 1], prev[i]);
      cur[i] = F.sub(cur[i], F.mul(a[k - 1][k - 1], prev[i]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = F.mul(t, a[k - i][k - i - 1]);
      const u64 coef = F.mul(t, a[k - i - 1][k - 1]);
      const Vec& lower = polys[k - i - 1];
      for (std::size_t j = 0; j < lower.size(); ++j) cur[j] = F.sub(cur[j], F.mul(coef, lower[j]));
    }
    polys.push_back(std::move(cur));
  }
  return polys[n];
}

std::vector<u64> roots(const PrimeField& F, const Vec& poly) {
  std::vector<u64> out;
  for (u64 x = 0; x < F.p; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = F.add(F.mul(v, x), poly[i]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

// Basis (as columns of an rows x k matrix, stored column-wise) of the null
// space of the rows x cols matrix m.
std::vector<Vec> nullspace(const PrimeField& F, Mat m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t i = r;
    while (i < rows && m[i][c] == 0) ++i;
    if (i == rows) continue;
    std::swap(m[i], m[r]);
    const u64 inv = F.inv(m[r][c]);
    for (auto& v : m[r]) v = F.mul(v, inv);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      const u64 f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] = F.sub(m[k][j], F.mul(f, m[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = F.sub(0, m[k][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits F_p^r into simultaneous eigenspaces of the class matrices.
std::vector<Vec> common_eigenvectors(const PrimeField& F, const std::vector<Mat>& matrices, std::size_t r) {
  // Each space is a list of basis vectors in F_p^r.
  std::vector<std::vector<Vec>> spaces(1);
  for (std::size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    spaces[0].push_back(std::move(e));
  }
  for (const Mat& M : matrices) {
    bool all_lines = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_lines) break;
    const auto eigenvalues = roots(F, charpoly(F, M));
    std::vector<std::vector<Vec>> refined;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        refined.push_back(std::move(space));
        continue;
      }
      const std::size_t m = space.size();
      // M applied to the basis.
      std::vector<Vec> image(m, Vec(r, 0));
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < r; ++i) {
          u64 s = 0;
          for (std::size_t j = 0; j < r; ++j) s = F.add(s, F.mul(M[i][j], space[b][j]));
          image[b][i] = s;
        }
      std::size_t total = 0;
      for (u64 lambda : eigenvalues) {
        Mat k(r, Vec(m, 0));
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t i = 0; i < r; ++i) k[i][b] = F.sub(image[b][i], F.mul(lambda, space[b][i]));
        auto coeffs = nullspace(F, std::move(k), m);
        if (coeffs.empty()) continue;
        std::vector<Vec> piece;
        for (const auto& c : coeffs) {
          Vec v(r, 0);
          for (std::size_t b = 0; b < m; ++b)
            if (c[b])
              for (std::size_t i = 0; i < r; ++i) v[i] = F.add(v[i], F.mul(c[b], space[b][i]));
          piece.push_back(std::move(v));
        }
        total += piece.size();
        refined.push_back(std::move(piece));
      }
      if (total != m) throw Error(ErrorCode::LiftFailure, "class matrix is not diagonalizable over F_" + std::to_string(F.p));
    }
    spaces = std::move(refined);
  }
  std::vector<Vec> out;
  for (auto& s : spaces) {
    if (s.size() != 1) {
      throw Error(ErrorCode::LiftFailure, "eigenspace of dimension " + std::to_string(s.size()) + " did not split");
    }
    out.push_back(std::move(s[0]));
  }
  return out;
}

bool row_before(const std::vector<Cyclotomic>& a, std::size_t da, const std::vector<Cyclotomic>& b, std::size_t db) {
  if (da != db) return da < db;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k] < a[k]) return true;
    if (a[k] < b[k]) return false;
  }
  return false;
}

}  // namespace

ConjugacyData conjugacy_data(const FiniteGroup& group) {
  auto part = orbit_partition(group.order(), group.generators(),
                              [&](Elem g, Elem x) { return group.mul(group.mul(g, x), group.inv(g)); });
  ConjugacyData data;
  data.class_of = std::move(part.class_of);
  data.reps = std::move(part.class_reps);
  data.sizes = std::move(part.class_sizes);
  for (Elem rep : data.reps) data.inverse_class.push_back(data.class_of[group.inv(rep)]);
  data.exponent = group.exponent();
  return data;
}

std::uint64_t modular_prime(std::size_t order, std::size_t exponent) {
  for (std::uint64_t p = exponent + 1;; p += exponent) {
    if (p * p > 4 * std::uint64_t(order) && is_prime(p)) return p;
  }
}

CharacterTable character_table(const FiniteGroup& group) {
  const std::size_t n = group.order();
  if (n > default_order_cap()) {
    throw Error(ErrorCode::OrderLimitExceeded, "group order " + std::to_string(n) + " exceeds cap");
  }
  CharacterTable table{group, conjugacy_data(group), {}, {}, 0};
  const ConjugacyData& cls = table.classes;
  const std::size_t r = cls.count();
  const std::size_t e = cls.exponent;
  const PrimeField F{modular_prime(n, e)};
  table.prime = F.p;
  const std::size_t id_class = cls.class_of[group.identity()];

  // Class matrices: M_j[k][l] = #{x in C_j : x^-1 z_l in C_k}.
  std::vector<Mat> matrices(r, Mat(r, Vec(r, 0)));
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t j = cls.class_of[x];
      const std::size_t k = cls.class_of[group.mul(group.inv(Elem(x)), cls.reps[l])];
      ++matrices[j][k][l];
    }
  }
  for (auto& M : matrices)
    for (auto& row : M)
      for (auto& v : row) v %= F.p;

  std::vector<Mat> nontrivial;
  for (std::size_t j = 0; j < r; ++j)
    if (j != id_class) nontrivial.push_back(matrices[j]);
  const auto vectors = common_eigenvectors(F, nontrivial, r);

  const u64 zeta = F.pow(primitive_root(F), (F.p - 1) / e);
  std::vector<std::pair<std::vector<Cyclotomic>, std::size_t>> rows;
  for (Vec v : vectors) {
    if (v[id_class] == 0) throw Error(ErrorCode::LiftFailure, "eigenvector vanishes on the identity class");
    const u64 scale = F.inv(v[id_class]);
    for (auto& x : v) x = F.mul(x, scale);

    u64 norm = 0;
    for (std::size_t j = 0; j < r; ++j) {
      norm = F.add(norm, F.mul(F.mul(v[j], v[cls.inverse_class[j]]), F.inv(cls.sizes[j] % F.p)));
    }
    const u64 target = F.mul(n % F.p, F.inv(norm));
    std::size_t degree = 0;
    for (std::size_t d = 1; d * d <= n; ++d) {
      if (F.mul(d, d) == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::LiftFailure, "no admissible degree for a central character");

    Vec chi_mod(r);
    for (std::size_t j = 0; j < r; ++j) chi_mod[j] = F.mul(F.mul(degree % F.p, v[j]), F.inv(cls.sizes[j] % F.p));

    std::vector<Cyclotomic> values;
    values.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
      const Elem g = cls.reps[j];
      const std::size_t o = group.element_order(g);
      const u64 z = F.pow(zeta, e / o);
      const u64 z_inv = F.inv(z);
      const u64 inv_o = F.inv(o % F.p);
      std::vector<u64> trace_of_power(o);
      Elem power = group.identity();
      for (std::size_t l = 0; l < o; ++l) {
        trace_of_power[l] = chi_mod[cls.class_of[power]];
        power = group.mul(power, g);
      }
      Cyclotomic value(e);
      std::size_t total = 0;
      for (std::size_t k = 0; k < o; ++k) {
        // multiplicity of eigenvalue zeta_o^k
        u64 s = 0;
        const u64 step = F.pow(z_inv, k);
        u64 w = 1;
        for (std::size_t l = 0; l < o; ++l) {
          s = F.add(s, F.mul(trace_of_power[l], w));
          w = F.mul(w, step);
        }
        const u64 mult = F.mul(s, inv_o);
        if (mult > degree) throw Error(ErrorCode::LiftFailure, "eigenvalue multiplicity out of range");
        total += mult;
        if (mult) value += Cyclotomic::root_of_unity(e, k * (e / o)) * BigRational(mult);
      }
      if (total != degree) throw Error(ErrorCode::LiftFailure, "eigenvalue multiplicities do not sum to the degree");
      values.push_back(std::move(value));
    }
    rows.emplace_back(std::move(values), degree);
  }

  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return row_before(a.first, a.second, b.first, b.second); });
  for (auto& [values, degree] : rows) {
    table.chars.push_back(std::move(values));
    table.degrees.push_back(degree);
  }
  verify_orthogonality(table);
  return table;
}

Cyclotomic inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b) {
  const std::size_t e = table.classes.exponent;
  Cyclotomic sum(e);
  for (std::size_t k = 0; k < table.classes.count(); ++k) {
    sum += a[k] * b[k].conj() * BigRational(table.classes.sizes[k]);
  }
  return sum * BigRational(1, table.group.order());
}

void verify_orthogonality(const CharacterTable& table) {
  const auto& cls = table.classes;
  const std::size_t r = cls.count();
  const std::size_t n = table.group.order();
  const std::size_t e = cls.exponent;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InternalDefect, "character table: " + what); };
  if (table.chars.size() != r) fail("number of irreducibles differs from number of classes");

  std::size_t square_sum = 0;
  for (std::size_t d : table.degrees) {
    if (d == 0 || n % d != 0) fail("degree " + std::to_string(d) + " does not divide |G|");
    square_sum += d * d;
  }
  if (square_sum != n) fail("sum of squared degrees is not |G|");

  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& v : table.chars[i]) conj[i].push_back(v.conj());

  const Cyclotomic zero(e);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic s(e);
      for (std::size_t k = 0; k < r; ++k) s += table.chars[i][k] * conj[j][k] * BigRational(cls.sizes[k]);
      const Cyclotomic expected = i == j ? Cyclotomic(e, BigRational(n)) : zero;
      if (s != expected) fail("rows " + std::to_string(i) + "," + std::to_string(j) + " not orthogonal");
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic s(e);
      for (std::size_t i = 0; i < r; ++i) s += table.chars[i][k] * conj[i][l];
      const Cyclotomic expected = k == l ? Cyclotomic(e, BigRational(n / cls.sizes[k])) : zero;
      if (s != expected) fail("columns " + std::to_string(k) + "," + std::to_string(l) + " not orthogonal");
    }
  }
}

std::vector<Cyclotomic> compose_character(const CharacterTable& table, std::size_t chi, const GroupMap& phi) {
  const auto& cls = table.classes;
  std::vector<Cyclotomic> out;
  out.reserve(cls.count());
  for (Elem rep : cls.reps) out.push_back(table.chars[chi][cls.class_of[phi(rep)]]);
  return out;
}

std::vector<DualImage> dual_action(const CharacterTable& table, const GroupMap& phi) {
  if (!phi.source().same(table.group) || !phi.is_endomorphism()) {
    throw Error(ErrorCode::InvalidInput, "map is not an endomorphism of the table's group");
  }
  const std::size_t r = table.size();
  const std::size_t e = table.classes.exponent;
  std::vector<DualImage> out;
  for (std::size_t chi = 0; chi < r; ++chi) {
    const auto composed = compose_character(table, chi, phi);
    DualImage image;
    Cyclotomic rebuilt(e);
    std::size_t nonzero = 0, last = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const Cyclotomic ip = inner_product(table, composed, table.chars[i]);
      if (!ip.is_rational()) throw Error(ErrorCode::InternalDefect, "irrational multiplicity");
      const BigRational m = ip.rational_value();
      if (boost::multiprecision::denominator(m) != 1 || m < 0) {
        throw Error(ErrorCode::InternalDefect, "multiplicity is not a nonnegative integer");
      }
      image.multiplicities.push_back(boost::multiprecision::numerator(m));
      if (m != 0) {
        nonzero += 1;
        last = i;
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      Cyclotomic s(e);
      for (std::size_t i = 0; i < r; ++i)
        if (image.multiplicities[i] != 0) s += table.chars[i][k] * BigRational(image.multiplicities[i]);
      if (s != composed[k]) throw Error(ErrorCode::InternalDefect, "decomposition does not reconstruct chi∘phi");
    }
    if (nonzero == 1 && image.multiplicities[last] == 1) {
      image.kind = last == chi ? DualImage::Kind::FixedBy : DualImage::Kind::MappedTo;
      image.index = last;
    }
    out.push_back(std::move(image));
  }
  return out;
}

std::size_t fixed_points_count(const CharacterTable& table, const GroupMap& phi) {
  if (!phi.source().same(table.group) || !phi.is_endomorphism()) {
    throw Error(ErrorCode::InvalidInput, "map is not an endomorphism of the table's group");
  }
  const auto& cls = table.classes;
  std::vector<std::size_t> image_class(cls.count());
  for (std::size_t k = 0; k < cls.count(); ++k) image_class[k] = cls.class_of[phi(cls.reps[k])];
  std::size_t fixed = 0;
  for (const auto& row : table.chars) {
    bool same = true;
    for (std::size_t k = 0; k < cls.count() && same; ++k) same = row[image_class[k]] == row[k];
    if (same) ++fixed;
  }
  return fixed;
}

BurnsideReport burnside_check(const CharacterTable& table, const GroupMap& phi) {
  return BurnsideReport{reidemeister_number(phi), fixed_points_count(table, phi)};
}

BurnsideReport burnside_check(const GroupMap& phi) { return burnside_check(character_table(phi.source()), phi); }

}  // namespace twb

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

namespace twb::oracle {

std::size_t permutation_closure_size(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens) {
  using Perm = std::vector<std::size_t>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::set<Perm> elements(gens.begin(), gens.end());
  elements.insert(id);
  while (true) {
    std::set<Perm> next = elements;
    for (const auto& a : elements)
      for (const auto& b : elements) {
        Perm c(degree);
        for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
        next.insert(std::move(c));
      }
    if (next.size() == elements.size()) return elements.size();
    elements = std::move(next);
  }
}

TwistedPartition naive_twisted_classes(const GroupMap& phi) {
  const FiniteGroup& G = phi.source();
  const std::size_t n = G.order();
  TwistedPartition out;
  out.class_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (out.class_of[x] != n) continue;
    const std::size_t c = out.class_reps.size();
    out.class_reps.push_back(Elem(x));
    out.class_sizes.push_back(0);
    for (std::size_t g = 0; g < n; ++g) {
      const Elem y = G.mul(G.mul(Elem(g), Elem(x)), G.inv(phi(Elem(g))));
      if (out.class_of[y] == n) {
        out.class_of[y] = c;
        ++out.class_sizes[c];
      }
    }
  }
  return out;
}

namespace {

void extend(const FiniteGroup& G, std::vector<Elem>& image, std::size_t next, bool bijective, std::vector<char>& used,
            std::size_t& count) {
  const std::size_t n = G.order();
  if (next == n) {
    ++count;
    return;
  }
  for (std::size_t y = 0; y < n; ++y) {
    if (bijective && used[y]) continue;
    image[next] = Elem(y);
    bool ok = true;
    for (std::size_t a = 0; a <= next && ok; ++a) {
      for (std::size_t b = 0; b <= next && ok; ++b) {
        const Elem ab = G.mul(Elem(a), Elem(b));
        if (ab <= next) ok = image[ab] == G.mul(image[a], image[b]);
      }
    }
    if (!ok) continue;
    used[y] = 1;
    extend(G, image, next + 1, bijective, used, count);
    used[y] = 0;
  }
}

}  // namespace

std::size_t count_maps_satisfying_law(const FiniteGroup& group, bool automorphisms_only) {
  std::vector<Elem> image(group.order());
  std::vector<char> used(group.order(), 0);
  std::size_t count = 0;
  extend(group, image, 0, automorphisms_only, used, count);
  return count;
}

std::vector<std::vector<Cyclotomic>> regular_representation_table(const FiniteGroup& group, const ConjugacyData& cls) {
  using Matrix = Eigen::MatrixXcd;
  const std::size_t n = group.order();
  const std::size_t r = cls.count();
  const std::size_t e = cls.exponent;

  auto left_regular = [&](Elem g) {
    Matrix L = Matrix::Zero(Eigen::Index(n), Eigen::Index(n));
    for (std::size_t h = 0; h < n; ++h) L(Eigen::Index(group.mul(g, Elem(h))), Eigen::Index(h)) = 1.0;
    return L;
  };

  std::mt19937 rng(20240601u);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<std::complex<double>> weights(r);
  for (auto& w : weights) w = {coef(rng), coef(rng)};
  Matrix Z = Matrix::Zero(Eigen::Index(n), Eigen::Index(n));
  for (std::size_t x = 0; x < n; ++x) Z += weights[cls.class_of[x]] * left_regular(Elem(x));

  Eigen::ComplexEigenSolver<Matrix> solver(Z);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  // Cluster equal eigenvalues.
  std::vector<std::vector<Eigen::Index>> clusters;
  std::vector<std::complex<double>> centres;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size() && !placed; ++c) {
      if (std::abs(values[i] - centres[c]) < 1e-6) {
        clusters[c].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      clusters.push_back({i});
      centres.push_back(values[i]);
    }
  }
  if (clusters.size() != r) throw std::runtime_error("regular representation oracle: wrong number of eigenvalue clusters");

  std::vector<Matrix> class_regular;
  for (std::size_t k = 0; k < r; ++k) class_regular.push_back(left_regular(cls.reps[k]));

  std::vector<std::vector<Cyclotomic>> table;
  for (const auto& cluster : clusters) {
    Matrix basis(Eigen::Index(n), Eigen::Index(cluster.size()));
    for (std::size_t c = 0; c < cluster.size(); ++c) basis.col(Eigen::Index(c)) = vectors.col(cluster[c]);
    Eigen::HouseholderQR<Matrix> qr(basis);
    Matrix Q = qr.householderQ() * Matrix::Identity(Eigen::Index(n), Eigen::Index(cluster.size()));
    Matrix P = Q * Q.adjoint();
    const double dim = std::real(P.trace());
    const double degree = std::sqrt(dim);
    if (std::abs(degree - std::round(degree)) > 1e-6) throw std::runtime_error("isotypic dimension is not a square");

    std::vector<std::complex<double>> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = (P * class_regular[k]).trace() / std::round(degree);

    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < r; ++k) {
      const Elem g = cls.reps[k];
      const std::size_t o = group.element_order(g);
      Cyclotomic value(e);
      for (std::size_t j = 0; j < o; ++j) {
        std::complex<double> s = 0.0;
        Elem power = group.identity();
        for (std::size_t l = 0; l < o; ++l) {
          s += chi[cls.class_of[power]] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * l) / double(o));
          power = group.mul(power, g);
        }
        s /= double(o);
        const double m = std::round(s.real());
        if (std::abs(s - std::complex<double>(m, 0.0)) > 1e-6 || m < 0) {
          throw std::runtime_error("eigenvalue multiplicity is not a nonnegative integer");
        }
        if (m > 0) value += Cyclotomic::root_of_unity(e, j * (e / o)) * BigRational(static_cast<long long>(m));
      }
      row.push_back(std::move(value));
    }
    table.push_back(std::move(row));
  }
  return table;
}

bool same_rows_up_to_permutation(const std::vector<std::vector<Cyclotomic>>& a,
                                 const std::vector<std::vector<Cyclotomic>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& row : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && b[j] == row) {
        used[j] = 1;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::uint64_t lattice_index_by_orbits(const IntegerMatrix& m) {
  using Rational = boost::multiprecision::cpp_rational;
  const std::size_t k = m.rows();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(m(i, j));
    a[i][k + i] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) return 0;
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * k; ++j) a[i][j] -= f * a[c][j];
    }
  }
  BigInt big_d = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k; j < 2 * k; ++j) big_d = boost::multiprecision::lcm(big_d, boost::multiprecision::denominator(a[i][j]));
  const std::uint64_t d = big_d.convert_to<std::uint64_t>();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= d;
  if (points > 4'000'000) throw std::runtime_error("lattice oracle: box too large");

  std::vector<std::vector<std::int64_t>> steps(k, std::vector<std::int64_t>(k));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < k; ++i) {
      BigInt v = m(i, c) % BigInt(d);
      if (v < 0) v += d;
      steps[c][i] = v.convert_to<std::int64_t>();
    }
  std::vector<std::uint64_t> parent(points);
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t p = 0; p < points; ++p) {
    std::vector<std::int64_t> coords(k);
    std::uint64_t t = p;
    for (std::size_t i = 0; i < k; ++i) {
      coords[i] = std::int64_t(t % d);
      t /= d;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t q = 0, scale = 1;
      for (std::size_t i = 0; i < k; ++i) {
        q += std::uint64_t((coords[i] + steps[c][i]) % std::int64_t(d)) * scale;
        scale *= d;
      }
      const auto ra = find(p), rb = find(q);
      if (ra != rb) parent[ra] = rb;
    }
  }
  std::uint64_t orbits = 0;
  for (std::uint64_t p = 0; p < points; ++p)
    if (find(p) == p) ++orbits;
  return orbits;
}

}  // namespace twb::oracle

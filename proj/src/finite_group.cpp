#include "twb/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "twb/errors.hpp"

namespace twb {

namespace {

constexpr std::size_t kSampledTriples = 200000;
constexpr std::size_t kGreedyCandidates = 64;

void check_cap(std::size_t order, const GroupOptions& options) {
  if (order > options.order_cap) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "group order " + std::to_string(order) + " exceeds cap " + std::to_string(options.order_cap));
  }
}

std::size_t checked_factorial(std::size_t n, const GroupOptions& options) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    check_cap(f, options);
  }
  return f;
}

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

// Group from an explicit list of distinct permutations closed under
// composition; the list order is the element order.
FiniteGroup from_perm_list(const std::vector<Perm>& perms, const GroupOptions& options) {
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], Elem(i));
  std::vector<std::vector<Elem>> table(perms.size(), std::vector<Elem>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) table[a][b] = index.at(compose(perms[a], perms[b]));
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_notation(p));
  return FiniteGroup::from_cayley(table, std::move(labels), options);
}

}  // namespace

std::size_t default_order_cap() {
  if (const char* env = std::getenv("TWB_ORDER_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::size_t(v);
  }
  return kDefaultOrderCap;
}

bool audit_is_full(AuditMode mode, std::size_t order) {
  switch (mode) {
    case AuditMode::Full: return true;
    case AuditMode::Sampled: return false;
    case AuditMode::Auto: break;
  }
  return order < kFullAuditBelow;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<Elem>>& table,
                                     std::vector<std::string> labels, const GroupOptions& options) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty multiplication table");
  check_cap(n, options);
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::InvalidInput, "row " + std::to_string(i) + " has length " +
                                               std::to_string(table[i].size()) + ", expected " + std::to_string(n));
    }
    for (Elem v : table[i]) {
      if (v >= n) throw Error(ErrorCode::InvalidInput, "entry " + std::to_string(v) + " out of range in row " + std::to_string(i));
      flat.push_back(v);
    }
  }
  if (!labels.empty() && labels.size() != n) throw Error(ErrorCode::InvalidInput, "label count does not match order");
  return build(n, std::move(flat), std::move(labels), options);
}

FiniteGroup FiniteGroup::build(std::size_t n, std::vector<Elem> flat, std::vector<std::string> labels,
                               const GroupOptions& options) {
  auto data = std::make_shared<Data>();
  data->order = n;
  data->table = std::move(flat);
  data->labels = std::move(labels);
  auto at = [&](std::size_t a, std::size_t b) { return data->table[a * n + b]; };

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      data->identity = Elem(e);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NoIdentity, "no two-sided neutral element in the table");

  data->inverse.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = false;
    for (std::size_t y = 0; y < n && !ok; ++y) {
      if (at(x, y) == data->identity && at(y, x) == data->identity) {
        data->inverse[x] = Elem(y);
        ok = true;
      }
    }
    if (!ok) throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
  }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(a, at(b, c)) != at(at(a, b), c)) {
      throw Error(ErrorCode::NotAssociative, "a(bc) != (ab)c for (a,b,c) = (" + std::to_string(a) + "," +
                                                 std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (audit_is_full(options.audit, n)) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x7762u);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kSampledTriples; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }

  FiniteGroup group(data);

  // Greedy generating set.
  std::vector<std::size_t> orders(n);
  for (std::size_t x = 0; x < n; ++x) orders[x] = group.element_order(Elem(x));
  std::vector<Elem> gens;
  std::vector<char> inside(n, 0);
  inside[data->identity] = 1;
  std::size_t covered = 1;
  while (covered < n) {
    std::vector<Elem> candidates;
    for (std::size_t x = 0; x < n; ++x)
      if (!inside[x]) candidates.push_back(Elem(x));
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Elem a, Elem b) { return orders[a] > orders[b]; });
    if (candidates.size() > kGreedyCandidates) candidates.resize(kGreedyCandidates);
    std::sort(candidates.begin(), candidates.end());
    Elem best = candidates.front();
    std::size_t best_size = 0;
    for (Elem c : candidates) {
      gens.push_back(c);
      std::size_t size = group.closure(gens).size();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = c;
      }
    }
    gens.push_back(best);
    std::fill(inside.begin(), inside.end(), 0);
    for (Elem x : group.closure(gens)) inside[x] = 1;
    covered = best_size;
  }
  data->generators = std::move(gens);
  return group;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Perm>& generators,
                                           const GroupOptions& options) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    if (p.size() != degree) {
      throw Error(ErrorCode::InvalidInput, "generator " + std::to_string(g) + " has length " +
                                               std::to_string(p.size()) + ", expected degree " + std::to_string(degree));
    }
    std::vector<char> seen(degree, 0);
    for (std::size_t v : p) {
      if (v >= degree || seen[v]) throw Error(ErrorCode::InvalidInput, "generator " + std::to_string(g) + " is not a bijection");
      seen[v] = 1;
    }
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<Perm> elements{id};
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Elem>> right;  // right[x][g] = x * gen_g
  for (std::size_t head = 0; head < elements.size(); ++head) {
    right.emplace_back(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Perm next = compose(elements[head], generators[g]);
      auto [it, inserted] = index.emplace(next, Elem(elements.size()));
      if (inserted) {
        elements.push_back(std::move(next));
        parent.push_back(Elem(head));
        via.push_back(g);
        check_cap(elements.size(), options);
      }
      right[head][g] = it->second;
    }
  }

  const std::size_t n = elements.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = Elem(a);
    for (std::size_t b = 1; b < n; ++b) flat[a * n + b] = right[flat[a * n + parent[b]]][via[b]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(cycle_notation(p));
  return build(n, std::move(flat), std::move(labels), options);
}

Elem FiniteGroup::pow(Elem a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Elem result = identity();
  Elem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t x = 0; x < order(); ++x) e = std::lcm(e, element_order(Elem(x)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) return false;
  return true;
}

std::string FiniteGroup::label(Elem a) const {
  return data_->labels.empty() ? std::to_string(a) : data_->labels[a];
}

std::vector<Elem> FiniteGroup::closure(std::span<const Elem> gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<Elem> out{identity()};
  seen[identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Elem g : gens) {
      Elem y = mul(out[head], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::string cycle_notation(std::span<const std::size_t> perm) {
  std::ostringstream os;
  std::vector<char> done(perm.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == i) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = perm[j];
    }
    os << ')';
  }
  return any ? os.str() : std::string("()");
}

FiniteGroup cyclic_group(std::size_t n, const GroupOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclic group needs n >= 1");
  check_cap(n, options);
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = Elem((a + b) % n);
  }
  return FiniteGroup::from_cayley(table, std::move(labels), options);
}

FiniteGroup abelian_group(std::span<const std::size_t> invariants, const GroupOptions& options) {
  std::size_t n = 1;
  for (std::size_t d : invariants) {
    if (d == 0) throw Error(ErrorCode::InvalidInput, "abelian invariants must be positive");
    if (n > options.order_cap / d) check_cap(options.order_cap + 1, options);
    n *= d;
  }
  check_cap(n, options);
  const std::size_t m = invariants.size();
  auto decode = [&](std::size_t x) {
    std::vector<std::size_t> digits(m);
    for (std::size_t i = m; i-- > 0;) {
      digits[i] = x % invariants[i];
      x /= invariants[i];
    }
    return digits;
  };
  auto encode = [&](const std::vector<std::size_t>& digits) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < m; ++i) x = x * invariants[i] + digits[i];
    return x;
  };
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    auto da = decode(a);
    std::string label = "(";
    for (std::size_t i = 0; i < m; ++i) label += (i ? "," : "") + std::to_string(da[i]);
    labels.push_back(label + ")");
    for (std::size_t b = 0; b < n; ++b) {
      auto db = decode(b);
      for (std::size_t i = 0; i < m; ++i) db[i] = (da[i] + db[i]) % invariants[i];
      table[a][b] = Elem(encode(db));
    }
  }
  return FiniteGroup::from_cayley(table, std::move(labels), options);
}

FiniteGroup dihedral_group(std::size_t n, const GroupOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "dihedral group needs n >= 1");
  check_cap(2 * n, options);
  const std::size_t order = 2 * n;
  std::vector<std::vector<Elem>> table(order, std::vector<Elem>(order));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t ka = a % n, fa = a / n;
    std::string label = ka == 0 ? (fa ? "" : "e") : (ka == 1 ? "r" : "r^" + std::to_string(ka));
    if (fa) label += label.empty() ? "s" : " s";
    labels.push_back(label);
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t kb = b % n, fb = b / n;
      // r^ka s^fa r^kb s^fb = r^(ka + (-1)^fa kb) s^(fa+fb)
      const std::size_t k = fa ? (ka + n - kb) % n : (ka + kb) % n;
      table[a][b] = Elem(k + n * ((fa + fb) % 2));
    }
  }
  return FiniteGroup::from_cayley(table, std::move(labels), options);
}

FiniteGroup symmetric_group(std::size_t n, const GroupOptions& options) {
  checked_factorial(n, options);
  Perm p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Perm> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_perm_list(perms, options);
}

FiniteGroup alternating_group(std::size_t n, const GroupOptions& options) {
  checked_factorial(n, options);
  Perm p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Perm> perms;
  do
    if (is_even(p)) perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_perm_list(perms, options);
}

FiniteGroup quaternion_group(const GroupOptions& options) {
  // Unit i,j,k products: units[u][v] = (sign, unit) with 0=1,1=i,2=j,3=k.
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t ua = a / 2, ub = b / 2;
      int sign = kSign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      table[a][b] = Elem(2 * kUnit[ua][ub] + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup::from_cayley(table, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, options);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupOptions& options) {
  const std::size_t na = a.order(), nb = b.order();
  if (na > options.order_cap / nb) check_cap(options.order_cap + 1, options);
  const std::size_t n = na * nb;
  check_cap(n, options);
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a.label(Elem(x / nb)) + "," + b.label(Elem(x % nb)) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      table[x][y] = Elem(a.mul(Elem(x / nb), Elem(y / nb)) * nb + b.mul(Elem(x % nb), Elem(y % nb)));
    }
  }
  return FiniteGroup::from_cayley(table, std::move(labels), options);
}

FiniteGroup builtin_group(std::string_view name, std::span<const long long> params, const GroupOptions& options) {
  auto single = [&]() -> std::size_t {
    if (params.size() != 1 || params[0] < 0) {
      throw Error(ErrorCode::InvalidInput, std::string(name) + " takes one nonnegative parameter");
    }
    return std::size_t(params[0]);
  };
  if (name == "cyclic") return cyclic_group(single(), options);
  if (name == "dihedral") return dihedral_group(single(), options);
  if (name == "symmetric") return symmetric_group(single(), options);
  if (name == "alternating") return alternating_group(single(), options);
  if (name == "quaternion8") {
    if (!params.empty()) throw Error(ErrorCode::InvalidInput, "quaternion8 takes no parameters");
    return quaternion_group(options);
  }
  if (name == "abelian") {
    std::vector<std::size_t> inv;
    for (long long d : params) {
      if (d <= 0) throw Error(ErrorCode::InvalidInput, "abelian invariants must be positive");
      inv.push_back(std::size_t(d));
    }
    return abelian_group(inv, options);
  }
  throw Error(ErrorCode::UnknownName, "no built-in group named '" + std::string(name) + "'");
}

}  // namespace twb

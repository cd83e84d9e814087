#include "twb/twisted.hpp"

#include "twb/errors.hpp"

namespace twb {

namespace detail {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  std::size_t root = x;
  while (parent[root] != root) root = parent[root];
  while (parent[x] != root) {
    std::size_t next = parent[x];
    parent[x] = root;
    x = next;
  }
  return root;
}

TwistedPartition partition_from_roots(std::vector<std::size_t> parent) {
  TwistedPartition out;
  const std::size_t n = parent.size();
  out.class_of.assign(n, 0);
  std::vector<std::size_t> class_of_root(n, n);
  // Roots are component minima, so scanning upward meets each root first.
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = find_root(parent, x);
    if (class_of_root[r] == n) {
      class_of_root[r] = out.class_reps.size();
      out.class_reps.push_back(Elem(r));
      out.class_sizes.push_back(0);
    }
    out.class_of[x] = class_of_root[r];
    ++out.class_sizes[out.class_of[x]];
  }
  return out;
}

}  // namespace detail

TwistedPartition twisted_classes(const GroupMap& phi) {
  if (!phi.is_endomorphism()) throw Error(ErrorCode::InvalidInput, "twisted classes need an endomorphism");
  const FiniteGroup& G = phi.source();
  return orbit_partition(G.order(), G.generators(), [&](Elem g, Elem x) { return twisted_act(phi, g, x); });
}

std::size_t reidemeister_number(const GroupMap& phi) { return twisted_classes(phi).count(); }

}  // namespace twb

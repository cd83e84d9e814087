#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "twb/group_map.hpp"

namespace twb {

/// Partition of a finite group into twisted conjugacy classes.
/// Classes are numbered by their least element, which is also the
/// representative.
struct TwistedPartition {
  std::vector<std::size_t> class_of;
  std::vector<Elem> class_reps;
  std::vector<std::size_t> class_sizes;

  std::size_t count() const noexcept { return class_reps.size(); }
};

/// g . x = g x phi(g)^-1
inline Elem twisted_act(const GroupMap& phi, Elem g, Elem x) {
  const FiniteGroup& G = phi.source();
  return G.mul(G.mul(g, x), G.inv(phi(g)));
}

/// Orbits of the twisted action, by union-find over the generating set.
TwistedPartition twisted_classes(const GroupMap& phi);

/// R(phi), the number of twisted conjugacy classes.
std::size_t reidemeister_number(const GroupMap& phi);

/// Orbits of a group action of `group` on {0..points-1} given the action of
/// each generator. Classes are numbered by least point.
template <class Action>
TwistedPartition orbit_partition(std::size_t points, const std::vector<Elem>& gens, Action&& act);

namespace detail {
TwistedPartition partition_from_roots(std::vector<std::size_t> parent);
std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x);
}  // namespace detail

template <class Action>
TwistedPartition orbit_partition(std::size_t points, const std::vector<Elem>& gens, Action&& act) {
  std::vector<std::size_t> parent(points);
  for (std::size_t i = 0; i < points; ++i) parent[i] = i;
  for (std::size_t x = 0; x < points; ++x) {
    for (Elem g : gens) {
      std::size_t a = detail::find_root(parent, x);
      std::size_t b = detail::find_root(parent, act(g, Elem(x)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  return detail::partition_from_roots(std::move(parent));
}

}  // namespace twb

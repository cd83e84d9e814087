#include "twb/group_map.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

#include "twb/errors.hpp"

namespace twb {

namespace {

constexpr std::size_t kSampledPairs = 200000;

// Extends generator images along the breadth-first word tree. Returns the
// total map, or nullopt with `bad_edge` set to the first (x, generator
// position) whose two paths disagree. An empty result with bad_edge unset
// means the generators do not reach every element.
std::optional<std::vector<Elem>> extend_images(const FiniteGroup& G, std::span<const Elem> gens,
                                               std::span<const Elem> images,
                                               std::optional<std::pair<Elem, std::size_t>>* bad_edge) {
  const std::size_t n = G.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> img(n, kUnset);
  std::vector<Elem> queue{G.identity()};
  img[G.identity()] = G.identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = G.mul(x, gens[i]);
      const Elem value = G.mul(img[x], images[i]);
      if (img[y] == kUnset) {
        img[y] = value;
        queue.push_back(y);
      } else if (img[y] != value) {
        if (bad_edge) *bad_edge = std::pair{x, i};
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return img;
}

}  // namespace

GroupMap::GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (source_.order() == target_.order()) {
    std::vector<char> hit(target_.order(), 0);
    bijective_ = true;
    for (Elem y : image_) {
      if (hit[y]) {
        bijective_ = false;
        break;
      }
      hit[y] = 1;
    }
  }
}

GroupMap GroupMap::from_image(FiniteGroup source, FiniteGroup target, std::vector<Elem> image, AuditMode audit) {
  if (image.size() != source.order()) {
    throw Error(ErrorCode::InvalidInput, "image has " + std::to_string(image.size()) + " entries, expected " +
                                             std::to_string(source.order()));
  }
  for (Elem y : image) {
    if (y >= target.order()) throw Error(ErrorCode::InvalidInput, "image entry " + std::to_string(y) + " out of range");
  }
  auto witness = [](Elem a, Elem b) {
    return Error(ErrorCode::NotAHomomorphism,
                 "f(xy) != f(x)f(y) for (x,y) = (" + std::to_string(a) + "," + std::to_string(b) + ")");
  };
  auto law = [&](Elem a, Elem b) { return image[source.mul(a, b)] == target.mul(image[a], image[b]); };

  if (image[source.identity()] != target.identity()) {
    throw Error(ErrorCode::NotAHomomorphism, "identity is not mapped to identity");
  }
  // Edges of the generator word tree: sufficient on their own.
  for (std::size_t x = 0; x < source.order(); ++x)
    for (Elem g : source.generators())
      if (!law(Elem(x), g)) throw witness(Elem(x), g);

  const std::size_t n = source.order();
  if (audit_is_full(audit, n)) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!law(Elem(a), Elem(b))) throw witness(Elem(a), Elem(b));
  } else {
    std::mt19937_64 rng(0x6d61u);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kSampledPairs; ++s) {
      Elem a = Elem(pick(rng)), b = Elem(pick(rng));
      if (!law(a, b)) throw witness(a, b);
    }
  }
  return GroupMap(std::move(source), std::move(target), std::move(image));
}

GroupMap GroupMap::identity(const FiniteGroup& group) {
  std::vector<Elem> image(group.order());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = Elem(i);
  return GroupMap(group, group, std::move(image));
}

GroupMap GroupMap::after(const GroupMap& inner) const {
  if (!inner.target_.same(source_)) throw Error(ErrorCode::InvalidInput, "maps are not composable");
  std::vector<Elem> image(inner.image_.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = image_[inner.image_[x]];
  return GroupMap(inner.source_, target_, std::move(image));
}

GroupMap endo_from_images(const FiniteGroup& group, std::span<const Elem> generators, std::span<const Elem> images,
                          AuditMode audit) {
  if (generators.size() != images.size()) {
    throw Error(ErrorCode::InvalidInput, "generator and image lists differ in length");
  }
  for (Elem x : generators)
    if (x >= group.order()) throw Error(ErrorCode::InvalidInput, "generator " + std::to_string(x) + " out of range");
  for (Elem x : images)
    if (x >= group.order()) throw Error(ErrorCode::InvalidInput, "image " + std::to_string(x) + " out of range");

  std::optional<std::pair<Elem, std::size_t>> bad;
  auto img = extend_images(group, generators, images, &bad);
  if (!img) {
    if (bad) {
      const auto [x, i] = *bad;
      throw Error(ErrorCode::NotAHomomorphism, "assignment is inconsistent at (x,g) = (" + std::to_string(x) + "," +
                                                   std::to_string(generators[i]) + ")");
    }
    throw Error(ErrorCode::NotGenerating, "the given elements generate a proper subgroup");
  }
  return GroupMap::from_image(group, group, std::move(*img), audit);
}

std::vector<GroupMap> enumerate_endomorphisms(const FiniteGroup& group, bool automorphisms_only,
                                              std::size_t search_cap) {
  const auto& gens = group.generators();
  const std::size_t n = group.order();
  std::vector<std::vector<Elem>> choices(gens.size());
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t ord = group.element_order(gens[i]);
    for (std::size_t y = 0; y < n; ++y)
      if (ord % group.element_order(Elem(y)) == 0) choices[i].push_back(Elem(y));
    if (tuples > search_cap / choices[i].size()) tuples = search_cap + 1;
    else tuples *= choices[i].size();
  }
  if (tuples > search_cap) {
    throw Error(ErrorCode::SearchLimitExceeded,
                "more than " + std::to_string(search_cap) + " generator-image tuples to try");
  }

  std::vector<std::vector<Elem>> found;
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = choices[i][pos[i]];
    if (auto img = extend_images(group, gens, images, nullptr)) {
      bool keep = true;
      if (automorphisms_only) {
        std::vector<char> hit(n, 0);
        for (Elem y : *img) {
          if (hit[y]) {
            keep = false;
            break;
          }
          hit[y] = 1;
        }
      }
      if (keep) found.push_back(std::move(*img));
    }
    std::size_t i = gens.size();
    while (i > 0 && ++pos[i - 1] == choices[i - 1].size()) pos[--i] = 0;
    if (i == 0) break;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<GroupMap> maps;
  maps.reserve(found.size());
  for (auto& img : found) maps.push_back(GroupMap::from_image(group, group, std::move(img)));
  return maps;
}

GroupMap iterate_map(const GroupMap& phi, std::size_t n) {
  if (!phi.is_endomorphism()) throw Error(ErrorCode::InvalidInput, "only endomorphisms can be iterated");
  GroupMap result = GroupMap::identity(phi.source());
  for (std::size_t i = 0; i < n; ++i) result = phi.after(result);
  return result;
}

FiniteGroup subgroup(const FiniteGroup& group, std::span<const Elem> elements, const GroupOptions& options) {
  std::unordered_map<Elem, Elem> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], Elem(i));
  std::vector<std::vector<Elem>> table(elements.size(), std::vector<Elem>(elements.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    labels.push_back(group.label(elements[a]));
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = index.find(group.mul(elements[a], elements[b]));
      if (it == index.end()) throw Error(ErrorCode::InvalidInput, "element set is not closed under multiplication");
      table[a][b] = it->second;
    }
  }
  return FiniteGroup::from_cayley(table, std::move(labels), options);
}

EventualImage eventual_image(const GroupMap& phi) {
  if (!phi.is_endomorphism()) throw Error(ErrorCode::InvalidInput, "eventual image needs an endomorphism");
  const FiniteGroup& G = phi.source();
  std::vector<Elem> current(G.order());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = Elem(i);
  std::size_t steps = 0;
  while (true) {
    std::vector<Elem> next;
    next.reserve(current.size());
    for (Elem x : current) next.push_back(phi(x));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() == current.size()) break;  // phi^(n+1)(G) is contained in phi^n(G)
    current = std::move(next);
    ++steps;
  }
  FiniteGroup H = subgroup(G, current);
  std::unordered_map<Elem, Elem> index;
  for (std::size_t i = 0; i < current.size(); ++i) index.emplace(current[i], Elem(i));
  std::vector<Elem> restricted(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) restricted[i] = index.at(phi(current[i]));
  GroupMap phi_h = GroupMap::from_image(H, H, std::move(restricted));
  return EventualImage{std::move(H), std::move(current), std::move(phi_h), steps};
}

}  // namespace twb

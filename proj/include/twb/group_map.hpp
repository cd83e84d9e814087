#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twb/finite_group.hpp"

namespace twb {

inline constexpr std::size_t kDefaultSearchCap = 5'000'000;

/// A homomorphism between finite groups, stored as its total element map.
class GroupMap {
 public:
  /// Validates the homomorphism law (all pairs when the audit is full,
  /// sampled pairs otherwise). Throws NotAHomomorphism naming a failing pair.
  static GroupMap from_image(FiniteGroup source, FiniteGroup target, std::vector<Elem> image,
                             AuditMode audit = AuditMode::Auto);

  static GroupMap identity(const FiniteGroup& group);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  Elem operator()(Elem x) const noexcept { return image_[x]; }
  bool is_bijective() const noexcept { return bijective_; }
  bool is_endomorphism() const noexcept { return source_.same(target_); }

  /// (this ∘ inner)(x) = this(inner(x)).
  GroupMap after(const GroupMap& inner) const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.source_.same(b.source_) && a.target_.same(b.target_) && a.image_ == b.image_;
  }

 private:
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> image);

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> image_;
  bool bijective_ = false;
};

/// The endomorphism of `group` sending generators[i] to images[i].
/// Throws NotGenerating if the generators miss part of the group and
/// NotAHomomorphism if the assignment does not extend.
GroupMap endo_from_images(const FiniteGroup& group, std::span<const Elem> generators, std::span<const Elem> images,
                          AuditMode audit = AuditMode::Auto);

/// All endomorphisms (or automorphisms) of `group`, by exhausting images of
/// the greedy generating set. Sorted by image map. Throws SearchLimitExceeded
/// when the number of candidate tuples exceeds `search_cap`.
std::vector<GroupMap> enumerate_endomorphisms(const FiniteGroup& group, bool automorphisms_only,
                                              std::size_t search_cap = kDefaultSearchCap);

/// phi^n for n >= 1.
GroupMap iterate_map(const GroupMap& phi, std::size_t n);

/// Subgroup `elements` (sorted indices) of `group` as a group in its own
/// right; element i of the result is elements[i].
FiniteGroup subgroup(const FiniteGroup& group, std::span<const Elem> elements, const GroupOptions& options = {});

struct EventualImage {
  FiniteGroup subgroup;
  std::vector<Elem> embedding;  // subgroup index -> index in the ambient group
  GroupMap restricted;          // phi restricted to the subgroup
  std::size_t steps = 0;        // least n with phi^n(G) = phi^(n+1)(G)
};

/// Stable image H = phi^n(G) together with phi restricted to H.
EventualImage eventual_image(const GroupMap& phi);

}  // namespace twb

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twb/errors.hpp"
#include "twb/finite_group.hpp"
#include "twb/group_map.hpp"
#include "twb/twisted.hpp"

using namespace twb;

namespace {

std::vector<FiniteGroup> small_groups() {
  return {cyclic_group(1),   cyclic_group(4),       cyclic_group(6),   dihedral_group(4),
          symmetric_group(3), alternating_group(4), quaternion_group(), abelian_group(std::vector<std::size_t>{2, 2}),
          symmetric_group(4)};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::InternalDefect;
}

}  // namespace

TEST(GroupFromCayley, TrivialTable) {
  auto g = FiniteGroup::from_cayley({{0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_TRUE(g.generators().empty());
}

TEST(GroupFromCayley, CyclicThree) {
  auto g = FiniteGroup::from_cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inv(1), 2u);
  EXPECT_EQ(g.exponent(), 3u);
}

TEST(GroupFromCayley, IdentityNeedNotBeZero) {
  // Z/2 with the identity stored at index 1.
  auto g = FiniteGroup::from_cayley({{1, 0}, {0, 1}});
  EXPECT_EQ(g.identity(), 1u);
  EXPECT_EQ(g.inv(0), 0u);
}

TEST(GroupFromCayley, RejectsBadTables) {
  // A loop of order 5: Latin square with identity 0, every element its own
  // inverse, but (1*1)*2 = 2 while 1*(1*2) = 4.
  std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(code_of([&] { FiniteGroup::from_cayley(loop); }), ErrorCode::NotAssociative);
  EXPECT_EQ(code_of([] { FiniteGroup::from_cayley({{0, 0}, {0, 0}}); }), ErrorCode::NoIdentity);
  // identity 0 but element 1 has no inverse
  EXPECT_EQ(code_of([] { FiniteGroup::from_cayley({{0, 1}, {1, 1}}); }), ErrorCode::NoInverse);
  EXPECT_EQ(code_of([] { FiniteGroup::from_cayley({{0, 1}, {1}}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { FiniteGroup::from_cayley({{0, 2}, {1, 0}}); }), ErrorCode::InvalidInput);
}

TEST(GroupFromPermutations, MatchesClosureOracle) {
  const std::vector<std::vector<std::size_t>> s3{{1, 2, 0}, {1, 0, 2}};
  auto g = FiniteGroup::from_permutations(3, s3);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.order(), oracle::permutation_closure_size(3, s3));

  const std::vector<std::vector<std::size_t>> v{{1, 0, 3, 2}};
  auto h = FiniteGroup::from_permutations(4, v);
  EXPECT_EQ(h.order(), 2u);
  EXPECT_EQ(h.order(), oracle::permutation_closure_size(4, v));

  auto t = FiniteGroup::from_permutations(1, {});
  EXPECT_EQ(t.order(), 1u);
}

TEST(GroupFromPermutations, BreadthFirstIndexing) {
  auto g = FiniteGroup::from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.label(0), "()");
  EXPECT_EQ(g.label(1), "(0 1 2)");
  EXPECT_EQ(g.label(2), "(0 1)");
}

TEST(GroupFromPermutations, OrderCapAndBadInput) {
  GroupOptions capped;
  capped.order_cap = 5;
  EXPECT_EQ(code_of([&] { FiniteGroup::from_permutations(3, {{1, 2, 0}, {1, 0, 2}}, capped); }),
            ErrorCode::OrderLimitExceeded);
  EXPECT_EQ(code_of([] { FiniteGroup::from_permutations(3, {{0, 0, 1}}); }), ErrorCode::InvalidInput);
}

TEST(Builtins, OrdersAndNames) {
  EXPECT_EQ(cyclic_group(1).order(), 1u);
  EXPECT_EQ(dihedral_group(4).order(), 8u);
  EXPECT_EQ(dihedral_group(4).order(), oracle::permutation_closure_size(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}));
  EXPECT_EQ(abelian_group(std::vector<std::size_t>{2, 4}).order(), 8u);
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_EQ(alternating_group(4).order(), 12u);
  EXPECT_EQ(quaternion_group().order(), 8u);
  EXPECT_EQ(direct_product(cyclic_group(2), cyclic_group(3)).order(), 6u);
  EXPECT_TRUE(direct_product(cyclic_group(2), cyclic_group(3)).is_abelian());
  EXPECT_FALSE(quaternion_group().is_abelian());
  EXPECT_EQ(quaternion_group().exponent(), 4u);

  const long long four[] = {4};
  EXPECT_EQ(builtin_group("dihedral", four).order(), 8u);
  EXPECT_EQ(code_of([&] { builtin_group("klein", four); }), ErrorCode::UnknownName);
  GroupOptions capped;
  capped.order_cap = 100;
  const long long five[] = {5};
  EXPECT_EQ(code_of([&] { builtin_group("symmetric", five, capped); }), ErrorCode::OrderLimitExceeded);
}

TEST(Builtins, GreedyGeneratorsAreSmall) {
  for (const auto& g : small_groups()) {
    EXPECT_LE(g.generators().size(), 3u);
    EXPECT_EQ(g.closure(g.generators()).size(), g.order());
  }
  EXPECT_EQ(abelian_group(std::vector<std::size_t>{2, 2, 2}).generators().size(), 3u);
}

TEST(EndoFromImages, Examples) {
  auto z3 = cyclic_group(3);
  const Elem one[] = {1}, two[] = {2};
  auto inv = endo_from_images(z3, one, two);
  EXPECT_EQ(inv.image(), (std::vector<Elem>{0, 2, 1}));
  EXPECT_TRUE(inv.is_bijective());

  auto z4 = cyclic_group(4);
  auto dbl = endo_from_images(z4, one, two);
  EXPECT_EQ(dbl.image(), (std::vector<Elem>{0, 2, 0, 2}));
  EXPECT_FALSE(dbl.is_bijective());

  auto s3 = symmetric_group(3);
  auto id = endo_from_images(s3, s3.generators(), s3.generators());
  EXPECT_EQ(id, GroupMap::identity(s3));
}

TEST(EndoFromImages, Errors) {
  auto z4 = cyclic_group(4);
  const Elem two[] = {2};
  EXPECT_EQ(code_of([&] { endo_from_images(z4, two, two); }), ErrorCode::NotGenerating);
  auto z3 = cyclic_group(3);
  // 2 = 1 + 1 must map to 2, not 1
  const Elem gens[] = {1, 2}, bad[] = {1, 1};
  EXPECT_EQ(code_of([&] { endo_from_images(z3, gens, bad); }), ErrorCode::NotAHomomorphism);
  EXPECT_EQ(code_of([&] { GroupMap::from_image(z4, z4, {0, 1, 1, 3}); }), ErrorCode::NotAHomomorphism);
}

TEST(EnumerateEndomorphisms, CountsMatchBacktrackingOracle) {
  EXPECT_EQ(enumerate_endomorphisms(cyclic_group(1), false).size(), 1u);
  EXPECT_EQ(enumerate_endomorphisms(cyclic_group(3), true).size(), 2u);
  EXPECT_EQ(enumerate_endomorphisms(symmetric_group(3), true).size(), 6u);
  EXPECT_EQ(enumerate_endomorphisms(symmetric_group(3), false).size(), 10u);
  for (const auto& g : small_groups()) {
    if (g.order() > 12) continue;
    for (bool aut : {false, true}) {
      EXPECT_EQ(enumerate_endomorphisms(g, aut).size(), oracle::count_maps_satisfying_law(g, aut))
          << "order " << g.order() << " aut " << aut;
    }
  }
}

TEST(EnumerateEndomorphisms, SortedDistinctAndCapped) {
  auto maps = enumerate_endomorphisms(dihedral_group(4), false);
  for (std::size_t i = 1; i < maps.size(); ++i) EXPECT_LT(maps[i - 1].image(), maps[i].image());
  EXPECT_EQ(code_of([] { enumerate_endomorphisms(symmetric_group(4), false, 10); }), ErrorCode::SearchLimitExceeded);
}

TEST(TwistedClasses, Examples) {
  auto s3 = symmetric_group(3);
  auto part = twisted_classes(GroupMap::identity(s3));
  EXPECT_EQ(part.count(), 3u);

  auto z3 = cyclic_group(3);
  const Elem one[] = {1}, two[] = {2};
  EXPECT_EQ(reidemeister_number(endo_from_images(z3, one, two)), 1u);
  EXPECT_EQ(oracle::naive_twisted_classes(endo_from_images(z3, one, two)).count(), 1u);

  auto z4 = cyclic_group(4);
  EXPECT_EQ(reidemeister_number(endo_from_images(z4, one, two)), 1u);
  EXPECT_EQ(reidemeister_number(GroupMap::identity(cyclic_group(1))), 1u);
  EXPECT_EQ(reidemeister_number(GroupMap::identity(s3)), 3u);
}

TEST(TwistedClasses, KleinSwap) {
  auto v = abelian_group(std::vector<std::size_t>{2, 2});  // (a,b) -> 2a + b
  auto swap = GroupMap::from_image(v, v, {0, 2, 1, 3});
  // frozen from the full 16-pair scan
  EXPECT_EQ(oracle::naive_twisted_classes(swap).count(), 2u);
  EXPECT_EQ(reidemeister_number(swap), 2u);
}

TEST(TwistedClasses, MatchesNaiveScanOnEveryEndomorphism) {
  for (const auto& g : small_groups()) {
    for (const auto& phi : enumerate_endomorphisms(g, false)) {
      auto fast = twisted_classes(phi);
      auto slow = oracle::naive_twisted_classes(phi);
      ASSERT_EQ(fast.class_of, slow.class_of);
      ASSERT_EQ(fast.class_sizes, slow.class_sizes);
    }
  }
}

TEST(TwistedClasses, ActionAndPartitionLaws) {
  for (const auto& G : small_groups()) {
    for (const auto& phi : enumerate_endomorphisms(G, false)) {
      for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
          for (std::size_t x = 0; x < G.order(); ++x) {
            ASSERT_EQ(twisted_act(phi, G.mul(Elem(g), Elem(h)), Elem(x)),
                      twisted_act(phi, Elem(g), twisted_act(phi, Elem(h), Elem(x))));
          }
      auto part = twisted_classes(phi);
      std::size_t total = 0;
      for (auto s : part.class_sizes) total += s;
      EXPECT_EQ(total, G.order());
      for (std::size_t c = 0; c < part.count(); ++c) EXPECT_EQ(part.class_of[part.class_reps[c]], c);
      // phi(x) lies in the class of x
      for (std::size_t x = 0; x < G.order(); ++x) EXPECT_EQ(part.class_of[phi(Elem(x))], part.class_of[x]);
    }
  }
}

TEST(IterateMap, Examples) {
  auto z3 = cyclic_group(3);
  const Elem one[] = {1}, two[] = {2};
  auto inv = endo_from_images(z3, one, two);
  EXPECT_EQ(iterate_map(inv, 1), inv);
  EXPECT_EQ(iterate_map(inv, 2), GroupMap::identity(z3));

  auto z4 = cyclic_group(4);
  auto dbl = endo_from_images(z4, one, two);
  EXPECT_EQ(iterate_map(dbl, 2).image(), (std::vector<Elem>{0, 0, 0, 0}));
}

TEST(EventualImage, Examples) {
  auto s3 = symmetric_group(3);
  auto auto_image = eventual_image(GroupMap::identity(s3));
  EXPECT_EQ(auto_image.steps, 0u);
  EXPECT_EQ(auto_image.subgroup.order(), 6u);

  auto z4 = cyclic_group(4);
  const Elem one[] = {1}, two[] = {2};
  auto dbl = endo_from_images(z4, one, two);
  auto ev = eventual_image(dbl);
  EXPECT_EQ(ev.subgroup.order(), 1u);
  EXPECT_EQ(ev.steps, 2u);
  EXPECT_EQ(reidemeister_number(ev.restricted), 1u);
  EXPECT_EQ(reidemeister_number(dbl), 1u);

  // S3 -> S3 killing A3 and sending transpositions to (0 1).
  // symmetric(3) lexicographic: 0 (), 1 (1 2), 2 (0 1), 3 (0 1 2), 4 (0 2 1), 5 (0 2)
  auto sign_like = GroupMap::from_image(s3, s3, {0, 2, 2, 0, 0, 2});
  auto ev2 = eventual_image(sign_like);
  EXPECT_EQ(ev2.subgroup.order(), 2u);
  EXPECT_EQ(ev2.steps, 1u);
  EXPECT_EQ(ev2.embedding, (std::vector<Elem>{0, 2}));
  EXPECT_EQ(reidemeister_number(ev2.restricted), reidemeister_number(sign_like));
}

TEST(EventualImage, RestrictionPreservesReidemeisterNumber) {
  for (const auto& g : small_groups()) {
    for (const auto& phi : enumerate_endomorphisms(g, false)) {
      auto ev = eventual_image(phi);
      EXPECT_EQ(reidemeister_number(ev.restricted), reidemeister_number(phi));
    }
  }
}

TEST(Audit, SampledModeStillCatchesGeneratorEdges) {
  auto z4 = cyclic_group(4);
  EXPECT_THROW(GroupMap::from_image(z4, z4, {0, 1, 1, 3}, AuditMode::Sampled), Error);
  EXPECT_TRUE(audit_is_full(AuditMode::Auto, 511));
  EXPECT_FALSE(audit_is_full(AuditMode::Auto, 512));
  EXPECT_TRUE(audit_is_full(AuditMode::Full, 100000));
}

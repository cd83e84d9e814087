#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twb/cyclotomic.hpp"
#include "twb/group_map.hpp"
#include "twb/twisted.hpp"

namespace twb {

/// Ordinary conjugacy classes, numbered by least element.
struct ConjugacyData {
  std::vector<std::size_t> class_of;
  std::vector<Elem> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> inverse_class;
  std::size_t exponent = 1;

  std::size_t count() const noexcept { return reps.size(); }
};

ConjugacyData conjugacy_data(const FiniteGroup& group);

/// Exact irreducible characters. Values live in Q(zeta_e), e the group
/// exponent. Rows are ordered by degree, then by descending coefficient
/// vectors class by class.
struct CharacterTable {
  FiniteGroup group;
  ConjugacyData classes;
  std::vector<std::vector<Cyclotomic>> chars;
  std::vector<std::size_t> degrees;
  std::uint64_t prime = 0;  // prime used in the modular phase

  std::size_t size() const noexcept { return chars.size(); }
};

/// Builds the table via class-algebra structure constants, simultaneous
/// eigenvectors over F_p, and an exact lift through power maps. Both
/// orthogonality relations are verified before returning; LiftFailure is a
/// defect.
CharacterTable character_table(const FiniteGroup& group);

/// Smallest prime p = 1 (mod exponent) with p > 2*sqrt(order).
std::uint64_t modular_prime(std::size_t order, std::size_t exponent);

/// (1/|G|) sum_k |C_k| a_k conj(b_k) for class functions a, b.
Cyclotomic inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b);

/// Throws InternalDefect unless both orthogonality relations, the degree sum
/// of squares, and degree divisibility hold exactly.
void verify_orthogonality(const CharacterTable& table);

/// Class function x -> chi(phi(x)).
std::vector<Cyclotomic> compose_character(const CharacterTable& table, std::size_t chi, const GroupMap& phi);

struct DualImage {
  enum class Kind { FixedBy, MappedTo, Reducible };
  Kind kind = Kind::Reducible;
  std::size_t index = 0;                // FixedBy / MappedTo target
  std::vector<BigInt> multiplicities;   // always filled: chi∘phi = sum m_i chi_i
};

/// Classification of chi∘phi for every irreducible chi.
std::vector<DualImage> dual_action(const CharacterTable& table, const GroupMap& phi);

/// S(phi): irreducibles with chi∘phi = chi.
std::size_t fixed_points_count(const CharacterTable& table, const GroupMap& phi);

struct BurnsideReport {
  std::size_t reidemeister = 0;
  std::size_t fixed_points = 0;
  bool equal() const noexcept { return reidemeister == fixed_points; }
};

BurnsideReport burnside_check(const GroupMap& phi);
BurnsideReport burnside_check(const CharacterTable& table, const GroupMap& phi);

}  // namespace twb

#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "twb/abelian.hpp"
#include "twb/character_table.hpp"
#include "twb/finite_group.hpp"
#include "twb/group_map.hpp"
#include "twb/lattice_extension.hpp"
#include "twb/mobius.hpp"
#include "twb/twisted.hpp"

namespace twb::json_io {

using nlohmann::json;

// Input descriptors. Every parser throws Error(InvalidInput) on schema
// violations; all indices are 0-based.

/// {"kind":"cayley","table":[[...]],"labels":[...]?}
/// {"kind":"permutation","degree":k,"generators":[[...],...]}
/// {"kind":"builtin","name":"...","params":[...]}  (direct_product takes two
/// group descriptors as params)
FiniteGroup parse_group(const json& j, const GroupOptions& options = {});

/// {"generators":[i,...],"images":[j,...]} or {"image":[...]}; null means
/// the identity map.
GroupMap parse_map(const FiniteGroup& group, const json& j);

/// Square matrix; entries are JSON integers or decimal strings.
IntegerMatrix parse_matrix(const json& j);

/// {"rank":r,"torsion":[d1,...],"matrix":[[...]]}
AbelianEndo parse_abelian(const json& j);

/// {"k":2,"theta":[[...]],"B":[[...]],"eps":-1}
std::pair<LatticeExtensionGroup, ExtensionEndo> parse_extension(const json& j);

/// Array of integers, decimal strings, or "infinite".
ReidemeisterSequence parse_sequence(const json& j);

// Output. Big integers are decimal strings; infinity is "infinite".

json to_json(const BigInt& value);
json to_json(const ReidemeisterValue& value);
json to_json(const IntegerMatrix& m);
json to_json(const Cyclotomic& value);
json to_json(const FiniteGroup& group, const TwistedPartition& partition);
json to_json(const CharacterTable& table);
json to_json(const CharacterTable& table, const std::vector<DualImage>& action);
json to_json(const BurnsideReport& report);
json to_json(const CongruenceReport& report);
json to_json(const ReidemeisterSequence& seq);

}  // namespace twb::json_io

#pragma once

#include <json.hpp>

#include "hatkit/alternating.hpp"
#include "hatkit/automorphism.hpp"
#include "hatkit/cover.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/perm.hpp"

namespace hat {

using json = nlohmann::ordered_json;

std::string to_decimal(const BigInt& value);

// A permutation is its image array; a group is {degree, generators, order}
// with the order as a decimal string.
void to_json(json& j, const Permutation& p);
void from_json(const json& j, Permutation& p);
void to_json(json& j, const PermGroup& g);
void from_json(const json& j, PermGroup& g);

void to_json(json& j, const TransitivityReport& r);
void to_json(json& j, const AltDecomposition& d);
void to_json(json& j, const DivisibilityRecord& r);
/// List of [dart_vertex, u, v].
void to_json(json& j, const DartLabeling& l);
void to_json(json& j, const DartForwardReport& r);
void to_json(json& j, const PsiReport& r);
void to_json(json& j, const CoverReport& r);

} // namespace hat

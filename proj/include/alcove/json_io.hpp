#pragma once

#include <json.hpp>

#include <string>

#include "alcove/rees.hpp"
#include "alcove/tuples.hpp"

namespace alcove {

using Json = nlohmann::json;

/// Element wire syntax: {"translation":[m1..mr],"word":[i1..ik]} meaning
/// t_mu . s_{i1}...s_{ik} with 1-based finite generators.  Output is always
/// canonical: the ShortLex word of the finite part.
Json element_to_json(const RootSystem& rs, const AffElem& w);
AffElem element_from_json(const RootSystem& rs, const Json& j);

std::string chamber_key(const RootSystem& rs, int u);  // "e", "1", "12", ...
int chamber_from_key(const RootSystem& rs, const std::string& key);

Json tuple_to_json(const RootSystem& rs, const ChamberTuple& t);
ChamberTuple tuple_from_json(const RootSystem& rs, const Json& j);

Json coords_to_json(const RootSystem& rs, const QACoords& c);
QACoords coords_from_json(const RootSystem& rs, const Json& j);

Json affroot_to_json(const RootSystem& rs, const AffRoot& r);

/// Full root-system description (roots, Cartan matrix, chamber table, Psi).
Json describe_root_system(const RootSystem& rs);

std::string json_dump(const Json& j);  // stable two-space indentation

}  // namespace alcove

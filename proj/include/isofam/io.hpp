#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "isofam/families.hpp"
#include "isofam/gf2.hpp"
#include "isofam/noncrossing.hpp"

// JSON and CSV encodings. Bitstrings put the coefficient of e_1 first and
// subspace bases are always written in canonical order.
namespace isofam::io {

using nlohmann::json;

json to_json(const gf2::Subspace& s);
// Accepts {"D": int, "basis": [...]}; "D" may be omitted when `default_D`
// is given or when the basis is nonempty. The basis is re-canonicalized.
gf2::Subspace subspace_from_json(const json& j, int default_D = -1);

json to_json(const noncrossing::ArcSequence& seq);
// A JSON list of [a, b] pairs.
noncrossing::ArcSequence arcs_from_json(const json& j, int D);

json to_json(const families::FamilyTable& t);
json to_json(const noncrossing::CollectionC& c);
json to_json(const std::vector<noncrossing::ArcSequence>& z, int D);

std::string subspace_csv_field(const gf2::Subspace& s);  // rows joined by ';'

}  // namespace isofam::io

#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "biclique/alphan.hpp"
#include "biclique/graph.hpp"
#include "biclique/matchings.hpp"
#include "biclique/poly.hpp"
#include "biclique/reflect.hpp"

namespace biclique::io {

using json = nlohmann::json;

/// Array of decimal strings, constant term first.
json poly_to_json(const IntPoly& p);
/// Accepts decimal strings or JSON integers.
IntPoly poly_from_json(const json& j);

/// JSON integer when the value fits in 64 bits, decimal string otherwise.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
Integer parse_integer(std::string_view text);

json matchings_to_json(const MatchingNumbers& m);
json params_to_json(const ThreeCliqueParams& p);

/// {"j":..,"k":..,"complement_edges":[[l,r],...]}
json spec_to_json(const BicliqueSpec& spec);
/// Either the explicit form above or {"params":[a,b,c,d,e,f]}.
BicliqueSpec spec_from_json(const json& j);

/// First line "j k", then one "l r" pair per line. Blank lines and lines
/// starting with '#' are ignored.
BicliqueSpec spec_from_edge_list(std::istream& in);

/// JSON when the first non-blank character is '{', edge list otherwise.
BicliqueSpec read_spec_file(const std::filesystem::path& path);

/// "a,b,c,d,e,f"
ThreeCliqueParams parse_params(std::string_view text);
/// Comma-separated integers.
std::vector<Integer> parse_integer_list(std::string_view text);

json relation_to_json(const RelationReport& report);
json alphan_to_json(const AlphaNResult& result);

}  // namespace biclique::io

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "drg/catalog.hpp"
#include "drg/design.hpp"
#include "drg/diffset.hpp"

namespace drg {

using Json = nlohmann::json;

// ------------------------------------------------------------- group files ----

// {schema: 1, name, order, identity, mul: n x n, labels}
Json group_to_json(const GroupTable& g);

// Accepts the object above (schema optional but must be 1 when present;
// labels and name optional). The table is revalidated on load.
GroupPtr group_from_json(const Json& j);

GroupPtr load_group_file(const std::string& path);
void save_group_file(const GroupTable& g, const std::string& path);

// ------------------------------------------------------------ design files ----

// {schema: 1, points, blocks} with blocks in sorted-lexicographic order, so
// export -> import -> export is byte-identical.
Json design_to_json(const IncidenceStructure& inc);
IncidenceStructure design_from_json(const Json& j);

// -------------------------------------------------------------- text input ----

// A group given either as a path to a JSON file or as a spec string for
// parse_group_spec; files are recognized by being readable.
GroupPtr load_group_arg(const std::string& arg, bool allow_large = false);

// "{12,11,8,1;1,4,11,12}" (braces optional, spaces ignored)
IntersectionArray parse_intersection_array(const std::string& text);

// ----------------------------------------------------------------- reports ----

Json array_to_json(const IntersectionArray& a);

// {order, valency, connected, bipartite, girth, intersection_array,
//  antipodal, annihilation} -- the certification report for one graph
Json graph_report(const CayleyGraph& cg, bool all_pairs = true);

Json catalog_to_json(const CatalogReport& r);
Json bridge_to_json(const BridgeWitness& w);

}  // namespace drg

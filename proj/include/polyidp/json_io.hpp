#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyidp/partition.hpp"
#include "polyidp/schur.hpp"
#include "polyidp/tableau.hpp"

namespace polyidp {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
/// Partition zero-padded to `n` entries.
Json to_json(const Partition& p, std::size_t n);
Json to_json(const LatticePoint& p);
Json to_json(const Tableau& t);
Json to_json(const SchurSum& s);
Json points_to_json(const std::vector<LatticePoint>& pts);
Json partitions_to_json(const std::vector<Partition>& ps, std::size_t n);

/// Parsers throw ParseError on malformed input and InvalidPartition on arrays
/// that are not weakly decreasing.
Partition parse_partition(const Json& j);
LatticePoint parse_point(const Json& j);
std::vector<Partition> parse_partition_list(const Json& j);
/// Tableau object {"shape": [...], "rows": [[...], ...]}; "shape" is optional.
Tableau parse_tableau(const Json& j);
/// Generator object {"n": 3, "generators": [[...], ...]}.
SchurSum parse_schur_sum(const Json& j);

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

} // namespace polyidp

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mds/checker.hpp"
#include "mds/derivative.hpp"
#include "mds/polytopes.hpp"
#include "mds/wps.hpp"

namespace mds {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "mds-oracle/1";

enum class Format { Json, Csv, Md };

/// "json", "csv" or "md"; throws ParseError otherwise.
Format parse_format(std::string_view s);

Json to_json(const CheckReport& r);
/// Inverse of to_json. Strings that parse as rationals come back as Rational.
CheckReport report_from_json(const Json& j);

Json to_json(const Polygon4& p);
Json to_json(const Polytope3& p);
Json to_json(const TetraTuple& t);
Json to_json(const FanData& f);
Json to_json(const TableRow& r);
Json to_json(const CampaignResult& r);

/// Accepts {"type": "polygon4", "p_left": ["x","y"], "p_right": [...]}.
Polygon4 polygon_from_json(const Json& j);
/// Accepts {"type": "polytope3", ...} or {"type": "tetra", "tuple": [...]}.
Polytope3 polytope_from_json(const Json& j);
TetraTuple tetra_from_json(const Json& j);

std::string render(const CheckReport& r, Format f);
/// Table layout: weights | relation | n.
std::string render(const std::vector<TableRow>& rows, Format f);

/// "1,2,3" style lists.
RatVec parse_rational_list(std::string_view s);
std::vector<std::int64_t> parse_int_list(std::string_view s);

}  // namespace mds

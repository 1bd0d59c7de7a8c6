#ifndef DYNKIN_REPORT_HPP
#define DYNKIN_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dynkin/count.hpp"
#include "dynkin/counting.hpp"

namespace dynkin {

enum class Route { closed, recursive, oracle };

std::string_view route_name(Route r);
// Throws std::invalid_argument for unknown names.
Route parse_route(std::string_view name);

struct Report {
  std::string spec;  // canonical rendering of the diagram
  Count e;
  Route route = Route::closed;
  std::vector<PrimePower> factorization;
  std::optional<CountBreakdown> breakdown;
  double timing_ms = 0.0;

  bool operator==(const Report&) const = default;
};

// Counts are written as decimal strings. timing_ms is only written when
// include_timing is set, which keeps repeated runs byte-identical.
nlohmann::json to_json(const Report& report, bool include_timing);
Report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CountBreakdown& breakdown);
CountBreakdown breakdown_from_json(const nlohmann::json& j);

}  // namespace dynkin

#endif  // DYNKIN_REPORT_HPP

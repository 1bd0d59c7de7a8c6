#include "dynkin/report.hpp"

#include <stdexcept>

namespace dynkin {

std::string_view route_name(Route r) {
  switch (r) {
    case Route::closed: return "closed";
    case Route::recursive: return "recursive";
    case Route::oracle: return "oracle";
  }
  return "?";
}

Route parse_route(std::string_view name) {
  if (name == "closed") return Route::closed;
  if (name == "recursive") return Route::recursive;
  if (name == "oracle") return Route::oracle;
  throw std::invalid_argument("unknown route '" + std::string(name) + "' (expected closed, recursive or oracle)");
}

namespace {

Diagram diagram_from_text(const std::string& text) { return text.empty() ? Diagram{} : parse_diagram(text); }

ConnectedDiagram connected_from_text(const std::string& text) {
  Diagram d = parse_diagram(text);
  if (d.components().size() != 1) throw std::invalid_argument("expected a connected diagram, got '" + text + "'");
  return d.components().front();
}

}  // namespace

nlohmann::json to_json(const CountBreakdown& breakdown) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : breakdown.rows) {
    rows.push_back({{"vertex", row.vertex}, {"deleted", row.deleted.render_as_listed()}, {"e", row.e.str()}});
  }
  return {{"diagram", breakdown.diagram.render()},
          {"h", breakdown.h.str()},
          {"rows", std::move(rows)},
          {"total", breakdown.total.str()}};
}

CountBreakdown breakdown_from_json(const nlohmann::json& j) {
  CountBreakdown b{connected_from_text(j.at("diagram").get<std::string>()), {},
                   parse_decimal(j.at("h").get<std::string>()), parse_decimal(j.at("total").get<std::string>())};
  for (const auto& row : j.at("rows")) {
    b.rows.push_back({row.at("vertex").get<int>(), diagram_from_text(row.at("deleted").get<std::string>()),
                      parse_decimal(row.at("e").get<std::string>())});
  }
  return b;
}

nlohmann::json to_json(const Report& report, bool include_timing) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : report.factorization) factors.push_back({{"prime", f.prime.str()}, {"exponent", f.exponent}});
  nlohmann::json j = {{"spec", report.spec},
                      {"e", report.e.str()},
                      {"route", std::string(route_name(report.route))},
                      {"factorization", std::move(factors)},
                      {"breakdown", report.breakdown ? to_json(*report.breakdown) : nlohmann::json(nullptr)}};
  if (include_timing) j["timing_ms"] = report.timing_ms;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.spec = j.at("spec").get<std::string>();
  r.e = parse_decimal(j.at("e").get<std::string>());
  r.route = parse_route(j.at("route").get<std::string>());
  for (const auto& f : j.at("factorization")) {
    r.factorization.push_back({parse_decimal(f.at("prime").get<std::string>()), f.at("exponent").get<unsigned>()});
  }
  if (j.contains("breakdown") && !j.at("breakdown").is_null()) r.breakdown = breakdown_from_json(j.at("breakdown"));
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

}  // namespace dynkin

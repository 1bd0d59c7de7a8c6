#include "dynkin/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynkin/counting.hpp"
#include "dynkin/diagram.hpp"
#include "dynkin/report.hpp"
#include "dynkin/series.hpp"
#include "dynkin/weyl.hpp"

namespace dynkin::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec;
  std::string routes = "closed";
  std::string budget = "low";
  std::string order;
  std::string kind;
  int bound = -1;
  int max_rank = -1;
  unsigned threads = 0;
  unsigned samples = 100;
  std::uint64_t seed = 20130101;
  bool json = false;
  bool timings = false;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t budget_of(const Options& o) {
  try {
    return parse_budget(o.budget);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> order_of(const Options& o, int rank) {
  std::vector<int> order;
  for (const auto& item : split_commas(o.order)) {
    try {
      order.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("--order expects comma-separated vertex labels, got '" + item + "'");
    }
  }
  if (!order.empty()) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
      if (sorted[static_cast<std::size_t>(i)] != i + 1 || static_cast<int>(sorted.size()) != rank) {
        throw UsageError("--order must be a permutation of 1.." + std::to_string(rank));
      }
    }
  }
  return order;
}

ConnectedDiagram single_component(const Diagram& d, const std::string& text) {
  if (d.components().size() != 1) {
    throw UsageError("'" + text + "' must be a single connected diagram");
  }
  return d.components().front();
}

Report make_report(const Diagram& d, Route route, Count e, double ms) {
  Report r;
  r.spec = d.render();
  r.factorization = e > 0 ? factorize(e) : std::vector<PrimePower>{};
  r.e = std::move(e);
  r.route = route;
  r.timing_ms = ms;
  return r;
}

// ---- count --------------------------------------------------------------

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const Diagram d = parse_diagram(o.spec);
  std::vector<Route> routes;
  for (const auto& name : split_commas(o.routes)) {
    try {
      routes.push_back(parse_route(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (routes.empty()) throw UsageError("--routes needs at least one route");
  const std::uint64_t budget = budget_of(o);

  std::vector<Report> reports;
  std::optional<std::uint64_t> exhausted_after;
  for (Route route : routes) {
    const auto start = std::chrono::steady_clock::now();
    switch (route) {
      case Route::closed:
        reports.push_back(make_report(d, route, e_of(d), elapsed_ms(start)));
        break;
      case Route::recursive: {
        Report r = make_report(d, route, e_recursive(d), 0.0);
        if (d.components().size() == 1) r.breakdown = e_breakdown(d.components().front());
        r.timing_ms = elapsed_ms(start);
        reports.push_back(std::move(r));
        break;
      }
      case Route::oracle: {
        ChainSearchOptions search;
        search.budget = budget;
        search.threads = o.threads;
        ChainCount result = count_chain_factorizations(build_root_system(d), search);
        if (result.exhausted()) {
          exhausted_after = result.expansions;
        } else {
          reports.push_back(make_report(d, route, *result.count, elapsed_ms(start)));
        }
        break;
      }
    }
  }

  const bool agree = std::all_of(reports.begin(), reports.end(),
                                 [&](const Report& r) { return r.e == reports.front().e; });

  if (o.json) {
    json j = {{"spec", d.render()}, {"reports", json::array()}, {"agree", agree}};
    for (const auto& r : reports) j["reports"].push_back(to_json(r, o.timings));
    j["exhausted"] = json::array();
    if (exhausted_after) j["exhausted"].push_back({{"route", "oracle"}, {"expansions", *exhausted_after}});
    out << j.dump(2) << '\n';
  } else {
    out << "diagram    " << d.render() << "  (rank " << d.rank() << ")\n";
    for (const auto& r : reports) {
      out << std::left << std::setw(11) << route_name(r.route) << group_digits(r.e) << '\n';
    }
    if (exhausted_after) out << std::setw(11) << "oracle" << "budget exhausted after " << *exhausted_after << " expansions\n";
    if (!reports.empty()) {
      out << std::setw(11) << "factors" << render_factorization(reports.front().factorization) << '\n';
      out << std::setw(11) << "agree" << (agree ? "yes" : "NO") << '\n';
    }
  }
  if (o.timings) {
    for (const auto& r : reports) err << "timing " << route_name(r.route) << ' ' << r.timing_ms << " ms\n";
  }

  if (!agree) {
    err << "routes disagree for " << d.render() << ':';
    for (const auto& r : reports) err << ' ' << route_name(r.route) << '=' << r.e.str();
    err << '\n';
    return kDisagreement;
  }
  if (exhausted_after) {
    err << "oracle budget exhausted after " << *exhausted_after << " node expansions\n";
    return kBudgetExhausted;
  }
  return kOk;
}

// ---- verify -------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const int max_rank = o.max_rank < 0 ? 8 : o.max_rank;
  if (max_rank < 1) throw UsageError("--max-rank must be at least 1");

  bool all_pass = true;
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(6) << "type" << std::setw(22) << "e" << std::setw(22) << "|W|" << std::setw(30)
       << "n! h^n" << "check\n";
  for (const auto& d : connected_types_up_to(max_rank)) {
    UniformCheck check{};
    bool pass = true;
    try {
      check = verify_uniform_formula(d);
    } catch (const UniformFormulaMismatch&) {
      pass = false;
      check = {e_closed(d), factorial(static_cast<unsigned>(d.rank())) *
                                ipow(coxeter_number(d), static_cast<unsigned>(d.rank())),
               weyl_order(d)};
    }
    all_pass = all_pass && pass;
    rows.push_back({{"type", d.render()},
                    {"e", check.e.str()},
                    {"weyl", check.weyl.str()},
                    {"numerator", check.numerator.str()},
                    {"pass", pass}});
    text << std::setw(6) << d.render() << std::setw(22) << group_digits(check.e) << std::setw(22)
         << group_digits(check.weyl) << std::setw(30) << group_digits(check.numerator) << (pass ? "pass" : "FAIL")
         << '\n';
  }
  if (o.json) {
    out << json{{"max_rank", max_rank}, {"rows", rows}, {"all_pass", all_pass}}.dump(2) << '\n';
  } else {
    out << text.str() << (all_pass ? "all pass" : "FAILURES") << ": e * |W| = n! * h^n up to rank " << max_rank
        << '\n';
  }
  return all_pass ? kOk : kFailure;
}

// ---- chains -------------------------------------------------------------

int cmd_chains(const Options& o, std::ostream& out, std::ostream& err) {
  const Diagram parsed = parse_diagram(o.spec);
  const ConnectedDiagram d = single_component(parsed, o.spec);
  ChainSearchOptions search;
  search.budget = budget_of(o);
  search.threads = o.threads;
  search.order = order_of(o, d.rank());

  const auto start = std::chrono::steady_clock::now();
  const RootSystem rs = build_root_system(d);
  const ChainCount result = count_chain_factorizations(rs, search);
  const double ms = elapsed_ms(start);
  const Count closed = e_closed(d);

  if (result.exhausted()) {
    if (o.json) {
      out << json{{"spec", d.render()}, {"status", "budget_exhausted"}, {"expansions", result.expansions}}.dump(2)
          << '\n';
    } else {
      out << "diagram    " << d.render() << '\n'
          << "oracle     budget exhausted after " << result.expansions << " expansions\n";
    }
    err << "oracle budget exhausted after " << result.expansions << " node expansions; try --budget high\n";
    return kBudgetExhausted;
  }

  const bool match = *result.count == closed;
  Report report = make_report(Diagram{d}, Route::oracle, *result.count, ms);
  if (o.json) {
    out << json{{"report", to_json(report, o.timings)},
                {"closed", closed.str()},
                {"match", match},
                {"expansions", result.expansions},
                {"reflections", rs.reflections.size()}}
               .dump(2)
        << '\n';
  } else {
    out << "diagram      " << d.render() << '\n'
        << "reflections  " << rs.reflections.size() << '\n'
        << "oracle       " << group_digits(*result.count) << '\n'
        << "closed form  " << group_digits(closed) << '\n'
        << "expansions   " << result.expansions << '\n'
        << "match        " << (match ? "yes" : "NO") << '\n';
  }
  if (o.timings) err << "timing oracle " << ms << " ms\n";
  if (!match) {
    err << "oracle count " << result.count->str() << " differs from closed form " << closed.str() << '\n';
    return kDisagreement;
  }
  return kOk;
}

// ---- table --------------------------------------------------------------

std::string e_formula(Family f) {
  switch (f) {
    case Family::A: return "(n+1)^(n-1)";
    case Family::B:
    case Family::C: return "n^n";
    case Family::D: return "2(n-1)^n";
    case Family::E:
    case Family::F:
    case Family::G: return "";
  }
  return "";
}

int table_e(int bound, bool as_json, std::ostream& out) {
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(6) << "type" << std::setw(14) << "formula" << std::setw(24) << "e" << "factors\n";
  for (const auto& d : connected_types_up_to(bound)) {
    const Count e = e_closed(d);
    const std::string factors = render_factorization(factorize(e));
    rows.push_back({{"type", d.render()}, {"e", e.str()}, {"factorization", factors}});
    text << std::setw(6) << d.render() << std::setw(14) << e_formula(d.family()) << std::setw(24) << group_digits(e)
         << factors << '\n';
  }
  if (as_json) {
    out << json{{"kind", "e"}, {"max_rank", bound}, {"rows", rows}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kOk;
}

int table_h_w(int bound, bool as_json, std::ostream& out) {
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(6) << "type" << std::setw(6) << "h" << std::setw(24) << "|W|" << "factors of |W|\n";
  for (const auto& d : connected_types_up_to(bound)) {
    const Count h = coxeter_number(d);
    const Count w = weyl_order(d);
    rows.push_back({{"type", d.render()}, {"h", h.str()}, {"weyl", w.str()}});
    text << std::setw(6) << d.render() << std::setw(6) << h.str() << std::setw(24) << group_digits(w)
         << render_factorization(factorize(w)) << '\n';
  }
  if (as_json) {
    out << json{{"kind", "h-w"}, {"max_rank", bound}, {"rows", rows}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kOk;
}

int table_sequences(int bound, bool as_json, std::ostream& out) {
  const auto n_max = static_cast<std::size_t>(bound);
  const SeriesPrefix a = seq_A(n_max);
  const SeriesPrefix b = seq_B(n_max);
  const SeriesPrefix d = seq_D(n_max);
  json rows = json::array();
  std::ostringstream text;
  text << std::right << std::setw(3) << "n" << std::setw(20) << "A(n)" << std::setw(20) << "B(n)" << std::setw(20)
       << "2D(n)" << '\n';
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Integer two_d = 2 * d[n];
    rows.push_back({{"n", n}, {"A", a[n].str()}, {"B", b[n].str()}, {"2D", two_d.str()}});
    text << std::setw(3) << n << std::setw(20) << group_digits(a[n]) << std::setw(20) << group_digits(b[n])
         << std::setw(20) << group_digits(two_d) << '\n';
  }
  if (as_json) {
    out << json{{"kind", "sequences"}, {"max_n", bound}, {"rows", rows}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kOk;
}

int table_breakdown(const std::string& spec, bool as_json, std::ostream& out) {
  const ConnectedDiagram d = single_component(parse_diagram(spec), spec);
  const CountBreakdown b = e_breakdown(d);
  if (as_json) {
    out << to_json(b).dump(2) << '\n';
    return kOk;
  }
  Count sum = 0;
  out << d.render() << "  h = " << b.h.str() << '\n';
  out << std::left << std::setw(4) << "i" << std::setw(16) << "Delta(i)" << "e(Delta(i))\n";
  for (const auto& row : b.rows) {
    sum += row.e;
    const std::string deleted = row.deleted.empty() ? "(empty)" : row.deleted.render_as_listed();
    out << std::setw(4) << row.vertex << std::setw(16) << deleted << group_digits(row.e) << '\n';
  }
  out << "e(" << d.render() << ") = (" << b.h.str() << "/2) * " << group_digits(sum) << " = " << group_digits(b.total)
      << " = " << render_factorization(factorize(b.total)) << '\n';
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
  int bound = o.bound >= 0 ? o.bound : o.max_rank;
  if (o.kind == "sequences") return table_sequences(bound < 0 ? 10 : bound, o.json, out);
  if (o.kind == "e") return table_e(bound < 0 ? 8 : bound, o.json, out);
  if (o.kind == "h-w") return table_h_w(bound < 0 ? 8 : bound, o.json, out);
  if (o.kind.rfind("breakdown:", 0) == 0) return table_breakdown(o.kind.substr(10), o.json, out);
  throw UsageError("unknown table kind '" + o.kind + "' (expected e, h-w, sequences or breakdown:<type>)");
}

// ---- series -------------------------------------------------------------

// Summands C(m,k) F(k) G(m-k) written out, as in "1*1*125 + 4*1*16 + ...".
std::string expansion(const SeriesPrefix& f, const SeriesPrefix& g, std::size_t m) {
  std::string text;
  for (std::size_t k = 0; k <= m; ++k) {
    if (!text.empty()) text += " + ";
    text += binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)).str() + "*" + f[k].str() + "*" +
            g[m - k].str();
  }
  return text;
}

int cmd_series(const Options& o, std::ostream& out, std::ostream&) {
  const int bound = o.bound >= 0 ? o.bound : (o.max_rank >= 0 ? o.max_rank : 20);
  const auto order = static_cast<std::size_t>(bound);
  const AppendixReport report = verify_appendix_proposition(order);

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> coefficient(-9, 9);
  std::uniform_int_distribution<unsigned> exponent(0, 12);
  unsigned abel_failures = 0;
  for (unsigned s = 0; s < o.samples; ++s) {
    int x = 0;
    while (x == 0) x = coefficient(rng);
    const int y = coefficient(rng);
    const int z = coefficient(rng);
    const unsigned n = exponent(rng);
    if (abel_sum(x, y, z, n) != ipow(Integer(x + y), n)) ++abel_failures;
  }

  const std::size_t m = std::min<std::size_t>(order, 4);
  const SeriesPrefix a = seq_A(order);
  const SeriesPrefix b = seq_B(order);
  const SeriesPrefix d = seq_D(order);
  const std::string mm = std::to_string(m);
  struct Line {
    std::string label;
    std::string terms;
    Integer value;
    std::string closed;
  };
  const std::vector<Line> lines = {
      {"(A*A)(" + mm + ")", expansion(a, a, m), report.identities[0].lhs[m],
       m == 0 ? "" : "2*" + std::to_string(m + 2) + "^" + std::to_string(m - 1)},
      {"(A*B)(" + mm + ")", expansion(a, b, m), report.identities[1].lhs[m],
       std::to_string(m + 1) + "^" + mm},
      {"(A*D)(" + mm + ")", expansion(a, d, m), report.identities[2].lhs[m], mm + "^" + mm},
  };

  const bool ok = report.all_hold() && abel_failures == 0;
  if (o.json) {
    json ids = json::array();
    for (const auto& c : report.identities) {
      ids.push_back({{"name", c.name},
                     {"holds", c.holds()},
                     {"first_failure", c.first_failure ? json(*c.first_failure) : json(nullptr)}});
    }
    json coeffs = json::array();
    for (const auto& l : lines) coeffs.push_back({{"label", l.label}, {"terms", l.terms}, {"value", l.value.str()}});
    out << json{{"order", bound},
                {"identities", ids},
                {"abel", {{"samples", o.samples}, {"failures", abel_failures}, {"seed", o.seed}}},
                {"coefficients", coeffs},
                {"all_hold", ok}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& c : report.identities) {
      out << std::left << std::setw(30) << c.name;
      if (c.holds()) {
        out << "holds through T^" << bound << '\n';
      } else {
        out << "FAILS at T^" << *c.first_failure << '\n';
      }
    }
    out << "Abel identity: " << (o.samples - abel_failures) << '/' << o.samples << " random samples hold\n";
    out << "coefficients of T^" << m << ":\n";
    for (const auto& l : lines) {
      out << "  " << l.label << " = " << l.terms << " = " << l.value.str();
      if (!l.closed.empty()) out << " = " << l.closed;
      out << '\n';
    }
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of complete exceptional sequences for Dynkin types", "dynkin-count"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

  auto* count = app.add_subcommand("count", "Count via one or more routes");
  count->add_option("spec", o.spec, "Diagram, e.g. A5+D4+B3")->required();
  count->add_option("--routes", o.routes, "Comma-separated routes: closed, recursive, oracle");
  count->add_option("--budget", o.budget, "Oracle budget: low, high or a node count");
  count->add_option("--threads", o.threads, "Oracle worker threads (0 = hardware)");
  count->add_flag("--timings", o.timings, "Report timings (stderr, or in JSON)");
  add_json(count);

  auto* verify = app.add_subcommand("verify", "Check e * |W| = n! * h^n for all connected types");
  verify->add_option("--max-rank", o.max_rank, "Largest rank to check (default 8)");
  add_json(verify);

  auto* chains = app.add_subcommand("chains", "Count reflection factorizations of a Coxeter element");
  chains->add_option("spec", o.spec, "Connected diagram, e.g. D4")->required();
  chains->add_option("--budget", o.budget, "Budget: low, high or a node count");
  chains->add_option("--order", o.order, "Simple-reflection order for the Coxeter element, e.g. 2,1,3");
  chains->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  chains->add_flag("--timings", o.timings, "Report timings (stderr, or in JSON)");
  add_json(chains);

  auto* table = app.add_subcommand("table", "Print a table: e, h-w, sequences, breakdown:<type>");
  table->add_option("kind", o.kind, "e | h-w | sequences | breakdown:<type>")->required();
  table->add_option("N", o.bound, "Largest rank (or n for sequences)");
  table->add_option("--max-rank", o.max_rank, "Same as N");
  add_json(table);

  auto* series = app.add_subcommand("series", "Check the binomial convolution identities and Abel's identity");
  series->add_option("N", o.bound, "Truncation order (default 20)");
  series->add_option("--max-rank", o.max_rank, "Same as N");
  series->add_option("--samples", o.samples, "Random Abel identity samples");
  series->add_option("--seed", o.seed, "Seed for the Abel samples");
  add_json(series);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (count->parsed()) return cmd_count(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (chains->parsed()) return cmd_chains(o, out, err);
    if (table->parsed()) return cmd_table(o, out, err);
    if (series->parsed()) return cmd_series(o, out, err);
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace dynkin::cli

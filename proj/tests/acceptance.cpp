// Acceptance run: one line per criterion, each with its runtime limit.
// Exits nonzero if any criterion fails or overruns.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynkin/cli.hpp"
#include "dynkin/counting.hpp"
#include "dynkin/diagram.hpp"
#include "dynkin/series.hpp"
#include "dynkin/weyl.hpp"

using namespace dynkin;

namespace {

struct Failure {
  std::string what;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure{what};
}

ConnectedDiagram T(Family f, int n) { return ConnectedDiagram(f, n); }

Count naive_pow(long base, int exponent) {
  Count r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

void golden_table() {
  for (int n = 1; n <= 12; ++n) {
    expect(e_closed(T(Family::A, n)) == naive_pow(n + 1, n - 1), "A" + std::to_string(n));
    if (n >= 2) {
      expect(e_closed(T(Family::B, n)) == naive_pow(n, n), "B" + std::to_string(n));
      expect(e_closed(T(Family::C, n)) == naive_pow(n, n), "C" + std::to_string(n));
    }
    if (n >= 4) expect(e_closed(T(Family::D, n)) == 2 * naive_pow(n - 1, n), "D" + std::to_string(n));
  }
  expect(e_closed(T(Family::E, 6)) == 41472, "E6");
  expect(e_closed(T(Family::E, 7)) == 1062882, "E7");
  expect(e_closed(T(Family::E, 8)) == 37968750, "E8");
  expect(e_closed(T(Family::F, 4)) == 432, "F4");
  expect(e_closed(T(Family::G, 2)) == 6, "G2");
}

void route_agreement() {
  RecursiveCounter counter;
  const auto types = connected_types_up_to(12);
  for (const auto& d : types) expect(counter.count(d) == e_closed(d), "recursive " + d.render());

  std::mt19937 rng(2013);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> parts(2, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ConnectedDiagram> comps;
    int rank = 0;
    for (int k = parts(rng); k > 0; --k) {
      const auto& c = types[pick(rng)];
      if (rank + c.rank() > 16) continue;
      rank += c.rank();
      comps.push_back(c);
    }
    const Diagram d(comps);
    // Shuffle expansion: n! / prod(n_i!) * prod e(component).
    Count expanded = factorial(static_cast<unsigned>(rank));
    for (const auto& c : comps) expanded = expanded / factorial(static_cast<unsigned>(c.rank())) * e_closed(c);
    const Count recursive = counter.count(d);
    expect(recursive == e_of(d) && recursive == expanded, "union " + d.render());
  }
}

void uniform_formula() {
  for (const auto& d : connected_types_up_to(12)) {
    const auto n = static_cast<unsigned>(d.rank());
    expect(e_closed(d) * weyl_order(d) == factorial(n) * ipow(coxeter_number(d), n), d.render());
  }
}

void oracle_small() {
  const std::vector<std::pair<ConnectedDiagram, long>> cases = {
      {T(Family::A, 1), 1},   {T(Family::A, 2), 3},   {T(Family::A, 3), 16},  {T(Family::A, 4), 125},
      {T(Family::A, 5), 1296}, {T(Family::B, 2), 4},  {T(Family::B, 3), 27},  {T(Family::B, 4), 256},
      {T(Family::C, 3), 27},  {T(Family::D, 4), 162}, {T(Family::D, 5), 2048}, {T(Family::G, 2), 6},
      {T(Family::F, 4), 432},
  };
  for (const auto& [d, expected] : cases) {
    const ChainCount r = count_chain_factorizations(build_root_system(d));
    expect(!r.exhausted(), d.render() + " exhausted the default budget");
    expect(*r.count == expected && e_closed(d) == expected, d.render());
  }
}

void oracle_e6() {
  ChainSearchOptions options;
  options.budget = budget::kHigh;
  const ChainCount r = count_chain_factorizations(build_root_system(T(Family::E, 6)), options);
  expect(!r.exhausted(), "E6 exhausted the high budget");
  expect(*r.count == 41472, "E6 oracle count " + r.count->str());
}

void coxeter_order_invariance() {
  const std::vector<std::vector<int>> orders3 = {{1, 2, 3}, {3, 2, 1}, {2, 1, 3}, {2, 3, 1}};
  const std::vector<std::vector<int>> orders4 = {{1, 2, 3, 4}, {4, 3, 2, 1}, {3, 1, 2, 4}, {2, 4, 1, 3}};
  for (const auto& d : {T(Family::A, 3), T(Family::B, 3), T(Family::D, 4)}) {
    const RootSystem rs = build_root_system(d);
    const auto& orders = d.rank() == 3 ? orders3 : orders4;
    for (const auto& order : orders) {
      ChainSearchOptions options;
      options.order = order;
      const ChainCount r = count_chain_factorizations(rs, options);
      expect(!r.exhausted() && *r.count == e_closed(d), d.render());
    }
  }
}

void appendix_identities() {
  const AppendixReport report = verify_appendix_proposition(20);
  expect(report.all_hold(), "identity failure");
  const AppendixReport r4 = verify_appendix_proposition(4);
  expect(r4.identities[0].lhs[4] == 432, "(A*A)(4)");
  expect(r4.identities[1].lhs[4] == 625, "(A*B)(4)");
  expect(r4.identities[2].lhs[4] == 256, "(A*D)(4)");
}

void abel_grid() {
  for (int x = -5; x <= 5; ++x) {
    if (x == 0) continue;
    for (int y = -5; y <= 5; ++y)
      for (int z = -3; z <= 3; ++z)
        for (unsigned n = 0; n <= 8; ++n) {
          expect(abel_sum(x, y, z, n) == ipow(Integer(x + y), n), "Abel grid point");
        }
  }
}

void sequence_table() {
  // Rows n = 0..10 of the printed table: A(n), B(n), 2D(n).
  const std::vector<std::vector<std::string>> golden = {
      {"1", "1", "2"},
      {"1", "1", "0"},
      {"3", "4", "2"},
      {"16", "27", "16"},
      {"125", "256", "162"},
      {"1296", "3125", "2048"},
      {"16807", "46656", "31250"},
      {"262144", "823543", "559872"},
      {"4782969", "12777216", "11529602"},  // B(8) misprinted, see below
      {"100000000", "387420489", "268435456"},
      {"2357947691", "10000000000", "6973568802"},
  };
  // The printed B(8) = 12777216 is not 8^8 = 16777216 and contradicts the
  // B_n = n^n column rule checked in criterion 1. Compare against 8^8 and
  // confirm the printed value really is the odd one out.
  expect(naive_pow(8, 8) == 16777216 && naive_pow(8, 8) != 12777216, "B(8) misprint");
  auto golden_fixed = golden;
  golden_fixed[8][1] = "16777216";

  std::ostringstream out;
  std::ostringstream err;
  expect(cli::run({"table", "sequences", "10", "--json"}, out, err) == cli::kOk, "table exit code");
  const auto rows = nlohmann::json::parse(out.str())["rows"];
  expect(rows.size() == golden.size(), "row count");
  int matched = 0;
  for (std::size_t n = 0; n < golden.size(); ++n) {
    const char* columns[] = {"A", "B", "2D"};
    for (std::size_t k = 0; k < 3; ++k) {
      expect(rows[n][columns[k]] == golden_fixed[n][k],
             std::string(columns[k]) + "(" + std::to_string(n) + ") = " + rows[n][columns[k]].get<std::string>());
      ++matched;
    }
  }
  expect(matched == 33, "value count");
}

void e7_typo_regression() {
  const CountBreakdown b = e_breakdown(T(Family::E, 7));
  expect(b.rows.size() == 7, "row count");
  expect(b.rows[1].deleted == parse_diagram("D6"), "row 2 is D6");
  expect(b.rows[1].e == 31250, "D6 row " + b.rows[1].e.str());
  expect(b.total == 1062882, "total");
  Count sum = 0;
  for (const auto& r : b.rows) sum += r.e;
  expect(sum == 118098 && sum * 9 == b.total, "row sum");
  expect((sum - 31250 + 46656) * 9 != b.total, "misprint consistent");
}

void root_sanity() {
  for (const auto& d : connected_types_up_to(8)) {
    const RootSystem rs = build_root_system(d);
    expect(Count(rs.positive_roots.size()) * 2 == Count(d.rank()) * coxeter_number(d), "roots " + d.render());
    expect(reflection_length(coxeter_element(rs)) == d.rank(), "length " + d.render());
  }
}

struct Criterion {
  std::string name;
  double limit_ms;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 golden table", 1'000, golden_table},
      {"2 route agreement", 10'000, route_agreement},
      {"3 uniform formula", 1'000, uniform_formula},
      {"4a oracle equivalence, small types", 60'000, oracle_small},
      {"4b oracle equivalence, E6 high budget", 600'000, oracle_e6},
      {"5 Coxeter-order invariance", 60'000, coxeter_order_invariance},
      {"6 convolution identities", 1'000, appendix_identities},
      {"7 Abel identity grid", 5'000, abel_grid},
      {"8 sequence table", 10'000, sequence_table},
      {"9 E7 D6 row regression", 10'000, e7_typo_regression},
      {"10 root-system sanity", 10'000, root_sanity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      c.body();
    } catch (const Failure& f) {
      problem = f.what;
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && ms > c.limit_ms) problem = "over the " + std::to_string(c.limit_ms / 1000) + " s limit";
    const bool pass = problem.empty();
    if (!pass) ++failures;
    std::printf("[%s] %-40s %10.1f ms%s%s\n", pass ? "PASS" : "FAIL", c.name.c_str(), ms, pass ? "" : "  ",
                problem.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

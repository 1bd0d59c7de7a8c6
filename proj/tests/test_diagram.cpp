#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dynkin/diagram.hpp"

using namespace dynkin;

namespace {

ConnectedDiagram T(Family f, int n) { return ConnectedDiagram(f, n); }

std::set<std::tuple<int, int, int>> edge_set(const ConnectedDiagram& d) {
  std::set<std::tuple<int, int, int>> out;
  for (const Edge& e : d.edges()) out.emplace(e.u, e.v, e.multiplicity);
  return out;
}

}  // namespace

TEST_CASE("parse single and multiple components") {
  CHECK(parse_diagram("A5") == Diagram{T(Family::A, 5)});
  const Diagram d = parse_diagram("B3+A2+A2");
  CHECK(d == Diagram{T(Family::B, 3), T(Family::A, 2), T(Family::A, 2)});
  CHECK(d.rank() == 7);
  CHECK(d.components().size() == 3);
}

TEST_CASE("parse ignores whitespace and letter case") {
  CHECK(parse_diagram("  e 6 +a1 ") == Diagram{T(Family::E, 6), T(Family::A, 1)});
  CHECK(parse_diagram("g2").render() == "G2");
}

TEST_CASE("parse rejects illegal ranks with the legal range") {
  CHECK_THROWS_WITH_AS(parse_diagram("E9"), doctest::Contains("{6,7,8}"), RankError);
  CHECK_THROWS_AS(parse_diagram("A0"), RankError);
  CHECK_THROWS_AS(parse_diagram("F5"), RankError);
  CHECK_THROWS_AS(parse_diagram("G3"), RankError);
  CHECK_THROWS_AS(parse_diagram("A99999999999999999999"), RankError);
}

TEST_CASE("parse reports the position of syntax errors") {
  auto position_of = [](std::string_view text) {
    try {
      parse_diagram(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("X3") == 0);
  CHECK(position_of("A") == 1);
  CHECK(position_of("A5+") == 3);
  CHECK(position_of("A5 B3") == 3);
  CHECK(position_of("") == 0);
  CHECK(position_of("A5+*") == 3);
}

TEST_CASE("low-rank B, C, D normalize to A1; D2 and D3 stay typed") {
  CHECK(parse_diagram("B1") == Diagram{T(Family::A, 1)});
  CHECK(parse_diagram("C1") == Diagram{T(Family::A, 1)});
  CHECK(parse_diagram("D1") == Diagram{T(Family::A, 1)});
  CHECK(parse_diagram("D2").render() == "D2");
  CHECK(parse_diagram("D3").render() == "D3");
  CHECK_THROWS_AS(ConnectedDiagram(Family::B, 1), RankError);
}

TEST_CASE("diagram equality is multiset equality; render is canonical") {
  const Diagram a = parse_diagram("B3+A2+C2+A1");
  const Diagram b = parse_diagram("A1+C2+A2+B3");
  CHECK(a == b);
  CHECK(a.render() == "A1+A2+B3+C2");
  CHECK(b.render_as_listed() == "A1+C2+A2+B3");
  CHECK_FALSE(parse_diagram("B3") == parse_diagram("C3"));
  CHECK(Diagram{}.render().empty());
  CHECK(Diagram{}.rank() == 0);
}

TEST_CASE("render/parse round trip on random diagrams") {
  std::mt19937 rng(7);
  const auto types = connected_types_up_to(9);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> parts(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ConnectedDiagram> comps;
    for (int k = parts(rng); k > 0; --k) comps.push_back(types[pick(rng)]);
    const Diagram d(comps);
    CHECK(parse_diagram(d.render()) == d);
    CHECK(parse_diagram(d.render_as_listed()) == d);
  }
}

TEST_CASE("vertex deletion on exceptional types") {
  CHECK(delete_vertex(T(Family::E, 6), 4) == Diagram{T(Family::A, 2), T(Family::A, 1), T(Family::A, 2)});
  CHECK(delete_vertex(T(Family::E, 6), 1) == Diagram{T(Family::A, 5)});
  CHECK(delete_vertex(T(Family::E, 6), 2) == Diagram{T(Family::D, 5)});
  CHECK(delete_vertex(T(Family::E, 7), 2) == Diagram{T(Family::D, 6)});
  CHECK(delete_vertex(T(Family::E, 7), 6) == Diagram{T(Family::D, 5), T(Family::A, 1)});
  CHECK(delete_vertex(T(Family::E, 7), 7) == Diagram{T(Family::E, 6)});
  CHECK(delete_vertex(T(Family::E, 8), 8) == Diagram{T(Family::E, 7)});
  CHECK(delete_vertex(T(Family::E, 8), 7) == Diagram{T(Family::E, 6), T(Family::A, 1)});
}

TEST_CASE("vertex deletion on F4 keeps the lacing: B3, A1+A2, A2+A1, C3") {
  const ConnectedDiagram f4 = T(Family::F, 4);
  CHECK(delete_vertex(f4, 1).render_as_listed() == "B3");
  CHECK(delete_vertex(f4, 2).render_as_listed() == "A1+A2");
  CHECK(delete_vertex(f4, 3).render_as_listed() == "A2+A1");
  CHECK(delete_vertex(f4, 4).render_as_listed() == "C3");
}

TEST_CASE("deleting the long end vertex of B_n gives B_{n-1}") {
  // B3: 1 - 2 = 3. Removing 1 leaves 2 = 3 with 2 long, 3 short.
  CHECK(delete_vertex(T(Family::B, 3), 1) == Diagram{T(Family::B, 2)});
  // B4: 1 - 2 - 3 = 4. Removing 1 leaves 2 - 3 = 4, long long short.
  CHECK(delete_vertex(T(Family::B, 4), 1) == Diagram{T(Family::B, 3)});
  // B5 likewise leaves 2 - 3 - 4 = 5.
  CHECK(delete_vertex(T(Family::B, 5), 1) == Diagram{T(Family::B, 4)});
  // B2 minus its long vertex is a single short vertex, read as A1.
  CHECK(delete_vertex(T(Family::B, 2), 1) == Diagram{T(Family::A, 1)});
  // The C side mirrors it.
  CHECK(delete_vertex(T(Family::C, 4), 1) == Diagram{T(Family::C, 3)});
  CHECK(delete_vertex(T(Family::B, 4), 4) == Diagram{T(Family::A, 3)});
  CHECK(delete_vertex(T(Family::B, 4), 2) == Diagram{T(Family::A, 1), T(Family::B, 2)});
}

TEST_CASE("vertex deletion on D_n") {
  CHECK(delete_vertex(T(Family::D, 5), 1) == Diagram{T(Family::A, 4)});
  CHECK(delete_vertex(T(Family::D, 5), 3) == Diagram{T(Family::A, 1), T(Family::A, 1), T(Family::A, 2)});
  CHECK(delete_vertex(T(Family::D, 6), 5) == Diagram{T(Family::D, 4), T(Family::A, 1)});
  // D_3 is a path, so what survives is classified as A.
  CHECK(delete_vertex(T(Family::D, 5), 4) == Diagram{T(Family::A, 3), T(Family::A, 1)});
  CHECK(delete_vertex(T(Family::D, 2), 1) == Diagram{T(Family::A, 1)});
}

TEST_CASE("vertex deletion rejects invalid labels") {
  CHECK_THROWS_AS(delete_vertex(T(Family::A, 3), 0), VertexError);
  CHECK_THROWS_AS(delete_vertex(T(Family::A, 3), 4), VertexError);
  CHECK_THROWS_AS(delete_vertex(parse_diagram("A2+A3"), Vertex{2, 1}), VertexError);
  CHECK(delete_vertex(parse_diagram("A2+A3"), Vertex{1, 2}) == parse_diagram("A2+A1+A1"));
}

TEST_CASE("every deletion yields legal components of total rank n-1") {
  for (const auto& d : connected_types_up_to(12)) {
    for (int v = 1; v <= d.rank(); ++v) {
      const Diagram rest = delete_vertex(d, v);
      CHECK(rest.rank() == d.rank() - 1);
      for (const auto& c : rest.components()) {
        // Reconstructing through the validating constructor must succeed.
        CHECK_NOTHROW(ConnectedDiagram(c.family(), c.rank()));
      }
    }
  }
}

TEST_CASE("Coxeter numbers") {
  CHECK(coxeter_number(T(Family::A, 4)) == 5);
  CHECK(coxeter_number(T(Family::E, 7)) == 18);
  CHECK(coxeter_number(T(Family::D, 4)) == 6);
  CHECK(coxeter_number(T(Family::B, 5)) == 10);
  CHECK(coxeter_number(T(Family::E, 8)) == 30);
  CHECK(coxeter_number(T(Family::F, 4)) == 12);
  CHECK(coxeter_number(T(Family::G, 2)) == 6);
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_order(T(Family::A, 3)) == 24);
  CHECK(weyl_order(T(Family::F, 4)) == 1152);
  CHECK(weyl_order(Diagram{}) == 1);
  CHECK(weyl_order(T(Family::E, 6)) == 128 * 81 * 5);
  CHECK(weyl_order(T(Family::E, 7)) == 1024 * 81 * 5 * 7);
  CHECK(weyl_order(T(Family::E, 8)) == Count(16384) * 243 * 25 * 7);
  CHECK(weyl_order(T(Family::B, 3)) == 48);
  CHECK(weyl_order(T(Family::D, 4)) == 192);
  CHECK(weyl_order(parse_diagram("A1+A2")) == 12);
}

TEST_CASE("rho on A3, E6, E7") {
  CHECK(automorphism_rho(T(Family::A, 3)) == std::vector<int>{3, 2, 1});
  CHECK(automorphism_rho(T(Family::E, 6)) == std::vector<int>{1, 6, 5, 4, 3, 2});
  CHECK(automorphism_rho(T(Family::E, 7)) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(automorphism_rho(T(Family::D, 5)) == std::vector<int>{2, 1, 3, 4, 5});
}

TEST_CASE("rho is an adjacency-preserving involution") {
  for (const auto& d : connected_types_up_to(10)) {
    const auto p = automorphism_rho(d);
    auto rho = [&](int v) { return p[static_cast<std::size_t>(v - 1)]; };
    std::set<std::tuple<int, int, int>> mapped;
    for (const Edge& e : d.edges()) {
      const int a = rho(e.u);
      const int b = rho(e.v);
      mapped.emplace(std::min(a, b), std::max(a, b), e.multiplicity);
    }
    CHECK(mapped == edge_set(d));
    for (int v = 1; v <= d.rank(); ++v) {
      CHECK(rho(rho(v)) == v);
      CHECK(d.root_length(rho(v)) == d.root_length(v));
    }
  }
}

#include "dynkin/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace dynkin {

namespace {

bool rank_is_legal(Family family, int rank) {
  if (rank < 1 || rank > kMaxRank) return false;
  switch (family) {
    case Family::A: return true;
    case Family::B:
    case Family::C:
    case Family::D: return rank >= 2;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

bool family_from_letter(char ch, Family& out) {
  switch (std::toupper(static_cast<unsigned char>(ch))) {
    case 'A': out = Family::A; return true;
    case 'B': out = Family::B; return true;
    case 'C': out = Family::C; return true;
    case 'D': out = Family::D; return true;
    case 'E': out = Family::E; return true;
    case 'F': out = Family::F; return true;
    case 'G': out = Family::G; return true;
    default: return false;
  }
}

struct Subgraph {
  std::vector<int> vertices;  // labels, ascending
  std::map<int, std::vector<std::pair<int, int>>> adjacency;  // label -> (neighbour, multiplicity)
};

// Walks a path component from one of its ends.
std::vector<int> path_order(const Subgraph& g) {
  int start = g.vertices.front();
  for (int v : g.vertices) {
    if (g.adjacency.at(v).size() <= 1) {
      start = v;
      break;
    }
  }
  std::vector<int> order{start};
  int previous = 0;
  int current = start;
  while (order.size() < g.vertices.size()) {
    for (auto [next, mult] : g.adjacency.at(current)) {
      if (next != previous) {
        previous = current;
        current = next;
        break;
      }
    }
    order.push_back(current);
  }
  return order;
}

int multiplicity_between(const Subgraph& g, int u, int v) {
  for (auto [w, mult] : g.adjacency.at(u))
    if (w == v) return mult;
  return 0;
}

ConnectedDiagram classify(const Subgraph& g, const ConnectedDiagram& parent) {
  const int size = static_cast<int>(g.vertices.size());
  if (size == 1) return ConnectedDiagram(Family::A, 1);

  int max_mult = 1;
  int branch = 0;
  for (int v : g.vertices) {
    for (auto [w, mult] : g.adjacency.at(v)) max_mult = std::max(max_mult, mult);
    if (g.adjacency.at(v).size() >= 3) branch = v;
  }

  if (max_mult == 3) return ConnectedDiagram(Family::G, 2);

  if (max_mult == 2) {
    std::vector<int> p = path_order(g);
    if (multiplicity_between(g, p[0], p[1]) == 2) std::reverse(p.begin(), p.end());
    if (size == 4 && multiplicity_between(g, p[1], p[2]) == 2) return ConnectedDiagram(Family::F, 4);
    if (size == 2) return ConnectedDiagram(Family::B, 2);
    const bool end_is_short = parent.root_length(p[size - 1]) < parent.root_length(p[size - 2]);
    return ConnectedDiagram(end_is_short ? Family::B : Family::C, size);
  }

  if (branch == 0) return ConnectedDiagram(Family::A, size);

  // Simply laced with a trivalent vertex: classify by its arm lengths.
  std::vector<int> arms;
  for (auto [first, mult] : g.adjacency.at(branch)) {
    int length = 1;
    int previous = branch;
    int current = first;
    for (;;) {
      int next = 0;
      for (auto [w, m] : g.adjacency.at(current))
        if (w != previous) next = w;
      if (next == 0) break;
      previous = current;
      current = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return ConnectedDiagram(Family::D, size);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return ConnectedDiagram(Family::E, size);
  throw std::logic_error("subdiagram of " + parent.render() + " is not of Dynkin type");
}

}  // namespace

ConnectedDiagram::ConnectedDiagram(Family family, int rank) : family_(family), rank_(rank) {
  if (!rank_is_legal(family, rank)) {
    throw RankError(std::string(1, family_letter(family)) + std::to_string(rank) + ": " + legal_ranks(family));
  }
}

ConnectedDiagram ConnectedDiagram::normalized(Family family, int rank) {
  if (rank == 1 && (family == Family::B || family == Family::C || family == Family::D)) {
    return ConnectedDiagram(Family::A, 1);
  }
  return ConnectedDiagram(family, rank);
}

std::vector<Edge> ConnectedDiagram::edges() const {
  std::vector<Edge> out;
  const int n = rank_;
  switch (family_) {
    case Family::A:
      for (int i = 1; i < n; ++i) out.push_back({i, i + 1, 1});
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i < n; ++i) out.push_back({i, i + 1, i + 1 == n ? 2 : 1});
      break;
    case Family::D:
      if (n >= 3) {
        out.push_back({1, 3, 1});
        out.push_back({2, 3, 1});
      }
      for (int i = 3; i < n; ++i) out.push_back({i, i + 1, 1});
      break;
    case Family::E:
      out.push_back({1, 4, 1});
      for (int i = 2; i < n; ++i) out.push_back({i, i + 1, 1});
      break;
    case Family::F:
      out = {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}};
      break;
    case Family::G:
      out = {{1, 2, 3}};
      break;
  }
  return out;
}

int ConnectedDiagram::root_length(int label) const {
  if (!has_vertex(label)) throw VertexError("no vertex " + std::to_string(label) + " in " + render());
  switch (family_) {
    case Family::B: return label == rank_ ? 1 : 2;
    case Family::C: return label == rank_ ? 2 : 1;
    case Family::F: return label <= 2 ? 1 : 2;
    case Family::G: return label == 1 ? 1 : 3;
    default: return 1;
  }
}

std::string ConnectedDiagram::render() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

std::string legal_ranks(Family family) {
  const std::string f(1, family_letter(family));
  switch (family) {
    case Family::A: return f + " requires rank >= 1";
    case Family::B:
    case Family::C:
    case Family::D: return f + " requires rank >= 2";
    case Family::E: return f + " requires rank in {6,7,8}";
    case Family::F: return f + " requires rank 4";
    case Family::G: return f + " requires rank 2";
  }
  return f;
}

std::vector<ConnectedDiagram> Diagram::sorted_components() const {
  std::vector<ConnectedDiagram> out = components_;
  std::sort(out.begin(), out.end());
  return out;
}

int Diagram::rank() const {
  return std::accumulate(components_.begin(), components_.end(), 0,
                         [](int acc, const ConnectedDiagram& c) { return acc + c.rank(); });
}

std::string Diagram::render() const { return Diagram(sorted_components()).render_as_listed(); }

std::string Diagram::render_as_listed() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += '+';
    out += c.render();
  }
  return out;
}

bool Diagram::operator==(const Diagram& other) const { return sorted_components() == other.sorted_components(); }

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  std::vector<ConnectedDiagram> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return Diagram(std::move(all));
}

Diagram parse_diagram(std::string_view text) {
  // Whitespace is insignificant anywhere, so parse the remaining characters
  // while remembering their offsets for error reporting.
  std::vector<std::pair<char, std::size_t>> chars;
  for (std::size_t k = 0; k < text.size(); ++k)
    if (!std::isspace(static_cast<unsigned char>(text[k]))) chars.emplace_back(text[k], k);

  std::size_t i = 0;
  auto offset = [&] { return i < chars.size() ? chars[i].second : text.size(); };
  auto found = [&] { return "'" + std::string(1, chars[i].first) + "'"; };

  std::vector<ConnectedDiagram> components;
  for (;;) {
    Family family{};
    if (i >= chars.size()) throw ParseError("expected a family letter A-G, found end of input", offset());
    if (!family_from_letter(chars[i].first, family)) {
      throw ParseError("expected a family letter A-G, found " + found(), offset());
    }
    ++i;
    const std::size_t digits_start = i;
    long long rank = 0;
    while (i < chars.size() && std::isdigit(static_cast<unsigned char>(chars[i].first))) {
      if (rank <= kMaxRank) rank = rank * 10 + (chars[i].first - '0');
      ++i;
    }
    if (i == digits_start) {
      if (i >= chars.size()) throw ParseError("expected a rank, found end of input", offset());
      throw ParseError("expected a rank, found " + found(), offset());
    }
    if (rank > kMaxRank) {
      throw RankError(std::string(1, family_letter(family)) + " rank exceeds the supported maximum " +
                      std::to_string(kMaxRank));
    }
    components.push_back(ConnectedDiagram::normalized(family, static_cast<int>(rank)));
    if (i >= chars.size()) break;
    if (chars[i].first != '+') throw ParseError("expected '+', found " + found(), offset());
    ++i;
  }
  return Diagram(std::move(components));
}

Diagram delete_vertex(const ConnectedDiagram& d, int label) {
  if (!d.has_vertex(label)) {
    throw VertexError("vertex " + std::to_string(label) + " is not a vertex of " + d.render() + " (labels 1.." +
                      std::to_string(d.rank()) + ")");
  }
  std::map<int, std::vector<std::pair<int, int>>> adjacency;
  for (int v = 1; v <= d.rank(); ++v)
    if (v != label) adjacency[v];
  for (const Edge& e : d.edges()) {
    if (e.u == label || e.v == label) continue;
    adjacency[e.u].emplace_back(e.v, e.multiplicity);
    adjacency[e.v].emplace_back(e.u, e.multiplicity);
  }

  std::vector<ConnectedDiagram> components;
  std::map<int, bool> seen;
  for (const auto& [start, neighbours] : adjacency) {
    if (seen[start]) continue;
    Subgraph g;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.vertices.push_back(v);
      g.adjacency[v] = adjacency[v];
      for (auto [w, mult] : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    components.push_back(classify(g, d));
  }
  return Diagram(std::move(components));
}

Diagram delete_vertex(const Diagram& d, Vertex v) {
  if (v.component >= d.components().size()) {
    throw VertexError("component index " + std::to_string(v.component) + " out of range");
  }
  std::vector<ConnectedDiagram> out;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    if (c == v.component) {
      Diagram rest = delete_vertex(d.components()[c], v.label);
      out.insert(out.end(), rest.components().begin(), rest.components().end());
    } else {
      out.push_back(d.components()[c]);
    }
  }
  return Diagram(std::move(out));
}

Count coxeter_number(const ConnectedDiagram& d) {
  const int n = d.rank();
  switch (d.family()) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * (n - 1);
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

Count weyl_order(const ConnectedDiagram& d) {
  const unsigned n = static_cast<unsigned>(d.rank());
  switch (d.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return ipow(2, n) * factorial(n);
    case Family::D: return ipow(2, n - 1) * factorial(n);
    case Family::E:
      if (n == 6) return Count(51840);                // 2^7 3^4 5
      if (n == 7) return Count(2903040);              // 2^10 3^4 5 7
      return Count(696729600);                        // 2^14 3^5 5^2 7
    case Family::F: return 1152;                      // 2^7 3^2
    case Family::G: return 12;
  }
  return 0;
}

Count weyl_order(const Diagram& d) {
  Count product = 1;
  for (const auto& c : d.components()) product *= weyl_order(c);
  return product;
}

std::vector<int> automorphism_rho(const ConnectedDiagram& d) {
  const int n = d.rank();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  switch (d.family()) {
    case Family::A:
      std::reverse(p.begin(), p.end());
      break;
    case Family::D:
      std::swap(p[0], p[1]);
      break;
    case Family::E:
      if (n == 6) {
        std::swap(p[1], p[5]);
        std::swap(p[2], p[4]);
      }
      break;
    default:
      break;
  }
  return p;
}

std::vector<ConnectedDiagram> connected_types_up_to(int max_rank) {
  std::vector<ConnectedDiagram> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.emplace_back(Family::E, n);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

}  // namespace dynkin

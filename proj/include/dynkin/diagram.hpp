#ifndef DYNKIN_DIAGRAM_HPP
#define DYNKIN_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynkin/count.hpp"

namespace dynkin {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }

// Largest rank accepted anywhere in the library.
inline constexpr int kMaxRank = 1000;

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed diagram text. position is a 0-based offset into the input.
class ParseError : public DiagramError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DiagramError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class RankError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

class VertexError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

// An edge between vertex labels u < v. multiplicity is the lacing: 1, 2 or 3.
struct Edge {
  int u;
  int v;
  int multiplicity;
  bool operator==(const Edge&) const = default;
};

// A connected Dynkin diagram. Vertex labels run 1..rank:
//   A_n      1 - 2 - ... - n
//   B_n, C_n 1 - ... - (n-1) = n        (B: n short, C: n long)
//   D_n      1 - 3, 2 - 3, 3 - 4 - ... - n
//   E_n      1 - 4, 2 - 3 - 4 - ... - n
//   F_4      1 - 2 = 3 - 4              (1, 2 short; 3, 4 long)
//   G_2      1 = 2 (triple)             (1 short)
// D_2 (two isolated vertices) and D_3 (a path) are kept as typed.
class ConnectedDiagram {
 public:
  // Throws RankError if rank is illegal for the family.
  ConnectedDiagram(Family family, int rank);

  // Same as the constructor but maps B_1, C_1, D_1 to A_1.
  static ConnectedDiagram normalized(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  std::vector<Edge> edges() const;

  // Squared root length in units of the shortest root of the component:
  // 1 everywhere for simply laced types, 2 (or 3 for G_2) on long roots.
  int root_length(int label) const;

  bool has_vertex(int label) const { return label >= 1 && label <= rank_; }

  std::string render() const;

  auto operator<=>(const ConnectedDiagram&) const = default;

 private:
  Family family_;
  int rank_;
};

std::string legal_ranks(Family family);

// A disjoint union of connected diagrams. Components keep the order they
// were given in; equality and render() treat the diagram as a multiset.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<ConnectedDiagram> components) : components_(std::move(components)) {}
  Diagram(std::initializer_list<ConnectedDiagram> components) : components_(components) {}

  const std::vector<ConnectedDiagram>& components() const { return components_; }
  std::vector<ConnectedDiagram> sorted_components() const;

  int rank() const;
  bool empty() const { return components_.empty(); }

  // Canonical form: components sorted by (family letter, rank), joined by '+'.
  // The empty diagram renders as "".
  std::string render() const;
  std::string render_as_listed() const;

  bool operator==(const Diagram& other) const;

 private:
  std::vector<ConnectedDiagram> components_;
};

Diagram disjoint_union(const Diagram& a, const Diagram& b);

struct Vertex {
  std::size_t component;
  int label;
};

// Grammar: term ('+' term)*, term := [A-Ga-g][0-9]+, whitespace ignored.
Diagram parse_diagram(std::string_view text);

// Components of d with vertex `label` and its edges removed, listed in the
// order of their smallest surviving label. Throws VertexError.
Diagram delete_vertex(const ConnectedDiagram& d, int label);
Diagram delete_vertex(const Diagram& d, Vertex v);

Count coxeter_number(const ConnectedDiagram& d);
Count weyl_order(const ConnectedDiagram& d);
Count weyl_order(const Diagram& d);

// Order-2 diagram automorphism as a permutation p with p[i-1] = rho(i):
// path reversal for A_n, fork swap for D_n, arm swap for E_6, identity
// otherwise.
std::vector<int> automorphism_rho(const ConnectedDiagram& d);

// The standard list of connected types of rank <= max_rank:
// A_n (n>=1), B_n and C_n (n>=2), D_n (n>=4), E_6..E_8, F_4, G_2.
std::vector<ConnectedDiagram> connected_types_up_to(int max_rank);

}  // namespace dynkin

#endif  // DYNKIN_DIAGRAM_HPP

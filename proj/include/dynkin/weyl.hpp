#ifndef DYNKIN_WEYL_HPP
#define DYNKIN_WEYL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dynkin/count.hpp"
#include "dynkin/diagram.hpp"

namespace dynkin {

// An element of the Weyl group acting on the root lattice. Column i holds
// the image of the i-th simple root in simple-root coordinates, so matrix
// multiplication is composition.
class WeylElement {
 public:
  static WeylElement identity(int dim);

  int dim() const { return dim_; }
  std::int64_t operator()(int row, int col) const { return entries_[index(row, col)]; }
  std::int64_t& operator()(int row, int col) { return entries_[index(row, col)]; }

  bool is_identity() const;
  std::int64_t determinant() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  bool operator==(const WeylElement&) const = default;

 private:
  explicit WeylElement(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim), 0) {}
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row * dim_ + col); }

  int dim_;
  std::vector<std::int64_t> entries_;
};

using RootVector = std::vector<int>;

struct RootSystem {
  Diagram diagram;
  // cartan[i][j] = <alpha_i, alpha_j^vee>; simple roots are ordered by
  // component, then by vertex label.
  std::vector<std::vector<int>> cartan;
  // Sorted by height, then lexicographically.
  std::vector<RootVector> positive_roots;
  // reflections[k] is the reflection in positive_roots[k].
  std::vector<WeylElement> reflections;

  int rank() const { return static_cast<int>(cartan.size()); }
};

RootSystem build_root_system(const ConnectedDiagram& d);
RootSystem build_root_system(const Diagram& d);

// Simple reflection for 1-based simple-root index.
WeylElement simple_reflection(const RootSystem& rs, int index);

// Product s_{order[0]} s_{order[1]} ... of simple reflections (1-based).
// Throws std::invalid_argument unless order is a permutation of 1..rank.
WeylElement coxeter_element(const RootSystem& rs, std::span<const int> order);
WeylElement coxeter_element(const RootSystem& rs);

// Rank of (w - 1), computed exactly by fraction-free elimination.
int reflection_length(const WeylElement& w);

// Smallest k >= 1 with w^k = 1, or nullopt if none up to limit.
std::optional<int> multiplicative_order(const WeylElement& w, int limit);

namespace budget {
inline constexpr std::uint64_t kLow = 1'000'000;
inline constexpr std::uint64_t kHigh = 2'000'000'000;
}  // namespace budget

// "low", "high" or a positive decimal number of node expansions.
// Throws std::invalid_argument otherwise.
std::uint64_t parse_budget(std::string_view text);

struct ChainSearchOptions {
  std::uint64_t budget = budget::kLow;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Simple-reflection order for the Coxeter element; empty means 1..rank.
  std::vector<int> order;
};

struct ChainCount {
  std::optional<Count> count;   // empty when the budget ran out
  std::uint64_t expansions = 0;

  bool exhausted() const { return !count.has_value(); }
};

// Number of tuples (t_1, ..., t_n) of reflections with t_1 ... t_n = c for
// the chosen Coxeter element c. Depth-first search that only follows
// reflections lowering the reflection length by one.
ChainCount count_chain_factorizations(const RootSystem& rs, const ChainSearchOptions& options = {});

}  // namespace dynkin

#endif  // DYNKIN_WEYL_HPP

#ifndef DYNKIN_COUNTING_HPP
#define DYNKIN_COUNTING_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin/count.hpp"
#include "dynkin/diagram.hpp"

namespace dynkin {

// Number of complete exceptional sequences of a connected type, from the
// closed-form table.
Count e_closed(const ConnectedDiagram& d);

// Shuffle product: multinomial of the component ranks times the component
// values from e_closed. The empty diagram gives 1.
Count e_of(const Diagram& d);

// Vertex-deletion recursion e = (h/2) * sum_i e(d minus vertex i), applied per
// connected component and combined by the shuffle product. Memoizes on
// canonical component keys (B and C share entries). The memo is owned by
// the instance; use one instance per thread.
class RecursiveCounter {
 public:
  Count count(const Diagram& d);
  Count count(const ConnectedDiagram& d);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<std::string, Count> memo_;
};

Count e_recursive(const Diagram& d);
Count e_recursive(const ConnectedDiagram& d);

// Key under which the recursion memoizes: canonical rendering with C read as B.
std::string counting_key(const Diagram& d);

struct BreakdownRow {
  int vertex;
  Diagram deleted;
  Count e;
  bool operator==(const BreakdownRow&) const = default;
};

struct CountBreakdown {
  ConnectedDiagram diagram;
  std::vector<BreakdownRow> rows;
  Count h;
  Count total;  // (h/2) * sum of row values
  bool operator==(const CountBreakdown&) const = default;
};

CountBreakdown e_breakdown(const ConnectedDiagram& d);

class UniformFormulaMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct UniformCheck {
  Count e;             // e_closed
  Count numerator;     // n! * h^n
  Count weyl;          // |W|
};

// Throws UniformFormulaMismatch unless e * |W| == n! * h^n.
UniformCheck verify_uniform_formula(const ConnectedDiagram& d);

// n^2 * e(A_{n-1}); requires n >= 2.
Count e_B_via_A(int n);

struct PrimePower {
  Count prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Trial division up to 10^6; a leftover cofactor is accepted as prime only
// below 10^12. Throws std::domain_error for 0 and for cofactors it cannot
// certify.
std::vector<PrimePower> factorize(const Count& c);

// "2^9 * 3^4"; the empty factorization renders as "1".
std::string render_factorization(const std::vector<PrimePower>& factors);

}  // namespace dynkin

#endif  // DYNKIN_COUNTING_HPP

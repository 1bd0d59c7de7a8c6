#ifndef DYNKIN_SERIES_HPP
#define DYNKIN_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dynkin/count.hpp"

namespace dynkin {

// Coefficients c_0..c_N of a formal power series, truncated at order N.
class SeriesPrefix {
 public:
  explicit SeriesPrefix(std::vector<Integer> coefficients);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Integer& operator[](std::size_t n) const { return coefficients_.at(n); }
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  // 1 + 0T + ... + 0T^N
  static SeriesPrefix unit(std::size_t order);

  bool operator==(const SeriesPrefix&) const = default;

 private:
  std::vector<Integer> coefficients_;
};

// A(n) = (n+1)^(n-1), with A(0) = 1.
SeriesPrefix seq_A(std::size_t order);
// B(n) = n^n, with B(0) = 1.
SeriesPrefix seq_B(std::size_t order);
// D(n) = (n-1)^n, with D(0) = 1 and D(1) = 0.
SeriesPrefix seq_D(std::size_t order);

// H(n) = sum_k C(n,k) F(k) G(n-k). Throws std::invalid_argument when the
// truncation orders differ.
SeriesPrefix binomial_convolution(const SeriesPrefix& f, const SeriesPrefix& g);

// Right-hand side of Abel's identity,
//   sum_k C(n,k) x (x - kz)^(k-1) (y + kz)^(n-k),
// with the k = 0 term read as y^n. Throws std::invalid_argument for x = 0.
Integer abel_sum(const Integer& x, const Integer& y, const Integer& z, unsigned n);

struct IdentityCheck {
  std::string name;                    // e.g. "A*A = sum 2(n+2)^(n-1) T^n"
  SeriesPrefix lhs;                    // the convolution
  SeriesPrefix rhs;                    // the claimed closed form
  std::optional<std::size_t> first_failure;

  bool holds() const { return !first_failure.has_value(); }
};

struct AppendixReport {
  std::size_t order;
  std::vector<IdentityCheck> identities;  // A*A, A*B, A*D in that order

  bool all_hold() const;
};

AppendixReport verify_appendix_proposition(std::size_t order);

}  // namespace dynkin

#endif  // DYNKIN_SERIES_HPP

#include "dynkin/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dynkin {

SeriesPrefix::SeriesPrefix(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("a series prefix needs at least c_0");
}

SeriesPrefix SeriesPrefix::unit(std::size_t order) {
  std::vector<Integer> c(order + 1, 0);
  c[0] = 1;
  return SeriesPrefix(std::move(c));
}

namespace {

SeriesPrefix tabulate(std::size_t order, const std::function<Integer(unsigned)>& coefficient) {
  std::vector<Integer> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.push_back(coefficient(static_cast<unsigned>(n)));
  return SeriesPrefix(std::move(c));
}

}  // namespace

SeriesPrefix seq_A(std::size_t order) {
  return tabulate(order, [](unsigned n) { return n == 0 ? Integer(1) : ipow(n + 1, n - 1); });
}

SeriesPrefix seq_B(std::size_t order) {
  // boost's pow gives 0^0 = 1
  return tabulate(order, [](unsigned n) { return ipow(n, n); });
}

SeriesPrefix seq_D(std::size_t order) {
  return tabulate(order, [](unsigned n) { return n == 0 ? Integer(1) : ipow(Integer(n) - 1, n); });
}

SeriesPrefix binomial_convolution(const SeriesPrefix& f, const SeriesPrefix& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("binomial convolution of prefixes with orders " + std::to_string(f.order()) +
                                " and " + std::to_string(g.order()));
  }
  std::vector<Integer> h(f.order() + 1, 0);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      h[n] += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * f[k] * g[n - k];
    }
  }
  return SeriesPrefix(std::move(h));
}

Integer abel_sum(const Integer& x, const Integer& y, const Integer& z, unsigned n) {
  if (x == 0) throw std::invalid_argument("Abel's identity requires x != 0");
  Integer sum = ipow(y, n);
  for (unsigned k = 1; k <= n; ++k) {
    sum += binomial(n, k) * x * ipow(x - k * z, k - 1) * ipow(y + k * z, n - k);
  }
  return sum;
}

bool AppendixReport::all_hold() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.holds(); });
}

AppendixReport verify_appendix_proposition(std::size_t order) {
  const SeriesPrefix a = seq_A(order);
  const SeriesPrefix b = seq_B(order);
  const SeriesPrefix d = seq_D(order);

  auto check = [](std::string name, SeriesPrefix lhs, SeriesPrefix rhs) {
    IdentityCheck c{std::move(name), std::move(lhs), std::move(rhs), std::nullopt};
    for (std::size_t n = 0; n <= c.lhs.order(); ++n) {
      if (c.lhs[n] != c.rhs[n]) {
        c.first_failure = n;
        break;
      }
    }
    return c;
  };

  AppendixReport report{order, {}};
  // 2(n+2)^(n-1) at n = 0 is 2 * 2^-1 = 1
  report.identities.push_back(check("A*A = sum 2(n+2)^(n-1) T^n", binomial_convolution(a, a),
                                    tabulate(order, [](unsigned n) {
                                      return n == 0 ? Integer(1) : 2 * ipow(n + 2, n - 1);
                                    })));
  report.identities.push_back(check("A*B = sum (n+1)^n T^n", binomial_convolution(a, b),
                                    tabulate(order, [](unsigned n) { return ipow(n + 1, n); })));
  report.identities.push_back(check("A*D = B", binomial_convolution(a, d), b));
  return report;
}

}  // namespace dynkin

#include "dynkin/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynkin {

Count factorial(unsigned n) {
  Count result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Count binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  // result stays integral after each step: it equals C(n-k+i, i)
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count multinomial(std::span<const unsigned> parts) {
  Count result = 1;
  unsigned total = 0;
  for (unsigned p : parts) {
    total += p;
    result *= binomial(total, p);
  }
  return result;
}

Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::string to_decimal(const Count& c) { return c.str(); }

std::string group_digits(const Count& c, char separator) {
  std::string digits = c.str();
  std::string sign;
  if (!digits.empty() && digits.front() == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i + 3 - lead) % 3 == 0) out.push_back(separator);
    out.push_back(digits[i]);
  }
  return sign + out;
}

Count parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return Count(text);
}

}  // namespace dynkin

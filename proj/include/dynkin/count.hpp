#ifndef DYNKIN_COUNT_HPP
#define DYNKIN_COUNT_HPP

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dynkin {

// Exact integers. Count is used for quantities that are non-negative by
// construction (e-values, Weyl orders, binomials); Integer for signed work
// such as Abel sums.
using Count = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;

Count factorial(unsigned n);
Count binomial(unsigned n, unsigned k);

// (n_1 + ... + n_k)! / (n_1! ... n_k!)
Count multinomial(std::span<const unsigned> parts);

Integer ipow(const Integer& base, unsigned exponent);

std::string to_decimal(const Count& c);

// 37968750 -> "37_968_750"; a leading minus sign is kept in front.
std::string group_digits(const Count& c, char separator = '_');

// Throws std::invalid_argument if text is not an optionally signed decimal.
Count parse_decimal(const std::string& text);

}  // namespace dynkin

#endif  // DYNKIN_COUNT_HPP

#include "dynkin/counting.hpp"

#include <algorithm>

namespace dynkin {

Count e_closed(const ConnectedDiagram& d) {
  const unsigned n = static_cast<unsigned>(d.rank());
  switch (d.family()) {
    case Family::A: return ipow(n + 1, n - 1);
    case Family::B:
    case Family::C: return ipow(n, n);
    case Family::D: return 2 * ipow(n - 1, n);
    case Family::E:
      if (n == 6) return ipow(2, 9) * ipow(3, 4);
      if (n == 7) return 2 * ipow(3, 12);
      return 2 * ipow(3, 5) * ipow(5, 7);
    case Family::F: return ipow(2, 4) * ipow(3, 3);
    case Family::G: return 6;
  }
  return 0;
}

namespace {

std::vector<unsigned> component_ranks(const Diagram& d) {
  std::vector<unsigned> ranks;
  for (const auto& c : d.components()) ranks.push_back(static_cast<unsigned>(c.rank()));
  return ranks;
}

ConnectedDiagram identify_b_c(const ConnectedDiagram& c) {
  return c.family() == Family::C ? ConnectedDiagram(Family::B, c.rank()) : c;
}

}  // namespace

Count e_of(const Diagram& d) {
  const std::vector<unsigned> ranks = component_ranks(d);
  Count result = multinomial(ranks);
  for (const auto& c : d.components()) result *= e_closed(c);
  return result;
}

std::string counting_key(const Diagram& d) {
  std::vector<ConnectedDiagram> parts;
  for (const auto& c : d.components()) parts.push_back(identify_b_c(c));
  return Diagram(std::move(parts)).render();
}

Count RecursiveCounter::count(const Diagram& d) {
  const std::vector<unsigned> ranks = component_ranks(d);
  Count result = multinomial(ranks);
  for (const auto& c : d.components()) result *= count(c);
  return result;
}

Count RecursiveCounter::count(const ConnectedDiagram& d) {
  const std::string key = counting_key(Diagram{d});
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Count sum = 0;
  for (int v = 1; v <= d.rank(); ++v) sum += count(delete_vertex(d, v));
  const Count doubled = coxeter_number(d) * sum;
  if (doubled % 2 != 0) {
    throw std::logic_error("inexact halving in the deletion recursion for " + d.render());
  }
  Count value = doubled / 2;
  memo_.emplace(key, value);
  return value;
}

Count e_recursive(const Diagram& d) { return RecursiveCounter{}.count(d); }
Count e_recursive(const ConnectedDiagram& d) { return RecursiveCounter{}.count(d); }

CountBreakdown e_breakdown(const ConnectedDiagram& d) {
  RecursiveCounter counter;
  CountBreakdown out{d, {}, coxeter_number(d), 0};
  Count sum = 0;
  for (int v = 1; v <= d.rank(); ++v) {
    Diagram rest = delete_vertex(d, v);
    Count e = counter.count(rest);
    sum += e;
    out.rows.push_back({v, std::move(rest), std::move(e)});
  }
  const Count doubled = out.h * sum;
  if (doubled % 2 != 0) {
    throw std::logic_error("inexact halving in the breakdown of " + d.render());
  }
  out.total = doubled / 2;
  return out;
}

UniformCheck verify_uniform_formula(const ConnectedDiagram& d) {
  const unsigned n = static_cast<unsigned>(d.rank());
  UniformCheck check{e_closed(d), factorial(n) * ipow(coxeter_number(d), n), weyl_order(d)};
  if (check.e * check.weyl != check.numerator) {
    throw UniformFormulaMismatch("e * |W| != n! * h^n for " + d.render());
  }
  return check;
}

Count e_B_via_A(int n) {
  if (n < 2) throw std::invalid_argument("e_B_via_A requires n >= 2");
  return Count(n) * n * e_closed(ConnectedDiagram(Family::A, n - 1));
}

std::vector<PrimePower> factorize(const Count& c) {
  if (c <= 0) throw std::domain_error("factorize requires a positive integer");
  constexpr unsigned kTrialLimit = 1'000'000;
  const Count kCofactorLimit("1000000000000");

  std::vector<PrimePower> out;
  Count rest = c;
  bool exhausted_trial = true;
  for (unsigned p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Count(p) * p > rest) {
      exhausted_trial = false;
      break;
    }
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    if (exponent != 0) out.push_back({Count(p), exponent});
  }
  if (rest > 1) {
    // rest has no prime factor up to the last trial divisor.
    if (exhausted_trial && rest >= kCofactorLimit) {
      throw std::domain_error("cannot certify cofactor " + rest.str() + " as prime");
    }
    out.push_back({rest, 1});
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

std::string render_factorization(const std::vector<PrimePower>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    out += f.prime.str();
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

}  // namespace dynkin

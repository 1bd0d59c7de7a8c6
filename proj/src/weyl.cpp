#include "dynkin/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace dynkin {

WeylElement WeylElement::identity(int dim) {
  WeylElement w(dim);
  for (int i = 0; i < dim; ++i) w(i, i) = 1;
  return w;
}

bool WeylElement::is_identity() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

namespace {

// Bareiss elimination on a row-major copy. Returns the rank and, through
// det, the determinant when the matrix is square and nonsingular.
int bareiss(std::vector<std::int64_t> a, int n, std::int64_t* det) {
  int rank = 0;
  std::int64_t previous_pivot = 1;
  int sign = 1;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot_row = -1;
    for (int r = rank; r < n; ++r) {
      if (a[static_cast<std::size_t>(r * n + col)] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) {
      for (int c = 0; c < n; ++c) std::swap(a[static_cast<std::size_t>(pivot_row * n + c)], a[static_cast<std::size_t>(rank * n + c)]);
      sign = -sign;
    }
    const std::int64_t pivot = a[static_cast<std::size_t>(rank * n + col)];
    for (int r = rank + 1; r < n; ++r) {
      const std::int64_t factor = a[static_cast<std::size_t>(r * n + col)];
      for (int c = col + 1; c < n; ++c) {
        auto& x = a[static_cast<std::size_t>(r * n + c)];
        x = (pivot * x - factor * a[static_cast<std::size_t>(rank * n + c)]) / previous_pivot;
      }
      a[static_cast<std::size_t>(r * n + col)] = 0;
    }
    previous_pivot = pivot;
    ++rank;
  }
  if (det != nullptr) *det = rank == n ? sign * previous_pivot : 0;
  return rank;
}

}  // namespace

std::int64_t WeylElement::determinant() const {
  std::int64_t det = 0;
  bareiss(entries_, dim_, &det);
  return det;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch in Weyl element product");
  const int n = a.dim_;
  WeylElement out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const std::int64_t x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < n; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

int reflection_length(const WeylElement& w) {
  const int n = w.dim();
  std::vector<std::int64_t> a(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r * n + c)] = w(r, c) - (r == c ? 1 : 0);
  return bareiss(std::move(a), n, nullptr);
}

std::optional<int> multiplicative_order(const WeylElement& w, int limit) {
  WeylElement power = w;
  for (int k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = power * w;
  }
  return std::nullopt;
}

namespace {

// Twice the Gram matrix of the simple roots.
std::vector<std::vector<int>> doubled_gram(const Diagram& d, std::vector<int>& lengths) {
  const int n = d.rank();
  std::vector<std::vector<int>> b(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  lengths.assign(static_cast<std::size_t>(n), 1);
  int offset = 0;
  for (const auto& c : d.components()) {
    for (int v = 1; v <= c.rank(); ++v) {
      const int len = c.root_length(v);
      lengths[static_cast<std::size_t>(offset + v - 1)] = len;
      b[static_cast<std::size_t>(offset + v - 1)][static_cast<std::size_t>(offset + v - 1)] = 2 * len;
    }
    for (const Edge& e : c.edges()) {
      const auto i = static_cast<std::size_t>(offset + e.u - 1);
      const auto j = static_cast<std::size_t>(offset + e.v - 1);
      b[i][j] = b[j][i] = -std::max(lengths[i], lengths[j]);
    }
    offset += c.rank();
  }
  return b;
}

WeylElement reflection_in(const RootVector& beta, const std::vector<std::vector<int>>& gram2) {
  const int n = static_cast<int>(beta.size());
  std::vector<std::int64_t> b_beta(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b_beta[static_cast<std::size_t>(i)] += std::int64_t{gram2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]} * beta[static_cast<std::size_t>(j)];
  std::int64_t norm = 0;
  for (int i = 0; i < n; ++i) norm += b_beta[static_cast<std::size_t>(i)] * beta[static_cast<std::size_t>(i)];

  WeylElement w = WeylElement::identity(n);
  for (int i = 0; i < n; ++i) {
    const std::int64_t numerator = 2 * b_beta[static_cast<std::size_t>(i)];
    if (numerator % norm != 0) throw std::logic_error("non-integral reflection coefficient");
    const std::int64_t coefficient = numerator / norm;
    for (int r = 0; r < n; ++r) w(r, i) -= coefficient * beta[static_cast<std::size_t>(r)];
  }
  return w;
}

}  // namespace

RootSystem build_root_system(const ConnectedDiagram& d) { return build_root_system(Diagram{d}); }

RootSystem build_root_system(const Diagram& d) {
  RootSystem rs;
  rs.diagram = d;
  const int n = d.rank();
  std::vector<int> lengths;
  const auto gram2 = doubled_gram(d, lengths);

  rs.cartan.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) rs.cartan[i][j] = gram2[i][j] / lengths[j];

  std::set<RootVector> found;
  std::vector<RootVector> frontier;
  for (int i = 0; i < n; ++i) {
    RootVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    RootVector beta = frontier.back();
    frontier.pop_back();
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      int pairing = 0;  // <beta, alpha_j^vee>
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) pairing += beta[i] * rs.cartan[i][j];
      if (pairing == 0) continue;
      RootVector image = beta;
      image[j] -= pairing;
      if (std::any_of(image.begin(), image.end(), [](int x) { return x < 0; })) continue;
      if (std::all_of(image.begin(), image.end(), [](int x) { return x == 0; })) continue;
      if (found.insert(image).second) frontier.push_back(image);
    }
  }

  rs.positive_roots.assign(found.begin(), found.end());
  std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const RootVector& a, const RootVector& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  for (const auto& beta : rs.positive_roots) rs.reflections.push_back(reflection_in(beta, gram2));
  return rs;
}

WeylElement simple_reflection(const RootSystem& rs, int index) {
  if (index < 1 || index > rs.rank()) throw std::invalid_argument("simple root index out of range");
  RootVector e(static_cast<std::size_t>(rs.rank()), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  auto it = std::find(rs.positive_roots.begin(), rs.positive_roots.end(), e);
  return rs.reflections[static_cast<std::size_t>(it - rs.positive_roots.begin())];
}

WeylElement coxeter_element(const RootSystem& rs, std::span<const int> order) {
  std::vector<int> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(rs.rank()));
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) throw std::invalid_argument("Coxeter element order must be a permutation of 1..rank");

  WeylElement c = WeylElement::identity(rs.rank());
  for (int index : order) c = c * simple_reflection(rs, index);
  return c;
}

WeylElement coxeter_element(const RootSystem& rs) {
  std::vector<int> order(static_cast<std::size_t>(rs.rank()));
  std::iota(order.begin(), order.end(), 1);
  return coxeter_element(rs, order);
}

std::uint64_t parse_budget(std::string_view text) {
  if (text == "low") return budget::kLow;
  if (text == "high") return budget::kHigh;
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("budget must be 'low', 'high' or a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

namespace {

class ChainSearch {
 public:
  ChainSearch(const RootSystem& rs, std::uint64_t budget) : rs_(rs), budget_(budget) {}

  // Factorizations of w into `remaining` reflections; w has reflection
  // length `remaining` on entry.
  std::uint64_t count(const WeylElement& w, int remaining) {
    if (!charge()) return 0;
    if (remaining == 0) {
      if (!w.is_identity()) throw std::logic_error("chain search reached length 0 away from the identity");
      return 1;
    }
    std::uint64_t total = 0;
    for (const WeylElement& t : rs_.reflections) {
      if (exhausted_.load(std::memory_order_relaxed)) return 0;
      total += branch(t, w, remaining);
    }
    return total;
  }

  // Contribution of factorizations of w starting with t.
  std::uint64_t branch(const WeylElement& t, const WeylElement& w, int remaining) {
    WeylElement next = t * w;
    const int length = reflection_length(next);
    // Multiplying by a reflection moves the length by exactly one.
    if (length != remaining - 1 && length != remaining + 1) {
      throw std::logic_error("reflection changed the reflection length by more than one");
    }
    if (length != remaining - 1) return 0;
    return count(next, remaining - 1);
  }

  // Accounts for one node expansion; false once the budget is spent.
  bool charge() {
    if (expansions_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(); }
  std::uint64_t expansions() const { return std::min(expansions_.load(), budget_); }

 private:
  const RootSystem& rs_;
  const std::uint64_t budget_;
  std::atomic<std::uint64_t> expansions_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace

ChainCount count_chain_factorizations(const RootSystem& rs, const ChainSearchOptions& options) {
  const int n = rs.rank();
  if (n == 0) return {Count(1), 1};

  std::vector<int> order = options.order;
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
  }
  const WeylElement c = coxeter_element(rs, order);
  if (reflection_length(c) != n) throw std::logic_error("Coxeter element does not have full reflection length");

  ChainSearch search(rs, options.budget);
  // The root is expanded here; its subtrees are split by first reflection.
  if (!search.charge()) return {std::nullopt, search.expansions()};

  const std::size_t tasks = rs.reflections.size();
  std::vector<std::uint64_t> partial(tasks, 0);
  std::atomic<std::size_t> next_task{0};
  std::vector<std::exception_ptr> errors(tasks);
  auto worker = [&] {
    for (std::size_t k = next_task.fetch_add(1); k < tasks; k = next_task.fetch_add(1)) {
      try {
        partial[k] = search.branch(rs.reflections[k], c, n);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (search.exhausted()) return {std::nullopt, search.expansions()};
  const std::uint64_t total = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  return {Count(total), search.expansions()};
}

}  // namespace dynkin

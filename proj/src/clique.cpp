#include "besicovitch/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace besicovitch {

void Bitset::set_all() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() = (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

bool Bitset::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t Bitset::next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

Graph::Graph(std::size_t n) : adjacency_(n, Bitset(n)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self loops are not allowed");
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

bool is_clique(const Graph& graph, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!graph.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

unsigned thread_count_from_environment() {
  if (const char* text = std::getenv("BESICOVITCH_THREADS")) {
    try {
      long value = std::stol(text);
      if (value >= 1) return static_cast<unsigned>(std::min(value, 256L));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace {

// Branch and bound over bitsets in the style of BBMC: vertices are coloured
// greedily in bit order, and a branch is cut when the clique size plus the
// colour number cannot beat the incumbent.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& adjacency, std::atomic<std::size_t>& best)
      : adjacency_(adjacency), best_(best) {}

  void colour_sort(const Bitset& candidates, std::size_t kmin, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colours) const {
    order.clear();
    colours.clear();
    Bitset uncoloured = candidates;
    std::size_t k = 0;
    const std::size_t n = candidates.size();
    while (uncoloured.any()) {
      ++k;
      Bitset independent = uncoloured;
      for (std::size_t v = independent.next(0); v < n; v = independent.next(v + 1)) {
        uncoloured.reset(v);
        independent.subtract(adjacency_[v]);
        if (k >= kmin) {
          order.push_back(v);
          colours.push_back(k);
        }
      }
    }
  }

  void expand(Bitset candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colours;
    const std::size_t best = best_.load(std::memory_order_relaxed);
    const std::size_t kmin = best >= current_.size() ? best - current_.size() + 1 : 1;
    colour_sort(candidates, kmin, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colours[i] <= best_.load(std::memory_order_relaxed)) return;
      branch(candidates, order[i]);
      candidates.reset(order[i]);
    }
  }

  void branch(const Bitset& candidates, std::size_t v) {
    current_.push_back(v);
    Bitset next = candidates;
    next &= adjacency_[v];
    if (next.any()) {
      expand(std::move(next));
    } else {
      record();
    }
    current_.pop_back();
  }

  const std::vector<std::size_t>& found() const { return found_; }

 private:
  void record() {
    std::size_t best = best_.load(std::memory_order_relaxed);
    while (current_.size() > best) {
      if (best_.compare_exchange_weak(best, current_.size())) {
        found_ = current_;
        return;
      }
    }
  }

  const std::vector<Bitset>& adjacency_;
  std::atomic<std::size_t>& best_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> found_;
};

std::size_t parallel_clique_number(const std::vector<Bitset>& adjacency, unsigned threads) {
  const std::size_t n = adjacency.size();
  std::atomic<std::size_t> best{0};
  Bitset all(n);
  all.set_all();
  std::vector<std::size_t> order;
  std::vector<std::size_t> colours;
  CliqueSearch(adjacency, best).colour_sort(all, 1, order, colours);

  // Root branch i searches order[i] together with order[0 .. i-1].
  std::atomic<std::size_t> cursor{order.size()};
  auto worker = [&]() {
    CliqueSearch search(adjacency, best);
    while (true) {
      std::size_t i = cursor.fetch_sub(1);
      if (i == 0 || i > order.size()) return;
      --i;
      if (1 + colours[i] <= best.load()) continue;
      Bitset candidates(n);
      for (std::size_t k = 0; k < i; ++k) candidates.set(order[k]);
      search.branch(candidates, order[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return best.load();
}

}  // namespace

std::vector<std::size_t> maximum_clique(const Graph& graph, const CliqueOptions& options) {
  const std::size_t n = graph.size();
  if (n == 0) return {};

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (options.order == VertexOrder::degree) {
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = graph.degree(v);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  }
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[perm[k]] = k;
  std::vector<Bitset> adjacency(n, Bitset(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Bitset& row = graph.neighbors(perm[k]);
    for (std::size_t u = row.next(0); u < n; u = row.next(u + 1)) adjacency[k].set(position[u]);
  }

  const unsigned threads = options.threads ? options.threads : thread_count_from_environment();
  std::atomic<std::size_t> best{0};
  if (threads > 1) {
    const std::size_t omega = parallel_clique_number(adjacency, threads);
    best.store(omega - 1);
  }
  CliqueSearch search(adjacency, best);
  Bitset all(n);
  all.set_all();
  search.expand(all);

  std::vector<std::size_t> clique;
  for (std::size_t k : search.found()) clique.push_back(perm[k]);
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<std::size_t> heuristic_clique(const Graph& graph, std::uint64_t seed,
                                          std::uint64_t budget) {
  const std::size_t n = graph.size();
  if (n == 0) return {};
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  std::vector<std::size_t> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), std::size_t{0});
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) {
    return graph.degree(a) > graph.degree(b);
  });

  std::vector<std::size_t> clique;
  std::vector<char> member(n, 0);
  // Adds vertices adjacent to every member, scanning from a random offset.
  auto extend = [&](bool randomized) {
    Bitset common(n);
    common.set_all();
    for (std::size_t v : clique) {
      common &= graph.neighbors(v);
      common.reset(v);
    }
    const std::size_t start = randomized ? uniform(n) : 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t v = randomized ? (start + k) % n : by_degree[k];
      if (!common.test(v)) continue;
      clique.push_back(v);
      member[v] = 1;
      common &= graph.neighbors(v);
    }
  };

  extend(false);
  std::vector<std::size_t> best = clique;
  std::vector<std::size_t> conflicts;
  for (std::uint64_t step = 0; step < budget; ++step) {
    const std::size_t v = uniform(n);
    if (member[v]) continue;
    conflicts.clear();
    for (std::size_t u : clique) {
      if (!graph.adjacent(u, v)) conflicts.push_back(u);
    }
    // Plateau swaps always; occasional larger drops to escape local optima.
    const bool accept = conflicts.size() <= 1 || (conflicts.size() == 2 && uniform(16) == 0) ||
                        conflicts.size() == clique.size();
    if (!accept) continue;
    for (std::size_t u : conflicts) member[u] = 0;
    std::erase_if(clique, [&](std::size_t u) { return !member[u]; });
    clique.push_back(v);
    member[v] = 1;
    extend(true);
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace besicovitch

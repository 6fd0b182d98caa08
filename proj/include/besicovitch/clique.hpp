#ifndef BESICOVITCH_CLIQUE_HPP
#define BESICOVITCH_CLIQUE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace besicovitch {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set_all();

  bool any() const;
  std::size_t count() const;
  // Lowest set index at or after `from`, or size() when there is none.
  std::size_t next(std::size_t from = 0) const;

  Bitset& operator&=(const Bitset& other);
  // this &= ~other
  Bitset& subtract(const Bitset& other);
  std::size_t intersection_count(const Bitset& other) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph with bitset adjacency rows.
class Graph {
 public:
  explicit Graph(std::size_t n);

  std::size_t size() const { return adjacency_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }

 private:
  std::vector<Bitset> adjacency_;
};

enum class VertexOrder {
  input,   // colour in the caller's vertex order
  degree,  // non-increasing degree, ties by lowest index
};

struct CliqueOptions {
  VertexOrder order = VertexOrder::input;
  // Worker threads for the root branches; 0 reads BESICOVITCH_THREADS.
  unsigned threads = 0;
};

// Exact maximum clique by branch and bound with greedy colouring bounds.
// The returned clique (ascending vertex ids) does not depend on the thread
// count: parallel runs only establish the clique number, and the clique
// itself is then recovered by the sequential search order.
std::vector<std::size_t> maximum_clique(const Graph& graph, const CliqueOptions& options = {});

// Greedy construction plus randomized add/drop moves for `budget` steps.
// Deterministic for a given seed. Returns ascending vertex ids.
std::vector<std::size_t> heuristic_clique(const Graph& graph, std::uint64_t seed,
                                          std::uint64_t budget);

bool is_clique(const Graph& graph, const std::vector<std::size_t>& vertices);

unsigned thread_count_from_environment();

}  // namespace besicovitch

#endif  // BESICOVITCH_CLIQUE_HPP

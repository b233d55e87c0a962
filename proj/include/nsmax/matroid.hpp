#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsmax/subset.hpp"

namespace nsmax {

// Independence structure over {0, ..., n-1}: uniform (|S| <= k), partition
// (per-block capacities), or graphic (S acyclic as an edge set).
class Matroid {
 public:
  enum class Kind { kUniform, kPartition, kGraphic };

  static Matroid uniform(int ground_size, int k);
  static Matroid partition(std::vector<int> block_of, std::vector<int> capacities);
  static Matroid graphic(int n_vertices, std::vector<std::pair<int, int>> edges);

  Kind kind() const { return kind_; }
  int ground_size() const { return n_; }
  bool is_independent(const Subset& s) const;

  // Size of a maximal independent subset of s, by greedy insertion in
  // element-id order (exact for matroids).
  int rank(const Subset& s) const;
  int rank() const;  // rank of the full ground set

  // Kind-specific accessors (throw if the kind does not match).
  int uniform_k() const;
  const std::vector<int>& partition_blocks() const;
  const std::vector<int>& partition_capacities() const;
  int graphic_vertices() const;
  const std::vector<std::pair<int, int>>& graphic_edges() const;

  std::string kind_name() const;

 private:
  Matroid() = default;

  Kind kind_ = Kind::kUniform;
  int n_ = 0;
  int k_ = 0;                                   // uniform
  std::vector<int> block_of_;                   // partition
  std::vector<int> capacities_;                 // partition
  int n_vertices_ = 0;                          // graphic
  std::vector<std::pair<int, int>> edges_;      // graphic
};

struct AxiomReport {
  bool non_emptiness = false;
  bool heredity = false;
  bool exchange = false;
  // (Y independent, X subset of Y dependent)
  std::optional<std::pair<Subset, Subset>> heredity_counterexample;
  // (X, Y) independent with |Y| > |X| but no feasible exchange element
  std::optional<std::pair<Subset, Subset>> exchange_counterexample;

  bool all_pass() const { return non_emptiness && heredity && exchange; }
};

using IndependenceOracle = std::function<bool(const Subset&)>;

// Exhaustive verification of the three matroid axioms over an arbitrary
// independence oracle. Requires ground size <= 10.
AxiomReport verify_axioms(int ground_size, const IndependenceOracle& independent);
AxiomReport verify_axioms(const Matroid& m);

}  // namespace nsmax

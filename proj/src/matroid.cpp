#include "nsmax/matroid.hpp"

#include <stdexcept>

#include "nsmax/union_find.hpp"

namespace nsmax {

Matroid Matroid::uniform(int ground_size, int k) {
  if (ground_size < 0) throw std::invalid_argument("Matroid::uniform: negative ground size");
  if (k < 0) throw std::invalid_argument("Matroid::uniform: k must be >= 0");
  Matroid m;
  m.kind_ = Kind::kUniform;
  m.n_ = ground_size;
  m.k_ = k;
  return m;
}

Matroid Matroid::partition(std::vector<int> block_of, std::vector<int> capacities) {
  Matroid m;
  m.kind_ = Kind::kPartition;
  m.n_ = static_cast<int>(block_of.size());
  for (int b : block_of) {
    if (b < 0 || b >= static_cast<int>(capacities.size())) {
      throw std::invalid_argument("Matroid::partition: element assigned to unknown block");
    }
  }
  for (int c : capacities) {
    if (c < 0) throw std::invalid_argument("Matroid::partition: negative capacity");
  }
  m.block_of_ = std::move(block_of);
  m.capacities_ = std::move(capacities);
  return m;
}

Matroid Matroid::graphic(int n_vertices, std::vector<std::pair<int, int>> edges) {
  if (n_vertices < 0) throw std::invalid_argument("Matroid::graphic: negative vertex count");
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n_vertices || b < 0 || b >= n_vertices) {
      throw std::invalid_argument("Matroid::graphic: edge endpoint out of range");
    }
  }
  Matroid m;
  m.kind_ = Kind::kGraphic;
  m.n_ = static_cast<int>(edges.size());
  m.n_vertices_ = n_vertices;
  m.edges_ = std::move(edges);
  return m;
}

bool Matroid::is_independent(const Subset& s) const {
  if (s.universe_size() != n_) throw std::invalid_argument("Matroid: subset universe mismatch");
  switch (kind_) {
    case Kind::kUniform:
      return s.size() <= k_;
    case Kind::kPartition: {
      std::vector<int> counts(capacities_.size(), 0);
      for (int v : s.elements()) {
        if (++counts[block_of_[v]] > capacities_[block_of_[v]]) return false;
      }
      return true;
    }
    case Kind::kGraphic: {
      UnionFind uf(n_vertices_);
      for (int e : s.elements()) {
        if (!uf.unite(edges_[e].first, edges_[e].second)) return false;
      }
      return true;
    }
  }
  return false;
}

int Matroid::rank(const Subset& s) const {
  Subset acc(n_);
  int r = 0;
  for (int v : s.elements()) {
    acc.insert(v);
    if (is_independent(acc)) {
      ++r;
    } else {
      acc.erase(v);
    }
  }
  return r;
}

int Matroid::rank() const { return rank(Subset::full(n_)); }

int Matroid::uniform_k() const {
  if (kind_ != Kind::kUniform) throw std::logic_error("Matroid: not a uniform matroid");
  return k_;
}

const std::vector<int>& Matroid::partition_blocks() const {
  if (kind_ != Kind::kPartition) throw std::logic_error("Matroid: not a partition matroid");
  return block_of_;
}

const std::vector<int>& Matroid::partition_capacities() const {
  if (kind_ != Kind::kPartition) throw std::logic_error("Matroid: not a partition matroid");
  return capacities_;
}

int Matroid::graphic_vertices() const {
  if (kind_ != Kind::kGraphic) throw std::logic_error("Matroid: not a graphic matroid");
  return n_vertices_;
}

const std::vector<std::pair<int, int>>& Matroid::graphic_edges() const {
  if (kind_ != Kind::kGraphic) throw std::logic_error("Matroid: not a graphic matroid");
  return edges_;
}

std::string Matroid::kind_name() const {
  switch (kind_) {
    case Kind::kUniform: return "uniform";
    case Kind::kPartition: return "partition";
    case Kind::kGraphic: return "graphic";
  }
  return "unknown";
}

AxiomReport verify_axioms(int ground_size, const IndependenceOracle& independent) {
  if (ground_size > 10) {
    throw std::invalid_argument("verify_axioms: ground set too large for exhaustive check (n > 10)");
  }
  int n = ground_size;
  std::uint64_t count = std::uint64_t{1} << n;
  std::vector<bool> indep(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    indep[mask] = independent(Subset::from_mask(n, mask));
  }

  AxiomReport report;
  report.non_emptiness = indep[0];

  report.heredity = true;
  for (std::uint64_t mask = 0; mask < count && report.heredity; ++mask) {
    if (!indep[mask]) continue;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      std::uint64_t bit = rest & ~(rest - 1);
      if (!indep[mask & ~bit]) {
        report.heredity = false;
        report.heredity_counterexample = {Subset::from_mask(n, mask),
                                          Subset::from_mask(n, mask & ~bit)};
        break;
      }
    }
  }

  report.exchange = true;
  for (std::uint64_t x = 0; x < count && report.exchange; ++x) {
    if (!indep[x]) continue;
    int size_x = __builtin_popcountll(x);
    for (std::uint64_t y = 0; y < count; ++y) {
      if (!indep[y] || __builtin_popcountll(y) <= size_x) continue;
      bool found = false;
      for (std::uint64_t rest = y & ~x; rest != 0; rest &= rest - 1) {
        std::uint64_t bit = rest & ~(rest - 1);
        if (indep[x | bit]) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.exchange = false;
        report.exchange_counterexample = {Subset::from_mask(n, x), Subset::from_mask(n, y)};
        break;
      }
    }
  }
  return report;
}

AxiomReport verify_axioms(const Matroid& m) {
  return verify_axioms(m.ground_size(), [&m](const Subset& s) { return m.is_independent(s); });
}

}  // namespace nsmax

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nsmax/matroid.hpp"
#include "nsmax/set_function.hpp"

namespace nsmax {
namespace ggm {

struct TreeStructure {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // normalized (a < b), sorted

  void normalize();
  bool operator==(const TreeStructure& other) const = default;
};

// Random tree by repeated component joining: start from n singletons, pick two
// distinct components uniformly at random, connect them with an edge whose
// endpoints are uniform within each component, repeat until connected.
TreeStructure random_tree(int n, std::uint64_t seed);

struct TreeModel {
  Eigen::MatrixXd precision;
  Eigen::MatrixXd covariance;
};

// Precision matrix supported on the tree: off-diagonal entries +-U[0.2, 0.6]
// on edges, diagonal 1 + sum of row absolute values (diagonally dominant,
// hence positive definite).
TreeModel make_tree_model(const TreeStructure& tree, std::uint64_t seed);

// Zero-mean samples with their second-moment and correlation matrices.
class SampleSet {
 public:
  // center = true subtracts column means before forming moments.
  explicit SampleSet(Eigen::MatrixXd samples, bool center = false);

  // Moment-only view for exact-covariance tests: behaves like n_samples
  // draws whose sample covariance equals `second_moment` exactly.
  static SampleSet from_second_moment(const Eigen::MatrixXd& second_moment, int n_samples);

  int num_samples() const { return n_samples_; }
  int dim() const { return static_cast<int>(second_moment_.rows()); }
  const Eigen::MatrixXd& samples() const { return samples_; }
  const Eigen::MatrixXd& second_moment() const { return second_moment_; }     // X'X / N
  const Eigen::MatrixXd& correlation() const { return correlation_; }

 private:
  SampleSet() = default;

  Eigen::MatrixXd samples_;  // N x n; empty for moment-only sets
  Eigen::MatrixXd second_moment_;
  Eigen::MatrixXd correlation_;
  int n_samples_ = 0;
};

SampleSet sample_gaussian(const Eigen::MatrixXd& covariance, int n_samples, std::uint64_t seed);

// Maximized Gaussian log-likelihood over precision matrices with the given
// forest sparsity, normalized so the empty forest scores 0; by
// decomposability this is sum over forest edges of -(N/2) log(1 - rho_ij^2).
// Throws if the edge set has a cycle or some |rho_ij| >= 1 on an edge.
double forest_loglik(const std::vector<std::pair<int, int>>& forest, const SampleSet& samples);

// The same quantity as a SetFunction over the complete graph's edge ground
// set (lexicographic edge order, see edge_ground_set). The oracle extends
// additively to non-forest subsets — the greedy argmax scan evaluates
// cycle-closing candidates before the matroid rejects them — and the
// extension coincides with the exact MLE value on every forest.
SetFunction forest_loglik_objective(const SampleSet& samples);

std::vector<std::pair<int, int>> edge_ground_set(int n_vertices);
Matroid complete_graphic_matroid(int n_vertices);

// Greedy maximization of the forest log-likelihood over the graphic matroid.
TreeStructure greedy_tree_fit(const SampleSet& samples);

// Maximum-weight spanning tree (Kruskal) on empirical Gaussian mutual
// informations -(1/2) log(1 - rho_ij^2); ties break on the edge id.
TreeStructure mst_baseline(const SampleSet& samples);

// |edges(estimated) \ edges(truth)|.
int edge_error(const TreeStructure& estimated, const TreeStructure& truth);

// Submodularity-ratio lower bound (L/U)^2 from covariance eigenvalue bounds
// L <= sigma_i(Sigma) <= U.
double ggm_gamma_bound(double eigen_lower, double eigen_upper);

// In-sample negative log-likelihood of the fitted tree model (full Gaussian
// constant included), for experiment reporting.
double gaussian_tree_nll(const TreeStructure& tree, const SampleSet& samples);

// CSV helpers: samples as one row per draw; trees as an edge list.
std::string samples_to_csv(const SampleSet& samples);
SampleSet samples_from_csv(const std::string& csv_text, bool center = false);
std::string tree_to_csv(const TreeStructure& tree);

}  // namespace ggm
}  // namespace nsmax
